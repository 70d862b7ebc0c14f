"""Reward math for readability-controlled generation.

Two readability rewards over the Flesch Reading Ease of a summary:

  deviation form:   1 - exp(-(fre - target)^2 / (2*sigma^2))   (0 at target)
  normalized form:  exp(-(fre - target)^2 / (2*sigma^2))       (1 at target)

They are exact complements. The composite reward is the weighted sum of the
normalized readability score, a relevance score in [0, 1], and a Gaussian
length score over the word-count ratio. Default weights 0.5/0.3/0.2.

In offline (bridge-less) runs the relevance component is ROUGE-L F1 against
the reference; with a model bridge it is the bridge's relevance score. Every
report labels which one was used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidConfig, InvalidParam, NonPositiveSigma, RelevanceOutOfRange

MODES = ("eq2_literal", "gaussian_normalized")

DEFAULT_TARGET_FRE = 60.0
DEFAULT_SIGMA = 10.0
DEFAULT_WEIGHTS = (0.5, 0.3, 0.2)
DEFAULT_LENGTH_TARGET = 200
DEFAULT_LENGTH_SIGMA = 0.25


@dataclass(frozen=True)
class RewardConfig:
    """Target readability, sensitivity, component weights, and length target."""

    target_fre: float = DEFAULT_TARGET_FRE
    sigma: float = DEFAULT_SIGMA
    w_r: float = DEFAULT_WEIGHTS[0]
    w_b: float = DEFAULT_WEIGHTS[1]
    w_l: float = DEFAULT_WEIGHTS[2]
    length_target: int = DEFAULT_LENGTH_TARGET
    length_sigma: float = DEFAULT_LENGTH_SIGMA
    mode: str = "gaussian_normalized"

    def __post_init__(self):
        if self.sigma <= 0:
            raise NonPositiveSigma(f"sigma must be > 0, got {self.sigma}")
        if min(self.w_r, self.w_b, self.w_l) < 0:
            raise InvalidConfig("weights must be nonnegative")
        if abs(self.w_r + self.w_b + self.w_l - 1.0) > 1e-9:
            raise InvalidConfig(
                f"weights must sum to 1, got {self.w_r} + {self.w_b} + {self.w_l}"
            )
        if self.length_target <= 0:
            raise InvalidConfig(f"length_target must be > 0, got {self.length_target}")
        if self.length_sigma <= 0:
            raise InvalidConfig(f"length_sigma must be > 0, got {self.length_sigma}")
        if self.mode not in MODES:
            raise InvalidConfig(f"mode must be one of {MODES}, got '{self.mode}'")


@dataclass(frozen=True)
class RewardBreakdown:
    readability_component: float
    relevance_component: float
    length_component: float
    total: float


def gaussian_pdf(value: float, mean: float, sigma: float) -> float:
    if sigma <= 0:
        raise NonPositiveSigma(f"sigma must be > 0, got {sigma}")
    z = (value - mean) / sigma
    return math.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))


def eq2_reward(readability: float, cfg: RewardConfig) -> float:
    """Deviation-form reward: 0 at the target, approaching 1 far from it."""
    z = (readability - cfg.target_fre) / cfg.sigma
    return 1.0 - math.exp(-0.5 * z * z)


def normalized_readability(readability: float, cfg: RewardConfig) -> float:
    """Peak-normalized Gaussian: gaussian_pdf(x, target, sigma) / pdf peak."""
    z = (readability - cfg.target_fre) / cfg.sigma
    return math.exp(-0.5 * z * z)


def readability_reward(readability: float, cfg: RewardConfig) -> float:
    """The configured readability reward (deviation or normalized form)."""
    if cfg.mode == "eq2_literal":
        return eq2_reward(readability, cfg)
    return normalized_readability(readability, cfg)


def length_score(word_count: int, cfg: RewardConfig) -> float:
    """Gaussian over the word-count ratio: 1.0 when count hits the target."""
    if word_count < 1:
        raise InvalidParam(f"word_count must be >= 1, got {word_count}")
    deviation = word_count / cfg.length_target - 1.0
    return math.exp(-(deviation * deviation) / (2.0 * cfg.length_sigma * cfg.length_sigma))


def composite_reward(
    readability: float, relevance: float, word_count: int, cfg: RewardConfig
) -> RewardBreakdown:
    """Weighted sum of normalized readability, relevance, and length scores."""
    if not 0.0 <= relevance <= 1.0:
        raise RelevanceOutOfRange(f"relevance must be in [0, 1], got {relevance}")
    readability_component = normalized_readability(readability, cfg)
    length_component = length_score(word_count, cfg)
    total = cfg.w_r * readability_component + cfg.w_b * relevance + cfg.w_l * length_component
    return RewardBreakdown(
        readability_component=readability_component,
        relevance_component=relevance,
        length_component=length_component,
        total=total,
    )
