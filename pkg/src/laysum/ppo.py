"""Desk-scale PPO over a discrete candidate-selection policy.

The policy scores each candidate summary by a linear function of its
feature vector [normalized_readability, relevance, length_score] and picks
via softmax. Training ascends the importance-ratio objective

    mean_i  ratio_i * A_i                      (clip_epsilon = 0)
    mean_i  min(ratio_i * A_i,
                clip(ratio_i, 1-eps, 1+eps) * A_i)   otherwise

with ratio_i = p_new(a_i) / p_old(a_i) and advantage A_i = reward - baseline.
Gradients are analytic (softmax policy gradient); everything is
deterministic under a fixed seed, with rewards gathered in set order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import DimMismatch, InvalidConfig, LengthMismatch, ZeroOldProb
from .reward import RewardConfig, length_score, normalized_readability
from .rouge import rouge_l
from .textstats import compute_stats, flesch_reading_ease, tokenize

FEATURE_DIM = 3


@dataclass(frozen=True)
class CandidateSet:
    """Pre-generated summary variants for one document, with their features."""

    doc_id: str
    texts: tuple[str, ...]
    features: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.texts) < 2:
            raise InvalidConfig(f"candidate set '{self.doc_id}' needs >= 2 candidates")
        if len(self.features) != len(self.texts):
            raise LengthMismatch("one feature vector per candidate required")
        for vec in self.features:
            if len(vec) != FEATURE_DIM:
                raise DimMismatch(f"feature vectors must have {FEATURE_DIM} entries")
            if any(not 0.0 <= x <= 1.0 for x in vec):
                raise InvalidConfig(f"features must lie in [0, 1], got {vec}")

    def feature_matrix(self) -> np.ndarray:
        return np.array(self.features, dtype=np.float64)


@dataclass(frozen=True)
class PolicyParams:
    """One weight per candidate feature; no per-position bias."""

    theta: tuple[float, ...]

    def __post_init__(self):
        if not all(np.isfinite(self.theta)):
            raise InvalidConfig("policy parameters must be finite")

    def as_array(self) -> np.ndarray:
        return np.array(self.theta, dtype=np.float64)


@dataclass(frozen=True)
class PpoConfig:
    clip_epsilon: float = 0.2
    learning_rate: float = 0.5
    epochs_per_batch: int = 4
    batch_size: int = 8
    baseline: str = "running_mean"
    seed: int = 0

    def __post_init__(self):
        if self.clip_epsilon < 0:
            raise InvalidConfig("clip_epsilon must be >= 0")
        if self.learning_rate <= 0:
            raise InvalidConfig("learning_rate must be > 0")
        if self.epochs_per_batch < 1 or self.batch_size < 1:
            raise InvalidConfig("epochs_per_batch and batch_size must be >= 1")
        if self.baseline not in ("none", "running_mean"):
            raise InvalidConfig(f"unknown baseline '{self.baseline}'")


@dataclass
class TrainTrace:
    rows: list[tuple[int, float, float]] = field(default_factory=list)

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("iteration,mean_reward,objective\n")
            for iteration, mean_reward, objective in self.rows:
                fh.write(f"{iteration},{mean_reward!r},{objective!r}\n")


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max()
    exp = np.exp(shifted)
    return exp / exp.sum()


def policy_distribution(params: PolicyParams, cset: CandidateSet) -> np.ndarray:
    """Softmax over theta . features_i; strictly positive, sums to 1."""
    theta = params.as_array()
    if theta.shape[0] != FEATURE_DIM:
        raise DimMismatch(f"theta has {theta.shape[0]} entries, expected {FEATURE_DIM}")
    return _softmax(cset.feature_matrix() @ theta)


def ppo_ratio_objective(
    new_probs: Sequence[np.ndarray],
    old_probs: Sequence[np.ndarray],
    actions: Sequence[int],
    rewards: Sequence[float],
    baselines: Sequence[float],
    clip_epsilon: float,
) -> float:
    """Batch-mean surrogate objective; clip_epsilon = 0 gives the raw ratio form."""
    lengths = {len(new_probs), len(old_probs), len(actions), len(rewards), len(baselines)}
    if len(lengths) != 1:
        raise LengthMismatch(f"batch arrays disagree in length: {sorted(lengths)}")
    total = 0.0
    for p_new, p_old, action, reward, baseline in zip(
        new_probs, old_probs, actions, rewards, baselines
    ):
        q = float(p_old[action])
        if q <= 0.0:
            raise ZeroOldProb(f"old probability of action {action} is {q}")
        ratio = float(p_new[action]) / q
        advantage = reward - baseline
        term = ratio * advantage
        if clip_epsilon > 0:
            clipped = min(max(ratio, 1.0 - clip_epsilon), 1.0 + clip_epsilon) * advantage
            term = min(term, clipped)
        total += term
    return total / len(actions)


def _objective_and_grad(
    theta: np.ndarray,
    samples: list[tuple[np.ndarray, int, float, float]],
    clip_epsilon: float,
) -> tuple[float, np.ndarray]:
    """Objective value and its analytic gradient at `theta`.

    Each sample is (feature_matrix, action, old_action_prob, advantage).
    The clipped branch contributes zero gradient where the clip is binding.
    """
    total = 0.0
    grad = np.zeros_like(theta)
    for features, action, old_prob, advantage in samples:
        probs = _softmax(features @ theta)
        p_action = float(probs[action])
        ratio = p_action / old_prob
        unclipped = ratio * advantage
        # d ratio / d theta = (p_a / q) * (f_a - sum_j p_j f_j)
        ratio_grad = (p_action / old_prob) * (features[action] - probs @ features)
        if clip_epsilon <= 0:
            total += unclipped
            grad += advantage * ratio_grad
            continue
        low, high = 1.0 - clip_epsilon, 1.0 + clip_epsilon
        clipped = min(max(ratio, low), high) * advantage
        if unclipped <= clipped:
            total += unclipped
            grad += advantage * ratio_grad
        else:
            total += clipped
            if low < ratio < high:
                grad += advantage * ratio_grad
    n = len(samples)
    return total / n, grad / n


def keyphrase_coverage(text: str, keyphrases: Sequence[str]) -> float:
    """Fraction of keyphrases whose token sequence occurs contiguously in text."""
    if not keyphrases:
        return 0.0
    text_tokens = tokenize(text)
    found = 0
    for phrase in keyphrases:
        phrase_tokens = tokenize(phrase)
        if not phrase_tokens:
            continue
        k = len(phrase_tokens)
        if any(text_tokens[i : i + k] == phrase_tokens for i in range(len(text_tokens) - k + 1)):
            found += 1
    return found / len(keyphrases)


def candidate_features(
    text: str,
    cfg: RewardConfig,
    reference: str = "",
    keyphrases: Sequence[str] = (),
) -> tuple[float, float, float]:
    """[normalized_readability, relevance, length_score] for one candidate.

    Relevance is ROUGE-L F1 against the reference when one exists, else
    keyphrase coverage (the inference-time proxy).
    """
    stats = compute_stats(text, frozenset())
    readability = normalized_readability(flesch_reading_ease(stats), cfg)
    if reference:
        relevance = rouge_l(tokenize(text), tokenize(reference)).f1
    else:
        relevance = keyphrase_coverage(text, keyphrases)
    length = length_score(stats.word_count, cfg)
    return (readability, relevance, length)


def build_candidate_set(
    doc_id: str,
    texts: Sequence[str],
    cfg: RewardConfig,
    reference: str = "",
    keyphrases: Sequence[str] = (),
) -> CandidateSet:
    return CandidateSet(
        doc_id=doc_id,
        texts=tuple(texts),
        features=tuple(candidate_features(t, cfg, reference, keyphrases) for t in texts),
    )


def make_composite_reward_fn(cfg: RewardConfig) -> Callable[[CandidateSet, int], float]:
    """Reward of a chosen candidate: the weighted sum of its feature vector."""

    def reward_fn(cset: CandidateSet, action: int) -> float:
        f = cset.features[action]
        return cfg.w_r * f[0] + cfg.w_b * f[1] + cfg.w_l * f[2]

    return reward_fn


def train(
    sets: Sequence[CandidateSet],
    reward_fn: Callable[[CandidateSet, int], float],
    cfg: PpoConfig,
    iterations: int = 500,
    init: PolicyParams | None = None,
) -> tuple[PolicyParams, TrainTrace]:
    """Batched rollout + ratio-ascent loop. Deterministic under cfg.seed."""
    if not sets:
        raise InvalidConfig("need at least one candidate set to train")
    rng = np.random.default_rng(cfg.seed)
    theta = init.as_array() if init is not None else np.zeros(FEATURE_DIM)
    matrices = [s.feature_matrix() for s in sets]
    trace = TrainTrace()
    reward_count = 0
    reward_total = 0.0
    for iteration in range(iterations):
        theta_old = theta.copy()
        picks = rng.integers(0, len(sets), size=cfg.batch_size)
        samples = []
        batch_rewards = []
        for set_index in picks:
            features = matrices[set_index]
            old_dist = _softmax(features @ theta_old)
            action = int(np.searchsorted(np.cumsum(old_dist), rng.random()))
            action = min(action, features.shape[0] - 1)
            reward_value = reward_fn(sets[set_index], action)
            if cfg.baseline == "running_mean":
                baseline = reward_total / reward_count if reward_count else 0.0
            else:
                baseline = 0.0
            reward_count += 1
            reward_total += reward_value
            batch_rewards.append(reward_value)
            samples.append(
                (features, action, float(old_dist[action]), reward_value - baseline)
            )
        for _ in range(cfg.epochs_per_batch):
            _, grad = _objective_and_grad(theta, samples, cfg.clip_epsilon)
            theta = theta + cfg.learning_rate * grad
        objective, _ = _objective_and_grad(theta, samples, cfg.clip_epsilon)
        trace.rows.append((iteration, float(np.mean(batch_rewards)), float(objective)))
    return PolicyParams(theta=tuple(theta)), trace
