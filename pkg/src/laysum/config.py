"""TOML config loading for reward and pipeline settings.

Reward keys (top level or under a [reward] table): target_fre, sigma,
w_r, w_b, w_l, length_target, length_sigma, mode. Pipeline keys:
query_source, retrieve_k, rerank_m, prompt_mode, first_pass_sentences.
"""

from __future__ import annotations

import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import InvalidConfig
from .pipeline import PipelineConfig
from .reward import RewardConfig

REWARD_KEYS = {
    "target_fre",
    "sigma",
    "w_r",
    "w_b",
    "w_l",
    "length_target",
    "length_sigma",
    "mode",
}
PIPELINE_KEYS = {
    "query_source",
    "retrieve_k",
    "rerank_m",
    "prompt_mode",
    "first_pass_sentences",
}


def _read_toml(path: str | Path) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise InvalidConfig(f"{path}: {exc}") from exc


def _reward_from_table(table: dict, source: str) -> RewardConfig:
    unknown = set(table) - REWARD_KEYS
    if unknown:
        raise InvalidConfig(f"{source}: unknown reward keys {sorted(unknown)}")
    return RewardConfig(**table)


def load_reward_config(path: str | Path) -> RewardConfig:
    """Reward settings from a TOML file; accepts either top-level keys or a
    [reward] table."""
    data = _read_toml(path)
    table = data.get("reward", data)
    table = {k: v for k, v in table.items() if not isinstance(v, dict)}
    return _reward_from_table(table, str(path))


def load_pipeline_config(path: str | Path) -> PipelineConfig:
    data = _read_toml(path)
    reward_table = data.pop("reward", {})
    unknown = set(data) - PIPELINE_KEYS
    if unknown:
        raise InvalidConfig(f"{path}: unknown pipeline keys {sorted(unknown)}")
    reward = _reward_from_table(reward_table, str(path)) if reward_table else RewardConfig()
    return PipelineConfig(reward=reward, **data)
