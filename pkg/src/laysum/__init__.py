"""Retrieval-augmented lay-summarization toolkit.

Deterministic core for BM25 retrieval with reranking, readability metrics,
ROUGE scoring, Gaussian reward shaping, and PPO over candidate selection.
Neural models stay behind an HTTP model bridge; without one configured the
whole toolkit runs offline.
"""

from .corpus import Corpus, Document, Passage, load_corpus, load_passages, parse_record
from .kernels import BACKEND as KERNEL_BACKEND
from .retrieval import Index, RankedHit, build_index, hit_rate_eval, rerank, search
from .reward import RewardBreakdown, RewardConfig, composite_reward
from .rouge import PrfScore, rouge_l, rouge_n
from .textstats import ReadabilityReport, TextStats, readability_report

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Document",
    "Index",
    "KERNEL_BACKEND",
    "Passage",
    "PrfScore",
    "RankedHit",
    "ReadabilityReport",
    "RewardBreakdown",
    "RewardConfig",
    "TextStats",
    "build_index",
    "composite_reward",
    "hit_rate_eval",
    "load_corpus",
    "load_passages",
    "parse_record",
    "readability_report",
    "rerank",
    "rouge_l",
    "rouge_n",
    "search",
    "__version__",
]
