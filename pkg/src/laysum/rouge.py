"""Exact ROUGE-1/2/L over pre-tokenized word lists.

Configuration is deliberately minimal and declared wherever scores are
reported: lowercase alphanumeric+apostrophe tokens, no stemming, no
stopword removal, single reference. ROUGE-L uses the O(n*m) LCS dynamic
program from the kernel backend.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyReference, ZeroN

ROUGE_CONFIG = "tokenizer=alnum+apostrophe,lowercase; stemming=none; stopwords=kept; single-reference"


@dataclass(frozen=True)
class PrfScore:
    precision: float
    recall: float
    f1: float


def _prf(overlap: float, hyp_total: int, ref_total: int) -> PrfScore:
    precision = overlap / hyp_total if hyp_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    f1 = 0.0
    if precision + recall > 0:
        f1 = 2.0 * precision * recall / (precision + recall)
    return PrfScore(precision=precision, recall=recall, f1=f1)


def ngram_counts(tokens: list[str], n: int) -> Counter:
    """All contiguous n-grams with multiplicity; empty when the list is too short."""
    if n < 1:
        raise ZeroN("n-gram order must be >= 1")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(hyp: list[str], ref: list[str], n: int) -> PrfScore:
    """Clipped n-gram overlap precision/recall/F1."""
    if not ref:
        raise EmptyReference("reference token list is empty")
    hyp_grams = ngram_counts(hyp, n)
    ref_grams = ngram_counts(ref, n)
    overlap = sum(min(count, ref_grams[g]) for g, count in hyp_grams.items())
    return _prf(float(overlap), sum(hyp_grams.values()), sum(ref_grams.values()))


def _to_ids(hyp: list[str], ref: list[str]) -> tuple[np.ndarray, np.ndarray]:
    vocab: dict[str, int] = {}
    for tok in hyp:
        vocab.setdefault(tok, len(vocab))
    for tok in ref:
        vocab.setdefault(tok, len(vocab))
    a = np.fromiter((vocab[t] for t in hyp), dtype=np.intc, count=len(hyp))
    b = np.fromiter((vocab[t] for t in ref), dtype=np.intc, count=len(ref))
    return a, b


def rouge_l(hyp: list[str], ref: list[str]) -> PrfScore:
    """LCS-based precision = LCS/|hyp|, recall = LCS/|ref|, harmonic F1."""
    if not ref:
        raise EmptyReference("reference token list is empty")
    if not hyp:
        return PrfScore(0.0, 0.0, 0.0)
    a, b = _to_ids(hyp, ref)
    lcs = kernels.lcs_length(a, b)
    return _prf(float(lcs), len(hyp), len(ref))
