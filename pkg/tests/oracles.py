"""Test-only independent oracles.

These deliberately re-derive expected values through a different route than
the library (direct formula evaluation, exhaustive enumeration, brute-force
scoring, finite differences) so the tests never just echo the implementation.
"""

from __future__ import annotations

import math

import numpy as np


# direct-formula readability oracle (shares the tokenizer via TextStats counts)

def oracle_fre(sentences: int, words: int, syllables: int) -> float:
    return 206.835 - 1.015 * words / sentences - 84.6 * syllables / words


def oracle_fkgl(sentences: int, words: int, syllables: int) -> float:
    return 0.39 * words / sentences + 11.8 * syllables / words - 15.59


def oracle_dcrs(sentences: int, words: int, difficult: int) -> float:
    pdw = 100.0 * difficult / words
    raw = 0.1579 * pdw + 0.0496 * words / sentences
    return raw + 3.6365 if difficult / words > 0.05 else raw


def oracle_cli(sentences: int, words: int, letters: int) -> float:
    return 0.0588 * (100.0 * letters / words) - 0.296 * (100.0 * sentences / words) - 15.8


# exhaustive ROUGE oracles (token lists of length <= ~10)

def bf_lcs(a: list, b: list) -> int:
    """Longest common subsequence by enumerating every subsequence of `a`."""
    best = 0
    for mask in range(1 << len(a)):
        sub = [a[i] for i in range(len(a)) if mask >> i & 1]
        it = iter(b)
        if all(tok in it for tok in sub):
            best = max(best, len(sub))
    return best


def bf_ngram_overlap(hyp: list, ref: list, n: int) -> tuple[int, int, int]:
    """(clipped overlap, hyp n-gram count, ref n-gram count) by direct sliding."""
    hyp_grams = [tuple(hyp[i : i + n]) for i in range(len(hyp) - n + 1)]
    ref_grams = [tuple(ref[i : i + n]) for i in range(len(ref) - n + 1)]
    overlap = 0
    remaining = list(ref_grams)
    for gram in hyp_grams:
        if gram in remaining:
            remaining.remove(gram)
            overlap += 1
    return overlap, len(hyp_grams), len(ref_grams)


def prf_from_counts(overlap: float, hyp_total: int, ref_total: int):
    precision = overlap / hyp_total if hyp_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


# brute-force BM25 over every passage

def bf_bm25_scores(
    passage_tokens: list[list[str]], query_tokens: list[str], k1: float, b: float
) -> list[float]:
    n = len(passage_tokens)
    lengths = [len(ts) for ts in passage_tokens]
    avg = sum(lengths) / n
    scores = []
    for tokens, length in zip(passage_tokens, lengths):
        counts: dict[str, int] = {}
        for tok in tokens:
            counts[tok] = counts.get(tok, 0) + 1
        norm = k1 * (1.0 - b + b * length / avg)
        score = 0.0
        for tok in query_tokens:
            tf = counts.get(tok, 0)
            if tf == 0:
                continue
            df = sum(1 for ts in passage_tokens if tok in ts)
            idf = math.log(1.0 + (n - df + 0.5) / (df + 0.5))
            score = score + idf * (float(tf) * (k1 + 1.0)) / (float(tf) + norm)
        scores.append(score)
    return scores


def bf_bm25_ranking(passage_tokens, query_tokens, k1, b, k):
    scores = bf_bm25_scores(passage_tokens, query_tokens, k1, b)
    matched = [
        i for i, tokens in enumerate(passage_tokens) if any(t in tokens for t in query_tokens)
    ]
    ordered = sorted(matched, key=lambda i: (-scores[i], i))
    return [(i, scores[i]) for i in ordered[:k]]


# misc numeric oracles

def spearman(x, y) -> float:
    def ranks(values):
        order = np.argsort(values, kind="stable")
        r = np.empty(len(values))
        r[order] = np.arange(len(values))
        return r

    rx, ry = ranks(np.asarray(x)), ranks(np.asarray(y))
    rx -= rx.mean()
    ry -= ry.mean()
    return float((rx * ry).sum() / math.sqrt((rx * rx).sum() * (ry * ry).sum()))


def trapezoid_gaussian_mass(mean: float, sigma: float, half_width_sigmas: float = 8.0,
                            steps: int = 200_000) -> float:
    from laysum.reward import gaussian_pdf

    xs = np.linspace(mean - half_width_sigmas * sigma, mean + half_width_sigmas * sigma, steps)
    ys = np.array([gaussian_pdf(float(x), mean, sigma) for x in xs])
    return float(np.trapezoid(ys, xs))


def finite_difference_grad(fn, theta: np.ndarray, step: float = 1e-5) -> np.ndarray:
    grad = np.zeros_like(theta)
    for i in range(len(theta)):
        up = theta.copy()
        down = theta.copy()
        up[i] += step
        down[i] -= step
        grad[i] = (fn(up) - fn(down)) / (2 * step)
    return grad
