"""Pure-Python twin of the compiled kernels.

Must produce bit-identical results to laysum._kernels: same operations in
the same order on float64, so rankings and scores never depend on which
backend got selected.
"""

from __future__ import annotations

import numpy as np


def lcs_length(a: np.ndarray, b: np.ndarray) -> int:
    """Length of the longest common subsequence of two int token-id arrays."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    a_list = a.tolist()
    b_list = b.tolist()
    prev = [0] * (m + 1)
    curr = [0] * (m + 1)
    for i in range(1, n + 1):
        ai = a_list[i - 1]
        for j in range(1, m + 1):
            if ai == b_list[j - 1]:
                curr[j] = prev[j - 1] + 1
            else:
                pj = prev[j]
                cj = curr[j - 1]
                curr[j] = pj if pj >= cj else cj
        prev, curr = curr, prev
    return prev[m]


def bm25_accumulate(
    scores: np.ndarray,
    ordinals: np.ndarray,
    tfs: np.ndarray,
    idf: float,
    doc_norm: np.ndarray,
    k1_plus_1: float,
) -> None:
    """Add one query term's BM25 contributions to `scores` in place.

    scores[o] += idf * (tf * (k1+1)) / (tf + doc_norm[o]) for each posting.
    Ordinals are unique within a posting list, so the unbuffered add below
    is one IEEE add per posting, in posting order, matching the C loop.
    """
    contrib = idf * (tfs * k1_plus_1) / (tfs + doc_norm[ordinals])
    np.add.at(scores, ordinals, contrib)
