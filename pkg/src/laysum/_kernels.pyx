# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: ROUGE-L LCS dynamic program and BM25 posting
accumulation. Kept operation-for-operation identical to _kernels_py so
both backends return bit-identical floats."""

import numpy as np


def lcs_length(int[::1] a, int[::1] b):
    """Length of the longest common subsequence of two int token-id arrays."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    if n == 0 or m == 0:
        return 0
    cdef long[::1] prev = np.zeros(m + 1, dtype=np.int64)
    cdef long[::1] curr = np.zeros(m + 1, dtype=np.int64)
    cdef long[::1] tmp
    cdef Py_ssize_t i, j
    cdef int ai
    cdef long pj, cj
    for i in range(1, n + 1):
        ai = a[i - 1]
        for j in range(1, m + 1):
            if ai == b[j - 1]:
                curr[j] = prev[j - 1] + 1
            else:
                pj = prev[j]
                cj = curr[j - 1]
                curr[j] = pj if pj >= cj else cj
        tmp = prev
        prev = curr
        curr = tmp
    return prev[m]


def bm25_accumulate(double[::1] scores, int[::1] ordinals, int[::1] tfs,
                    double idf, double[::1] doc_norm, double k1_plus_1):
    """Add one query term's BM25 contributions to `scores` in place."""
    cdef Py_ssize_t j
    cdef Py_ssize_t count = ordinals.shape[0]
    cdef int o
    cdef double tf
    for j in range(count):
        o = ordinals[j]
        tf = <double> tfs[j]
        scores[o] = scores[o] + idf * (tf * k1_plus_1) / (tf + doc_norm[o])
