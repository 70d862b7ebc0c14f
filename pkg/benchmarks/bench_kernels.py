"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops (ROUGE-L LCS dynamic program, BM25 posting
accumulation) plus end-to-end search over a synthetic corpus. Run:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from laysum import _kernels_py

try:
    from laysum import _kernels
except ImportError:
    _kernels = None

from laysum.corpus import Passage
from laysum.retrieval import build_index, search


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_lcs(impl, pairs):
    def work():
        for a, b in pairs:
            impl.lcs_length(a, b)

    return timeit(work)


def bench_bm25(impl, workload):
    scores, calls = workload

    def work():
        scores[:] = 0.0
        for ordinals, tfs, idf, doc_norm in calls:
            impl.bm25_accumulate(scores, ordinals, tfs, idf, doc_norm, 1.9)

    return timeit(work)


def bench_search(backend_name, corpus_size=2000, queries=200):
    import importlib
    import os

    os.environ["LAYSUM_KERNELS"] = backend_name
    import laysum.kernels

    importlib.reload(laysum.kernels)
    import laysum.retrieval

    importlib.reload(laysum.retrieval)

    rng = np.random.default_rng(0)
    vocab = [f"term{i}" for i in range(300)]
    passages = [
        Passage(
            id=f"p{i}",
            text=" ".join(vocab[int(j)] for j in rng.integers(0, 300, size=60)),
        )
        for i in range(corpus_size)
    ]
    index = laysum.retrieval.build_index(passages)
    query_list = [
        " ".join(vocab[int(j)] for j in rng.integers(0, 300, size=8)) for _ in range(queries)
    ]

    def work():
        for query in query_list:
            laysum.retrieval.search(index, query, 20)

    return timeit(work, repeat=3)


def main():
    rng = np.random.default_rng(7)
    pairs = [
        (
            rng.integers(0, 50, size=220).astype(np.intc),
            rng.integers(0, 50, size=180).astype(np.intc),
        )
        for _ in range(60)
    ]
    ndocs = 5000
    calls = []
    for _ in range(400):
        npost = int(rng.integers(20, 400))
        ordinals = np.sort(rng.choice(ndocs, size=npost, replace=False)).astype(np.intc)
        tfs = rng.integers(1, 9, size=npost).astype(np.intc)
        calls.append((ordinals, tfs, float(rng.uniform(0.1, 5)), rng.uniform(0.3, 2.0, ndocs)))
    workload = (np.zeros(ndocs), calls)

    rows = []
    py_lcs = bench_lcs(_kernels_py, pairs)
    py_bm = bench_bm25(_kernels_py, workload)
    rows.append(("python", py_lcs, py_bm))
    if _kernels is not None:
        cy_lcs = bench_lcs(_kernels, pairs)
        cy_bm = bench_bm25(_kernels, workload)
        rows.append(("cython", cy_lcs, cy_bm))

    print(f"{'backend':<8} {'lcs (60x220x180)':>18} {'bm25 (400 terms)':>18}")
    for name, lcs_t, bm_t in rows:
        print(f"{name:<8} {lcs_t * 1e3:>15.1f} ms {bm_t * 1e3:>15.1f} ms")
    if _kernels is not None:
        print(f"speedup: lcs {py_lcs / cy_lcs:.1f}x, bm25 {py_bm / cy_bm:.1f}x")

    print()
    print("end-to-end search, 200 queries over 2000 passages:")
    for backend in ("python", "cython") if _kernels is not None else ("python",):
        elapsed = bench_search(backend)
        print(f"  {backend:<8} {elapsed * 1e3:>8.1f} ms")


if __name__ == "__main__":
    main()
