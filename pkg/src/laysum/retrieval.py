"""BM25 indexing and retrieve-then-rerank over grounding passages.

Scoring: sum over query tokens (duplicates kept, truncated at 512 tokens) of

    idf(t) * tf * (k1+1) / (tf + k1 * (1 - b + b * len/avglen))
    idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5))

Ties break by ascending passage ordinal. Defaults k1=0.9, b=0.4. Per-document
contributions accumulate in query-token order via the kernel backend, so
results are reproducible bit-for-bit on every backend.

A built Index is immutable and safe for concurrent searches.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels
from .corpus import Passage
from .errors import (
    EmptyCollection,
    EmptyQuery,
    IndexFormatError,
    InvalidParam,
    ScorerFailure,
    UnknownGoldId,
)
from .textstats import tokenize

DEFAULT_K1 = 0.9
DEFAULT_B = 0.4
QUERY_TOKEN_LIMIT = 512

INDEX_MAGIC = b"LSIX"
INDEX_VERSION = 1


@dataclass(frozen=True)
class RankedHit:
    passage_id: str
    score: float
    rank: int


class RerankScorer:
    """Second-stage scorer contract: deterministic per (query, passage_text).

    Implementations may also provide score_batch(query, texts) for one-call
    scoring of a whole candidate list.
    """

    def score(self, query: str, passage_text: str) -> float:
        raise NotImplementedError

    def score_batch(self, query: str, texts: list[str]) -> list[float]:
        return [self.score(query, t) for t in texts]


class LexicalOverlapScorer(RerankScorer):
    """Counts distinct query tokens present in the passage. Offline default."""

    def score(self, query: str, passage_text: str) -> float:
        return float(len(set(tokenize(query)) & set(tokenize(passage_text))))


class OracleScorer(RerankScorer):
    """Test scorer that puts the known gold passage first for each query."""

    def __init__(self, gold_text_by_query: dict[str, str]):
        self.gold_text_by_query = dict(gold_text_by_query)

    def score(self, query: str, passage_text: str) -> float:
        return 1.0 if self.gold_text_by_query.get(query) == passage_text else 0.0


@dataclass(frozen=True)
class HitRateRow:
    top1: float
    top5: float
    top20: float

    def __post_init__(self):
        if not (self.top1 <= self.top5 <= self.top20):
            raise ValueError("hit rates must be monotone in the cutoff")


@dataclass(frozen=True)
class HitRateTable:
    rows: dict[str, HitRateRow]


class Index:
    """Immutable BM25 inverted index over a passage collection."""

    def __init__(self, passages: list[Passage], k1: float, b: float):
        token_lists = [tokenize(p.text) for p in passages]
        doc_lengths = np.array([len(ts) for ts in token_lists], dtype=np.intc)
        raw: dict[str, list[tuple[int, int]]] = {}
        for ordinal, tokens in enumerate(token_lists):
            counts: dict[str, int] = {}
            for tok in tokens:
                counts[tok] = counts.get(tok, 0) + 1
            for term, tf in counts.items():
                raw.setdefault(term, []).append((ordinal, tf))
        postings = {
            term: (
                np.array([o for o, _ in entries], dtype=np.intc),
                np.array([tf for _, tf in entries], dtype=np.intc),
            )
            for term, entries in raw.items()
        }
        self._init_parts(
            ids=[p.id for p in passages],
            texts=[p.text for p in passages],
            doc_lengths=doc_lengths,
            postings=postings,
            k1=k1,
            b=b,
        )

    def _init_parts(self, ids, texts, doc_lengths, postings, k1, b):
        self.k1 = k1
        self.b = b
        self.passage_ids = ids
        self.passage_texts = texts
        self.doc_lengths = doc_lengths
        self.avg_doc_length = float(doc_lengths.sum()) / len(ids)
        self.postings = postings
        # k1 * (1 - b + b * len/avglen), precomputed once per document
        self.doc_norm = k1 * (
            1.0 - b + b * self.doc_lengths.astype(np.float64) / self.avg_doc_length
        )
        self._ordinal_by_id = {pid: o for o, pid in enumerate(ids)}

    @classmethod
    def _from_parts(cls, ids, texts, doc_lengths, postings, k1, b) -> "Index":
        index = cls.__new__(cls)
        index._init_parts(ids, texts, doc_lengths, postings, k1, b)
        return index

    @property
    def passage_count(self) -> int:
        return len(self.passage_ids)

    def text_of(self, passage_id: str) -> str:
        return self.passage_texts[self._ordinal_by_id[passage_id]]


def build_index(passages: list[Passage], k1: float = DEFAULT_K1, b: float = DEFAULT_B) -> Index:
    if not passages:
        raise EmptyCollection("cannot index an empty passage collection")
    if k1 <= 0:
        raise InvalidParam(f"k1 must be > 0, got {k1}")
    if not 0 <= b <= 1:
        raise InvalidParam(f"b must be in [0, 1], got {b}")
    return Index(passages, k1=k1, b=b)


def idf(index: Index, term: str) -> float:
    entry = index.postings.get(term)
    df = 0 if entry is None else len(entry[0])
    n = index.passage_count
    return math.log(1.0 + (n - df + 0.5) / (df + 0.5))


def search(index: Index, query: str, k: int) -> list[RankedHit]:
    """Top-k passages by BM25; ties broken by ascending ordinal."""
    if k < 1:
        raise InvalidParam(f"k must be >= 1, got {k}")
    tokens = tokenize(query)[:QUERY_TOKEN_LIMIT]
    if not tokens:
        raise EmptyQuery("query produced no word tokens")
    scores = np.zeros(index.passage_count, dtype=np.float64)
    matched = np.zeros(index.passage_count, dtype=bool)
    k1_plus_1 = index.k1 + 1.0
    for tok in tokens:
        entry = index.postings.get(tok)
        if entry is None:
            continue
        ordinals, tfs = entry
        kernels.bm25_accumulate(scores, ordinals, tfs, idf(index, tok), index.doc_norm, k1_plus_1)
        matched[ordinals] = True
    candidates = np.flatnonzero(matched)
    ranked = sorted(candidates.tolist(), key=lambda o: (-scores[o], o))[:k]
    return [
        RankedHit(passage_id=index.passage_ids[o], score=float(scores[o]), rank=r)
        for r, o in enumerate(ranked, start=1)
    ]


def rerank(
    index: Index,
    hits: list[RankedHit],
    query: str,
    scorer: RerankScorer,
    m: int,
) -> list[RankedHit]:
    """Rescore hits with `scorer`, keep top-m, renumber ranks 1..m.

    Stable on ties: equal scores keep the prior rank order.
    """
    if m > len(hits):
        raise InvalidParam(f"m={m} exceeds candidate count {len(hits)}")
    texts = [index.text_of(h.passage_id) for h in hits]
    try:
        new_scores = scorer.score_batch(query, texts)
    except Exception:
        # fall back to per-candidate scoring so the failing passage is named
        new_scores = []
        for h, text in zip(hits, texts):
            try:
                new_scores.append(scorer.score(query, text))
            except Exception as exc:
                raise ScorerFailure(h.passage_id, exc) from exc
    reordered = sorted(zip(hits, new_scores), key=lambda pair: (-pair[1], pair[0].rank))
    return [
        RankedHit(passage_id=h.passage_id, score=float(s), rank=r)
        for r, (h, s) in enumerate(reordered[:m], start=1)
    ]


def hit_rate_eval(
    index: Index,
    queries: list[tuple[str, str]],
    scorer: RerankScorer | None = None,
    k: int = 20,
) -> HitRateRow:
    """Gold-passage hit rate at cutoffs 1/5/20 over (query, gold_id) pairs.

    With a scorer, all k retrieved candidates are rescored so every cutoff
    reflects the reranked ordering.
    """
    if not queries:
        raise EmptyCollection("evaluation query set is empty")
    known = set(index.passage_ids)
    for _, gold_id in queries:
        if gold_id not in known:
            raise UnknownGoldId(f"gold passage '{gold_id}' is not in the index")
    hits_at = {1: 0, 5: 0, 20: 0}
    for query, gold_id in queries:
        ranked = search(index, query, k)
        if scorer is not None and ranked:
            ranked = rerank(index, ranked, query, scorer, m=len(ranked))
        for cutoff in hits_at:
            if any(h.passage_id == gold_id for h in ranked[:cutoff]):
                hits_at[cutoff] += 1
    n = len(queries)
    return HitRateRow(top1=hits_at[1] / n, top5=hits_at[5] / n, top20=hits_at[20] / n)


# index persistence ------------------------------------------------------


def _write_section(fh: io.BufferedWriter, payload: bytes) -> None:
    fh.write(len(payload).to_bytes(8, "little"))
    fh.write(payload)


def _read_section(fh: io.BufferedReader) -> bytes:
    header = fh.read(8)
    if len(header) != 8:
        raise IndexFormatError("truncated index file")
    length = int.from_bytes(header, "little")
    payload = fh.read(length)
    if len(payload) != length:
        raise IndexFormatError("truncated index section")
    return payload


def _json_bytes(obj) -> bytes:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":")).encode(
        "utf-8"
    )


def save_index(index: Index, path: str | Path) -> None:
    """Write the versioned binary index file (magic LSIX, u32 version,
    length-prefixed sections: meta, ids, texts, doc lengths, postings)."""
    postings_obj = {
        term: [[int(o), int(tf)] for o, tf in zip(ordinals.tolist(), tfs.tolist())]
        for term, (ordinals, tfs) in index.postings.items()
    }
    meta = {
        "k1": index.k1,
        "b": index.b,
        "passage_count": index.passage_count,
        "avg_doc_length": index.avg_doc_length,
    }
    with open(path, "wb") as fh:
        fh.write(INDEX_MAGIC)
        fh.write(INDEX_VERSION.to_bytes(4, "little"))
        _write_section(fh, _json_bytes(meta))
        _write_section(fh, _json_bytes(index.passage_ids))
        _write_section(fh, _json_bytes(index.passage_texts))
        _write_section(fh, _json_bytes(index.doc_lengths.tolist()))
        _write_section(fh, _json_bytes(postings_obj))


def load_index(path: str | Path) -> Index:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != INDEX_MAGIC:
            raise IndexFormatError(f"bad magic {magic!r}, expected {INDEX_MAGIC!r}")
        version = int.from_bytes(fh.read(4), "little")
        if version != INDEX_VERSION:
            raise IndexFormatError(f"unsupported index version {version}")
        meta = json.loads(_read_section(fh))
        ids = json.loads(_read_section(fh))
        texts = json.loads(_read_section(fh))
        doc_lengths = json.loads(_read_section(fh))
        postings_obj = json.loads(_read_section(fh))
    if len(ids) != meta["passage_count"] or len(texts) != len(ids):
        raise IndexFormatError("section lengths disagree with the header")
    n = len(ids)
    postings = {}
    for term, entries in postings_obj.items():
        ordinals = np.array([o for o, _ in entries], dtype=np.intc)
        tfs = np.array([tf for _, tf in entries], dtype=np.intc)
        if len(ordinals) and (ordinals[-1] >= n or (np.diff(ordinals) <= 0).any()):
            raise IndexFormatError(f"postings for '{term}' are unsorted or out of range")
        postings[term] = (ordinals, tfs)
    index = Index._from_parts(
        ids, texts, np.array(doc_lengths, dtype=np.intc), postings, meta["k1"], meta["b"]
    )
    if not math.isclose(index.avg_doc_length, meta["avg_doc_length"], rel_tol=0, abs_tol=1e-12):
        raise IndexFormatError("stored avg_doc_length disagrees with recomputation")
    return index
