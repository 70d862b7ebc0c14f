"""Ingestion and validation of article records and grounding passages.

Input is line-delimited JSON, UTF-8, one object per line. Article records
carry `id, article, summary, keyphrases, split`; passages carry
`id, text` plus an optional `source` label. Validation is fail-fast with
line numbers so a bad record in a 24k-line file is locatable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicateId, EmptyArticle, EmptyText, MalformedJson, MissingField

SPLITS = ("train", "validation", "test")


@dataclass(frozen=True)
class Document:
    """One article record with its reference lay summary."""

    id: str
    article: str
    summary: str = ""
    keyphrases: tuple[str, ...] = ()
    split: str = "train"

    def __post_init__(self):
        if not self.id:
            raise MissingField("id")
        if not self.article:
            raise EmptyArticle(f"document '{self.id}' has an empty article")
        if not self.summary and self.split != "test":
            raise MissingField("summary", f"document '{self.id}', split '{self.split}'")
        if self.split not in SPLITS:
            raise MalformedJson(
                f"document '{self.id}': split must be one of {SPLITS}, got '{self.split}'"
            )


@dataclass(frozen=True)
class Passage:
    """One grounding-knowledge paragraph."""

    id: str
    text: str
    source: str = ""

    def __post_init__(self):
        if not self.id:
            raise MissingField("id")
        if not self.text:
            raise EmptyText(f"passage '{self.id}' has empty text")


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        counted = {split: 0 for split in SPLITS}
        seen: set[str] = set()
        for doc in self.documents:
            if doc.id in seen:
                raise DuplicateId(doc.id)
            seen.add(doc.id)
            counted[doc.split] += 1
        object.__setattr__(self, "counts", counted)


def parse_record(line: str) -> Document:
    """Parse one JSONL line into a validated Document. Unknown fields are ignored."""
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedJson(str(exc)) from exc
    if not isinstance(raw, dict):
        raise MalformedJson("record is not a JSON object")
    for name in ("id", "article"):
        if name not in raw:
            raise MissingField(name)
    keyphrases = raw.get("keyphrases") or []
    return Document(
        id=str(raw["id"]),
        article=str(raw["article"]),
        summary=str(raw.get("summary", "") or ""),
        keyphrases=tuple(str(k) for k in keyphrases),
        split=str(raw.get("split", "train")),
    )


def serialize_record(doc: Document) -> str:
    """Inverse of parse_record; stable key order for reproducible files."""
    return json.dumps(
        {
            "id": doc.id,
            "article": doc.article,
            "summary": doc.summary,
            "keyphrases": list(doc.keyphrases),
            "split": doc.split,
        },
        ensure_ascii=False,
        sort_keys=True,
    )


def _iter_jsonl(path: str | Path):
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                yield lineno, line


def load_corpus(path: str | Path) -> Corpus:
    """Load a document corpus, preserving file order. Errors carry line numbers."""
    documents = []
    seen: set[str] = set()
    for lineno, line in _iter_jsonl(path):
        try:
            doc = parse_record(line)
        except (MalformedJson, MissingField, EmptyArticle) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc
        if doc.id in seen:
            raise DuplicateId(doc.id, f"line {lineno}")
        seen.add(doc.id)
        documents.append(doc)
    return Corpus(documents=tuple(documents))


def load_passages(path: str | Path) -> list[Passage]:
    """Load grounding passages in file order, enforcing unique ids."""
    passages = []
    seen: set[str] = set()
    for lineno, line in _iter_jsonl(path):
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedJson(f"line {lineno}: {exc}") from exc
        if not isinstance(raw, dict):
            raise MalformedJson(f"line {lineno}: record is not a JSON object")
        for name in ("id", "text"):
            if name not in raw:
                raise MissingField(name, f"line {lineno}")
        passage_id = str(raw["id"])
        if passage_id in seen:
            raise DuplicateId(passage_id, f"line {lineno}")
        seen.add(passage_id)
        text = str(raw["text"])
        if not text:
            raise EmptyText(f"line {lineno}: passage '{passage_id}' has empty text")
        passages.append(Passage(id=passage_id, text=text, source=str(raw.get("source", ""))))
    return passages
