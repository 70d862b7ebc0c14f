"""End-to-end orchestration: first-pass summary -> query -> retrieve +
rerank -> knowledge-augmented prompt -> second generation -> reward and
evaluation report.

Documents are independent and may be processed in parallel; per-document
stages run sequentially and all aggregation is input-order deterministic,
so output bytes never depend on the worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import rouge as rouge_mod
from .corpus import Document, Passage
from .errors import (
    EmptyArticle,
    EmptyInput,
    EmptyPairs,
    EmptyQuery,
    GeneratorUnavailable,
    InvalidConfig,
    QuerySourceUnavailable,
    StageError,
)
from .ppo import keyphrase_coverage
from .retrieval import Index, RankedHit, RerankScorer, rerank, search
from .reward import RewardBreakdown, RewardConfig, composite_reward
from .textstats import (
    WORD_RE,
    coleman_liau,
    compute_stats,
    dale_chall,
    fkgl,
    flesch_reading_ease,
    segment,
    tokenize,
)

QUERY_SOURCES = ("generated_summary", "reference_summary")
PROMPT_MODES = ("paraphrase", "summarize_with_keyphrases", "none")
QUERY_TOKEN_LIMIT = 512

_DATA_DIR = Path(__file__).parent / "data"
PARAPHRASE_TEMPLATE_PATH = _DATA_DIR / "paraphrase_oneshot.txt"
SUMMARIZE_TEMPLATE_PATH = _DATA_DIR / "summarize_keyphrases.txt"

PARAPHRASE_SLOT = "{first generation}"
KEYPHRASES_SLOT = "Keyphrases:{}"
ARTICLE_SLOT = "Article:{}"


class GeneratorClient:
    """Text-generation contract: generate(prompt) -> nonempty text."""

    def generate(self, prompt: str) -> str:
        raise NotImplementedError


class EchoGenerator(GeneratorClient):
    """Deterministic offline mock: echoes the prompt's last `words` whitespace
    tokens. Mirrors the bridge's mock /generate rule."""

    def __init__(self, words: int = 50):
        self.words = words

    def generate(self, prompt: str) -> str:
        tokens = prompt.split()
        return " ".join(tokens[-self.words :])


@dataclass(frozen=True)
class PipelineConfig:
    query_source: str = "generated_summary"
    retrieve_k: int = 20
    rerank_m: int = 5
    reward: RewardConfig = field(default_factory=RewardConfig)
    prompt_mode: str = "none"
    first_pass_sentences: int = 8

    def __post_init__(self):
        if self.query_source not in QUERY_SOURCES:
            raise InvalidConfig(f"query_source must be one of {QUERY_SOURCES}")
        if self.prompt_mode not in PROMPT_MODES:
            raise InvalidConfig(f"prompt_mode must be one of {PROMPT_MODES}")
        if self.retrieve_k < 1 or self.rerank_m < 1:
            raise InvalidConfig("retrieve_k and rerank_m must be >= 1")
        if self.rerank_m > self.retrieve_k:
            raise InvalidConfig(
                f"rerank_m ({self.rerank_m}) cannot exceed retrieve_k ({self.retrieve_k})"
            )
        if self.first_pass_sentences < 1:
            raise InvalidConfig("first_pass_sentences must be >= 1")


@dataclass
class PipelineServices:
    """External collaborators; all optional, offline defaults exist."""

    generator: GeneratorClient | None = None
    scorer: RerankScorer | None = None
    relevance_fn: object | None = None  # callable(candidate, reference) -> [0, 1]


@dataclass(frozen=True)
class PipelineResult:
    doc_id: str
    first_summary: str
    query: str
    hits: tuple[RankedHit, ...]
    reranked: tuple[RankedHit, ...]
    augmented_input: str
    prompts: dict[str, str]
    final_summary: str
    reward: RewardBreakdown
    relevance_source: str

    def to_json_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "first_summary": self.first_summary,
            "query": self.query,
            "hits": [
                {"passage_id": h.passage_id, "score": h.score, "rank": h.rank}
                for h in self.hits
            ],
            "reranked": [
                {"passage_id": h.passage_id, "score": h.score, "rank": h.rank}
                for h in self.reranked
            ],
            "augmented_input": self.augmented_input,
            "prompts": dict(sorted(self.prompts.items())),
            "final_summary": self.final_summary,
            "reward": {
                "readability_component": self.reward.readability_component,
                "relevance_component": self.reward.relevance_component,
                "length_component": self.reward.length_component,
                "total": self.reward.total,
            },
            "relevance_source": self.relevance_source,
        }


def _load_template(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def build_paraphrase_prompt(first_generation: str) -> str:
    """Fill the one-shot paraphrase template's {first generation} slot."""
    if not first_generation:
        raise EmptyInput("cannot build a paraphrase prompt from empty input")
    template = _load_template(PARAPHRASE_TEMPLATE_PATH)
    return template.replace(PARAPHRASE_SLOT, first_generation)


def build_summarize_prompt(article: str, keyphrases: list[str] | tuple[str, ...]) -> str:
    """Fill the summarization template's Keyphrases:{} and Article:{} slots.

    Keyphrases are comma-joined; an empty list leaves the slot empty.
    """
    if not article:
        raise EmptyArticle("cannot build a summarize prompt from an empty article")
    template = _load_template(SUMMARIZE_TEMPLATE_PATH)
    filled = template.replace(KEYPHRASES_SLOT, "Keyphrases:" + ",".join(keyphrases))
    return filled.replace(ARTICLE_SLOT, "Article:" + article)


def first_pass(doc: Document, gen: GeneratorClient | None, lead_sentences: int = 8) -> str:
    """Initial lay summary: generated when a client exists, else the
    extractive lead-k fallback."""
    if gen is not None:
        return gen.generate(build_summarize_prompt(doc.article, list(doc.keyphrases)))
    sentences, _ = segment(doc.article)
    return " ".join(sentences[:lead_sentences])


def augment(doc: Document, passages: list[Passage]) -> str:
    """Article followed by a [KNOWLEDGE] block listing passages in rank order."""
    if not passages:
        return doc.article
    lines = [doc.article, "", "[KNOWLEDGE]"]
    for position, passage in enumerate(passages, start=1):
        lines.append(f"({position}) {passage.id}: {passage.text}")
    lines.append("[/KNOWLEDGE]")
    return "\n".join(lines)


def truncate_words(text: str, limit: int = QUERY_TOKEN_LIMIT) -> str:
    """Cut `text` after its `limit`-th word token, preserving original bytes."""
    count = 0
    for m in WORD_RE.finditer(text):
        count += 1
        if count == limit:
            return text[: m.end()]
    return text


def mean_reference_summary_length(docs, split: str = "train") -> int:
    """Rounded mean word count of reference summaries, preferring `split`.

    This is the data-driven default for the reward's length_target. Falls
    back to all nonempty summaries, then to the built-in default when the
    corpus has none.
    """
    from .reward import DEFAULT_LENGTH_TARGET

    pools = [[d for d in docs if d.split == split and d.summary], [d for d in docs if d.summary]]
    for pool in pools:
        if pool:
            mean = sum(len(tokenize(d.summary)) for d in pool) / len(pool)
            return max(1, round(mean))
    return DEFAULT_LENGTH_TARGET


def run(
    doc: Document,
    index: Index,
    services: PipelineServices,
    cfg: PipelineConfig,
) -> PipelineResult:
    """One document through every stage; halts at the first hard error,
    tagged with the stage where it happened."""
    if cfg.prompt_mode != "none" and services.generator is None:
        raise GeneratorUnavailable(
            f"prompt_mode '{cfg.prompt_mode}' needs a generator and none is configured"
        )
    prompts: dict[str, str] = {}

    try:
        if services.generator is not None:
            prompts["summarize"] = build_summarize_prompt(doc.article, list(doc.keyphrases))
        first = first_pass(doc, services.generator, cfg.first_pass_sentences)
    except Exception as exc:
        raise StageError("first_pass", exc) from exc

    if cfg.query_source == "reference_summary":
        if not doc.summary:
            raise StageError(
                "query",
                QuerySourceUnavailable(f"document '{doc.id}' has no reference summary"),
            )
        query = truncate_words(doc.summary)
    else:
        query = truncate_words(first)

    try:
        hits = search(index, query, cfg.retrieve_k)
    except EmptyQuery as exc:
        raise StageError("search", exc) from exc

    try:
        if services.scorer is not None and hits:
            reranked = rerank(index, hits, query, services.scorer, min(cfg.rerank_m, len(hits)))
        else:
            reranked = hits[: cfg.rerank_m]
    except Exception as exc:
        raise StageError("rerank", exc) from exc

    passages = [
        Passage(id=h.passage_id, text=index.text_of(h.passage_id)) for h in reranked
    ]
    augmented = augment(doc, passages)

    try:
        if cfg.prompt_mode == "paraphrase":
            prompts["paraphrase"] = build_paraphrase_prompt(first)
            final = services.generator.generate(prompts["paraphrase"])
        elif cfg.prompt_mode == "summarize_with_keyphrases":
            prompts["summarize_augmented"] = build_summarize_prompt(
                augmented, list(doc.keyphrases)
            )
            final = services.generator.generate(prompts["summarize_augmented"])
        else:
            final = first
    except StageError:
        raise
    except Exception as exc:
        raise StageError("second_pass", exc) from exc

    try:
        stats = compute_stats(final, frozenset())
        if doc.summary:
            relevance = rouge_mod.rouge_l(tokenize(final), tokenize(doc.summary)).f1
            relevance_source = "rouge_l_vs_reference"
        else:
            relevance = keyphrase_coverage(final, doc.keyphrases)
            relevance_source = "keyphrase_coverage"
        breakdown = composite_reward(
            flesch_reading_ease(stats), relevance, stats.word_count, cfg.reward
        )
    except Exception as exc:
        raise StageError("reward", exc) from exc

    return PipelineResult(
        doc_id=doc.id,
        first_summary=first,
        query=query,
        hits=tuple(hits),
        reranked=tuple(reranked),
        augmented_input=augmented,
        prompts=prompts,
        final_summary=final,
        reward=breakdown,
        relevance_source=relevance_source,
    )


def run_many(
    docs: list[Document],
    index: Index,
    services: PipelineServices,
    cfg: PipelineConfig,
    jobs: int = 1,
) -> list[PipelineResult]:
    """Document-parallel map; results come back in input order."""
    if jobs <= 1:
        return [run(doc, index, services, cfg) for doc in docs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda d: run(d, index, services, cfg), docs))


# evaluation report ------------------------------------------------------

RELEVANCE_METRICS = ("rouge1", "rouge2", "rougeL", "bertscore")
READABILITY_METRICS = ("fkgl", "dcrs", "cli", "lens")
FACTUALITY_METRICS = ("alignscore", "summac")
BRIDGE_METRICS = ("bertscore", "lens", "alignscore", "summac")


@dataclass(frozen=True)
class EvalReport:
    """Per-metric means in the three fixed groups, plus availability flags."""

    relevance: dict[str, float | None]
    readability: dict[str, float | None]
    factuality: dict[str, float | None]
    unavailable: tuple[str, ...]
    pair_count: int
    config_notes: dict[str, str]

    def to_json_dict(self) -> dict:
        return {
            "groups": {
                "relevance": self.relevance,
                "readability": self.readability,
                "factuality": self.factuality,
            },
            "unavailable": list(self.unavailable),
            "pair_count": self.pair_count,
            "config_notes": dict(sorted(self.config_notes.items())),
        }

    def to_markdown(self) -> str:
        def cell(group: dict[str, float | None], name: str) -> str:
            value = group.get(name)
            return f"{value:.4f}" if value is not None else "n/a"

        headers = (
            ["Rouge1", "Rouge2", "RougeL", "BERTScore"]
            + ["FKGL", "DCRS", "CLI", "LENS"]
            + ["AlignScore", "SummaC"]
        )
        values = (
            [cell(self.relevance, m) for m in RELEVANCE_METRICS]
            + [cell(self.readability, m) for m in READABILITY_METRICS]
            + [cell(self.factuality, m) for m in FACTUALITY_METRICS]
        )
        lines = [
            "| Group | " + " | ".join(["Relevance"] * 4 + ["Readability"] * 4 + ["Factuality"] * 2) + " |",
            "| Metric | " + " | ".join(headers) + " |",
            "|" + " --- |" * (len(headers) + 1),
            "| mean | " + " | ".join(values) + " |",
        ]
        notes = [f"- {key}: {value}" for key, value in sorted(self.config_notes.items())]
        if self.unavailable:
            notes.append("- unavailable: " + ", ".join(self.unavailable))
        return "\n".join(lines + [""] + notes) + "\n"


def _evaluate_pair(prediction, reference, familiar_words, bridge):
    hyp_tokens = tokenize(prediction)
    ref_tokens = tokenize(reference)
    stats = compute_stats(prediction, familiar_words)
    row = {
        "rouge1": rouge_mod.rouge_n(hyp_tokens, ref_tokens, 1).f1,
        "rouge2": rouge_mod.rouge_n(hyp_tokens, ref_tokens, 2).f1,
        "rougeL": rouge_mod.rouge_l(hyp_tokens, ref_tokens).f1,
        "fkgl": fkgl(stats),
        "dcrs": dale_chall(stats),
        "cli": coleman_liau(stats),
    }
    if bridge is not None:
        score = bridge.relevance(prediction, reference)
        for metric in BRIDGE_METRICS:
            row[metric] = score
    return row


def evaluate(
    pairs: list[tuple[str, str]],
    familiar_words: frozenset[str] | set[str],
    bridge=None,
    jobs: int = 1,
) -> EvalReport:
    """Mean metrics over (prediction, reference) pairs, grouped like the
    summary-benchmark tables. Bridge-only metrics are flagged unavailable
    rather than zero-filled when no bridge is configured."""
    if not pairs:
        raise EmptyPairs("no (prediction, reference) pairs to evaluate")
    for position, (_, reference) in enumerate(pairs):
        if not tokenize(reference):
            raise EmptyPairs(f"pair {position}: reference has no word tokens")

    def work(pair):
        return _evaluate_pair(pair[0], pair[1], familiar_words, bridge)

    if jobs <= 1:
        rows = [work(p) for p in pairs]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(work, pairs))

    def mean_of(metric: str) -> float:
        return sum(row[metric] for row in rows) / len(rows)

    available = set(rows[0])
    relevance = {m: (mean_of(m) if m in available else None) for m in RELEVANCE_METRICS}
    readability = {m: (mean_of(m) if m in available else None) for m in READABILITY_METRICS}
    factuality = {m: (mean_of(m) if m in available else None) for m in FACTUALITY_METRICS}
    unavailable = tuple(m for m in BRIDGE_METRICS if m not in available)
    notes = {
        "rouge_config": rouge_mod.ROUGE_CONFIG,
        "bridge": "absent (bridge metrics unavailable)" if bridge is None else "present",
    }
    return EvalReport(
        relevance=relevance,
        readability=readability,
        factuality=factuality,
        unavailable=unavailable,
        pair_count=len(pairs),
        config_notes=notes,
    )


def write_report(report: EvalReport, out_dir: str | Path) -> tuple[Path, Path]:
    """Emit report.md and report.json side by side."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    md_path = out / "report.md"
    json_path = out / "report.json"
    md_path.write_text(report.to_markdown(), encoding="utf-8")
    json_path.write_text(
        json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return md_path, json_path
