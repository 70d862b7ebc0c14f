"""Command-line surface: one subcommand per module.

Exit codes: 0 success, 1 usage error, 2 runtime error. Every subcommand
supports --json for machine-readable output (schemas ship in
laysum/schemas/). Resolved defaults are echoed to stderr at the start of
every run so unstated configuration is always reproducible. Setting
LAYSUM_BRIDGE_URL routes generation/rerank/relevance through the model
bridge; leaving it unset keeps everything offline.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels
from .bridge_client import BridgeClient, BridgeGenerator, BridgeScorer
from .config import load_pipeline_config, load_reward_config
from .corpus import load_corpus, load_passages
from .errors import LaySumError
from .pipeline import (
    EchoGenerator,
    PipelineConfig,
    PipelineServices,
    evaluate,
    mean_reference_summary_length,
    run_many,
    write_report,
)
from .ppo import CandidateSet, PpoConfig, build_candidate_set, make_composite_reward_fn, train
from .retrieval import (
    DEFAULT_B,
    DEFAULT_K1,
    HitRateTable,
    LexicalOverlapScorer,
    build_index,
    hit_rate_eval,
    load_index,
    rerank,
    save_index,
    search,
)
from .reward import RewardConfig, composite_reward, eq2_reward, normalized_readability
from .rouge import rouge_l, rouge_n
from .textstats import (
    compute_stats,
    default_familiar_words,
    load_familiar_words,
    readability_report,
    tokenize,
)

SUBCOMMANDS = (
    "ingest",
    "index",
    "retrieve",
    "readability",
    "rouge",
    "reward",
    "ppo-train",
    "run",
    "evaluate",
    "hit-rate",
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliInvocation:
    subcommand: str
    flags: dict


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of exiting itself.

    Abbreviated flags are rejected (--jso is not --json): unknown flags must
    fail loudly for the exit-code contract to mean anything.
    """

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> _Parser:
    parser = _Parser(prog="laysum", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND", parser_class=_Parser)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("ingest", help="validate and count a document corpus")
    p.add_argument("--corpus", required=True, help="JSONL document file")

    p = add("index", help="build and persist a BM25 index")
    p.add_argument("--passages", required=True, help="JSONL passage file")
    p.add_argument("--out", required=True, help="output .lsix path")
    p.add_argument("--k1", type=float, default=DEFAULT_K1)
    p.add_argument("--b", type=float, default=DEFAULT_B)

    p = add("retrieve", help="search an index, optionally rerank")
    p.add_argument("--index", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--topk", type=int, default=20)
    p.add_argument("--rerank", type=int, default=0, help="rerank to top-M (0 = off)")
    p.add_argument("--scorer", choices=("lexical", "bridge"), default="lexical")

    p = add("readability", help="readability report for a text file")
    p.add_argument("--text", required=True, help="UTF-8 text file")
    p.add_argument("--familiar", help="familiar-word list (default: bundled)")

    p = add("rouge", help="ROUGE-1/2/L between two text files")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)

    p = add("reward", help="reward scores for a readability value")
    p.add_argument("--fre", type=float, required=True)
    p.add_argument("--relevance", type=float, help="relevance in [0,1] for the composite")
    p.add_argument("--words", type=int, help="word count for the composite")
    p.add_argument("--config", help="TOML reward config")

    p = add("ppo-train", help="train the candidate-selection policy")
    p.add_argument("--sets", required=True, help="JSONL candidate sets")
    p.add_argument("--iterations", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lr", type=float, default=0.5)
    p.add_argument("--clip", type=float, default=0.2)
    p.add_argument("--batch-size", type=int, default=8)
    p.add_argument("--epochs", type=int, default=4)
    p.add_argument("--baseline", choices=("none", "running_mean"), default="running_mean")
    p.add_argument("--trace", help="write the training trace CSV here")
    p.add_argument("--config", help="TOML reward config for feature building")

    p = add("run", help="run the full pipeline over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--config", help="TOML pipeline config")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, help="process only the first N documents")
    p.add_argument("--out", help="directory for results.jsonl")

    p = add("evaluate", help="metric report over (prediction, reference) pairs")
    p.add_argument("--pairs", required=True, help="JSONL with prediction/reference fields")
    p.add_argument("--familiar", help="familiar-word list (default: bundled)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-dir", help="write report.md and report.json here")

    p = add("hit-rate", help="gold-passage hit rate at cutoffs 1/5/20")
    p.add_argument("--index", required=True)
    p.add_argument("--eval", required=True, help="JSONL with query/gold_id fields")
    p.add_argument("--scorer", choices=("none", "lexical", "bridge"), default="none")

    return parser


def parse_args(argv: list[str]) -> CliInvocation:
    parser = build_parser()
    namespace = parser.parse_args(argv)
    if namespace.subcommand is None:
        raise UsageError("laysum: a subcommand is required (see --help)")
    flags = {k: v for k, v in vars(namespace).items() if k != "subcommand"}
    return CliInvocation(subcommand=namespace.subcommand, flags=flags)


def _bridge_client() -> BridgeClient | None:
    url = os.environ.get("LAYSUM_BRIDGE_URL")
    return BridgeClient(url) if url else None


def _echo_defaults(inv: CliInvocation, reward_cfg: RewardConfig) -> None:
    bridge = "bridge" if os.environ.get("LAYSUM_BRIDGE_URL") else "offline"
    print(
        f"laysum {inv.subcommand}: kernels={kernels.BACKEND} mode={bridge} "
        f"bm25=(k1={DEFAULT_K1},b={DEFAULT_B}) "
        f"reward=(target_fre={reward_cfg.target_fre},sigma={reward_cfg.sigma},"
        f"weights={reward_cfg.w_r}/{reward_cfg.w_b}/{reward_cfg.w_l},"
        f"length_target={reward_cfg.length_target},length_sigma={reward_cfg.length_sigma},"
        f"mode={reward_cfg.mode})",
        file=sys.stderr,
    )


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load_candidate_sets(path: str, reward_cfg: RewardConfig) -> list[CandidateSet]:
    sets = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            raw = json.loads(line)
            if "features" in raw:
                sets.append(
                    CandidateSet(
                        doc_id=str(raw["doc_id"]),
                        texts=tuple(str(t) for t in raw["texts"]),
                        features=tuple(tuple(map(float, vec)) for vec in raw["features"]),
                    )
                )
            else:
                sets.append(
                    build_candidate_set(
                        doc_id=str(raw["doc_id"]),
                        texts=[str(t) for t in raw["texts"]],
                        cfg=reward_cfg,
                        reference=str(raw.get("reference", "")),
                        keyphrases=tuple(raw.get("keyphrases", ())),
                    )
                )
    if not sets:
        raise LaySumError(f"{path}: no candidate sets found")
    return sets


def _familiar_from_flag(path: str | None) -> frozenset[str]:
    return load_familiar_words(path) if path else default_familiar_words()


def _hits_payload(hits) -> list[dict]:
    return [{"passage_id": h.passage_id, "score": h.score, "rank": h.rank} for h in hits]


def dispatch(inv: CliInvocation) -> int:
    flags = inv.flags
    as_json = flags.get("json", False)
    reward_cfg = RewardConfig()
    pipeline_cfg = None
    if flags.get("config"):
        if inv.subcommand == "run":
            pipeline_cfg = load_pipeline_config(flags["config"])
            reward_cfg = pipeline_cfg.reward
        else:
            reward_cfg = load_reward_config(flags["config"])
    _echo_defaults(inv, reward_cfg)
    bridge = _bridge_client()

    if inv.subcommand == "ingest":
        corpus = load_corpus(flags["corpus"])
        payload = {"documents": len(corpus.documents), "counts": corpus.counts}
        _emit(
            payload,
            as_json,
            [f"documents: {len(corpus.documents)}"]
            + [f"  {split}: {count}" for split, count in sorted(corpus.counts.items())],
        )
        return 0

    if inv.subcommand == "index":
        passages = load_passages(flags["passages"])
        index = build_index(passages, k1=flags["k1"], b=flags["b"])
        save_index(index, flags["out"])
        payload = {
            "passages": index.passage_count,
            "terms": len(index.postings),
            "avg_doc_length": index.avg_doc_length,
            "out": flags["out"],
        }
        _emit(payload, as_json, [f"indexed {payload['passages']} passages "
                                 f"({payload['terms']} terms) -> {flags['out']}"])
        return 0

    if inv.subcommand == "retrieve":
        index = load_index(flags["index"])
        hits = search(index, flags["query"], flags["topk"])
        reranked = None
        if flags["rerank"]:
            if flags["scorer"] == "bridge":
                if bridge is None:
                    raise LaySumError("scorer 'bridge' requires LAYSUM_BRIDGE_URL")
                scorer = BridgeScorer(bridge)
            else:
                scorer = LexicalOverlapScorer()
            reranked = rerank(index, hits, flags["query"], scorer, min(flags["rerank"], len(hits)))
        payload = {"hits": _hits_payload(hits)}
        lines = [f"{h.rank:>3}  {h.score:10.4f}  {h.passage_id}" for h in hits]
        if reranked is not None:
            payload["reranked"] = _hits_payload(reranked)
            lines += ["reranked:"] + [
                f"{h.rank:>3}  {h.score:10.4f}  {h.passage_id}" for h in reranked
            ]
        _emit(payload, as_json, lines)
        return 0

    if inv.subcommand == "readability":
        text = Path(flags["text"]).read_text(encoding="utf-8")
        familiar = _familiar_from_flag(flags.get("familiar"))
        report = readability_report(text, familiar)
        stats = compute_stats(text, familiar)
        payload = {
            "fre": report.fre,
            "fkgl": report.fkgl,
            "dcrs": report.dcrs,
            "cli": report.cli,
            "stats": {
                "sentences": stats.sentence_count,
                "words": stats.word_count,
                "syllables": stats.syllable_count,
                "letters": stats.letter_count,
                "difficult_words": stats.difficult_word_count,
            },
        }
        _emit(payload, as_json, [
            f"FRE:  {report.fre:.3f}",
            f"FKGL: {report.fkgl:.3f}",
            f"DCRS: {report.dcrs:.3f}",
            f"CLI:  {report.cli:.3f}",
        ])
        return 0

    if inv.subcommand == "rouge":
        hyp = tokenize(Path(flags["hyp"]).read_text(encoding="utf-8"))
        ref = tokenize(Path(flags["ref"]).read_text(encoding="utf-8"))
        scores = {
            "rouge1": rouge_n(hyp, ref, 1),
            "rouge2": rouge_n(hyp, ref, 2),
            "rougeL": rouge_l(hyp, ref),
        }
        payload = {
            name: {"precision": s.precision, "recall": s.recall, "f1": s.f1}
            for name, s in scores.items()
        }
        _emit(payload, as_json, [
            f"{name}: P={s.precision:.4f} R={s.recall:.4f} F1={s.f1:.4f}"
            for name, s in scores.items()
        ])
        return 0

    if inv.subcommand == "reward":
        fre = flags["fre"]
        payload = {
            "normalized_readability": normalized_readability(fre, reward_cfg),
            "eq2_reward": eq2_reward(fre, reward_cfg),
            "target_fre": reward_cfg.target_fre,
            "sigma": reward_cfg.sigma,
        }
        lines = [
            f"normalized_readability: {payload['normalized_readability']:.6f}",
            f"eq2_reward:             {payload['eq2_reward']:.6f}",
        ]
        if flags.get("relevance") is not None and flags.get("words") is not None:
            breakdown = composite_reward(fre, flags["relevance"], flags["words"], reward_cfg)
            payload["composite"] = {
                "readability_component": breakdown.readability_component,
                "relevance_component": breakdown.relevance_component,
                "length_component": breakdown.length_component,
                "total": breakdown.total,
            }
            lines.append(f"composite total:        {breakdown.total:.6f}")
        _emit(payload, as_json, lines)
        return 0

    if inv.subcommand == "ppo-train":
        sets = _load_candidate_sets(flags["sets"], reward_cfg)
        cfg = PpoConfig(
            clip_epsilon=flags["clip"],
            learning_rate=flags["lr"],
            epochs_per_batch=flags["epochs"],
            batch_size=flags["batch_size"],
            baseline=flags["baseline"],
            seed=flags["seed"],
        )
        params, trace = train(
            sets, make_composite_reward_fn(reward_cfg), cfg, iterations=flags["iterations"]
        )
        if flags.get("trace"):
            trace.to_csv(flags["trace"])
        last = trace.rows[-1]
        payload = {
            "theta": list(params.theta),
            "iterations": flags["iterations"],
            "final_mean_reward": last[1],
            "final_objective": last[2],
            "seed": flags["seed"],
        }
        _emit(payload, as_json, [
            f"theta: {np.array(params.theta)}",
            f"final mean reward: {last[1]:.6f}",
        ])
        return 0

    if inv.subcommand == "run":
        corpus = load_corpus(flags["corpus"])
        if pipeline_cfg is None:
            # no config file: length_target comes from the training split
            target = mean_reference_summary_length(corpus.documents)
            pipeline_cfg = PipelineConfig(reward=RewardConfig(length_target=target))
            print(
                f"laysum run: length_target={target} (mean reference-summary length)",
                file=sys.stderr,
            )
        docs = list(corpus.documents)
        if flags.get("limit"):
            docs = docs[: flags["limit"]]
        index = load_index(flags["index"])
        if bridge is not None:
            services = PipelineServices(
                generator=BridgeGenerator(bridge), scorer=BridgeScorer(bridge)
            )
        else:
            generator = EchoGenerator() if pipeline_cfg.prompt_mode != "none" else None
            services = PipelineServices(generator=generator, scorer=LexicalOverlapScorer())
        results = run_many(docs, index, services, pipeline_cfg, jobs=flags["jobs"])
        records = [r.to_json_dict() for r in results]
        if flags.get("out"):
            out_dir = Path(flags["out"])
            out_dir.mkdir(parents=True, exist_ok=True)
            with open(out_dir / "results.jsonl", "w", encoding="utf-8") as fh:
                for record in records:
                    fh.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
        payload = {
            "documents": len(records),
            "mean_reward": sum(r["reward"]["total"] for r in records) / len(records)
            if records
            else 0.0,
            "results": records,
        }
        _emit(payload, as_json, [
            f"processed {len(records)} documents; "
            f"mean composite reward {payload['mean_reward']:.4f}"
        ])
        return 0

    if inv.subcommand == "evaluate":
        pairs = []
        with open(flags["pairs"], encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    raw = json.loads(line)
                    pairs.append((str(raw["prediction"]), str(raw["reference"])))
        familiar = _familiar_from_flag(flags.get("familiar"))
        report = evaluate(pairs, familiar, bridge=bridge, jobs=flags["jobs"])
        if flags.get("report_dir"):
            write_report(report, flags["report_dir"])
        payload = report.to_json_dict()
        _emit(payload, as_json, report.to_markdown().splitlines())
        return 0

    if inv.subcommand == "hit-rate":
        index = load_index(flags["index"])
        queries = []
        with open(flags["eval"], encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    raw = json.loads(line)
                    queries.append((str(raw["query"]), str(raw["gold_id"])))
        rows = {"bm25": hit_rate_eval(index, queries)}
        if flags["scorer"] != "none":
            if flags["scorer"] == "bridge":
                if bridge is None:
                    raise LaySumError("scorer 'bridge' requires LAYSUM_BRIDGE_URL")
                scorer = BridgeScorer(bridge)
            else:
                scorer = LexicalOverlapScorer()
            rows[flags["scorer"]] = hit_rate_eval(index, queries, scorer=scorer)
        table = HitRateTable(rows=rows)
        payload = {
            "rows": {
                name: {"top1": r.top1, "top5": r.top5, "top20": r.top20}
                for name, r in table.rows.items()
            },
            "queries": len(queries),
        }
        lines = ["method      top1    top5    top20"] + [
            f"{name:<10}  {r.top1:.4f}  {r.top5:.4f}  {r.top20:.4f}"
            for name, r in table.rows.items()
        ]
        _emit(payload, as_json, lines)
        return 0

    raise UsageError(f"laysum: unknown subcommand '{inv.subcommand}'")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        inv = parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    try:
        return dispatch(inv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (LaySumError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"laysum {inv.subcommand}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
