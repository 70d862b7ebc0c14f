import json

import jsonschema
import pytest

from laysum.cli import CliInvocation, UsageError, dispatch, main, parse_args

from .conftest import write_jsonl

SCHEMA_DIR = None


def _schema(name):
    global SCHEMA_DIR
    if SCHEMA_DIR is None:
        import laysum

        SCHEMA_DIR = __import__("pathlib").Path(laysum.__file__).parent / "schemas"
    return json.loads((SCHEMA_DIR / f"{name}.json").read_text())


def _validate(name, payload):
    jsonschema.validate(payload, _schema(name))


def _run_json(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


class TestParseArgs:
    def test_readability_invocation(self):
        inv = parse_args(["readability", "--text", "f.txt"])
        assert inv == CliInvocation(
            subcommand="readability", flags={"text": "f.txt", "familiar": None, "json": False}
        )

    def test_unknown_subcommand(self):
        with pytest.raises(UsageError):
            parse_args(["bogus"])

    def test_unknown_flag(self):
        with pytest.raises(UsageError):
            parse_args(["readability", "--text", "f.txt", "--zap"])

    def test_missing_required_flag(self):
        with pytest.raises(UsageError):
            parse_args(["readability"])

    def test_retrieve_full_invocation(self):
        inv = parse_args(
            ["retrieve", "--index", "i.lsix", "--query", "what is insulin",
             "--topk", "20", "--rerank", "5"]
        )
        assert inv.subcommand == "retrieve"
        assert inv.flags["topk"] == 20
        assert inv.flags["rerank"] == 5

    def test_no_subcommand(self):
        with pytest.raises(UsageError):
            parse_args([])


class TestExitCodes:
    def test_usage_error_exits_one(self, capsys):
        assert main(["bogus"]) == 1
        assert capsys.readouterr().err

    def test_runtime_error_exits_two(self, capsys):
        assert main(["readability", "--text", "/nonexistent/file.txt"]) == 2
        err = capsys.readouterr().err
        assert "error" in err

    def test_success_exits_zero(self, tmp_path, capsys):
        text = tmp_path / "t.txt"
        text.write_text("The cat sat on the mat.")
        assert main(["readability", "--text", str(text)]) == 0

    def test_domain_error_exits_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.jsonl"
        bad.write_text('{"id":"d1","article":""}\n')
        assert main(["ingest", "--corpus", str(bad)]) == 2

    def test_defaults_echoed_to_stderr(self, tmp_path, capsys):
        text = tmp_path / "t.txt"
        text.write_text("The cat sat.")
        main(["readability", "--text", str(text)])
        err = capsys.readouterr().err
        assert "kernels=" in err and "target_fre=60.0" in err

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "SUBCOMMAND" in capsys.readouterr().out

    def test_abbreviated_flags_rejected(self, capsys):
        # --jso must not silently mean --json
        assert main(["readability", "--text", "f.txt", "--jso"]) == 1
        assert main(["readability", "--h"]) == 1
        capsys.readouterr()


class TestJsonOutputs:
    def test_ingest_schema(self, docs_jsonl, capsys):
        payload = _run_json(capsys, ["ingest", "--corpus", str(docs_jsonl), "--json"])
        _validate("ingest", payload)
        assert payload["documents"] == 5

    def test_index_and_retrieve_schema(self, passages_jsonl, tmp_path, capsys):
        out = tmp_path / "i.lsix"
        payload = _run_json(
            capsys, ["index", "--passages", str(passages_jsonl), "--out", str(out), "--json"]
        )
        _validate("index", payload)
        payload = _run_json(
            capsys,
            ["retrieve", "--index", str(out), "--query", "blood sugar hormone",
             "--topk", "5", "--rerank", "3", "--json"],
        )
        _validate("retrieve", payload)
        assert payload["hits"][0]["rank"] == 1
        assert len(payload["reranked"]) <= 3

    def test_readability_schema(self, tmp_path, capsys):
        text = tmp_path / "t.txt"
        text.write_text("The cat sat on the mat. The dog ran far away.")
        payload = _run_json(capsys, ["readability", "--text", str(text), "--json"])
        _validate("readability", payload)

    def test_rouge_identity_schema(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("The insulin study found folding errors.")
        b.write_text("The insulin study found folding errors.")
        payload = _run_json(capsys, ["rouge", "--hyp", str(a), "--ref", str(b), "--json"])
        _validate("rouge", payload)
        assert payload["rouge1"]["f1"] == 1.0
        assert payload["rouge2"]["f1"] == 1.0
        assert payload["rougeL"]["f1"] == 1.0

    def test_reward_peak_schema(self, capsys):
        payload = _run_json(capsys, ["reward", "--fre", "60", "--json"])
        _validate("reward", payload)
        assert payload["normalized_readability"] == 1.0

    def test_reward_composite(self, capsys):
        payload = _run_json(
            capsys, ["reward", "--fre", "60", "--relevance", "1.0", "--words", "200", "--json"]
        )
        _validate("reward", payload)
        assert payload["composite"]["total"] == 1.0

    def test_evaluate_schema(self, tmp_path, capsys):
        pairs = write_jsonl(
            tmp_path / "pairs.jsonl",
            [
                {"prediction": "The cat sat.", "reference": "The cat sat on the mat."},
                {"prediction": "A dog ran.", "reference": "The dog ran far."},
            ],
        )
        payload = _run_json(capsys, ["evaluate", "--pairs", str(pairs), "--json"])
        _validate("evaluate", payload)
        assert payload["pair_count"] == 2

    def test_hit_rate_schema_and_monotonicity(self, passages_jsonl, tmp_path, capsys):
        out = tmp_path / "i.lsix"
        _run_json(capsys, ["index", "--passages", str(passages_jsonl), "--out", str(out), "--json"])
        from laysum.corpus import load_passages

        passages = load_passages(passages_jsonl)
        pairs = write_jsonl(
            tmp_path / "eval.jsonl",
            [{"query": p.text, "gold_id": p.id} for p in passages[:6]],
        )
        payload = _run_json(
            capsys, ["hit-rate", "--index", str(out), "--eval", str(pairs), "--json"]
        )
        _validate("hit_rate", payload)
        row = payload["rows"]["bm25"]
        assert row["top1"] <= row["top5"] <= row["top20"]

    def test_run_schema(self, docs_jsonl, passages_jsonl, tmp_path, capsys):
        index_path = tmp_path / "i.lsix"
        _run_json(
            capsys, ["index", "--passages", str(passages_jsonl), "--out", str(index_path), "--json"]
        )
        payload = _run_json(
            capsys,
            ["run", "--corpus", str(docs_jsonl), "--index", str(index_path),
             "--out", str(tmp_path / "results"), "--json"],
        )
        _validate("run", payload)
        assert payload["documents"] == 5
        assert (tmp_path / "results" / "results.jsonl").exists()


class TestPpoTrainCli:
    def _sets_file(self, tmp_path):
        return write_jsonl(
            tmp_path / "sets.jsonl",
            [
                {
                    "doc_id": "bandit",
                    "texts": ["c0", "c1", "c2", "c3", "c4"],
                    "features": [
                        [0.2, 0.1, 0.3],
                        [0.3, 0.2, 0.1],
                        [0.95, 0.9, 0.9],
                        [0.1, 0.2, 0.2],
                        [0.4, 0.3, 0.2],
                    ],
                }
            ],
        )

    def test_schema(self, tmp_path, capsys):
        sets = self._sets_file(tmp_path)
        payload = _run_json(
            capsys,
            ["ppo-train", "--sets", str(sets), "--iterations", "50", "--seed", "4", "--json"],
        )
        _validate("ppo_train", payload)

    def test_seeded_trace_bytes_identical(self, tmp_path, capsys):
        sets = self._sets_file(tmp_path)
        traces = []
        for name in ("t1.csv", "t2.csv"):
            path = tmp_path / name
            code = main(
                ["ppo-train", "--sets", str(sets), "--iterations", "40", "--seed", "9",
                 "--trace", str(path), "--json"]
            )
            assert code == 0
            capsys.readouterr()
            traces.append(path.read_bytes())
        assert traces[0] == traces[1]

    def test_different_seeds_differ(self, tmp_path, capsys):
        sets = self._sets_file(tmp_path)
        outputs = []
        for seed in ("1", "2"):
            path = tmp_path / f"seed{seed}.csv"
            main(["ppo-train", "--sets", str(sets), "--iterations", "40", "--seed", seed,
                  "--trace", str(path)])
            capsys.readouterr()
            outputs.append(path.read_bytes())
        assert outputs[0] != outputs[1]


class TestDispatchContract:
    def test_dispatch_rejects_unknown_invocation(self):
        with pytest.raises(UsageError):
            dispatch(CliInvocation(subcommand="nope", flags={"json": False}))


from hypothesis import HealthCheck, given, settings, strategies as st  # noqa: E402

_flag_text = st.text(
    alphabet="abcdefghijklmnopqrstuvwxyz-", min_size=1, max_size=12
).map(lambda s: f"--{s}")


class TestExitCodeContractProperties:
    @given(argv=st.lists(st.text(min_size=1, max_size=10), min_size=1, max_size=3))
    @settings(max_examples=50, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_garbage_argv_never_crashes_and_exits_one(self, capsys, argv):
        if argv[0] in (
            "ingest", "index", "retrieve", "readability", "rouge", "reward",
            "ppo-train", "run", "evaluate", "hit-rate", "-h", "--help",
        ):
            return
        assert main(argv) == 1
        capsys.readouterr()

    @given(extra=_flag_text)
    @settings(max_examples=30, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_unknown_flags_exit_one(self, capsys, extra):
        if extra in ("--json", "--text", "--familiar", "-h", "--help"):
            return
        assert main(["readability", "--text", "f.txt", extra]) == 1
        capsys.readouterr()

    @given(junk=st.text(max_size=40).filter(lambda s: s.strip()))
    @settings(max_examples=30, suppress_health_check=[HealthCheck.function_scoped_fixture])
    def test_malformed_corpus_lines_exit_two(self, tmp_path_factory, capsys, junk):
        try:
            json.loads(junk)
            return  # only malformed lines belong in this property
        except json.JSONDecodeError:
            pass
        path = tmp_path_factory.mktemp("cli") / "bad.jsonl"
        path.write_text(junk + "\n")
        assert main(["ingest", "--corpus", str(path)]) == 2
        capsys.readouterr()
