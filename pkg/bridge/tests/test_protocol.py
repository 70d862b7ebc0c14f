import json
from pathlib import Path

import jsonschema
import pytest

from laysum_bridge.app import create_app, mock_relevance

SCHEMA_DIR = Path(__file__).parents[1] / "src" / "laysum_bridge" / "schemas"


def validate(name, payload):
    jsonschema.validate(payload, json.loads((SCHEMA_DIR / f"{name}.json").read_text()))


class TestHealth:
    def test_health_shape(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        payload = response.json()
        validate("health_response", payload)
        assert payload == {"status": "ok", "mock": True}


class TestGenerate:
    def test_echoes_last_fifty_words(self, client):
        prompt = " ".join(f"w{i}" for i in range(80))
        response = client.post("/generate", json={"prompt": prompt})
        payload = response.json()
        validate("generate_response", payload)
        assert payload["text"] == " ".join(f"w{i}" for i in range(30, 80))
        assert payload["truncated"] is False

    def test_short_prompt_comes_back_whole(self, client):
        response = client.post("/generate", json={"prompt": "only these words"})
        assert response.json()["text"] == "only these words"

    def test_truncation_flag_past_512_tokens(self, client):
        prompt = " ".join(f"w{i}" for i in range(600))
        payload = client.post("/generate", json={"prompt": prompt}).json()
        assert payload["truncated"] is True
        # truncation to 512 happens before the echo window
        assert payload["text"].split()[-1] == "w511"

    def test_malformed_body_is_400(self, client):
        assert client.post("/generate", json={"wrong": "field"}).status_code == 400
        response = client.post(
            "/generate", content=b"{not json", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400


class TestScore:
    def test_overlap_counts(self, client):
        payload = client.post("/score", json={"query": "a b", "passages": ["a b", "c"]}).json()
        validate("score_response", payload)
        assert payload["scores"] == [2.0, 0.0]

    def test_scores_align_with_passages(self, client):
        passages = ["insulin here", "nothing", "insulin sugar here"]
        payload = client.post(
            "/score", json={"query": "insulin sugar", "passages": passages}
        ).json()
        assert len(payload["scores"]) == len(passages)
        assert payload["scores"] == [1.0, 0.0, 2.0]

    def test_empty_passage_list(self, client):
        payload = client.post("/score", json={"query": "a", "passages": []}).json()
        assert payload["scores"] == []

    def test_malformed_body_is_400(self, client):
        assert client.post("/score", json={"query": "a"}).status_code == 400


class TestRelevance:
    def test_identical_texts_give_one(self, client):
        payload = client.post(
            "/relevance",
            json={"candidate": "The cat sat.", "reference": "The cat sat."},
        ).json()
        validate("relevance_response", payload)
        assert payload["score"] == 1.0

    def test_disjoint_texts_give_zero(self, client):
        payload = client.post(
            "/relevance", json={"candidate": "aaa bbb", "reference": "ccc ddd"}
        ).json()
        assert payload["score"] == 0.0

    def test_unigram_f1_hand_value(self, client):
        # candidate tokens: the insulin story; reference tokens: a short insulin story
        payload = client.post(
            "/relevance",
            json={"candidate": "the insulin story", "reference": "a short insulin story"},
        ).json()
        assert payload["score"] == pytest.approx(2 * (2 / 3) * (2 / 4) / (2 / 3 + 2 / 4))

    def test_mock_relevance_is_symmetric_in_f1(self):
        a, b = "one two three", "two three four five"
        assert mock_relevance(a, b) == pytest.approx(mock_relevance(b, a))


class TestModeWiring:
    def test_non_mock_requires_backends(self):
        with pytest.raises(ValueError):
            create_app(mock=False)

    def test_backend_failure_maps_to_503(self):
        class Exploding:
            def generate(self, prompt):
                raise RuntimeError("model fell over")

            def score(self, query, passages):
                raise RuntimeError("model fell over")

            def relevance(self, candidate, reference):
                raise RuntimeError("model fell over")

        from fastapi.testclient import TestClient

        client = TestClient(create_app(mock=False, backends=Exploding()))
        assert client.post("/generate", json={"prompt": "x"}).status_code == 503
        assert client.post("/score", json={"query": "x", "passages": ["y"]}).status_code == 503
        assert (
            client.post("/relevance", json={"candidate": "x", "reference": "y"}).status_code
            == 503
        )

    def test_backend_failure_logs_request_id(self, caplog):
        class Exploding:
            def generate(self, prompt):
                raise TimeoutError("backend timeout")

        from fastapi.testclient import TestClient

        client = TestClient(create_app(mock=False, backends=Exploding()))
        with caplog.at_level("ERROR", logger="laysum_bridge"):
            response = client.post("/generate", json={"prompt": "x"})
        assert response.status_code == 503
        request_id = response.json()["request_id"]
        assert any(request_id in record.getMessage() for record in caplog.records)
