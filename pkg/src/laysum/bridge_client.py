"""HTTP client for the model bridge.

The bridge isolates every neural model behind four JSON endpoints:
POST /generate, /score, /relevance and GET /health. The core never imports
model code; absent a bridge it runs fully offline.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.request

from .errors import BridgeError
from .pipeline import GeneratorClient
from .retrieval import RerankScorer

DEFAULT_TIMEOUT = 30.0


class BridgeClient:
    def __init__(self, base_url: str, timeout: float = DEFAULT_TIMEOUT):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    def _post(self, endpoint: str, payload: dict) -> dict:
        body = json.dumps(payload).encode("utf-8")
        request = urllib.request.Request(
            f"{self.base_url}{endpoint}",
            data=body,
            headers={"Content-Type": "application/json"},
            method="POST",
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                return json.loads(response.read().decode("utf-8"))
        except urllib.error.HTTPError as exc:
            detail = exc.read().decode("utf-8", errors="replace")
            raise BridgeError(f"{endpoint} returned {exc.code}: {detail}") from exc
        except (urllib.error.URLError, TimeoutError, json.JSONDecodeError) as exc:
            raise BridgeError(f"{endpoint} failed: {exc}") from exc

    def health(self) -> dict:
        request = urllib.request.Request(f"{self.base_url}/health")
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                return json.loads(response.read().decode("utf-8"))
        except (urllib.error.URLError, TimeoutError, json.JSONDecodeError) as exc:
            raise BridgeError(f"/health failed: {exc}") from exc

    def generate(self, prompt: str) -> str:
        result = self._post("/generate", {"prompt": prompt})
        text = result.get("text", "")
        if not text:
            raise BridgeError("/generate returned empty text")
        return text

    def score(self, query: str, passages: list[str]) -> list[float]:
        result = self._post("/score", {"query": query, "passages": passages})
        scores = result.get("scores")
        if not isinstance(scores, list) or len(scores) != len(passages):
            raise BridgeError("/score returned a malformed scores list")
        return [float(s) for s in scores]

    def relevance(self, candidate: str, reference: str) -> float:
        result = self._post("/relevance", {"candidate": candidate, "reference": reference})
        score = float(result["score"])
        if not 0.0 <= score <= 1.0:
            raise BridgeError(f"/relevance score {score} outside [0, 1]")
        return score


class BridgeGenerator(GeneratorClient):
    def __init__(self, client: BridgeClient):
        self.client = client

    def generate(self, prompt: str) -> str:
        return self.client.generate(prompt)


class BridgeScorer(RerankScorer):
    """Rerank scorer backed by the bridge's batch /score endpoint."""

    def __init__(self, client: BridgeClient):
        self.client = client

    def score(self, query: str, passage_text: str) -> float:
        return self.client.score(query, [passage_text])[0]

    def score_batch(self, query: str, texts: list[str]) -> list[float]:
        return self.client.score(query, texts)
