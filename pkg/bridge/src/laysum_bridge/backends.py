"""Real model backends behind the bridge protocol.

generate -> an OpenAI-compatible chat-completions endpoint
score    -> embedding endpoint; scores are query-passage cosine similarities
relevance-> embedding cosine mapped to [0, 1]

Every upstream call gets a timeout and exactly one retry with exponential
backoff. Configuration comes from the environment (or explicit arguments);
startup fails fast with an actionable message when a key is missing, rather
than 503-ing on the first request.
"""

from __future__ import annotations

import math
import os
import time

import httpx

DEFAULT_TIMEOUT = 30.0
RETRY_BACKOFF_SECONDS = 1.0


class BackendConfigError(Exception):
    pass


class BackendUnavailable(Exception):
    pass


class RealBackends:
    def __init__(
        self,
        llm_url: str,
        llm_model: str,
        embed_url: str,
        embed_model: str,
        api_key: str,
        timeout: float = DEFAULT_TIMEOUT,
        transport: httpx.BaseTransport | None = None,
        sleep=time.sleep,
    ):
        if not api_key:
            raise BackendConfigError(
                "no API key configured; set LAYSUM_BRIDGE_API_KEY (the bridge "
                "refuses to start real backends without one, use --mock for key-free mode)"
            )
        if not llm_url or not embed_url:
            raise BackendConfigError(
                "set LAYSUM_BRIDGE_LLM_URL and LAYSUM_BRIDGE_EMBED_URL for real backends"
            )
        self.llm_url = llm_url
        self.llm_model = llm_model
        self.embed_url = embed_url
        self.embed_model = embed_model
        self.timeout = timeout
        self._sleep = sleep
        self._client = httpx.Client(
            timeout=timeout,
            transport=transport,
            headers={"Authorization": f"Bearer {api_key}"},
        )

    @classmethod
    def from_env(cls, env=os.environ) -> "RealBackends":
        return cls(
            llm_url=env.get("LAYSUM_BRIDGE_LLM_URL", ""),
            llm_model=env.get("LAYSUM_BRIDGE_LLM_MODEL", "gpt-4o-mini"),
            embed_url=env.get("LAYSUM_BRIDGE_EMBED_URL", ""),
            embed_model=env.get("LAYSUM_BRIDGE_EMBED_MODEL", "text-embedding-3-small"),
            api_key=env.get("LAYSUM_BRIDGE_API_KEY", ""),
        )

    def _post_with_retry(self, url: str, payload: dict) -> dict:
        last_error = None
        for attempt in range(2):  # one retry, exponential backoff
            try:
                response = self._client.post(url, json=payload)
                response.raise_for_status()
                return response.json()
            except (httpx.HTTPError, ValueError) as exc:
                last_error = exc
                if attempt == 0:
                    self._sleep(RETRY_BACKOFF_SECONDS * 2**attempt)
        raise BackendUnavailable(f"{url}: {last_error}")

    def generate(self, prompt: str) -> str:
        data = self._post_with_retry(
            self.llm_url,
            {"model": self.llm_model, "messages": [{"role": "user", "content": prompt}]},
        )
        try:
            return data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise BackendUnavailable(f"unexpected LLM response shape: {exc}") from exc

    def _embed(self, texts: list[str]) -> list[list[float]]:
        data = self._post_with_retry(
            self.embed_url, {"model": self.embed_model, "input": texts}
        )
        try:
            return [item["embedding"] for item in data["data"]]
        except (KeyError, TypeError) as exc:
            raise BackendUnavailable(f"unexpected embedding response shape: {exc}") from exc

    @staticmethod
    def _cosine(a: list[float], b: list[float]) -> float:
        dot = sum(x * y for x, y in zip(a, b))
        norm = math.sqrt(sum(x * x for x in a)) * math.sqrt(sum(y * y for y in b))
        return dot / norm if norm else 0.0

    def score(self, query: str, passages: list[str]) -> list[float]:
        vectors = self._embed([query] + passages)
        query_vec = vectors[0]
        return [self._cosine(query_vec, v) for v in vectors[1:]]

    def relevance(self, candidate: str, reference: str) -> float:
        cand_vec, ref_vec = self._embed([candidate, reference])
        # cosine of nonnegative-ish text embeddings, clamped into [0, 1]
        return min(1.0, max(0.0, self._cosine(cand_vec, ref_vec)))
