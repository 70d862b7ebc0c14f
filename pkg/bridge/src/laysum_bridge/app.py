"""FastAPI application exposing the model-bridge wire protocol.

Endpoints (JSON over HTTP):
    GET  /health     -> {"status": "ok", "mock": bool}
    POST /generate   {"prompt": str}                  -> {"text": str, "truncated": bool}
    POST /score      {"query": str, "passages": [str]} -> {"scores": [float], "truncated": bool}
    POST /relevance  {"candidate": str, "reference": str} -> {"score": float}

Malformed bodies get 400; an unavailable backend gets 503. Inputs are
truncated server-side to 512 whitespace tokens before any backend sees
them, and generate/score responses flag when truncation happened.

Mock mode is fully deterministic and key-free: generate echoes the
prompt's last 50 words, score counts distinct query tokens present in each
passage, relevance is unigram F1. Request handling is stateless, so the
app is safe under concurrent requests.
"""

from __future__ import annotations

import logging
import re
import uuid

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

TOKEN_LIMIT = 512
ECHO_WORDS = 50

_WORD_RE = re.compile(r"[0-9a-z']+")

logger = logging.getLogger("laysum_bridge")


def _backend_error(endpoint: str, exc: Exception) -> JSONResponse:
    request_id = uuid.uuid4().hex[:12]
    logger.error("request %s: backend failure on %s: %s", request_id, endpoint, exc)
    return JSONResponse(
        status_code=503, content={"detail": str(exc), "request_id": request_id}
    )


class GenerateRequest(BaseModel):
    prompt: str


class ScoreRequest(BaseModel):
    query: str
    passages: list[str]


class RelevanceRequest(BaseModel):
    candidate: str
    reference: str


def truncate(text: str, limit: int = TOKEN_LIMIT) -> tuple[str, bool]:
    """Clamp to the first `limit` whitespace tokens."""
    tokens = text.split()
    if len(tokens) <= limit:
        return text, False
    return " ".join(tokens[:limit]), True


def word_tokens(text: str) -> list[str]:
    return _WORD_RE.findall(text.lower())


def mock_generate(prompt: str) -> str:
    tokens = prompt.split()
    return " ".join(tokens[-ECHO_WORDS:])


def mock_score(query: str, passage: str) -> float:
    return float(len(set(word_tokens(query)) & set(word_tokens(passage))))


def mock_relevance(candidate: str, reference: str) -> float:
    """Unigram F1 with clipped multiset overlap."""
    cand = word_tokens(candidate)
    ref = word_tokens(reference)
    if not cand or not ref:
        return 0.0
    counts: dict[str, int] = {}
    for tok in ref:
        counts[tok] = counts.get(tok, 0) + 1
    overlap = 0
    for tok in cand:
        if counts.get(tok, 0) > 0:
            counts[tok] -= 1
            overlap += 1
    precision = overlap / len(cand)
    recall = overlap / len(ref)
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def create_app(mock: bool = True, backends=None) -> FastAPI:
    """Build the service. `backends` (see backends.RealBackends) is required
    when mock is False."""
    if not mock and backends is None:
        raise ValueError("non-mock mode requires configured backends")

    app = FastAPI(title="laysum-bridge", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.get("/health")
    def health():
        return {"status": "ok", "mock": mock}

    @app.post("/generate")
    def generate(body: GenerateRequest):
        prompt, truncated = truncate(body.prompt)
        if mock:
            return {"text": mock_generate(prompt), "truncated": truncated}
        try:
            text = backends.generate(prompt)
        except Exception as exc:
            return _backend_error("/generate", exc)
        # real mode records the provider parameters actually used
        return {
            "text": text,
            "truncated": truncated,
            "provider": {"model": backends.llm_model},
        }

    @app.post("/score")
    def score(body: ScoreRequest):
        query, q_truncated = truncate(body.query)
        passages = []
        any_truncated = q_truncated
        for passage in body.passages:
            text, was_truncated = truncate(passage)
            passages.append(text)
            any_truncated = any_truncated or was_truncated
        if mock:
            scores = [mock_score(query, p) for p in passages]
        else:
            try:
                scores = backends.score(query, passages)
            except Exception as exc:
                return _backend_error("/score", exc)
        return {"scores": scores, "truncated": any_truncated}

    @app.post("/relevance")
    def relevance(body: RelevanceRequest):
        candidate, _ = truncate(body.candidate)
        reference, _ = truncate(body.reference)
        if mock:
            value = mock_relevance(candidate, reference)
        else:
            try:
                value = backends.relevance(candidate, reference)
            except Exception as exc:
                return _backend_error("/relevance", exc)
        return {"score": value}

    return app
