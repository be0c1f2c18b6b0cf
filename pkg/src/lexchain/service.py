"""FastAPI service wrapping the pipeline.

Resources are loaded once at application construction; the resulting index is
immutable, so request handlers are free to run concurrently against it. JSON
bodies are produced by the same writers the CLI uses, keeping output
byte-identical between local and served runs.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from fastapi import FastAPI
from fastapi.responses import PlainTextResponse, Response
from pydantic import BaseModel

from .chainer import ChainParams
from .pipeline import run_document
from .report import (
    LookupResponse,
    RelateResponse,
    RunRequest,
    build_chain_report,
    build_lookup_response,
    build_relate_response,
    render_text,
)
from .textprep import load_stoplist_file, normalize
from .thesaurus import load_thesaurus_file


class LookupRequest(BaseModel):
    word: str


class RelateRequest(BaseModel):
    word_a: str
    word_b: str


class RunServiceRequest(RunRequest):
    format: Literal["json", "text"] = "json"


class HealthResponse(BaseModel):
    status: str
    heads: int
    lemmas: int
    stopwords: int


def create_app(thesaurus_path: str | Path, stoplist_path: str | Path) -> FastAPI:
    index = load_thesaurus_file(thesaurus_path)
    stoplist = load_stoplist_file(stoplist_path)

    app = FastAPI(title="lexchain", description="Lexical chain construction service")

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(
            status="ok",
            heads=len(index.heads),
            lemmas=index.lemma_count(),
            stopwords=len(stoplist),
        )

    @app.post("/run")
    def run(request: RunServiceRequest) -> Response:
        params = ChainParams(
            max_sentence_gap=request.max_sentence_gap,
            transitivity_degree=request.transitivity_degree,
            min_chain_length=request.min_chain_length,
        )
        result = run_document(request.text, index, stoplist, params)
        if request.format == "text":
            return PlainTextResponse(render_text(result, request.document))
        report = build_chain_report(result, request.document)
        return Response(content=report.model_dump_json(), media_type="application/json")

    @app.post("/lookup")
    def lookup_word(request: LookupRequest) -> Response:
        lemma = normalize(request.word, index)
        response = build_lookup_response(index, request.word, lemma)
        return Response(content=response.model_dump_json(), media_type="application/json")

    @app.post("/relate")
    def relate_words(request: RelateRequest) -> Response:
        lemma_a = normalize(request.word_a, index)
        lemma_b = normalize(request.word_b, index)
        response = build_relate_response(index, request.word_a, request.word_b, lemma_a, lemma_b)
        return Response(content=response.model_dump_json(), media_type="application/json")

    return app


def create_app_from_env() -> FastAPI:
    """App factory for ``uvicorn --factory lexchain.service:create_app_from_env``.

    Reads LEXCHAIN_THESAURUS and LEXCHAIN_STOPLIST.
    """
    thesaurus = os.environ.get("LEXCHAIN_THESAURUS")
    stoplist = os.environ.get("LEXCHAIN_STOPLIST")
    if not thesaurus or not stoplist:
        raise RuntimeError("LEXCHAIN_THESAURUS and LEXCHAIN_STOPLIST must be set")
    return create_app(thesaurus, stoplist)
