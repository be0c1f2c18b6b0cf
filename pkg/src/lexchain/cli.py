"""Command-line front end.

Local mode loads the thesaurus and stop list itself and runs the pipeline
in-process. With ``--server URL`` the run/lookup/relate subcommands become
thin clients of a running lexchain service (start one with ``lexchain serve``);
output bytes are identical either way.

Exit codes: 0 success; 1 word not found / words unrelated; 2 thesaurus or
stop-list failure (unreadable or malformed); 3 unreadable input document;
4 invalid option value; 5 server unreachable or server error.
"""

from __future__ import annotations

import sys

import click
import httpx

from .chainer import ChainParams
from .pipeline import run_document
from .report import (
    LookupResponse,
    RelateResponse,
    build_chain_report,
    build_lookup_response,
    build_relate_response,
    render_lookup,
    render_relate,
    render_text,
)
from .textprep import load_stoplist_file, normalize
from .thesaurus import ThesaurusFormatError, load_thesaurus_file

EXIT_NOT_FOUND = 1
EXIT_RESOURCE = 2
EXIT_INPUT = 3
EXIT_USAGE = 4
EXIT_SERVER = 5


def _fail(code: int, message: str) -> None:
    click.echo(f"lexchain: {message}", err=True)
    sys.exit(code)


def _load_index(path: str | None):
    if not path:
        _fail(EXIT_USAGE, "--thesaurus is required")
    try:
        return load_thesaurus_file(path)
    except ThesaurusFormatError as exc:
        _fail(EXIT_RESOURCE, f"malformed thesaurus {path}: {exc}")
    except OSError as exc:
        _fail(EXIT_RESOURCE, f"cannot read thesaurus {path}: {exc}")


def _load_stoplist(path: str | None):
    if not path:
        _fail(EXIT_USAGE, "--stoplist is required")
    try:
        return load_stoplist_file(path)
    except OSError as exc:
        _fail(EXIT_RESOURCE, f"cannot read stop list {path}: {exc}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as stream:
            return stream.read()
    except OSError as exc:
        _fail(EXIT_INPUT, f"cannot read input {path}: {exc}")


def _client(server: str) -> httpx.Client:
    # Seam for tests, which swap in an in-process client bound to the app.
    return httpx.Client(base_url=server, timeout=30.0)


def _post(client: httpx.Client, path: str, payload: dict) -> httpx.Response:
    try:
        response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        _fail(EXIT_SERVER, f"server request failed: {exc}")
    if response.status_code == 422:
        _fail(EXIT_USAGE, f"server rejected parameters: {response.text}")
    if response.status_code != 200:
        _fail(EXIT_SERVER, f"server error {response.status_code}: {response.text}")
    return response


@click.group()
def main() -> None:
    """Build lexical chains from text with a Roget-structured thesaurus."""


@main.command()
@click.option("--thesaurus", metavar="PATH", help="Thesaurus file (required locally).")
@click.option("--stoplist", metavar="PATH", help="Stop-list file (required locally).")
@click.option("--gap", default=5, show_default=True, help="Max sentences without growth before a chain closes.")
@click.option("--transitivity", default=1, show_default=True, help="Merge transitivity degree (0 or 1).")
@click.option("--min-length", default=2, show_default=True, help="Minimum chain length.")
@click.option("--format", "fmt", default="json", show_default=True, help="Output format: json or text.")
@click.option("--server", metavar="URL", help="Run against a lexchain service instead of locally.")
@click.argument("inputs", nargs=-1)
def run(thesaurus, stoplist, gap, transitivity, min_length, fmt, server, inputs) -> None:
    """Chain one or more documents ('-' or no argument reads stdin).

    Emits one report per input document: newline-delimited JSON objects, or
    text blocks with --format text."""
    if fmt not in ("json", "text"):
        _fail(EXIT_USAGE, f"invalid --format {fmt!r} (expected json or text)")
    params = ChainParams(max_sentence_gap=gap, transitivity_degree=transitivity, min_chain_length=min_length)
    try:
        params.validate()
    except ValueError as exc:
        _fail(EXIT_USAGE, str(exc))
    if not inputs:
        inputs = ("-",)

    if server:
        with _client(server) as client:
            for path in inputs:
                text = _read_input(path)
                response = _post(
                    client,
                    "/run",
                    {
                        "text": text,
                        "document": path,
                        "max_sentence_gap": gap,
                        "transitivity_degree": transitivity,
                        "min_chain_length": min_length,
                        "format": fmt,
                    },
                )
                click.echo(response.text)
        return

    index = _load_index(thesaurus)
    stops = _load_stoplist(stoplist)
    for path in inputs:
        text = _read_input(path)
        result = run_document(text, index, stops, params)
        if fmt == "text":
            click.echo(render_text(result, path))
        else:
            click.echo(build_chain_report(result, path).model_dump_json())


@main.command()
@click.option("--thesaurus", metavar="PATH", help="Thesaurus file (required locally).")
@click.option("--server", metavar="URL", help="Query a lexchain service instead.")
@click.argument("word")
def lookup(thesaurus, server, word) -> None:
    """Show every thesaurus location of WORD (after normalization)."""
    if server:
        with _client(server) as client:
            response = _post(client, "/lookup", {"word": word})
        model = LookupResponse.model_validate_json(response.text)
    else:
        index = _load_index(thesaurus)
        model = build_lookup_response(index, word, normalize(word, index))
    click.echo(render_lookup(model))
    sys.exit(0 if model.found else EXIT_NOT_FOUND)


@main.command()
@click.option("--thesaurus", metavar="PATH", help="Thesaurus file (required locally).")
@click.option("--server", metavar="URL", help="Query a lexchain service instead.")
@click.argument("word_a")
@click.argument("word_b")
def relate(thesaurus, server, word_a, word_b) -> None:
    """Explain the chain relation between two words, with the similarity diagnostic."""
    if server:
        with _client(server) as client:
            response = _post(client, "/relate", {"word_a": word_a, "word_b": word_b})
        model = RelateResponse.model_validate_json(response.text)
    else:
        index = _load_index(thesaurus)
        model = build_relate_response(
            index, word_a, word_b, normalize(word_a, index), normalize(word_b, index)
        )
    click.echo(render_relate(model))
    sys.exit(0 if model.related else EXIT_NOT_FOUND)


@main.command()
@click.option("--thesaurus", metavar="PATH", required=True, help="Thesaurus file.")
@click.option("--stoplist", metavar="PATH", required=True, help="Stop-list file.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(thesaurus, stoplist, host, port) -> None:
    """Start the lexchain HTTP service."""
    import uvicorn

    from .service import create_app

    try:
        app = create_app(thesaurus, stoplist)
    except (ThesaurusFormatError, OSError) as exc:
        _fail(EXIT_RESOURCE, f"cannot load resources: {exc}")
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
