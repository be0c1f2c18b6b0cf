import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

import lexchain.cli as cli
from lexchain.resources import (
    fixture_stoplist_path,
    fixture_thesaurus_path,
    sample_text_path,
)
from lexchain.service import create_app

MORPH = Path(__file__).parent / "data" / "morph_thesaurus.json"

THESAURUS = str(fixture_thesaurus_path())
STOPLIST = str(fixture_stoplist_path())
SAMPLE = str(sample_text_path())


@pytest.fixture()
def runner():
    return CliRunner()


def run_args(*extra):
    return ["run", "--thesaurus", THESAURUS, "--stoplist", STOPLIST, *extra]


def test_run_json_golden(runner):
    result = runner.invoke(cli.main, run_args(SAMPLE))
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["document"] == SAMPLE
    assert report["sentences"] == 4
    assert len(report["chains"]) == 3


def test_run_text_lists_candidates(runner):
    result = runner.invoke(cli.main, run_args("--format", "text", SAMPLE))
    assert result.exit_code == 0
    candidate_line = next(
        line for line in result.output.splitlines() if line.startswith("candidate lemmas")
    )
    assert "travelling" in candidate_line
    assert "chains: 3" in result.output


def test_run_reads_stdin(runner, sample_text):
    result = runner.invoke(cli.main, run_args("-"), input=sample_text)
    assert result.exit_code == 0
    assert json.loads(result.output)["document"] == "-"


def test_run_empty_input(runner):
    result = runner.invoke(cli.main, run_args("-"), input="")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["chains"] == []


def test_run_multiple_inputs_newline_delimited(runner, tmp_path):
    other = tmp_path / "other.txt"
    other.write_text("Rome is here. Rome again.\n", encoding="utf-8")
    result = runner.invoke(cli.main, run_args(SAMPLE, str(other)))
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line]
    assert len(lines) == 2
    assert json.loads(lines[0])["document"] == SAMPLE
    assert json.loads(lines[1])["document"] == str(other)


def test_run_is_byte_deterministic(runner):
    outputs = {runner.invoke(cli.main, run_args(SAMPLE)).output for _ in range(2)}
    assert len(outputs) == 1


def test_exit_codes(runner, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert runner.invoke(cli.main, ["run", "--thesaurus", str(broken), "--stoplist", STOPLIST, SAMPLE]).exit_code == 2
    assert runner.invoke(cli.main, ["run", "--thesaurus", str(tmp_path / "missing.json"), "--stoplist", STOPLIST, SAMPLE]).exit_code == 2
    assert runner.invoke(cli.main, run_args(str(tmp_path / "missing.txt"))).exit_code == 3
    assert runner.invoke(cli.main, run_args("--gap", "0", SAMPLE)).exit_code == 4
    assert runner.invoke(cli.main, run_args("--transitivity", "3", SAMPLE)).exit_code == 4
    assert runner.invoke(cli.main, run_args("--min-length", "1", SAMPLE)).exit_code == 4
    assert runner.invoke(cli.main, run_args("--format", "xml", SAMPLE)).exit_code == 4
    assert runner.invoke(cli.main, ["run", "--stoplist", STOPLIST, SAMPLE]).exit_code == 4
    assert runner.invoke(cli.main, ["lookup", "--thesaurus", str(broken), "bank"]).exit_code == 2


def test_lookup_found(runner):
    result = runner.invoke(cli.main, ["lookup", "--thesaurus", THESAURUS, "bank"])
    assert result.exit_code == 0
    assert "lemma: bank" in result.output
    assert "head 209 Height / noun / paragraph 0 / group 0" in result.output


def test_lookup_not_found(runner):
    result = runner.invoke(cli.main, ["lookup", "--thesaurus", THESAURUS, "zzzz"])
    assert result.exit_code == 1
    assert "not found" in result.output


def test_lookup_normalizes(runner):
    result = runner.invoke(cli.main, ["lookup", "--thesaurus", str(MORPH), "rails"])
    assert result.exit_code == 0
    assert "lemma: rail" in result.output
    assert "head 1 Stems / noun" in result.output


def test_relate_same_group(runner):
    result = runner.invoke(cli.main, ["relate", "--thesaurus", THESAURUS, "mother", "grandmother"])
    assert result.exit_code == 0
    assert "SameHead(169)" in result.output
    assert "similarity: same-group" in result.output


def test_relate_repetition(runner):
    result = runner.invoke(cli.main, ["relate", "--thesaurus", THESAURUS, "rome", "Rome"])
    assert result.exit_code == 0
    assert "Repetition" in result.output


def test_relate_noun_restriction(runner):
    result = runner.invoke(cli.main, ["relate", "--thesaurus", THESAURUS, "constant", "train"])
    assert result.exit_code == 1
    assert "no relation" in result.output
    assert "71" in result.output
    assert "similarity: same-head" in result.output


@pytest.fixture()
def service_client(monkeypatch):
    app = create_app(THESAURUS, STOPLIST)
    monkeypatch.setattr(cli, "_client", lambda server: TestClient(app, base_url=server))


def test_server_mode_run_matches_local(runner, service_client):
    local = runner.invoke(cli.main, run_args(SAMPLE))
    remote = runner.invoke(cli.main, ["run", "--server", "http://lexchain.test", SAMPLE])
    assert remote.exit_code == 0
    assert remote.output == local.output


def test_server_mode_text_matches_local(runner, service_client):
    local = runner.invoke(cli.main, run_args("--format", "text", SAMPLE))
    remote = runner.invoke(cli.main, ["run", "--server", "http://lexchain.test", "--format", "text", SAMPLE])
    assert remote.exit_code == 0
    assert remote.output == local.output


def test_server_mode_lookup_and_relate(runner, service_client):
    local = runner.invoke(cli.main, ["lookup", "--thesaurus", THESAURUS, "banks"])
    remote = runner.invoke(cli.main, ["lookup", "--server", "http://lexchain.test", "banks"])
    assert remote.output == local.output
    assert remote.exit_code == 0

    missing = runner.invoke(cli.main, ["lookup", "--server", "http://lexchain.test", "zzzz"])
    assert missing.exit_code == 1

    local = runner.invoke(cli.main, ["relate", "--thesaurus", THESAURUS, "constant", "train"])
    remote = runner.invoke(cli.main, ["relate", "--server", "http://lexchain.test", "constant", "train"])
    assert remote.output == local.output
    assert remote.exit_code == 1


def test_server_unreachable(runner):
    result = runner.invoke(cli.main, ["run", "--server", "http://127.0.0.1:1", SAMPLE])
    assert result.exit_code == 5
