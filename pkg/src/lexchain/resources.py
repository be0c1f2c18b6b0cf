"""Paths to the bundled fixture resources."""

from __future__ import annotations

from importlib.resources import files
from pathlib import Path


def _data_path(name: str) -> Path:
    return Path(str(files("lexchain").joinpath("data", name)))


def fixture_thesaurus_path() -> Path:
    return _data_path("thesaurus.json")


def fixture_stoplist_path() -> Path:
    return _data_path("stoplist.txt")


def sample_text_path() -> Path:
    return _data_path("sample_text.txt")
