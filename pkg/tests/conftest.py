import json

import pytest

from lexchain.resources import (
    fixture_stoplist_path,
    fixture_thesaurus_path,
    sample_text_path,
)
from lexchain.textprep import load_stoplist_file
from lexchain.thesaurus import load_thesaurus_file


@pytest.fixture(scope="session")
def fixture_index():
    return load_thesaurus_file(fixture_thesaurus_path())


@pytest.fixture(scope="session")
def fixture_doc():
    return json.loads(fixture_thesaurus_path().read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def fixture_stoplist():
    return load_stoplist_file(fixture_stoplist_path())


@pytest.fixture(scope="session")
def sample_text():
    return sample_text_path().read_text(encoding="utf-8")
