import pytest

from lexchain.chainer import ChainParams
from lexchain.pipeline import run_document


@pytest.fixture(scope="module")
def golden(fixture_index, fixture_stoplist, sample_text):
    return run_document(sample_text, fixture_index, fixture_stoplist)


def test_golden_chain_positions(golden):
    positions = [chain.positions() for chain in golden.chains]
    assert positions == [
        (5, 6, 9, 13, 18, 23, 26, 32, 42, 47, 52, 56, 58, 66, 78, 89),
        (29, 42, 50),
        (40, 44, 56, 75, 86),
    ]


def test_final_chains_may_overlap_without_merging(golden):
    first, second, third = golden.chains
    assert first.indexes & second.indexes == {42}   # the "events" occurrence
    assert first.indexes & third.indexes == {56}    # the "line" occurrence
    assert second.indexes & third.indexes == set()


def test_candidate_counts(golden):
    assert len(golden.sentences) == 4
    assert golden.candidate_count() == 29
    assert len(golden.candidate_lemmas()) == 22


def test_chain_members_are_candidates(golden):
    for chain in golden.chains:
        for member in chain.members:
            assert member.token.candidate
            assert not member.token.hyphen_part


def test_merged_chain_records_earliest_admission(golden):
    first = golden.chains[0]
    by_position = {member.token.token_index: member for member in first.members}
    # the chain's opening member has no admission link
    assert first.members[0].linked_to is None
    # "embankment" was admitted through "direction", not through the seed
    assert by_position[89].linked_to == 18
    assert by_position[89].admitted_by is not None
    assert by_position[89].admitted_by.head == 520
    # "events" and "takes" were admitted through the opening "train"
    assert by_position[42].linked_to == 5
    assert by_position[42].admitted_by.head == 150
    assert by_position[52].linked_to == 5
    assert by_position[52].admitted_by.head == 320


def test_degree_zero_keeps_unmerged_chains(fixture_index, fixture_stoplist, sample_text):
    result = run_document(
        sample_text, fixture_index, fixture_stoplist, ChainParams(transitivity_degree=0)
    )
    lemma_sets = [chain.lemmas() for chain in result.chains]
    # without merging, the strongest per-seed chains survive unmerged
    assert lemma_sets == [
        (
            "train", "travelling", "rails", "velocity", "direction",
            "travelling", "train", "train", "train", "line", "train", "train",
        ),
        ("advantage", "events", "event"),
        ("regard", "reference", "line", "relative", "respect"),
    ]
