import io
from pathlib import Path

from hypothesis import given
from hypothesis import strategies as st

from lexchain.textprep import (
    annotate,
    load_stoplist,
    normalize,
    select_candidates,
    split_sentences,
    tokenize,
)
from lexchain.thesaurus import load_thesaurus_file

MORPH = Path(__file__).parent / "data" / "morph_thesaurus.json"


def test_two_terminated_sentences():
    assert [s.text for s in split_sentences("A b. C d.")] == ["A b.", "C d."]


def test_empty_text():
    assert split_sentences("") == []
    assert split_sentences("   \n ") == []


def test_sample_paragraph_splits_into_four(sample_text):
    sentences = split_sentences(sample_text)
    assert len(sentences) == 4
    assert sentences[0].text.endswith("Figure 1.")
    assert sentences[1].text.startswith("People")
    assert sentences[3].text.endswith("embankment.")


def test_abbreviations_and_initials_do_not_split():
    assert len(split_sentences("See Fig. Two for details.")) == 1
    assert len(split_sentences("Dr. Who called.")) == 1
    assert len(split_sentences("J. Smith arrived. He left.")) == 2
    assert len(split_sentences("Use apples, e.g. Galas, here.")) == 1


def test_unterminated_tail_kept():
    assert [s.text for s in split_sentences("One. two three")] == ["One. two three"]
    assert [s.text for s in split_sentences("no terminator")] == ["no terminator"]


def test_offsets_reconstruct_input(sample_text):
    for text in ["A b. C d.", sample_text, "  spaced.  Out.  ", "x"]:
        for sentence in split_sentences(text):
            assert text[sentence.start : sentence.end] == sentence.text
        # sentences must not overlap and must appear in order
        spans = [(s.start, s.end) for s in split_sentences(text)]
        assert spans == sorted(spans)
        for (a, b), (c, d) in zip(spans, spans[1:]):
            assert b <= c


@given(st.text(alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Zs"), whitelist_characters=".!?\n"), max_size=80))
def test_split_never_loses_non_whitespace(text):
    joined = "".join(s.text for s in split_sentences(text))
    assert sorted(joined.split()) == sorted(text.split())


def test_tokenize_strips_punctuation():
    assert tokenize("trains, rails!") == ["trains", "rails"]


def test_tokenize_hyphen_emits_whole_and_parts():
    assert tokenize("reference-body") == ["reference-body", "reference", "body"]


def test_tokenize_drops_digits():
    assert tokenize("Figure 1") == ["Figure"]
    assert tokenize("3 2 1") == []


def test_tokenize_keeps_apostrophes():
    assert tokenize("don't stop") == ["don't", "stop"]


def test_normalize_examples():
    index = load_thesaurus_file(MORPH)
    assert normalize("Rome", index) == "rome"
    assert normalize("rails", index) == "rail"
    assert normalize("xqzzt", index) == "xqzzt"


def test_normalize_suffix_families():
    index = load_thesaurus_file(MORPH)
    assert normalize("tries", index) == "try"
    assert normalize("boxes", index) == "box"
    assert normalize("running", index) == "run"
    assert normalize("making", index) == "make"
    assert normalize("hoped", index) == "hope"
    assert normalize("stopped", index) == "stop"
    assert normalize("bigger", index) == "big"
    assert normalize("largest", index) == "large"


def test_normalize_prefers_exact_index_hit(fixture_index):
    # "events" is indexed itself, so it is not stripped to "event"
    assert normalize("events", fixture_index) == "events"
    assert normalize("Takes", fixture_index) == "takes"


def test_normalize_idempotent(fixture_index):
    index = load_thesaurus_file(MORPH)
    words = ["Rails", "tries", "running", "xqzzt", "Rome", "stopped", "largest"]
    for word in words + sorted(fixture_index.lemma_index):
        for idx in (index, fixture_index):
            once = normalize(word, idx)
            assert normalize(once, idx) == once


def test_load_stoplist():
    assert len(load_stoplist(io.StringIO("the\nof\n"))) == 2
    assert len(load_stoplist(io.StringIO("The\nthe\n"))) == 1
    assert len(load_stoplist(io.StringIO("# comment\n\nthe\n of \n"))) == 2


def test_fixture_stoplist_contents(fixture_stoplist):
    required = {
        "we", "a", "very", "the", "in", "this", "will", "with", "they", "all",
        "which", "also", "can", "be", "given", "to", "same", "way", "as",
    }
    assert required <= fixture_stoplist.entries
    assert "travelling" not in fixture_stoplist
    assert "rails" not in fixture_stoplist


def test_select_candidates(fixture_index, fixture_stoplist, sample_text):
    _, tokens = annotate(sample_text, fixture_index, fixture_stoplist)
    for token in tokens:
        if token.hyphen_part:
            assert not token.candidate
        else:
            assert token.candidate == (token.lemma not in fixture_stoplist)


def test_select_candidates_empty_and_full(fixture_index):
    from lexchain.textprep import StopList

    _, tokens = annotate("Alpha beta gamma.", fixture_index, StopList(frozenset()))
    assert all(t.candidate for t in tokens)
    _, tokens = annotate("The of and.", fixture_index, load_stoplist(io.StringIO("the\nof\nand\n")))
    assert not any(t.candidate for t in tokens)


def test_candidate_set_matches_sample(fixture_index, fixture_stoplist, sample_text):
    _, tokens = annotate(sample_text, fixture_index, fixture_stoplist)
    lemmas = sorted({t.lemma for t in tokens if t.candidate})
    assert lemmas == [
        "advantage", "constant", "definition", "direction", "embankment",
        "event", "events", "figure", "line", "people", "rails", "reference",
        "reference-body", "regard", "relative", "respect", "rigid",
        "simultaneity", "takes", "train", "travelling", "velocity",
    ]


def test_token_indices_monotone(fixture_index, fixture_stoplist, sample_text):
    _, tokens = annotate(sample_text, fixture_index, fixture_stoplist)
    indices = [t.token_index for t in tokens]
    assert indices == sorted(indices)
    assert len(set(indices)) == len(indices)
    sentence_indices = [t.sentence_index for t in tokens]
    assert sentence_indices == sorted(sentence_indices)


def test_surfaces_appear_in_their_sentences(fixture_index, fixture_stoplist, sample_text):
    sentences, tokens = annotate(sample_text, fixture_index, fixture_stoplist)
    for token in tokens:
        assert token.surface in sentences[token.sentence_index].text
