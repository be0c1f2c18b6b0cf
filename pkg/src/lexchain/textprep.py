"""Text preprocessing: sentence splitting, tokenization, normalization, candidates."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import IO, Iterator

from .thesaurus import ThesaurusIndex

# Words that keep a following period from ending a sentence ("Fig. 3", "Dr. Who",
# "e.g. this"). Single-letter initials are guarded separately.
ABBREVIATIONS = frozenset({"fig", "mr", "mrs", "dr", "vs", "e.g", "i.e"})

_TERMINATORS = ".!?"

_WORD = r"[^\W\d_]+(?:'[^\W\d_]+)*"
_TOKEN_RE = re.compile(rf"{_WORD}(?:-{_WORD})*")


@dataclass(frozen=True)
class Sentence:
    text: str
    start: int  # character offset into the source document

    @property
    def end(self) -> int:
        return self.start + len(self.text)


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    sentence_index: int
    token_index: int
    candidate: bool
    hyphen_part: bool = False  # piece of a hyphenated token; never a chain candidate


@dataclass(frozen=True)
class StopList:
    entries: frozenset[str]

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def _is_boundary(text: str, pos: int) -> bool:
    """Whether the terminator at text[pos] ends a sentence."""
    after = pos + 1
    n = len(text)
    if after >= n:
        return True
    if not text[after].isspace():
        return False
    j = after
    while j < n and text[j].isspace():
        j += 1
    if j >= n:
        return True
    if not text[j].isupper():
        return False
    if text[pos] == ".":
        # Look back over the word preceding the period; dots stay so "e.g" matches.
        k = pos
        while k > 0 and (text[k - 1].isalpha() or text[k - 1] == "."):
            k -= 1
        word = text[k:pos].strip(".")
        if word and (word.casefold() in ABBREVIATIONS or (len(word) == 1 and word.isupper())):
            return False
    return True


def split_sentences(text: str) -> list[Sentence]:
    """Split text into sentences with character offsets.

    Boundaries sit at '.', '!' or '?' followed by whitespace and an uppercase
    letter (or end of text); abbreviations and single-letter initials do not
    split. Concatenating the sentences plus the gaps between them reconstructs
    the input exactly.
    """
    sentences: list[Sentence] = []
    n = len(text)
    start = 0
    pos = 0
    while pos < n:
        if text[pos] in _TERMINATORS and _is_boundary(text, pos):
            chunk = text[start : pos + 1]
            lead = len(chunk) - len(chunk.lstrip())
            sentences.append(Sentence(chunk[lead:], start + lead))
            start = pos + 1
        pos += 1
    tail = text[start:]
    if tail.strip():
        lead = len(tail) - len(tail.lstrip())
        trail = len(tail) - len(tail.rstrip())
        sentences.append(Sentence(tail[lead : len(tail) - trail], start + lead))
    return sentences


def _iter_surfaces(sentence: str) -> Iterator[tuple[str, bool]]:
    """Yield (surface, is_hyphen_part); hyphenated matches yield whole then parts."""
    for match in _TOKEN_RE.finditer(sentence):
        surface = match.group(0)
        yield surface, False
        if "-" in surface:
            for part in surface.split("-"):
                yield part, True


def tokenize(sentence: str) -> list[str]:
    """Surface tokens of one sentence: alphabetic runs with apostrophes and
    internal hyphens; a hyphenated form is emitted whole and once per part;
    digits and punctuation are dropped."""
    return [surface for surface, _ in _iter_surfaces(sentence)]


def _suffix_candidates(folded: str) -> list[str]:
    """Ordered lemma candidates for a case-folded surface form."""
    out: list[str] = []

    def add(stem: str) -> None:
        if len(stem) >= 2 and stem not in out:
            out.append(stem)

    def add_family(stem: str) -> None:
        # plain strip, then e-restoration, then undoubling
        add(stem)
        add(stem + "e")
        if len(stem) >= 2 and stem[-1] == stem[-2]:
            add(stem[:-1])

    if folded.endswith("s") and not folded.endswith("ss"):
        add(folded[:-1])
    if folded.endswith("es"):
        add(folded[:-2])
    if folded.endswith("ies"):
        add(folded[:-3] + "y")
    if folded.endswith("ing"):
        add_family(folded[:-3])
    if folded.endswith("ed"):
        add_family(folded[:-2])
    if folded.endswith("er"):
        add_family(folded[:-2])
    if folded.endswith("est"):
        add_family(folded[:-3])
    return out


def normalize(surface: str, index: ThesaurusIndex) -> str:
    """Case-fold, then return the first index-validated suffix-stripping
    candidate; the folded form itself is tried first and returned unchanged
    when nothing is in the index."""
    folded = surface.casefold()
    if folded in index:
        return folded
    for candidate in _suffix_candidates(folded):
        if candidate in index:
            return candidate
    return folded


def load_stoplist(source: IO[str] | str) -> StopList:
    """One entry per line; blank lines and '#' comments ignored; case-folded."""
    text = source if isinstance(source, str) else source.read()
    entries = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entries.add(line.casefold())
    return StopList(frozenset(entries))


def load_stoplist_file(path: str | Path) -> StopList:
    with open(path, encoding="utf-8") as stream:
        return load_stoplist(stream)


def select_candidates(tokens: list[Token], stoplist: StopList) -> list[Token]:
    """Flag every non-stop-word occurrence as a chain candidate.

    All occurrences of non-stop words qualify; repetition of content words is a
    chain relation, not a reason to drop them. Hyphen parts stay out of the
    candidate pool (the whole token carries their candidacy)."""
    return [
        replace(token, candidate=not token.hyphen_part and token.lemma not in stoplist)
        for token in tokens
    ]


def annotate(text: str, index: ThesaurusIndex, stoplist: StopList) -> tuple[list[Sentence], list[Token]]:
    """Full preprocessing: sentences, then normalized tokens with candidate flags."""
    sentences = split_sentences(text)
    tokens: list[Token] = []
    position = 0
    for s_i, sentence in enumerate(sentences):
        for surface, is_part in _iter_surfaces(sentence.text):
            tokens.append(
                Token(
                    surface=surface,
                    lemma=normalize(surface, index),
                    sentence_index=s_i,
                    token_index=position,
                    candidate=False,
                    hyphen_part=is_part,
                )
            )
            position += 1
    return sentences, select_candidates(tokens, stoplist)
