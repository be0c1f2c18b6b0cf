"""Roget-structured thesaurus: hierarchy model, inverted lemma index, relation queries.

The index is built once from a JSON document (see ``load_thesaurus``) and is
immutable afterwards; every query function is read-only and safe to call
concurrently from any number of threads or async tasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import IO, Iterable

POS_TAGS = ("noun", "adjective", "verb", "adverb", "interjection")
_POS_RANK = {tag: rank for rank, tag in enumerate(POS_TAGS)}


class ThesaurusFormatError(ValueError):
    """A thesaurus document violates the file format."""


class SimilarityLevel(IntEnum):
    """How close two lemmas sit inside a shared head; higher is closer."""

    NONE = 0
    SAME_HEAD = 1
    SAME_POS_SECTION = 2
    SAME_PARAGRAPH = 3
    SAME_GROUP = 4

    @property
    def label(self) -> str:
        return _LEVEL_LABELS[self]


_LEVEL_LABELS = {
    SimilarityLevel.NONE: "none",
    SimilarityLevel.SAME_HEAD: "same-head",
    SimilarityLevel.SAME_POS_SECTION: "same-pos-section",
    SimilarityLevel.SAME_PARAGRAPH: "same-paragraph",
    SimilarityLevel.SAME_GROUP: "same-group",
}


@dataclass(frozen=True)
class Relation:
    """Link that admits a word into a chain: repetition, or a shared noun head."""

    kind: str  # "repetition" | "same-head"
    head: int | None = None

    @property
    def label(self) -> str:
        if self.kind == "repetition":
            return "repetition"
        return f"same-head:{self.head}"

    def __str__(self) -> str:
        if self.kind == "repetition":
            return "Repetition"
        return f"SameHead({self.head})"


REPETITION = Relation("repetition")


def same_head(number: int) -> Relation:
    return Relation("same-head", number)


@dataclass(frozen=True)
class SemicolonGroup:
    entries: tuple[str, ...]


@dataclass(frozen=True)
class Paragraph:
    groups: tuple[SemicolonGroup, ...]


@dataclass(frozen=True)
class PosSection:
    pos: str
    paragraphs: tuple[Paragraph, ...]


@dataclass(frozen=True)
class Head:
    number: int
    name: str
    sections: tuple[PosSection, ...]


@dataclass(frozen=True)
class EntryLocation:
    """Address of one entry inside the hierarchy."""

    head_number: int
    pos: str
    paragraph_index: int
    group_index: int
    entry: str

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.head_number, _POS_RANK[self.pos], self.paragraph_index, self.group_index)


@dataclass(frozen=True)
class ThesaurusIndex:
    heads: tuple[Head, ...]
    lemma_index: dict[str, tuple[EntryLocation, ...]] = field(repr=False)
    # lemma -> sorted tuple of head numbers where it has a noun entry
    _noun_heads: dict[str, tuple[int, ...]] = field(repr=False)
    _head_names: dict[int, str] = field(repr=False)

    def lookup(self, lemma: str) -> tuple[EntryLocation, ...]:
        return self.lemma_index.get(lemma, ())

    def noun_heads(self, lemma: str) -> tuple[int, ...]:
        return self._noun_heads.get(lemma, ())

    def head_name(self, number: int) -> str:
        return self._head_names[number]

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.lemma_index

    def lemma_count(self) -> int:
        return len(self.lemma_index)

    def entry_count(self) -> int:
        return sum(len(locs) for locs in self.lemma_index.values())


def _reject_unknown_keys(obj: dict, allowed: Iterable[str], where: str) -> None:
    unknown = set(obj) - set(allowed)
    if unknown:
        raise ThesaurusFormatError(f"{where}: unknown keys {sorted(unknown)}")


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ThesaurusFormatError(f"{where}: missing required key {key!r}")
    return obj[key]


def load_thesaurus(source: IO[str] | str) -> ThesaurusIndex:
    """Parse a thesaurus document from a text stream (or a JSON string).

    Raises ThesaurusFormatError on syntax errors (with line/column), duplicate
    head numbers, empty groups, unknown POS tags, or unknown keys.
    """
    text = source if isinstance(source, str) else source.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ThesaurusFormatError(
            f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc

    if not isinstance(doc, dict):
        raise ThesaurusFormatError("top level: expected an object")
    _reject_unknown_keys(doc, ("heads",), "top level")
    raw_heads = _require(doc, "heads", "top level")
    if not isinstance(raw_heads, list):
        raise ThesaurusFormatError("top level: 'heads' must be an array")

    heads: list[Head] = []
    seen_numbers: set[int] = set()
    index: dict[str, list[EntryLocation]] = {}
    noun_heads: dict[str, set[int]] = {}

    for h_i, raw_head in enumerate(raw_heads):
        where = f"heads[{h_i}]"
        if not isinstance(raw_head, dict):
            raise ThesaurusFormatError(f"{where}: expected an object")
        _reject_unknown_keys(raw_head, ("number", "name", "sections"), where)
        number = _require(raw_head, "number", where)
        name = _require(raw_head, "name", where)
        raw_sections = _require(raw_head, "sections", where)
        if not isinstance(number, int) or isinstance(number, bool) or number < 1:
            raise ThesaurusFormatError(f"{where}: head number must be a positive integer")
        if not isinstance(name, str):
            raise ThesaurusFormatError(f"{where}: head name must be a string")
        if number in seen_numbers:
            raise ThesaurusFormatError(f"{where}: duplicate head number {number}")
        seen_numbers.add(number)
        if not isinstance(raw_sections, list):
            raise ThesaurusFormatError(f"{where}: 'sections' must be an array")

        sections: list[PosSection] = []
        seen_pos: set[str] = set()
        for s_i, raw_section in enumerate(raw_sections):
            s_where = f"{where}.sections[{s_i}]"
            if not isinstance(raw_section, dict):
                raise ThesaurusFormatError(f"{s_where}: expected an object")
            _reject_unknown_keys(raw_section, ("pos", "paragraphs"), s_where)
            pos = _require(raw_section, "pos", s_where)
            raw_paragraphs = _require(raw_section, "paragraphs", s_where)
            if pos not in POS_TAGS:
                raise ThesaurusFormatError(f"{s_where}: unknown POS tag {pos!r}")
            if pos in seen_pos:
                raise ThesaurusFormatError(f"{s_where}: duplicate POS section {pos!r} in head {number}")
            seen_pos.add(pos)
            if not isinstance(raw_paragraphs, list) or not raw_paragraphs:
                raise ThesaurusFormatError(f"{s_where}: 'paragraphs' must be a non-empty array")

            paragraphs: list[Paragraph] = []
            for p_i, raw_paragraph in enumerate(raw_paragraphs):
                p_where = f"{s_where}.paragraphs[{p_i}]"
                if not isinstance(raw_paragraph, dict):
                    raise ThesaurusFormatError(f"{p_where}: expected an object")
                _reject_unknown_keys(raw_paragraph, ("groups",), p_where)
                raw_groups = _require(raw_paragraph, "groups", p_where)
                if not isinstance(raw_groups, list) or not raw_groups:
                    raise ThesaurusFormatError(f"{p_where}: 'groups' must be a non-empty array")

                groups: list[SemicolonGroup] = []
                for g_i, raw_group in enumerate(raw_groups):
                    g_where = f"{p_where}.groups[{g_i}]"
                    if not isinstance(raw_group, list) or not raw_group:
                        raise ThesaurusFormatError(f"{g_where}: group must be a non-empty array")
                    entries: list[str] = []
                    seen_entries: set[str] = set()
                    for entry in raw_group:
                        if not isinstance(entry, str) or not entry.strip():
                            raise ThesaurusFormatError(f"{g_where}: entries must be non-empty strings")
                        if entry in seen_entries:
                            raise ThesaurusFormatError(f"{g_where}: duplicate entry {entry!r}")
                        seen_entries.add(entry)
                        entries.append(entry)
                        lemma = entry.casefold()
                        index.setdefault(lemma, []).append(
                            EntryLocation(number, pos, p_i, g_i, entry)
                        )
                        if pos == "noun":
                            noun_heads.setdefault(lemma, set()).add(number)
                    groups.append(SemicolonGroup(tuple(entries)))
                paragraphs.append(Paragraph(tuple(groups)))
            sections.append(PosSection(pos, tuple(paragraphs)))
        heads.append(Head(number, name, tuple(sections)))

    lemma_index = {
        lemma: tuple(sorted(locs, key=EntryLocation.sort_key)) for lemma, locs in index.items()
    }
    return ThesaurusIndex(
        heads=tuple(heads),
        lemma_index=lemma_index,
        _noun_heads={lemma: tuple(sorted(hs)) for lemma, hs in noun_heads.items()},
        _head_names={head.number: head.name for head in heads},
    )


def load_thesaurus_file(path: str | Path) -> ThesaurusIndex:
    with open(path, encoding="utf-8") as stream:
        return load_thesaurus(stream)


def dump_thesaurus(index: ThesaurusIndex) -> str:
    """Serialize an index back to the thesaurus file format."""
    doc = {
        "heads": [
            {
                "number": head.number,
                "name": head.name,
                "sections": [
                    {
                        "pos": section.pos,
                        "paragraphs": [
                            {"groups": [list(group.entries) for group in paragraph.groups]}
                            for paragraph in section.paragraphs
                        ],
                    }
                    for section in head.sections
                ],
            }
            for head in index.heads
        ]
    }
    return json.dumps(doc, ensure_ascii=False, indent=1)


def lookup(index: ThesaurusIndex, lemma: str) -> list[EntryLocation]:
    """All locations of a normalized lemma, in deterministic order; [] if absent."""
    return list(index.lookup(lemma))


def thesaural_relation(index: ThesaurusIndex, lemma_a: str, lemma_b: str) -> Relation | None:
    """Shared-noun-head relation between two distinct normalized lemmas.

    Returns SameHead(h) for the smallest head under which both lemmas have a
    noun entry, or None. Symmetric; words absent from the index relate to
    nothing this way.
    """
    shared = set(index.noun_heads(lemma_a)) & set(index.noun_heads(lemma_b))
    if not shared:
        return None
    return same_head(min(shared))


def similarity_level(index: ThesaurusIndex, lemma_a: str, lemma_b: str) -> SimilarityLevel:
    """Strongest intra-head closeness over any pair of locations, any POS."""
    locs_a = index.lookup(lemma_a)
    locs_b = index.lookup(lemma_b)
    best = SimilarityLevel.NONE
    for la in locs_a:
        for lb in locs_b:
            if la.head_number != lb.head_number:
                continue
            if la.pos != lb.pos:
                level = SimilarityLevel.SAME_HEAD
            elif la.paragraph_index != lb.paragraph_index:
                level = SimilarityLevel.SAME_POS_SECTION
            elif la.group_index != lb.group_index:
                level = SimilarityLevel.SAME_PARAGRAPH
            else:
                level = SimilarityLevel.SAME_GROUP
            if level > best:
                best = level
                if best is SimilarityLevel.SAME_GROUP:
                    return best
    return best


def shared_heads_any_pos(index: ThesaurusIndex, lemma_a: str, lemma_b: str) -> list[int]:
    """Head numbers both lemmas appear under, in any POS section (diagnostic)."""
    heads_a = {loc.head_number for loc in index.lookup(lemma_a)}
    heads_b = {loc.head_number for loc in index.lookup(lemma_b)}
    return sorted(heads_a & heads_b)
