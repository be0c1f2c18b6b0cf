"""Wire and report models (pydantic) plus the canonical renderers.

The service and the CLI both serialize through these functions, so a local run
and a run against a server produce byte-identical output for the same inputs.
Densities and strengths are exact rationals serialized as
"numerator/denominator" in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field

from .pipeline import PipelineResult
from .thesaurus import (
    REPETITION,
    ThesaurusIndex,
    shared_heads_any_pos,
    similarity_level,
    thesaural_relation,
)


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class MemberModel(BaseModel):
    surface: str
    lemma: str
    sentence_index: int
    token_index: int
    relation: str | None
    linked_to: int | None


class ScoreModel(BaseModel):
    length: int
    reiteration: int
    span: int
    density: str
    strength: str


class ChainModel(BaseModel):
    members: list[MemberModel]
    score: ScoreModel


class ChainReport(BaseModel):
    document: str
    sentences: int
    candidates: int
    chains: list[ChainModel]


class RunRequest(BaseModel):
    text: str
    document: str = "document"
    max_sentence_gap: int = Field(default=5, ge=1)
    transitivity_degree: int = Field(default=1, ge=0, le=1)
    min_chain_length: int = Field(default=2, ge=2)


class LocationModel(BaseModel):
    head_number: int
    head_name: str
    pos: str
    paragraph_index: int
    group_index: int
    entry: str


class LookupResponse(BaseModel):
    word: str
    lemma: str
    found: bool
    locations: list[LocationModel]


class SharedHeadModel(BaseModel):
    number: int
    name: str


class RelateResponse(BaseModel):
    word_a: str
    word_b: str
    lemma_a: str
    lemma_b: str
    related: bool
    relation: str | None  # "repetition" | "same-head:<n>"
    head: int | None
    similarity: str
    shared_heads: list[SharedHeadModel]  # any-POS co-heads, for diagnostics


def build_chain_report(result: PipelineResult, document: str) -> ChainReport:
    chains = []
    for chain in result.chains:
        members = [
            MemberModel(
                surface=member.token.surface,
                lemma=member.token.lemma,
                sentence_index=member.token.sentence_index,
                token_index=member.token.token_index,
                relation=member.admitted_by.label if member.admitted_by else None,
                linked_to=member.linked_to,
            )
            for member in chain.members
        ]
        score = ScoreModel(
            length=chain.score.length,
            reiteration=chain.score.reiteration,
            span=chain.score.span,
            density=fraction_str(chain.score.density),
            strength=fraction_str(chain.score.strength),
        )
        chains.append(ChainModel(members=members, score=score))
    return ChainReport(
        document=document,
        sentences=len(result.sentences),
        candidates=result.candidate_count(),
        chains=chains,
    )


def render_text(result: PipelineResult, document: str) -> str:
    """Human-readable report; includes the candidate lemma set."""
    lemmas = result.candidate_lemmas()
    lines = [
        f"document: {document}",
        f"sentences: {len(result.sentences)}",
        f"candidate tokens: {result.candidate_count()}",
        f"candidate lemmas ({len(lemmas)}): {', '.join(lemmas)}",
        f"chains: {len(result.chains)}",
    ]
    for number, chain in enumerate(result.chains, start=1):
        score = chain.score
        lines.append(
            f"chain {number}: length={score.length} reiteration={score.reiteration} "
            f"span={score.span} density={fraction_str(score.density)} "
            f"strength={fraction_str(score.strength)}"
        )
        for member in chain.members:
            token = member.token
            if member.admitted_by is None:
                tail = "(seed)"
            else:
                tail = f"{member.admitted_by.label} <- #{member.linked_to}"
            lines.append(f"  s{token.sentence_index} #{token.token_index} {token.surface} {tail}")
    return "\n".join(lines)


def build_lookup_response(index: ThesaurusIndex, word: str, lemma: str) -> LookupResponse:
    locations = [
        LocationModel(
            head_number=loc.head_number,
            head_name=index.head_name(loc.head_number),
            pos=loc.pos,
            paragraph_index=loc.paragraph_index,
            group_index=loc.group_index,
            entry=loc.entry,
        )
        for loc in index.lookup(lemma)
    ]
    return LookupResponse(word=word, lemma=lemma, found=bool(locations), locations=locations)


def render_lookup(response: LookupResponse) -> str:
    if not response.found:
        return "not found"
    lines = [f"lemma: {response.lemma}"]
    for loc in response.locations:
        lines.append(
            f"head {loc.head_number} {loc.head_name} / {loc.pos} / "
            f"paragraph {loc.paragraph_index} / group {loc.group_index}"
        )
    return "\n".join(lines)


def build_relate_response(
    index: ThesaurusIndex, word_a: str, word_b: str, lemma_a: str, lemma_b: str
) -> RelateResponse:
    if lemma_a == lemma_b:
        relation = REPETITION
    else:
        relation = thesaural_relation(index, lemma_a, lemma_b)
    level = similarity_level(index, lemma_a, lemma_b)
    shared = [
        SharedHeadModel(number=number, name=index.head_name(number))
        for number in shared_heads_any_pos(index, lemma_a, lemma_b)
    ]
    return RelateResponse(
        word_a=word_a,
        word_b=word_b,
        lemma_a=lemma_a,
        lemma_b=lemma_b,
        related=relation is not None,
        relation=relation.label if relation else None,
        head=relation.head if relation else None,
        similarity=level.label,
        shared_heads=shared,
    )


def render_relate(response: RelateResponse) -> str:
    if not response.related:
        first = "no relation"
    elif response.relation == "repetition":
        first = "Repetition"
    else:
        first = f"SameHead({response.head})"
    lines = [first, f"similarity: {response.similarity}"]
    if not response.related and response.shared_heads:
        heads = ", ".join(f"{h.number} ({h.name})" for h in response.shared_heads)
        lines.append(f"note: shared head {heads} outside noun sections")
    return "\n".join(lines)
