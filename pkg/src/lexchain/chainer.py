"""Lexical chain construction: per-candidate enumeration, merging, scoring, selection.

Chains for one seed occurrence are enumerated one per relation branch: the
repetition branch collects later occurrences of the seed's lemma, and each
noun head of the seed's lemma opens a branch collecting later candidates whose
lemma has a noun entry in that head. A growing chain closes once the scan
moves more than ``max_sentence_gap`` sentences past the last added member.
Merging then unions, to a fixpoint, chains that share at least two token
occurrences or where one chain's seed occurs in the other, after keeping only
the strongest chain containing each candidate occurrence. Selection drops
strict subsets and resolves remaining seed conflicts by strength.

All arithmetic on densities and strengths is exact (fractions), so ordering
and tie-breaking never depend on floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .textprep import Token
from .thesaurus import REPETITION, Relation, ThesaurusIndex, thesaural_relation


@dataclass(frozen=True)
class ChainParams:
    max_sentence_gap: int = 5
    transitivity_degree: int = 1
    min_chain_length: int = 2

    def validate(self) -> None:
        if self.max_sentence_gap < 1:
            raise ValueError("max_sentence_gap must be >= 1")
        if self.transitivity_degree not in (0, 1):
            raise ValueError("transitivity_degree must be 0 or 1")
        if self.min_chain_length < 2:
            raise ValueError("min_chain_length must be >= 2")


@dataclass(frozen=True)
class ChainMember:
    token: Token
    admitted_by: Relation | None  # None for the chain's first member
    linked_to: int | None  # token_index of the earlier member that admitted this one


@dataclass(frozen=True)
class ChainScore:
    length: int
    reiteration: int
    span: int
    density: Fraction
    strength: Fraction


@dataclass(frozen=True)
class Chain:
    members: tuple[ChainMember, ...]
    seeds: frozenset[int]  # token indices that seeded this chain (grows on merge)
    score: ChainScore
    indexes: frozenset[int]

    @property
    def first_index(self) -> int:
        return self.members[0].token.token_index

    def lemmas(self) -> tuple[str, ...]:
        return tuple(member.token.lemma for member in self.members)

    def positions(self) -> tuple[int, ...]:
        return tuple(member.token.token_index for member in self.members)


def relation_between(a: Token, b: Token, index: ThesaurusIndex) -> Relation | None:
    """Repetition when lemmas match, else the shared-noun-head relation."""
    if a.lemma == b.lemma:
        return REPETITION
    return thesaural_relation(index, a.lemma, b.lemma)


def _score_members(members: tuple[ChainMember, ...] | list[ChainMember]) -> ChainScore:
    length = len(members)
    lemmas = [member.token.lemma for member in members]
    reiteration = length - len(set(lemmas))
    span = members[-1].token.sentence_index - members[0].token.sentence_index + 1
    density = Fraction(length, span)
    return ChainScore(length, reiteration, span, density, length + reiteration + density)


def score_chain(chain: Chain) -> ChainScore:
    """Recompute the score of a chain from its members."""
    if not chain.members:
        raise ValueError("cannot score an empty chain")
    return _score_members(chain.members)


def _make_chain(members: list[ChainMember], seeds: frozenset[int]) -> Chain:
    return Chain(
        members=tuple(members),
        seeds=seeds,
        score=_score_members(members),
        indexes=frozenset(member.token.token_index for member in members),
    )


def chain_sort_key(chain: Chain):
    """Total order: strongest first, then the documented tie-break ladder."""
    return (
        -chain.score.strength,
        chain.first_index,
        chain.score.length,
        chain.lemmas(),
        chain.positions(),
    )


# --- branch runs -----------------------------------------------------------
#
# A "run" is a maximal gap-respecting stretch of one branch's posting list
# (all candidate occurrences matching the branch, document order). Every chain
# of that branch is a suffix of a run: consecutive-member sentence gaps do not
# depend on where the suffix starts, so the cut points are fixed per run.


class _Run:
    __slots__ = ("branch", "tokens", "n", "strengths", "prefix_best")

    def __init__(self, branch: tuple, tokens: tuple[Token, ...], min_length: int):
        self.branch = branch
        self.tokens = tokens
        self.n = len(tokens)
        last_sentence = tokens[-1].sentence_index
        strengths: list[Fraction] = [Fraction(0)] * self.n
        seen: set[str] = set()
        distinct = 0
        for i in range(self.n - 1, -1, -1):
            if tokens[i].lemma not in seen:
                seen.add(tokens[i].lemma)
                distinct += 1
            length = self.n - i
            span = last_sentence - tokens[i].sentence_index + 1
            strengths[i] = length + (length - distinct) + Fraction(length, span)
        self.strengths = strengths
        # prefix_best[p]: suffix start j <= min(p, n - min_length) with the best
        # (strength desc, first index asc, length asc) key. Suffix starts have
        # strictly increasing first indices, so the key is unique per start.
        limit = self.n - min_length  # >= 0: shorter runs are never constructed
        best = 0
        prefix_best = [0] * self.n
        for p in range(self.n):
            if 0 < p <= limit and self._key3(p) < self._key3(best):
                best = p
            prefix_best[p] = best
        self.prefix_best = prefix_best

    def _key3(self, i: int):
        return (-self.strengths[i], self.tokens[i].token_index, self.n - i)


def _split_runs(branch: tuple, tokens: list[Token], gap: int, min_length: int) -> list[_Run]:
    runs: list[_Run] = []
    start = 0
    for i in range(1, len(tokens)):
        if tokens[i].sentence_index - tokens[i - 1].sentence_index > gap:
            if i - start >= min_length:
                runs.append(_Run(branch, tuple(tokens[start:i]), min_length))
            start = i
    if len(tokens) - start >= min_length:
        runs.append(_Run(branch, tuple(tokens[start:]), min_length))
    return runs


def _build_runs(tokens: list[Token], index: ThesaurusIndex, params: ChainParams) -> list[_Run]:
    by_lemma: dict[str, list[Token]] = {}
    by_head: dict[int, list[Token]] = {}
    for token in tokens:
        if not token.candidate:
            continue
        by_lemma.setdefault(token.lemma, []).append(token)
        for head in index.noun_heads(token.lemma):
            by_head.setdefault(head, []).append(token)
    runs: list[_Run] = []
    for lemma in sorted(by_lemma):
        runs.extend(_split_runs(("rep", lemma), by_lemma[lemma], params.max_sentence_gap, params.min_chain_length))
    for head in sorted(by_head):
        runs.extend(_split_runs(("head", head), by_head[head], params.max_sentence_gap, params.min_chain_length))
    return runs


def _materialize(run: _Run, start: int, index: ThesaurusIndex) -> Chain:
    tokens = run.tokens[start:]
    seed = tokens[0]
    members = [ChainMember(seed, None, None)]
    for token in tokens[1:]:
        relation = relation_between(token, seed, index)
        if relation is None:  # cannot happen: branch membership implies a relation
            raise AssertionError(f"unrelated member {token.lemma!r} in branch {run.branch!r}")
        members.append(ChainMember(token, relation, seed.token_index))
    return _make_chain(members, frozenset((seed.token_index,)))


def _dedup(chains: list[Chain]) -> list[Chain]:
    seen: set[tuple[int, ...]] = set()
    out: list[Chain] = []
    for chain in chains:
        key = chain.positions()
        if key not in seen:
            seen.add(key)
            out.append(chain)
    return out


# --- public operations -----------------------------------------------------


def build_chains_for_candidate(
    seed: Token, tokens: list[Token], index: ThesaurusIndex, params: ChainParams = ChainParams()
) -> list[Chain]:
    """All chains seeded at one candidate occurrence: the repetition branch plus
    one branch per noun head of the seed's lemma, each grown forward under the
    sentence-gap rule; chains shorter than ``min_chain_length`` are dropped."""
    params.validate()
    if not seed.candidate:
        raise ValueError("seed token is not a candidate")
    runs = _build_runs(tokens, index, params)
    rep_runs = [run for run in runs if run.branch == ("rep", seed.lemma)]
    head_runs = [
        run
        for head in index.noun_heads(seed.lemma)
        for run in runs
        if run.branch == ("head", head)
    ]
    chains: list[Chain] = []
    for run in rep_runs + head_runs:
        for position, token in enumerate(run.tokens):
            if token.token_index == seed.token_index:
                if run.n - position >= params.min_chain_length:
                    chains.append(_materialize(run, position, index))
                break
    return _dedup(chains)


def build_all_chains(
    tokens: list[Token], index: ThesaurusIndex, params: ChainParams = ChainParams()
) -> list[Chain]:
    """Union of every candidate's chains, duplicates collapsed, ordered by first
    member position then descending strength.

    Materializes every chain; intended for modest documents (tests, small
    inputs). The pipeline uses the same run enumeration without materializing
    non-surviving chains."""
    params.validate()
    chains: list[Chain] = []
    for run in _build_runs(tokens, index, params):
        for start in range(0, run.n - params.min_chain_length + 1):
            chains.append(_materialize(run, start, index))
    chains = _dedup(chains)
    chains.sort(key=lambda c: (c.first_index,) + chain_sort_key(c))
    return chains


def _strongest_per_occurrence(chains: list[Chain]) -> list[Chain]:
    """Keep exactly the strongest chain containing each token occurrence."""
    best_for: dict[int, Chain] = {}
    keys = {id(chain): chain_sort_key(chain) for chain in chains}
    for chain in chains:
        key = keys[id(chain)]
        for position in chain.indexes:
            current = best_for.get(position)
            if current is None or key < keys[id(current)]:
                best_for[position] = chain
    winner_ids = {id(chain) for chain in best_for.values()}
    return [chain for chain in chains if id(chain) in winner_ids]


def _mergeable(a: Chain, b: Chain) -> bool:
    if len(a.indexes & b.indexes) >= 2:
        return True
    return bool(a.seeds & b.indexes) or bool(b.seeds & a.indexes)


def _merge_pair(a: Chain, b: Chain) -> Chain:
    records: dict[int, ChainMember] = {}
    for chain in (a, b):
        for member in chain.members:
            position = member.token.token_index
            current = records.get(position)
            if current is None:
                records[position] = member
                continue
            # Prefer the record of whichever source admitted the member earliest;
            # a seed record (no link) loses to any admission record.
            if member.linked_to is not None and (
                current.linked_to is None or member.linked_to < current.linked_to
            ):
                records[position] = member
    ordered = [records[position] for position in sorted(records)]
    first = ordered[0]
    if first.linked_to is not None:
        raise AssertionError("merged chain's first member carries an admission link")
    return _make_chain(ordered, a.seeds | b.seeds)


def _merge_fixpoint(chains: list[Chain]) -> list[Chain]:
    live: dict[int, Chain] = {i: chain for i, chain in enumerate(chains)}
    occupants: dict[int, set[int]] = {}
    for cid, chain in live.items():
        for position in chain.indexes:
            occupants.setdefault(position, set()).add(cid)
    next_id = len(chains)
    queue = deque(sorted(live))
    while queue:
        cid = queue.popleft()
        if cid not in live:
            continue
        chain = live[cid]
        partners = {
            other
            for position in chain.indexes
            for other in occupants.get(position, ())
            if other != cid and other in live
        }
        merged_with = None
        for other in sorted(partners):
            if _mergeable(chain, live[other]):
                merged_with = other
                break
        if merged_with is None:
            continue
        other_chain = live.pop(merged_with)
        del live[cid]
        for old, old_chain in ((cid, chain), (merged_with, other_chain)):
            for position in old_chain.indexes:
                occupants[position].discard(old)
        merged = _merge_pair(chain, other_chain)
        live[next_id] = merged
        for position in merged.indexes:
            occupants.setdefault(position, set()).add(next_id)
        queue.append(next_id)
        next_id += 1
    result = list(live.values())
    result.sort(key=lambda c: (c.first_index,) + chain_sort_key(c))
    return result


def merge_chains(chains: list[Chain], params: ChainParams = ChainParams()) -> list[Chain]:
    """Merge chains under one degree of transitivity.

    First keeps, for every candidate occurrence, only the strongest chain
    containing it (the per-candidate selection); then repeatedly unions chains
    that share at least two occurrences or whose seed occurs in the other,
    until no pair qualifies. Merged chains are rescored. With
    ``transitivity_degree`` 0 the input is returned unchanged."""
    params.validate()
    if params.transitivity_degree == 0:
        return list(chains)
    pool = _dedup(list(chains))
    survivors = _strongest_per_occurrence(pool)
    return _merge_fixpoint(survivors)


def _shares_seed(a: Chain, b: Chain) -> bool:
    return bool(a.seeds & b.indexes) or bool(b.seeds & a.indexes)


def select_strongest(chains: list[Chain], params: ChainParams = ChainParams()) -> list[Chain]:
    """Final selection: drop strict subsets, then keep the strongest chain of
    any group sharing a seed occurrence; output in document order."""
    params.validate()
    pool = _dedup(list(chains))
    maximal = [
        chain
        for chain in pool
        if not any(other is not chain and chain.indexes < other.indexes for other in pool)
    ]
    kept: list[Chain] = []
    for chain in sorted(maximal, key=chain_sort_key):
        if any(_shares_seed(chain, other) for other in kept):
            continue
        kept.append(chain)
    kept.sort(key=lambda c: (c.first_index,) + chain_sort_key(c))
    return kept


# --- pipeline fast path ----------------------------------------------------


def _winner_descriptors(runs: list[_Run]) -> list[tuple[_Run, int]]:
    """Per candidate occurrence, the strongest (run, start) chain containing it,
    without materializing losing chains. Valid suffix starts (length bounds
    included) are already encoded in each run's prefix_best array."""
    position_runs: dict[int, list[tuple[_Run, int]]] = {}
    for run in runs:
        for p, token in enumerate(run.tokens):
            position_runs.setdefault(token.token_index, []).append((run, p))

    def full_key(run: _Run, start: int):
        tokens = run.tokens[start:]
        return (
            -run.strengths[start],
            tokens[0].token_index,
            run.n - start,
            tuple(t.lemma for t in tokens),
            tuple(t.token_index for t in tokens),
        )

    winners: dict[tuple[int, ...], tuple[_Run, int]] = {}
    for position in sorted(position_runs):
        best: tuple[_Run, int] | None = None
        best_key3 = None
        for run, p in position_runs[position]:
            start = run.prefix_best[p]
            key3 = run._key3(start)
            if best is None or key3 < best_key3:
                best, best_key3 = (run, start), key3
            elif key3 == best_key3 and full_key(run, start) < full_key(*best):
                best = (run, start)
        if best is not None:
            run, start = best
            winners.setdefault(tuple(t.token_index for t in run.tokens[start:]), best)
    return list(winners.values())


def chain_document(
    tokens: list[Token], index: ThesaurusIndex, params: ChainParams = ChainParams()
) -> list[Chain]:
    """Build, merge and select chains for one preprocessed document.

    Equivalent to ``select_strongest(merge_chains(build_all_chains(...)))`` but
    only materializes chains that survive per-occurrence selection."""
    params.validate()
    if params.transitivity_degree == 0:
        return select_strongest(build_all_chains(tokens, index, params), params)
    runs = _build_runs(tokens, index, params)
    survivors = [
        _materialize(run, start, index) for run, start in _winner_descriptors(runs)
    ]
    survivors.sort(key=lambda c: (c.first_index,) + chain_sort_key(c))
    merged = _merge_fixpoint(survivors)
    return select_strongest(merged, params)
