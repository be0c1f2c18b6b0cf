"""End-to-end document pipeline shared by the service and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .chainer import Chain, ChainParams, chain_document
from .textprep import Sentence, StopList, Token, annotate
from .thesaurus import ThesaurusIndex


@dataclass(frozen=True)
class PipelineResult:
    sentences: tuple[Sentence, ...]
    tokens: tuple[Token, ...]
    chains: tuple[Chain, ...]

    def candidate_count(self) -> int:
        return sum(1 for token in self.tokens if token.candidate)

    def candidate_lemmas(self) -> list[str]:
        return sorted({token.lemma for token in self.tokens if token.candidate})


def run_document(
    text: str,
    index: ThesaurusIndex,
    stoplist: StopList,
    params: ChainParams = ChainParams(),
) -> PipelineResult:
    """Split, tokenize, normalize, select candidates, then build/merge/select chains."""
    params.validate()
    sentences, tokens = annotate(text, index, stoplist)
    chains = chain_document(tokens, index, params)
    return PipelineResult(tuple(sentences), tuple(tokens), tuple(chains))
