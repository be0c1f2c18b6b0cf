"""Lexical chain construction over a Roget-structured thesaurus index."""

from .chainer import (
    Chain,
    ChainMember,
    ChainParams,
    ChainScore,
    build_all_chains,
    build_chains_for_candidate,
    merge_chains,
    relation_between,
    score_chain,
    select_strongest,
)
from .pipeline import PipelineResult, run_document
from .textprep import (
    Sentence,
    StopList,
    Token,
    load_stoplist,
    load_stoplist_file,
    normalize,
    select_candidates,
    split_sentences,
    tokenize,
)
from .thesaurus import (
    REPETITION,
    EntryLocation,
    Head,
    Relation,
    SimilarityLevel,
    ThesaurusFormatError,
    ThesaurusIndex,
    dump_thesaurus,
    load_thesaurus,
    load_thesaurus_file,
    lookup,
    same_head,
    similarity_level,
    thesaural_relation,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "ChainMember",
    "ChainParams",
    "ChainScore",
    "EntryLocation",
    "Head",
    "PipelineResult",
    "REPETITION",
    "Relation",
    "Sentence",
    "SimilarityLevel",
    "StopList",
    "ThesaurusFormatError",
    "ThesaurusIndex",
    "Token",
    "build_all_chains",
    "build_chains_for_candidate",
    "dump_thesaurus",
    "load_stoplist",
    "load_stoplist_file",
    "load_thesaurus",
    "load_thesaurus_file",
    "lookup",
    "merge_chains",
    "normalize",
    "relation_between",
    "run_document",
    "same_head",
    "score_chain",
    "select_candidates",
    "select_strongest",
    "similarity_level",
    "split_sentences",
    "thesaural_relation",
    "tokenize",
]
