"""Synthetic thesaurus and document generation for scale testing.

Produces full-scale fixtures: a 990-head thesaurus with 100k+ indexed entries
and benchmark documents whose words are drawn from it. Everything is driven by
a seeded RNG, so generated fixtures are reproducible.
"""

from __future__ import annotations

import random

_CONSONANTS = "bcdfglmnprstvz"
_VOWELS = "aeiou"

# High-frequency filler emitted between content words in generated documents;
# kept in sync with the bundled stop list.
FILLER_WORDS = (
    "the", "of", "and", "a", "to", "in", "is", "was", "for", "on",
    "as", "with", "at", "by", "from", "this", "that", "be", "are", "it",
)


def _word(rng: random.Random, syllables: int) -> str:
    return "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(syllables))


def generate_thesaurus_document(
    head_count: int = 990,
    paragraphs_per_head: int = 3,
    groups_per_paragraph: int = 4,
    entries_per_group: int = 10,
    seed: int = 0,
) -> dict:
    """A thesaurus document (file-format dict) at the requested scale.

    Roughly one in seven heads re-lists a couple of earlier entries, so some
    lemmas belong to several heads and cross-head chains are possible.
    """
    rng = random.Random(seed)
    heads = []
    recent: list[str] = []  # pool of recently generated entries for re-listing
    serial = 0
    for number in range(1, head_count + 1):
        paragraphs = []
        head_entries: set[str] = set()
        for _ in range(paragraphs_per_head):
            groups = []
            for _ in range(groups_per_paragraph):
                group: list[str] = []
                while len(group) < entries_per_group:
                    serial += 1
                    entry = f"{_word(rng, rng.randint(2, 3))}{serial}"
                    if entry in head_entries:
                        continue
                    head_entries.add(entry)
                    group.append(entry)
                groups.append(group)
            paragraphs.append({"groups": groups})
        if number % 7 == 0 and recent:
            shared = rng.sample(recent, k=min(2, len(recent)))
            extra = [entry for entry in shared if entry not in head_entries]
            if extra:
                paragraphs[-1]["groups"].append(extra)
                head_entries.update(extra)
        pool = paragraphs[0]["groups"][0]
        recent.extend(pool[:2])
        if len(recent) > 400:
            recent = recent[-400:]
        heads.append(
            {
                "number": number,
                "name": f"Concept {number}",
                "sections": [{"pos": "noun", "paragraphs": paragraphs}],
            }
        )
    return {"heads": heads}


def generate_document(
    thesaurus_document: dict,
    token_count: int = 10000,
    vocabulary_size: int = 4000,
    seed: int = 1,
) -> str:
    """A benchmark text of roughly ``token_count`` words sampled from the
    thesaurus vocabulary (Zipf-like weights) mixed with filler words."""
    rng = random.Random(seed)
    vocabulary: list[str] = []
    for head in thesaurus_document["heads"]:
        for section in head["sections"]:
            for paragraph in section["paragraphs"]:
                for group in paragraph["groups"]:
                    vocabulary.extend(group)
    rng.shuffle(vocabulary)
    vocabulary = vocabulary[:vocabulary_size]
    weights = [1.0 / (rank + 1) ** 0.9 for rank in range(len(vocabulary))]

    sentences = []
    produced = 0
    while produced < token_count:
        length = rng.randint(8, 16)
        words = []
        for _ in range(length):
            if rng.random() < 0.45:
                words.append(rng.choice(FILLER_WORDS))
            else:
                words.append(rng.choices(vocabulary, weights=weights, k=1)[0])
        produced += length
        words[0] = words[0].capitalize()
        sentences.append(" ".join(words) + ".")
    return " ".join(sentences)
