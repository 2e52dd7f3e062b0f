from __future__ import annotations

import numpy as np


def generate_corpus(
    rng: np.random.Generator,
    lemma_senses: dict[str, int],
    occurrences_per_sense: int = 4,
    filler_words: int = 8,
    sentence_length: int = 9,
) -> tuple[str, dict[str, int]]:
    """Random pipe-format corpus with a known sense inventory per lemma.

    Every sense of every lemma is attested exactly ``occurrences_per_sense``
    times; filler tokens are unannotated. Returns (text, the inventory
    table the ground-truth extractor must reproduce).
    """
    fillers = [f"filler{i}" for i in range(filler_words)]
    tokens: list[str] = []
    for lemma, senses in sorted(lemma_senses.items()):
        for sense in range(1, senses + 1):
            key = f"{lemma}%1:00:{sense:02d}::"
            tokens.extend([f"{lemma}|{lemma}|{key}"] * occurrences_per_sense)
    tokens.extend(rng.choice(fillers, size=3 * len(tokens) + 5).tolist())
    order = rng.permutation(len(tokens))
    shuffled = [tokens[i] for i in order]
    lines = [
        " ".join(shuffled[i : i + sentence_length])
        for i in range(0, len(shuffled), sentence_length)
    ]
    return "\n".join(lines) + "\n", dict(lemma_senses)
