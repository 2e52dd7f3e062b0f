"""Ground-truth sense counts: distinct annotated senses attested per lemma."""
from __future__ import annotations

from pathlib import Path

from .corpus import CorpusFormatError, Sentence, load_corpus


def sense_inventory(sentences: list[Sentence]) -> dict[str, set[str]]:
    inventory: dict[str, set[str]] = {}
    for sentence in sentences:
        for token in sentence:
            if token.sense_key is not None and token.lemma is not None:
                inventory.setdefault(token.lemma, set()).add(token.sense_key)
    return inventory


def sense_counts(sentences: list[Sentence]) -> dict[str, int]:
    return {lemma: len(keys) for lemma, keys in sense_inventory(sentences).items()}


def format_ground_truth(counts: dict[str, int]) -> str:
    return "".join(f"{lemma}\t{count}\n" for lemma, count in sorted(counts.items()))


def extract_ground_truth(corpus_path: str | Path, output_path: str | Path) -> dict[str, int]:
    """Write 'lemma<TAB>count' lines for every annotated lemma; the format
    is exactly what the sense-evaluation harness consumes."""
    counts = sense_counts(load_corpus(corpus_path))
    if not counts:
        raise CorpusFormatError(f"corpus has no sense-annotated tokens: {corpus_path}")
    Path(output_path).write_text(format_ground_truth(counts), encoding="utf-8")
    return counts
