"""Skip-gram embedding training and plain-text export.

The trainer is pluggable: any callable mapping (sentences, dim, seed) to
(tokens, vectors) can stand in. The built-in default is a compact
skip-gram-with-negative-sampling implementation, seeded for best-effort
repeatability; it is meant for corpus-scale experiments measured in
minutes, not for production-scale vocabularies.

The output file follows the plain-text embedding convention consumed by
the sense-induction pipeline: an ``N d`` header, then one
``token v1 ... vd`` row per word.
"""
from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .corpus import CorpusFormatError, load_corpus, training_sentences

Trainer = Callable[[list[list[str]], int, int], tuple[list[str], np.ndarray]]


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-np.clip(z, -8.0, 8.0)))


def sgns_trainer(
    window: int = 5,
    epochs: int = 5,
    negative: int = 5,
    learning_rate: float = 0.025,
    min_count: int = 1,
) -> Trainer:
    """Build the default skip-gram negative-sampling trainer."""

    def train(
        sentences: list[list[str]], dim: int, seed: int
    ) -> tuple[list[str], np.ndarray]:
        counts = Counter(tok for sent in sentences for tok in sent)
        vocab = sorted(tok for tok, c in counts.items() if c >= min_count)
        if not vocab:
            raise ValueError("no token reaches the min-count threshold")
        index = {tok: i for i, tok in enumerate(vocab)}
        size = len(vocab)
        rng = np.random.default_rng(seed)
        vectors = (rng.random((size, dim)) - 0.5) / dim
        context = np.zeros((size, dim))
        # unigram^(3/4) negative-sampling distribution
        weights = np.array([counts[t] for t in vocab], dtype=float) ** 0.75
        negative_prob = weights / weights.sum()

        encoded = [
            [index[tok] for tok in sent if tok in index] for sent in sentences
        ]
        total_steps = max(epochs * sum(len(s) for s in encoded), 1)
        step = 0
        for _ in range(epochs):
            for sent in encoded:
                length = len(sent)
                for pos, center in enumerate(sent):
                    lr = learning_rate * max(1.0 - step / total_steps, 1e-4)
                    step += 1
                    reach = int(rng.integers(1, window + 1))
                    lo, hi = max(0, pos - reach), min(length, pos + reach + 1)
                    for ctx_pos in range(lo, hi):
                        if ctx_pos == pos:
                            continue
                        targets = np.empty(negative + 1, dtype=np.intp)
                        targets[0] = sent[ctx_pos]
                        targets[1:] = rng.choice(
                            size, size=negative, p=negative_prob
                        )
                        labels = np.zeros(negative + 1)
                        labels[0] = 1.0
                        center_vec = vectors[center]
                        scores = _sigmoid(context[targets] @ center_vec)
                        gradients = (scores - labels) * lr
                        vectors[center] = center_vec - gradients @ context[targets]
                        context[targets] -= np.outer(gradients, center_vec)
        return vocab, vectors

    return train


def write_embedding_file(
    path: str | Path, tokens: Sequence[str], vectors: np.ndarray
) -> None:
    vectors = np.asarray(vectors, dtype=np.float64)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(tokens)} {vectors.shape[1]}\n")
        for token, row in zip(tokens, vectors):
            fh.write(token + " " + " ".join(repr(float(x)) for x in row) + "\n")


def train_embeddings(
    corpus_path: str | Path,
    dim: int,
    output_path: str | Path,
    seed: int = 1,
    trainer: Trainer | None = None,
    **trainer_options,
) -> list[str]:
    """Train embeddings on the lemmatized corpus and write the text file.

    Returns the vocabulary. Lemmatized training keeps the embedding
    vocabulary aligned with ground-truth lemmas.
    """
    if dim < 1:
        raise ValueError("embedding dimension must be positive")
    sentences = training_sentences(load_corpus(corpus_path))
    if not any(sentences):
        raise CorpusFormatError(f"corpus has no tokens: {corpus_path}")
    if trainer is None:
        trainer = sgns_trainer(**trainer_options)
    elif trainer_options:
        raise TypeError("trainer options apply only to the built-in trainer")
    tokens, vectors = trainer(sentences, dim, seed)
    write_embedding_file(output_path, tokens, vectors)
    return list(tokens)
