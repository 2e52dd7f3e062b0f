"""File-writing helpers shared across the test modules."""
from __future__ import annotations

import numpy as np


def format_embedding_file(tokens, vectors) -> str:
    vectors = np.asarray(vectors)
    lines = [f"{len(tokens)} {vectors.shape[1]}"]
    for token, row in zip(tokens, vectors):
        lines.append(token + " " + " ".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def write_embedding_file(path, tokens, vectors) -> None:
    path.write_text(format_embedding_file(tokens, vectors), encoding="utf-8")


def write_ground_truth_file(path, counts: dict[str, int]) -> None:
    path.write_text(
        "".join(f"{w}\t{g}\n" for w, g in counts.items()), encoding="utf-8"
    )
