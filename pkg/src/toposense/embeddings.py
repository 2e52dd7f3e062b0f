"""Plain-text word embeddings: loading, vocabulary lookup, exact k-NN clouds.

File format: first line ``N d``, then exactly N lines ``token v1 ... vd``
with whitespace-separated decimal floats. This is the common plain-text
embedding export convention, so externally trained vectors load unchanged.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Union

import numpy as np

from .errors import (
    DomainError,
    EmbeddingFormatError,
    NeighborCountError,
    UnknownWordError,
)

METRICS = ("euclidean", "cosine")

Source = Union[str, Path, IO[str], IO[bytes]]


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    """Immutable vocabulary-indexed embedding space.

    ``vectors`` is an (N, dim) float64 array, marked read-only so a loaded
    matrix can be shared freely across threads.
    """

    tokens: list[str]
    vectors: np.ndarray
    index: dict[str, int]

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def row(self, token: str) -> np.ndarray:
        try:
            return self.vectors[self.index[token]]
        except KeyError:
            raise UnknownWordError(f"word not in vocabulary: {token!r}") from None


@dataclass(frozen=True, eq=False)
class PointCloud:
    """A query word and its neighborhood as a labeled point set."""

    labels: list[str]
    points: np.ndarray
    center_index: int

    def __len__(self) -> int:
        return int(self.points.shape[0])


def _open_text(source: Source) -> tuple[IO[str], bool]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8"), True
    if isinstance(source, (io.RawIOBase, io.BufferedIOBase)) or (
        hasattr(source, "read") and isinstance(source.read(0), bytes)
    ):
        return io.TextIOWrapper(source, encoding="utf-8"), False
    return source, False


def make_matrix(tokens: list[str], vectors: np.ndarray) -> EmbeddingMatrix:
    """Assemble an EmbeddingMatrix, enforcing its invariants."""
    vectors = np.ascontiguousarray(vectors, dtype=np.float64)
    if vectors.ndim != 2:
        raise ValueError("vectors must be a 2-d array")
    if len(tokens) != vectors.shape[0]:
        raise ValueError("token count does not match vector row count")
    index = {tok: i for i, tok in enumerate(tokens)}
    if len(index) != len(tokens):
        raise ValueError("duplicate tokens")
    if not np.isfinite(vectors).all():
        raise ValueError("non-finite vector component")
    vectors.flags.writeable = False
    return EmbeddingMatrix(list(tokens), vectors, index)


def load_embeddings(source: Source) -> EmbeddingMatrix:
    """Parse an embedding file (path or readable stream).

    Raises EmbeddingFormatError with a 1-based line number on a malformed
    header, a row with the wrong component count, a duplicate token, a
    non-finite value, or a row count that contradicts the header.
    """
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                return load_embeddings(fh)
        except EmbeddingFormatError as exc:
            raise EmbeddingFormatError(f"{source}: {exc}") from None
    stream, owned = _open_text(source)
    try:
        header = stream.readline()
        if not header:
            raise EmbeddingFormatError("empty file, expected 'N d' header", line=1)
        parts = header.split()
        if len(parts) != 2:
            raise EmbeddingFormatError(
                f"header must be two integers 'N d', got {header.strip()!r}", line=1
            )
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise EmbeddingFormatError(
                f"header must be two integers 'N d', got {header.strip()!r}", line=1
            ) from None
        if count < 1 or dim < 1:
            raise EmbeddingFormatError("header integers must be positive", line=1)

        tokens: list[str] = []
        index: dict[str, int] = {}
        vectors = np.empty((count, dim), dtype=np.float64)
        row = 0
        for lineno, line in enumerate(stream, start=2):
            if line.strip() == "" and row == count:
                continue
            if row >= count:
                raise EmbeddingFormatError(
                    f"more rows than the declared vocabulary size {count}", line=lineno
                )
            fields = line.split()
            if len(fields) != dim + 1:
                raise EmbeddingFormatError(
                    f"expected token plus {dim} components, got {len(fields)} fields",
                    line=lineno,
                )
            token = fields[0]
            if token in index:
                raise EmbeddingFormatError(f"duplicate token {token!r}", line=lineno)
            try:
                values = np.asarray(fields[1:], dtype=np.float64)
            except ValueError:
                raise EmbeddingFormatError(
                    "component is not a decimal float", line=lineno
                ) from None
            if not np.isfinite(values).all():
                raise EmbeddingFormatError("non-finite component", line=lineno)
            index[token] = row
            tokens.append(token)
            vectors[row] = values
            row += 1
        if row != count:
            raise EmbeddingFormatError(
                f"header declared {count} rows but file has {row}", line=row + 1
            )
    finally:
        if owned:
            stream.close()
    vectors.flags.writeable = False
    return EmbeddingMatrix(tokens, vectors, index)


def _distances_from(matrix: EmbeddingMatrix, query_row: int, metric: str) -> np.ndarray:
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    q = matrix.vectors[query_row]
    if metric == "euclidean":
        return np.linalg.norm(matrix.vectors - q, axis=1)
    norms = np.linalg.norm(matrix.vectors, axis=1)
    if (norms == 0.0).any():
        raise DomainError("cosine metric undefined: embedding contains a zero vector")
    sims = (matrix.vectors @ q) / (norms * norms[query_row])
    # rounding can push |cos| a hair past 1; distances must stay >= 0
    return np.maximum(1.0 - sims, 0.0)


def k_nearest(
    matrix: EmbeddingMatrix, word: str, k: int, metric: str = "euclidean"
) -> PointCloud:
    """Exact nearest-neighbor cloud: the query word plus its k closest
    distinct neighbors (m = k+1). Distance ties break by ascending
    vocabulary index, which makes results order-deterministic.
    """
    if word not in matrix.index:
        raise UnknownWordError(f"word not in vocabulary: {word!r}")
    if k < 0:
        raise NeighborCountError(f"neighbor count must be >= 0, got {k}")
    if k >= len(matrix):
        raise NeighborCountError(
            f"neighbor count {k} must be smaller than the vocabulary size {len(matrix)}"
        )
    center = matrix.index[word]
    dist = _distances_from(matrix, center, metric)
    dist[center] = np.inf  # the query joins the cloud unconditionally
    # stable sort on distance keeps vocabulary order within tie groups
    order = np.argsort(dist, kind="stable")
    chosen = order[:k]
    rows = np.concatenate(([center], chosen)).astype(np.intp)
    labels = [matrix.tokens[r] for r in rows]
    points = matrix.vectors[rows].copy()
    points.flags.writeable = False
    return PointCloud(labels=labels, points=points, center_index=0)
