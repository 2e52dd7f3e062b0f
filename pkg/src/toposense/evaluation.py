"""Ground-truth comparison: per-bucket error metrics and hyperparameter sweeps.

The score for a bucket of words is the average relative error
``(1/n) * sum(|g_i - p_i| / g_i)`` between annotated sense counts ``g`` and
predicted counts ``p``, alongside the unnormalized absolute variant.  A
sweep evaluates every (embedding dimension, neighbor count, sigma, bucket)
cell in canonical order and emits JSON reports plus CSV tables for plotting
error-versus-neighbor-count curves.
"""
from __future__ import annotations

import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Sequence, Union

import numpy as np

from .embeddings import EmbeddingMatrix, load_embeddings
from .errors import (
    DomainError,
    EmptyBucketError,
    GroundTruthFormatError,
    NeighborCountError,
)
from .senses import estimate_senses

Source = Union[str, Path, IO[str], IO[bytes]]

Bucket = tuple[int, int]


@dataclass(frozen=True)
class GroundTruth:
    """Annotated sense counts, token -> count (every count >= 1)."""

    counts: dict[str, int]

    def __len__(self) -> int:
        return len(self.counts)

    def bucket_words(self, bucket: Bucket) -> list[str]:
        lo, hi = bucket
        return sorted(w for w, g in self.counts.items() if lo <= g <= hi)


def load_ground_truth(source: Source) -> GroundTruth:
    """Parse 'token<TAB>count' lines; rejects duplicates and counts < 1."""
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                return load_ground_truth(fh)
        except GroundTruthFormatError as exc:
            raise GroundTruthFormatError(f"{source}: {exc}") from None
    if hasattr(source, "read") and isinstance(source.read(0), bytes):
        source = io.TextIOWrapper(source, encoding="utf-8")
    counts: dict[str, int] = {}
    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if line == "":
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise GroundTruthFormatError(
                f"expected 'token<TAB>count', got {line!r}", line=lineno
            )
        token, raw = parts
        try:
            count = int(raw)
        except ValueError:
            raise GroundTruthFormatError(
                f"count is not an integer: {raw!r}", line=lineno
            ) from None
        if count < 1:
            raise GroundTruthFormatError(f"nonpositive count {count}", line=lineno)
        if token in counts:
            raise GroundTruthFormatError(f"duplicate token {token!r}", line=lineno)
        counts[token] = count
    return GroundTruth(counts)


def _check_pair(truth: Sequence[int], predicted: Sequence[int]) -> None:
    if len(truth) != len(predicted):
        raise ValueError(
            f"length mismatch: {len(truth)} truth vs {len(predicted)} predicted"
        )
    if len(truth) == 0:
        raise ValueError("empty input")


def relative_error(truth: Sequence[int], predicted: Sequence[int]) -> float:
    """Average relative error; 0 iff the prediction matches exactly."""
    _check_pair(truth, predicted)
    g = np.asarray(truth, dtype=np.float64)
    p = np.asarray(predicted, dtype=np.float64)
    if (g < 1).any():
        raise ValueError("truth counts must be positive")
    return float(np.mean(np.abs(g - p) / g))


def absolute_error(truth: Sequence[int], predicted: Sequence[int]) -> float:
    """Average absolute error (unnormalized summand)."""
    _check_pair(truth, predicted)
    g = np.asarray(truth, dtype=np.float64)
    p = np.asarray(predicted, dtype=np.float64)
    return float(np.mean(np.abs(g - p)))


@dataclass(frozen=True)
class ErrorReport:
    embedding_dim: int
    k: int
    sigma_multiplier: float
    bucket: Bucket
    n_evaluated: int
    n_skipped_oov: int
    relative_error: float
    absolute_error: float
    per_word: list[tuple[str, int, int]]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "embedding_dim": self.embedding_dim,
            "k": self.k,
            "sigma": self.sigma_multiplier,
            "bucket": list(self.bucket),
            "n_evaluated": self.n_evaluated,
            "n_skipped_oov": self.n_skipped_oov,
            "relative_error": self.relative_error,
            "absolute_error": self.absolute_error,
            "per_word": [
                {"word": w, "truth": g, "predicted": p} for w, g, p in self.per_word
            ],
        }


def evaluate_bucket(
    matrix: EmbeddingMatrix,
    truth: GroundTruth,
    k: int,
    sigma_multiplier: float,
    bucket: Bucket,
    metric: str = "euclidean",
    workers: int = 1,
    literal_reduction: bool = False,
) -> ErrorReport:
    """Evaluate every in-vocabulary ground-truth word whose count lies in
    the bucket.  Out-of-vocabulary bucket words are counted, not dropped
    silently.  Word order (and hence the report) is canonical regardless
    of worker count.
    """
    lo, hi = bucket
    if lo > hi:
        raise ValueError(f"bucket min {lo} exceeds max {hi}")
    if k >= len(matrix):
        raise NeighborCountError(
            f"neighbor count {k} must be smaller than the vocabulary size {len(matrix)}"
        )
    bucket_words = truth.bucket_words(bucket)
    words = [w for w in bucket_words if w in matrix]
    skipped = len(bucket_words) - len(words)
    if not words:
        raise EmptyBucketError(
            f"no evaluable word with sense count in [{lo}, {hi}]"
        )

    def predict(word: str) -> int:
        return estimate_senses(
            matrix, word, k, sigma_multiplier, metric, literal_reduction
        ).predicted_senses

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            predictions = list(pool.map(predict, words))
    else:
        predictions = [predict(w) for w in words]
    truths = [truth.counts[w] for w in words]
    return ErrorReport(
        embedding_dim=matrix.dim,
        k=k,
        sigma_multiplier=float(sigma_multiplier),
        bucket=(lo, hi),
        n_evaluated=len(words),
        n_skipped_oov=skipped,
        relative_error=relative_error(truths, predictions),
        absolute_error=absolute_error(truths, predictions),
        per_word=list(zip(words, truths, predictions)),
    )


@dataclass(frozen=True)
class SweepConfig:
    embedding_sources: list[tuple[int, Path]]
    neighbor_counts: list[int]
    sigma_multipliers: list[float]
    buckets: list[Bucket]
    metric: str = "euclidean"

    def __post_init__(self):
        if not (
            self.embedding_sources
            and self.neighbor_counts
            and self.sigma_multipliers
            and self.buckets
        ):
            raise ValueError("sweep config lists must be nonempty")
        for lo, hi in self.buckets:
            if lo > hi:
                raise ValueError(f"bucket min {lo} exceeds max {hi}")


@dataclass(frozen=True)
class CellFailure:
    embedding_dim: int
    k: int
    sigma_multiplier: float
    bucket: Bucket
    error: str

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "embedding_dim": self.embedding_dim,
            "k": self.k,
            "sigma": self.sigma_multiplier,
            "bucket": list(self.bucket),
            "error": self.error,
        }


@dataclass
class SweepResult:
    reports: list[ErrorReport] = field(default_factory=list)
    failures: list[CellFailure] = field(default_factory=list)


def sweep(
    config: SweepConfig,
    truth: GroundTruth,
    workers: int = 1,
    literal_reduction: bool = False,
) -> SweepResult:
    """One report per (dim, k, sigma, bucket) cell, in that canonical
    ascending order.  Cell-level domain failures are recorded and the sweep
    continues; anything else (unreadable file, bad format) aborts.
    """
    result = SweepResult()
    for dim, path in sorted(config.embedding_sources):
        matrix = load_embeddings(path)
        if matrix.dim != dim:
            raise DomainError(
                f"embedding file {path} has dimension {matrix.dim}, expected {dim}"
            )
        for k in sorted(config.neighbor_counts):
            for sigma in sorted(config.sigma_multipliers):
                for bucket in sorted(config.buckets):
                    try:
                        result.reports.append(
                            evaluate_bucket(
                                matrix,
                                truth,
                                k,
                                sigma,
                                bucket,
                                config.metric,
                                workers=workers,
                                literal_reduction=literal_reduction,
                            )
                        )
                    except DomainError as exc:
                        result.failures.append(
                            CellFailure(dim, k, float(sigma), bucket, str(exc))
                        )
    return result


def write_reports_json(result: SweepResult, stream: IO[str]) -> None:
    payload = {
        "reports": [r.to_json_dict() for r in result.reports],
        "failures": [f.to_json_dict() for f in result.failures],
    }
    json.dump(payload, stream, indent=2, sort_keys=True)
    stream.write("\n")


def write_summary_csv(reports: Sequence[ErrorReport], stream: IO[str]) -> None:
    stream.write(
        "dim,k,sigma,bucket_min,bucket_max,n,n_skipped,relative_error,absolute_error\n"
    )
    for r in reports:
        stream.write(
            f"{r.embedding_dim},{r.k},{r.sigma_multiplier},{r.bucket[0]},"
            f"{r.bucket[1]},{r.n_evaluated},{r.n_skipped_oov},"
            f"{r.relative_error},{r.absolute_error}\n"
        )


def write_plot_table(reports: Sequence[ErrorReport], stream: IO[str]) -> None:
    """Long-format table for error-vs-neighbor-count curves per bucket."""
    stream.write("dim,k,bucket,relative_error,absolute_error\n")
    for r in reports:
        stream.write(
            f"{r.embedding_dim},{r.k},{r.bucket[0]}-{r.bucket[1]},"
            f"{r.relative_error},{r.absolute_error}\n"
        )
