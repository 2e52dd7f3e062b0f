"""Sense-count estimation from local persistence diagrams.

A word's local cloud (itself plus k nearest neighbors) is summarized by its
H0 barcode; finite bars whose death exceeds the noise threshold
``mean + sigma * std`` of all finite deaths count as extra senses on top of
the one essential component.  A separate probe reports how the component
count of the epsilon-neighborhood graph changes when the word's own point
is deleted (the bridge-word diagnostic).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.spatial.distance import squareform

from .embeddings import EmbeddingMatrix, PointCloud, k_nearest
from .errors import DomainError, NoFiniteBarsError
from .persistence import (
    DisjointSet,
    PersistenceDiagram,
    build_filtration,
    mst_barcode,
    pairwise_distances,
    reduce_barcode,
)


@dataclass(frozen=True)
class SenseEstimate:
    word: str
    k: int
    sigma_multiplier: float
    threshold: float
    significant_finite: int
    predicted_senses: int
    diagram: PersistenceDiagram

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "word": self.word,
            "k": self.k,
            "sigma": self.sigma_multiplier,
            "threshold": self.threshold,
            "deaths": [float(d) for d in np.sort(self.diagram.finite_deaths)],
            "predicted_senses": self.predicted_senses,
        }


@dataclass(frozen=True)
class ComponentDelta:
    word: str
    components_with: int
    components_without: int

    @property
    def changed(self) -> bool:
        return self.components_with != self.components_without

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "word": self.word,
            "components_with": self.components_with,
            "components_without": self.components_without,
            "changed": self.changed,
        }


def significance_threshold(diagram: PersistenceDiagram, sigma_multiplier: float) -> float:
    """Noise cutoff: mean + sigma * population std of the finite deaths."""
    if sigma_multiplier < 0:
        raise ValueError("sigma multiplier must be nonnegative")
    deaths = diagram.finite_deaths
    if deaths.shape[0] == 0:
        raise NoFiniteBarsError("diagram has no finite bars (single-point cloud)")
    return float(np.mean(deaths) + sigma_multiplier * np.std(deaths))


def local_diagram(
    matrix: EmbeddingMatrix,
    word: str,
    k: int,
    metric: str = "euclidean",
    literal_reduction: bool = False,
) -> tuple[PointCloud, PersistenceDiagram]:
    """Cloud and H0 diagram of a word's k-neighborhood."""
    cloud = k_nearest(matrix, word, k, metric)
    filtration = build_filtration(cloud, metric)
    diagram = reduce_barcode(filtration) if literal_reduction else mst_barcode(filtration)
    return cloud, diagram


def estimate_senses(
    matrix: EmbeddingMatrix,
    word: str,
    k: int,
    sigma_multiplier: float = 2.0,
    metric: str = "euclidean",
    literal_reduction: bool = False,
) -> SenseEstimate:
    """Predicted sense count: finite bars strictly above the noise
    threshold, plus the essential component (a word has at least one sense).
    """
    _, diagram = local_diagram(matrix, word, k, metric, literal_reduction)
    threshold = significance_threshold(diagram, sigma_multiplier)
    significant = int(np.sum(diagram.finite_deaths > threshold))
    return SenseEstimate(
        word=word,
        k=k,
        sigma_multiplier=float(sigma_multiplier),
        threshold=threshold,
        significant_finite=significant,
        predicted_senses=significant + diagram.essential_count,
        diagram=diagram,
    )


def _component_count(dist_matrix: np.ndarray, epsilon: float) -> int:
    n = dist_matrix.shape[0]
    ds = DisjointSet(n)
    for a in range(n):
        for b in range(a + 1, n):
            if dist_matrix[a, b] <= epsilon:
                ds.union(a, b)
    return ds.count


def removal_probe(
    matrix: EmbeddingMatrix,
    word: str,
    k: int,
    epsilon: float | None = None,
    metric: str = "euclidean",
    sigma_multiplier: float = 2.0,
) -> ComponentDelta:
    """Connected components of the epsilon-graph over the word's local
    cloud, with and without the word's own point.

    With ``epsilon=None`` the scale defaults to the significance threshold
    of the with-word diagram, i.e. the scale at which structure stops being
    noise.
    """
    if k < 1:
        raise DomainError("removal probe needs at least one neighbor")
    cloud = k_nearest(matrix, word, k, metric)
    if epsilon is None:
        diagram = mst_barcode(build_filtration(cloud, metric))
        epsilon = significance_threshold(diagram, sigma_multiplier)
    elif epsilon <= 0:
        raise ValueError("epsilon must be positive")
    dist = squareform(pairwise_distances(cloud.points, metric))
    keep = np.arange(len(cloud)) != cloud.center_index
    return ComponentDelta(
        word=word,
        components_with=_component_count(dist, epsilon),
        components_without=_component_count(dist[np.ix_(keep, keep)], epsilon),
    )
