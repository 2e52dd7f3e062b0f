"""0-dimensional persistent homology barcodes of finite point clouds.

Two independent routes compute the same diagram:

* ``reduce_barcode`` builds the literal edge/vertex boundary matrix whose
  entries are monomials ``t^a`` (``a`` = rank of the edge's length in the
  deduplicated sorted distance list) with mod-2 coefficients, and column
  reduces it left to right until every surviving column has a distinct
  lowest nonzero row.  Each surviving pivot ``t^b`` yields the interval
  (0, b), reported in distance units.
* ``mst_barcode`` sweeps the same edge order with a union-find structure;
  every merge event emits a finite bar at the merging edge's length.

The two agree exactly (both read deaths from the same stored edge weights),
which is the package's main self-check.  The union-find route is the fast
default; the matrix route is kept for fidelity and verification.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterator, NamedTuple

import numpy as np
from scipy.spatial.distance import pdist

from .embeddings import METRICS, PointCloud
from .errors import DomainError


class Edge(NamedTuple):
    i: int
    j: int
    weight: float
    filtration_index: int


@dataclass(frozen=True, eq=False)
class FiltrationEdgeList:
    """All pairwise edges of a cloud, sorted ascending by weight.

    ``filtration_index`` is the 1-based rank of each edge's weight in the
    deduplicated sorted distance list; equal weights share one index.
    ``level_weights[a - 1]`` maps an index ``a`` back to its distance.
    """

    vertex_count: int
    i: np.ndarray
    j: np.ndarray
    weight: np.ndarray
    filtration_index: np.ndarray
    level_weights: np.ndarray

    def __len__(self) -> int:
        return int(self.weight.shape[0])

    @property
    def edges(self) -> list[Edge]:
        return [
            Edge(int(a), int(b), float(w), int(x))
            for a, b, w, x in zip(self.i, self.j, self.weight, self.filtration_index)
        ]


@dataclass(frozen=True, eq=False)
class PersistenceDiagram:
    """H0 barcode: finite deaths (births are all 0) plus essential classes.

    ``finite_death_indices`` keeps each death's filtration index for
    diagnostics and index-unit export.
    """

    finite_deaths: np.ndarray
    essential_count: int
    finite_death_indices: np.ndarray | None = None

    @property
    def bar_count(self) -> int:
        return int(self.finite_deaths.shape[0]) + self.essential_count

    def __eq__(self, other: object) -> bool:
        # diagrams are equal as multisets of bars; indices are diagnostics
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return self.essential_count == other.essential_count and np.array_equal(
            np.sort(self.finite_deaths), np.sort(other.finite_deaths)
        )


def pairwise_distances(points: np.ndarray, metric: str = "euclidean") -> np.ndarray:
    """Condensed distance vector over all pairs (i < j), pdist order."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    points = np.asarray(points, dtype=np.float64)
    if not np.isfinite(points).all():
        raise DomainError("non-finite coordinate encountered")
    if points.shape[0] < 2:
        return np.empty(0, dtype=np.float64)
    if metric == "cosine":
        norms = np.linalg.norm(points, axis=1)
        if (norms == 0.0).any():
            raise DomainError("cosine metric undefined for a zero vector")
        dists = np.maximum(pdist(points, metric="cosine"), 0.0)
    else:
        dists = pdist(points, metric="euclidean")
    if not np.isfinite(dists).all():
        raise DomainError("non-finite pairwise distance")
    return dists


def build_filtration(
    cloud: PointCloud | np.ndarray, metric: str = "euclidean"
) -> FiltrationEdgeList:
    """Distance-sorted edge list of the complete graph over a cloud.

    Weight ties are ordered lexicographically by (i, j) so that
    simultaneous events resolve the same way everywhere.
    """
    points = cloud.points if isinstance(cloud, PointCloud) else np.asarray(cloud)
    if points.ndim != 2 or points.shape[0] < 1:
        raise ValueError("cloud must contain at least one point")
    m = points.shape[0]
    w = pairwise_distances(points, metric)
    ii, jj = np.triu_indices(m, k=1)  # pdist pair order
    order = np.lexsort((jj, ii, w))
    w = w[order]
    levels = np.unique(w)
    return FiltrationEdgeList(
        vertex_count=m,
        i=ii[order],
        j=jj[order],
        weight=w,
        filtration_index=np.searchsorted(levels, w) + 1,
        level_weights=levels,
    )


class DisjointSet:
    """Array union-find with path halving; tracks live component count."""

    def __init__(self, n: int):
        self.parent = np.arange(n, dtype=np.intp)
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return int(x)

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.count -= 1
        return True


@dataclass
class ReductionMatrix:
    """Sparse edge-boundary matrix over Z/2 with filtration exponents.

    One column per edge, ordered by (filtration index, lexicographic edge);
    each column maps vertex row -> exponent of its monomial entry. Before
    reduction a column holds exactly its edge's two endpoints, both with
    the edge's filtration index as exponent.
    """

    vertex_count: int
    columns: list[dict[int, int]]
    column_index: np.ndarray
    pivot_column: dict[int, int] = field(default_factory=dict)
    reduced: bool = False

    @classmethod
    def from_filtration(cls, filtration: FiltrationEdgeList) -> "ReductionMatrix":
        columns = [
            {int(a): int(x), int(b): int(x)}
            for a, b, x in zip(
                filtration.i, filtration.j, filtration.filtration_index
            )
        ]
        return cls(
            vertex_count=filtration.vertex_count,
            columns=columns,
            column_index=np.asarray(filtration.filtration_index, dtype=np.intp),
        )

    def reduce(self) -> "ReductionMatrix":
        """Left-to-right column reduction over mod-2 coefficients.

        While a column's lowest nonzero row collides with an earlier
        column's pivot, add that earlier column (scaled by the exponent
        gap, so entries stay homogeneous in the filtration grading) into
        it.  Terminates with every surviving pivot row distinct, i.e. the
        matrix is lower triangular on its surviving columns.
        """
        pivot_column = self.pivot_column
        pivot_column.clear()
        for col_idx, col in enumerate(self.columns):
            while col:
                low = max(col)
                owner = pivot_column.get(low)
                if owner is None:
                    pivot_column[low] = col_idx
                    break
                other = self.columns[owner]
                shift = col[low] - other[low]  # >= 0: columns arrive in order
                for row, exp in other.items():
                    if row in col:
                        # matching entries share an exponent by the grading,
                        # so mod-2 addition cancels them outright
                        del col[row]
                    else:
                        col[row] = exp + shift
        self.reduced = True
        return self

    def surviving_pivots(self) -> list[tuple[int, int, int]]:
        """(column, pivot row, pivot exponent) per nonzero column."""
        if not self.reduced:
            raise ValueError("matrix has not been reduced")
        out = []
        for low, col_idx in self.pivot_column.items():
            out.append((col_idx, low, self.columns[col_idx][low]))
        out.sort()
        return out

    def is_homogeneous(self) -> bool:
        """Every entry of column j carries exponent == j's filtration index."""
        return all(
            all(exp == self.column_index[ci] for exp in col.values())
            for ci, col in enumerate(self.columns)
        )


def reduce_barcode(filtration: FiltrationEdgeList) -> PersistenceDiagram:
    """Barcode via literal boundary-matrix column reduction.

    One interval (0, b) per surviving pivot, where b is the distance
    corresponding to the pivot's filtration exponent.
    """
    matrix = ReductionMatrix.from_filtration(filtration).reduce()
    pivots = matrix.surviving_pivots()
    indices = np.asarray([exp for _, _, exp in pivots], dtype=np.intp)
    deaths = filtration.level_weights[indices - 1] if len(indices) else np.empty(0)
    return PersistenceDiagram(
        finite_deaths=np.asarray(deaths, dtype=np.float64),
        essential_count=filtration.vertex_count - len(pivots),
        finite_death_indices=indices,
    )


def mst_barcode(filtration: FiltrationEdgeList) -> PersistenceDiagram:
    """Barcode via union-find over the same edge order (MST route).

    Each union event is a component death at that edge's weight; roots
    remaining at the end are essential classes.
    """
    ds = DisjointSet(filtration.vertex_count)
    deaths = []
    indices = []
    for a, b, w, x in zip(
        filtration.i, filtration.j, filtration.weight, filtration.filtration_index
    ):
        if ds.union(int(a), int(b)):
            deaths.append(float(w))
            indices.append(int(x))
    return PersistenceDiagram(
        finite_deaths=np.asarray(deaths, dtype=np.float64),
        essential_count=ds.count,
        finite_death_indices=np.asarray(indices, dtype=np.intp),
    )


def write_diagram_csv(
    diagram: PersistenceDiagram, stream: IO[str], index_units: bool = False
) -> None:
    """CSV export: bar_id,birth,death,essential; essential bars leave the
    death field empty. ``index_units`` reports deaths as filtration indices."""
    deaths: Iterator = iter(diagram.finite_deaths)
    if index_units:
        if diagram.finite_death_indices is None:
            raise ValueError("diagram carries no filtration indices")
        deaths = iter(diagram.finite_death_indices)
    stream.write("bar_id,birth,death,essential\n")
    bar_id = 0
    for death in deaths:
        stream.write(f"{bar_id},0,{death},0\n")
        bar_id += 1
    for _ in range(diagram.essential_count):
        stream.write(f"{bar_id},0,,1\n")
        bar_id += 1
