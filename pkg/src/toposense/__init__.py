"""Word sense induction from persistent homology of embedding neighborhoods."""

from .embeddings import EmbeddingMatrix, PointCloud, k_nearest, load_embeddings
from .errors import (
    DataFormatError,
    DomainError,
    EmbeddingFormatError,
    EmptyBucketError,
    GroundTruthFormatError,
    NeighborCountError,
    NoFiniteBarsError,
    ToposenseError,
    UnknownWordError,
)
from .evaluation import (
    ErrorReport,
    GroundTruth,
    SweepConfig,
    SweepResult,
    absolute_error,
    evaluate_bucket,
    load_ground_truth,
    relative_error,
    sweep,
)
from .persistence import (
    FiltrationEdgeList,
    PersistenceDiagram,
    ReductionMatrix,
    build_filtration,
    mst_barcode,
    reduce_barcode,
)
from .senses import (
    ComponentDelta,
    SenseEstimate,
    estimate_senses,
    removal_probe,
    significance_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentDelta",
    "DataFormatError",
    "DomainError",
    "EmbeddingFormatError",
    "EmbeddingMatrix",
    "EmptyBucketError",
    "ErrorReport",
    "FiltrationEdgeList",
    "GroundTruth",
    "GroundTruthFormatError",
    "NeighborCountError",
    "NoFiniteBarsError",
    "PersistenceDiagram",
    "PointCloud",
    "ReductionMatrix",
    "SenseEstimate",
    "SweepConfig",
    "SweepResult",
    "ToposenseError",
    "UnknownWordError",
    "absolute_error",
    "build_filtration",
    "estimate_senses",
    "evaluate_bucket",
    "k_nearest",
    "load_embeddings",
    "load_ground_truth",
    "mst_barcode",
    "reduce_barcode",
    "relative_error",
    "removal_probe",
    "significance_threshold",
    "sweep",
]
