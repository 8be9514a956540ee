"""Elastic distance measures for time series, with tuning and benchmarking.

The core measures are squared Euclidean distance on aligned points, dynamic
time warping, its banded and weighted variants, and a warp-penalized variant
whose additive penalty interpolates between the unconstrained and the rigid
extremes. On top of the distances sit nearest neighbor classification,
leave-one-out parameter tuning, and a benchmark harness with rank-based
statistics and a CSV/SVG report writer (``elastic_dtw.report``, imported
lazily to keep matplotlib out of distance-only workloads).
"""

from .benchmark import (
    BenchmarkResult,
    CellResult,
    ComparisonReport,
    canonical_families,
    run_benchmark,
)
from .classify import ClassificationOutcome, evaluate, loocv_accuracy, nn1
from .core import (
    DatasetError,
    LabeledDataset,
    LengthMismatchError,
    ParseError,
    UndefinedWindowError,
    WarpingPath,
    as_series,
    validate_path,
)
from .distances import (
    DistanceSpec,
    Family,
    adtw,
    cdtw,
    cost_matrix,
    distance,
    distance_ea,
    dtw,
    format_cost_matrix,
    sqed,
    warping_path,
    wdtw,
    weight_vector,
)
from .stats import (
    AccuracyMatrix,
    WilcoxonResult,
    best_alternative,
    holm_adjust,
    mean_ranks,
    wilcoxon_signed_rank,
)
from .tuning import (
    TuningConfig,
    TuningResult,
    adtw_penalty_candidates,
    cdtw_window_candidates,
    sample_omega_prime,
    tune,
    wdtw_g_candidates,
)
from .ucr import (
    DatasetPair,
    admit,
    dataset_metadata,
    load_dataset,
    load_split,
    metadata_json,
    write_split,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyMatrix",
    "BenchmarkResult",
    "CellResult",
    "ClassificationOutcome",
    "ComparisonReport",
    "DatasetError",
    "DatasetPair",
    "DistanceSpec",
    "Family",
    "LabeledDataset",
    "LengthMismatchError",
    "ParseError",
    "TuningConfig",
    "TuningResult",
    "UndefinedWindowError",
    "WarpingPath",
    "WilcoxonResult",
    "admit",
    "adtw",
    "adtw_penalty_candidates",
    "as_series",
    "best_alternative",
    "canonical_families",
    "cdtw",
    "cdtw_window_candidates",
    "cost_matrix",
    "dataset_metadata",
    "distance",
    "distance_ea",
    "dtw",
    "evaluate",
    "format_cost_matrix",
    "holm_adjust",
    "load_dataset",
    "load_split",
    "loocv_accuracy",
    "mean_ranks",
    "metadata_json",
    "nn1",
    "run_benchmark",
    "sample_omega_prime",
    "sqed",
    "tune",
    "validate_path",
    "warping_path",
    "wdtw",
    "wdtw_g_candidates",
    "weight_vector",
    "wilcoxon_signed_rank",
    "write_split",
    "__version__",
]
