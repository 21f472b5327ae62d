"""QRS analysis in the standard and parametrized Hermite transform domain.

Heartbeat segments are expanded over orthonormal Hermite functions via
Gauss-Hermite quadrature; a grid search over the scaling factor delta and the
window shift tau picks the parametrization with the most concentrated
(smallest l1) coefficient vector, and the Fourier domain is available for
comparison.
"""

from .analysis import AnalysisConfig, analyze_peak, summarize_peak
from .errors import (
    AdmissibilityError,
    HermiteQrsError,
    RecordParseError,
    RecordValidationError,
    SearchError,
    WindowBoundsError,
)
from .hermite import (
    HermiteBasis,
    HtResult,
    build_basis,
    forward_ht,
    hermite_function,
    hermite_polynomial,
    hermite_roots,
    inverse_ht,
    max_admissible_delta,
    resample_to_nodes,
    root_residuals,
    top_k_reconstruction,
)
from .optimize import (
    GridPoint,
    OptimizationReport,
    SearchSpec,
    TauMeasure,
    l1_measure,
    optimize,
    optimize_delta,
)
from .records import (
    Dataset,
    EcgRecord,
    PeakSegment,
    extract_segment,
    load_dataset,
    load_record,
    save_record,
)
from .spectral import (
    QualityMetrics,
    SpectrumResult,
    concentration_report,
    dft_spectrum,
    prd,
    top_k_energy_curve,
)
from .synthetic import qrs_waveform, synthesize_beat_train, synthesize_qrs

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "AnalysisConfig",
    "Dataset",
    "EcgRecord",
    "GridPoint",
    "HermiteBasis",
    "HermiteQrsError",
    "HtResult",
    "OptimizationReport",
    "PeakSegment",
    "QualityMetrics",
    "RecordParseError",
    "RecordValidationError",
    "SearchError",
    "SearchSpec",
    "SpectrumResult",
    "TauMeasure",
    "WindowBoundsError",
    "analyze_peak",
    "build_basis",
    "concentration_report",
    "dft_spectrum",
    "extract_segment",
    "forward_ht",
    "hermite_function",
    "hermite_polynomial",
    "hermite_roots",
    "inverse_ht",
    "l1_measure",
    "load_dataset",
    "load_record",
    "max_admissible_delta",
    "root_residuals",
    "optimize",
    "optimize_delta",
    "prd",
    "qrs_waveform",
    "resample_to_nodes",
    "save_record",
    "summarize_peak",
    "synthesize_beat_train",
    "synthesize_qrs",
    "top_k_energy_curve",
    "top_k_reconstruction",
]
