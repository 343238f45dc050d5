"""Harmonic analysis on directed graphs via the combinatorial directed Laplacian.

The pipeline: build a directed graph, form ``L = D_out - A``, eigendecompose
it into a right basis and its dual (left) basis, then analyze, filter,
sample, and reconstruct signals while tracking how far non-normality pushes
the operator from the orthogonal ideal (Henrici departure, eigenvector
condition number, Gram-metric energy distortion, sampling stability
constants).
"""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatchError,
    DirlapError,
    FileFormatError,
    NearDefectiveError,
    RankDeficientError,
)
from .graphs import (
    AsymmetryReport,
    DirectedGraph,
    Edge,
    adjacency,
    asymmetry_index,
    asymmetry_report,
    directed_laplacian,
    gen_directed_cycle,
    gen_perturbed_cycle,
    gershgorin_disks,
    normality_departure,
    two_disjoint_cycles,
)
from .eigen import (
    DcModeReport,
    NormalityDiagnostics,
    SpectralDecomposition,
    dc_mode_check,
    decompose,
    gram_matrix,
    henrici_departure,
    normality_diagnostics,
)
from .transform import (
    GraphSignal,
    SpectralFilter,
    TvBounds,
    apply_filter,
    directed_variation,
    energy_identity,
    forward,
    frequency_order,
    inverse,
    spectral_perturbation_bound,
    spectral_signal,
    total_variation,
    tv_bounds,
    vertex_signal,
)
from .sampling import (
    BandModel,
    RecoveryReport,
    SamplingPlan,
    approx_band_certificate,
    conservative_noise_certificate,
    make_band,
    noise_certificate,
    plan_sampling,
    recover,
    select_sampling_set,
    synthesize_bandlimited,
)
from .experiments import (
    ExperimentConfig,
    GraphReport,
    NoiseSweep,
    SpectrumComparison,
    analyze_graph,
    run_noise_sweep,
    run_spectrum_comparison,
)

__all__ = [
    "__version__",
    # errors
    "DirlapError",
    "FileFormatError",
    "DimensionMismatchError",
    "NearDefectiveError",
    "RankDeficientError",
    # graphs
    "Edge",
    "DirectedGraph",
    "AsymmetryReport",
    "adjacency",
    "directed_laplacian",
    "asymmetry_index",
    "normality_departure",
    "asymmetry_report",
    "gershgorin_disks",
    "gen_directed_cycle",
    "gen_perturbed_cycle",
    "two_disjoint_cycles",
    # eigen
    "SpectralDecomposition",
    "DcModeReport",
    "NormalityDiagnostics",
    "decompose",
    "dc_mode_check",
    "gram_matrix",
    "henrici_departure",
    "normality_diagnostics",
    # transform
    "GraphSignal",
    "SpectralFilter",
    "TvBounds",
    "vertex_signal",
    "spectral_signal",
    "forward",
    "inverse",
    "energy_identity",
    "apply_filter",
    "total_variation",
    "directed_variation",
    "tv_bounds",
    "frequency_order",
    "spectral_perturbation_bound",
    # sampling
    "BandModel",
    "SamplingPlan",
    "RecoveryReport",
    "make_band",
    "synthesize_bandlimited",
    "plan_sampling",
    "recover",
    "noise_certificate",
    "conservative_noise_certificate",
    "approx_band_certificate",
    "select_sampling_set",
    # experiments
    "ExperimentConfig",
    "GraphReport",
    "SpectrumComparison",
    "NoiseSweep",
    "analyze_graph",
    "run_spectrum_comparison",
    "run_noise_sweep",
]
