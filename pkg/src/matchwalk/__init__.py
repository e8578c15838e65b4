"""Quantum-walk search of a marked matching on signed complete graphs.

Marked edges form a t-matching on the complete graph with n+1 vertices;
their arc signs perturb a degree-normalized walk whose invariant plane
rotates the near-uniform start onto the marked arcs in ~n^{(2-alpha)/2}
steps when t grows like n^alpha, a quadratic speed-up over the edge random
walk's ~n^{2-alpha} hitting time.  The package provides the matrix-free
arc-space simulator, closed-form spectra with numeric oracles, the
classical baseline, and a sweep harness exposed through a FastAPI service
and a thin CLI.
"""

__version__ = "0.1.0"

from .classical import (
    ClassicalWalkReport,
    LineGraphWalk,
    build_line_walk,
    gram_spectrum_closed_form,
    hitting_time_estimate,
    incidence_gram,
    incidence_matrix,
    quotient_matrix,
)
from .errors import (
    DegenerateFit,
    DegenerateLift,
    InfeasibleGrid,
    InvalidArc,
    MatchingTooLarge,
    MatchwalkError,
    MissingMode,
    NonSymmetric,
    NotAMatching,
    SingularSystem,
    ZeroMatching,
)
from .graph import (
    ArcClass,
    SignAssignment,
    SignedCompleteGraph,
    arc_classes,
    build_signed_complete_graph,
    class_counts,
    classify_arc,
)
from .operators import (
    apply_boundary,
    apply_coboundary,
    apply_shift,
    apply_walk,
    apply_walk_adjoint,
    arc_weights,
    dense_walk_matrix,
    dump_state,
    load_state,
    weighted_adjacency,
)
from .search import (
    SearchTrace,
    closed_form_finding_probability,
    finding_probability,
    run_search,
    search_basis,
    total_complexity,
    uniform_state,
)
from .spectral import (
    SpectralSummary,
    WalkEigenpair,
    closed_form_spectrum,
    expand_eigenvalues,
    lift_to_walk,
    numeric_spectrum,
    principal_eigenvector,
)
from .sweep import (
    DEFAULT_GRID,
    SWEEP_COLUMNS,
    CompareReport,
    FitResult,
    SweepConfig,
    SweepResult,
    compare_report,
    fit_exponent,
    matching_size,
    parse_sweep_csv,
    render_sweep_csv,
    run_sweep,
)

__all__ = [
    "__version__",
    # graph
    "ArcClass",
    "SignedCompleteGraph",
    "SignAssignment",
    "build_signed_complete_graph",
    "classify_arc",
    "arc_classes",
    "class_counts",
    # operators
    "arc_weights",
    "apply_shift",
    "apply_boundary",
    "apply_coboundary",
    "apply_walk",
    "apply_walk_adjoint",
    "weighted_adjacency",
    "dense_walk_matrix",
    "dump_state",
    "load_state",
    # spectral
    "SpectralSummary",
    "WalkEigenpair",
    "closed_form_spectrum",
    "principal_eigenvector",
    "lift_to_walk",
    "numeric_spectrum",
    "expand_eigenvalues",
    # classical
    "LineGraphWalk",
    "ClassicalWalkReport",
    "build_line_walk",
    "incidence_matrix",
    "incidence_gram",
    "gram_spectrum_closed_form",
    "quotient_matrix",
    "hitting_time_estimate",
    # search
    "SearchTrace",
    "uniform_state",
    "search_basis",
    "finding_probability",
    "run_search",
    "closed_form_finding_probability",
    "total_complexity",
    # sweep
    "DEFAULT_GRID",
    "SWEEP_COLUMNS",
    "SweepConfig",
    "SweepResult",
    "FitResult",
    "CompareReport",
    "matching_size",
    "run_sweep",
    "render_sweep_csv",
    "parse_sweep_csv",
    "fit_exponent",
    "compare_report",
    # errors
    "MatchwalkError",
    "MatchingTooLarge",
    "NotAMatching",
    "InvalidArc",
    "ZeroMatching",
    "DegenerateLift",
    "NonSymmetric",
    "SingularSystem",
    "DegenerateFit",
    "MissingMode",
    "InfeasibleGrid",
]
