"""Coloring linear hypergraphs with provable palette budgets."""

from .bounds import (
    BoundReport,
    beta_envelope,
    beta_threshold,
    bound_report,
    case_limit,
    coefficient_A,
    color_budget,
)
from .coloring import (
    AbortReport,
    Coloring,
    FailureReport,
    TokenAudit,
    UniformColorState,
    build_uniform_state,
    efl_check,
    exact_chromatic,
    greedy_recolor,
    matching_lower_bound,
    token_audit,
    uniform_maxdeg_color,
    verify_coloring,
)
from .core import (
    Hypergraph,
    HypergraphStats,
    build,
    dual,
    dump_instance,
    is_linear,
    load_instance,
    regularity,
    stats,
    two_section,
    uniform_rank,
    validate_incidence,
    vertex_bound,
)
from .errors import (
    DuplicateVertexInEdge,
    FormatError,
    GenerationFailed,
    HypergraphError,
    InvalidParameters,
    MissingVertexColor,
    NotPrime,
    NotRegular,
    OutOfRangeVertex,
    TooLarge,
)
from .generators import (
    GeneratorSpec,
    generate,
    projective_plane,
    random_regular_linear,
    random_uniform_linear,
    sunflower,
)

__version__ = "0.1.0"

__all__ = [
    "AbortReport",
    "BoundReport",
    "Coloring",
    "DuplicateVertexInEdge",
    "FailureReport",
    "FormatError",
    "GenerationFailed",
    "GeneratorSpec",
    "Hypergraph",
    "HypergraphError",
    "HypergraphStats",
    "InvalidParameters",
    "MissingVertexColor",
    "NotPrime",
    "NotRegular",
    "OutOfRangeVertex",
    "TokenAudit",
    "TooLarge",
    "UniformColorState",
    "beta_envelope",
    "beta_threshold",
    "bound_report",
    "build",
    "build_uniform_state",
    "case_limit",
    "coefficient_A",
    "color_budget",
    "dual",
    "dump_instance",
    "efl_check",
    "exact_chromatic",
    "generate",
    "greedy_recolor",
    "is_linear",
    "load_instance",
    "matching_lower_bound",
    "projective_plane",
    "random_regular_linear",
    "random_uniform_linear",
    "regularity",
    "stats",
    "sunflower",
    "token_audit",
    "two_section",
    "uniform_maxdeg_color",
    "uniform_rank",
    "validate_incidence",
    "verify_coloring",
    "vertex_bound",
]
