"""k-Opt and k-Opt++ local search for the TSP with costs one and two.

The package provides exact move enumeration for k in {2, 3}, a vectorised
first-improvement search with certified exhaustive neighborhood scans,
instance families whose designated tours are locally optimal yet far from
the optimum, exact solvers for small instances, and the counter accounting
that converts local optimality into approximation ratio bounds.
"""

from .analysis import (
    Counter,
    CounterLedger,
    DualReport,
    GbPair,
    PathCheckReport,
    PathViolation,
    PropertyCheck,
    PropertyReport,
    RatioReport,
    check_counter_properties,
    count_bound_check,
    distribute_counters,
    dual_feasibility_check,
    dual_slack,
    gb_values,
    pp_path_checks,
    ratio_report,
    ratio_upper_bound,
)
from .certify import (
    Certificate,
    certify_k_optimal,
    certify_kpp_optimal,
    endpoint_pair_violations,
    find_forbidden_constellation,
    neighborhood_size,
)
from .cli import RunRecord, SweepConfig, SweepResult, main, run_sweep, structural_checks
from .constructions import (
    FamilyOutput,
    RegularityResult,
    build_three_opt_reference,
    gen_three_opt_lb,
    gen_three_opt_pp_lb,
    gen_two_opt_lb,
    is_regular,
    random_instance,
)
from .core import (
    MIN_N,
    Edge,
    Instance,
    PathDecomposition,
    Tour,
    canonical_edge,
    cost_edge,
    identity_tour,
    one_path_decomposition,
    tour_cost,
    validate_tour,
)
from .errors import (
    ConstructionError,
    DuplicateVertexError,
    InvalidArgumentError,
    InvalidMoveError,
    MissingVertexError,
    ParseError,
    SizeExceededError,
    TourValidationError,
    WrongLengthError,
)
from .exact import (
    BRUTE_FORCE_LIMIT,
    HELD_KARP_LIMIT,
    ExactResult,
    brute_force,
    held_karp,
)
from .fileio import (
    format_instance,
    format_tour,
    parse_instance,
    parse_tour,
    read_instance,
    read_tour,
    write_instance,
    write_tour,
)
from .moves import (
    KMove,
    SearchStats,
    apply_move,
    count_zero_paths,
    enumerate_kmoves,
    find_improving,
    find_improving_by_enumeration,
    format_kmove,
    is_improving_pp,
    local_search,
    move_gain,
    parse_kmove,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "Certificate",
    "ConstructionError",
    "Counter",
    "CounterLedger",
    "DualReport",
    "DuplicateVertexError",
    "Edge",
    "ExactResult",
    "FamilyOutput",
    "GbPair",
    "HELD_KARP_LIMIT",
    "Instance",
    "InvalidArgumentError",
    "InvalidMoveError",
    "KMove",
    "MIN_N",
    "MissingVertexError",
    "ParseError",
    "PathCheckReport",
    "PathDecomposition",
    "PathViolation",
    "PropertyCheck",
    "PropertyReport",
    "RatioReport",
    "RegularityResult",
    "RunRecord",
    "SearchStats",
    "SizeExceededError",
    "SweepConfig",
    "SweepResult",
    "Tour",
    "TourValidationError",
    "WrongLengthError",
    "apply_move",
    "brute_force",
    "build_three_opt_reference",
    "canonical_edge",
    "certify_k_optimal",
    "certify_kpp_optimal",
    "check_counter_properties",
    "cost_edge",
    "count_bound_check",
    "count_zero_paths",
    "distribute_counters",
    "dual_feasibility_check",
    "dual_slack",
    "endpoint_pair_violations",
    "enumerate_kmoves",
    "find_forbidden_constellation",
    "find_improving",
    "find_improving_by_enumeration",
    "format_instance",
    "format_kmove",
    "format_tour",
    "gb_values",
    "gen_three_opt_lb",
    "gen_three_opt_pp_lb",
    "gen_two_opt_lb",
    "held_karp",
    "identity_tour",
    "is_improving_pp",
    "is_regular",
    "local_search",
    "main",
    "move_gain",
    "neighborhood_size",
    "one_path_decomposition",
    "parse_instance",
    "parse_kmove",
    "parse_tour",
    "pp_path_checks",
    "random_instance",
    "ratio_report",
    "ratio_upper_bound",
    "read_instance",
    "read_tour",
    "run_sweep",
    "structural_checks",
    "tour_cost",
    "validate_tour",
    "write_instance",
    "write_tour",
]
