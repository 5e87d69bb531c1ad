"""Exact chromatic polynomials and list-coloring counts for uniform hypergraphs.

The package computes P(G, k) and P(G, L) by independent routes (brute
force, full inclusion-exclusion, broken-cycle-free expansion), checks the
inequalities tying the two together, and searches list-assignment space to
confirm that above the cutoff (m-1)/ln(1+sqrt(2)) the constant assignment
is the unique count minimizer.
"""

__version__ = "0.1.0"

from .bounds import (
    LN_1_PLUS_SQRT2,
    BoundViolation,
    CheckOutcome,
    PreconditionError,
    StratumGap,
    ThresholdReport,
    check_component_bounds,
    check_edge_bound,
    check_shared_color_bounds,
    difference_lower_bound,
    stratum_gap,
    threshold,
    threshold_margin,
    weierstrass_product_bound,
)
from .chromatic import (
    Polynomial,
    chromatic_count_brute,
    chromatic_poly_broken,
    chromatic_poly_stratified,
    chromatic_poly_whitney,
)
from .cycles import (
    BrokenCycleFamily,
    DeltaCycleFamily,
    Stratification,
    broken_cycle_free_subsets,
    broken_cycles,
    delta_cycles,
    is_cyclic_set,
    stratify,
)
from .hypergraph import (
    ComponentLabeling,
    FormatError,
    Hypergraph,
    HypergraphError,
    InvalidHypergraphError,
    SizeLimitError,
    component_count,
    is_connected,
    parse,
    serialize,
    sort_edges_lex,
    subset_component_count,
    validate,
)
from .improper import (
    StarHypergraph,
    build_star,
    improper_count_brute,
    improper_count_via_star,
    improper_list_count_brute,
    improper_list_count_via_star,
    improper_threshold,
)
from .listcount import (
    InvalidAssignmentError,
    ListAssignment,
    edge_deficiency,
    inclusion_exclusion_term,
    list_count_broken,
    list_count_brute,
    list_count_inclusion_exclusion,
    parse_lists,
    serialize_lists,
    shared_colors,
    total_deficiency,
    validate_assignment,
)
from .verify import (
    MinimizerReport,
    SearchSpec,
    VerificationFailure,
    enumerate_canonical_assignments,
    explore_below_threshold,
    random_assignments,
    verify_theorem_main,
)

__all__ = [name for name in dir() if not name.startswith("_")]
