"""Exact proper and list coloring counts of signed graphs."""

from .circuits import (
    Barbell,
    BrokenCircuitFamily,
    Cycle,
    NbcCensus,
    NbcExpansion,
    QuasiPolynomial,
    broken_circuits,
    enumerate_barbells,
    enumerate_circuits,
    enumerate_cycles,
    nbc_census,
    nbc_list_count,
    nbc_subsets,
    quasi_polynomial,
)
from .counting import (
    ListAssignment,
    beta,
    brute_count_k,
    brute_count_list,
    color_set,
    gamma,
    inclusion_exclusion_count,
    parse_lists,
)
from .extremal import (
    SearchOutcome,
    ThresholdReport,
    alpha,
    check_minimizer_structure,
    forest_gap_check,
    minimize_over_assignments,
    thresholds,
)
from .graph import (
    ComponentReport,
    HararySplit,
    ResourceCapError,
    SignedGraph,
    components_of,
    find_unbalanced_cycle,
    harary_split,
    parse_graph,
    switch_graph,
)

__version__ = "0.1.0"
