"""Stable roommate matching with weak preferences and structured domains.

The package models agents with ranked tie groups over the agents they
find acceptable, decides stability questions exactly, recognizes the
classic restricted domains (single-peaked, single-crossing and its
tie-sensitive refinement, worst-restricted), solves structured instances
greedily, and builds the reductions connecting stability to independent
set and domain recognition to betweenness.
"""

from .coloring import EdgeColoring, Graph, check_degree_cap, misra_gries_edge_coloring
from .errors import (
    AsymmetricAcceptability,
    BudgetExceeded,
    DegreeTooHigh,
    DuplicateInOrder,
    InternalInvariantViolation,
    IsolatedAgent,
    KOutOfRange,
    NoMutualPair,
    NotComplete,
    NotIndependent,
    NotNarcissistic,
    OddAgentCount,
    ParseError,
    RoommatesError,
    TieGroupTooLarge,
    TiesUnsupported,
    TooManyAgents,
    UnknownFixture,
    WrongSize,
)
from .formats import (
    parse_betweenness,
    parse_graph,
    parse_matching,
    parse_order,
    parse_profile,
    parse_roles,
    serialize_betweenness,
    serialize_graph,
    serialize_matching,
    serialize_order,
    serialize_profile,
    serialize_roles,
)
from .greedy import SolveTrace, find_mutual_most_acceptable_pair, greedy_solve
from .instances import (
    FIXTURE_NAMES,
    GeneratorConfig,
    fixture,
    gen_degree3_graph,
    gen_narcissistic_sp,
)
from .model import (
    AcceptabilityGraph,
    AgentId,
    Comparison,
    Matching,
    PreferenceOrder,
    Profile,
    acceptability_graph,
    build_profile,
    compare,
    most_acceptable_set,
    restrict,
    validate_profile,
)
from .reduction import (
    BetweennessInstance,
    ReducedInstance,
    betweenness_to_sc_instance,
    betweenness_to_sp_instance,
    independent_set_to_matching,
    independent_set_to_sr,
    selector_gadget,
    sr_matching_to_independent_set,
    vertex_gadget,
)
from .stability import (
    DEFAULT_SEARCH_BUDGET,
    BlockingPair,
    BlockingReason,
    check_matching,
    enumerate_stable_matchings,
    exists_stable_matching,
    find_blocking_pairs,
    is_perfect,
    is_stable,
)
from .structure import (
    PropertyReport,
    Verdict,
    WitnessOrder,
    break_ties_fixed,
    find_single_peaked_order,
    find_tssc_order,
    has_ties,
    is_complete,
    is_narcissistic,
    is_sc_wrt,
    is_single_peaked_wrt,
    is_trivially_crossing,
    is_tssc_wrt,
    is_worst_restricted,
    property_report,
)

__all__ = [
    "AcceptabilityGraph",
    "AgentId",
    "AsymmetricAcceptability",
    "BetweennessInstance",
    "BlockingPair",
    "BlockingReason",
    "BudgetExceeded",
    "Comparison",
    "DEFAULT_SEARCH_BUDGET",
    "DegreeTooHigh",
    "DuplicateInOrder",
    "EdgeColoring",
    "FIXTURE_NAMES",
    "GeneratorConfig",
    "Graph",
    "InternalInvariantViolation",
    "IsolatedAgent",
    "KOutOfRange",
    "Matching",
    "NoMutualPair",
    "NotComplete",
    "NotIndependent",
    "NotNarcissistic",
    "OddAgentCount",
    "ParseError",
    "PreferenceOrder",
    "Profile",
    "PropertyReport",
    "ReducedInstance",
    "RoommatesError",
    "SolveTrace",
    "TieGroupTooLarge",
    "TiesUnsupported",
    "TooManyAgents",
    "UnknownFixture",
    "Verdict",
    "WitnessOrder",
    "WrongSize",
    "acceptability_graph",
    "betweenness_to_sc_instance",
    "betweenness_to_sp_instance",
    "break_ties_fixed",
    "build_profile",
    "check_degree_cap",
    "check_matching",
    "compare",
    "enumerate_stable_matchings",
    "exists_stable_matching",
    "find_blocking_pairs",
    "find_mutual_most_acceptable_pair",
    "find_single_peaked_order",
    "find_tssc_order",
    "fixture",
    "gen_degree3_graph",
    "gen_narcissistic_sp",
    "greedy_solve",
    "has_ties",
    "independent_set_to_matching",
    "independent_set_to_sr",
    "is_complete",
    "is_narcissistic",
    "is_perfect",
    "is_sc_wrt",
    "is_single_peaked_wrt",
    "is_stable",
    "is_trivially_crossing",
    "is_tssc_wrt",
    "is_worst_restricted",
    "misra_gries_edge_coloring",
    "most_acceptable_set",
    "parse_betweenness",
    "parse_graph",
    "parse_matching",
    "parse_order",
    "parse_profile",
    "parse_roles",
    "property_report",
    "restrict",
    "selector_gadget",
    "serialize_betweenness",
    "serialize_graph",
    "serialize_matching",
    "serialize_order",
    "serialize_profile",
    "serialize_roles",
    "sr_matching_to_independent_set",
    "validate_profile",
    "vertex_gadget",
]
