"""midmatch: exact isolation/domination/matching invariants on small graphs,
middle-graph transforms, isomorph-free catalogs, and a claim verifier."""

from .core import (
    CapacityError,
    Graph,
    ParseError,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    parse_edge_list,
    parse_graph6,
    path,
    spider,
    star,
    to_dot,
    to_graph6,
)
from .enumeration import (
    all_connected_graphs,
    all_trees,
    canonical_form,
    is_isomorphic,
    random_connected_graph,
    random_tree,
)
from .middle import MiddleGraph, middle_graph
from .solvers import (
    WitnessedValue,
    canonicalize_isolating_set,
    contains_pattern,
    domination_number,
    enumerate_matchings,
    enumerate_maximal_matchings,
    independence_number,
    is_equimatchable,
    is_isolating,
    is_isolating_edge_set,
    is_maximal_matching,
    is_near_perfect_matching,
    is_perfect_matching,
    is_randomly_matchable,
    isolating_edges_to_matching,
    isolation_number,
    isolation_number_general,
    maximum_matching,
    min_isolating_edge_set,
    min_maximal_matching,
)
from .theorems import CLAIMS, TheoremReport

__all__ = [
    "CLAIMS",
    "CapacityError",
    "Graph",
    "MiddleGraph",
    "ParseError",
    "TheoremReport",
    "WitnessedValue",
    "all_connected_graphs",
    "all_trees",
    "canonical_form",
    "canonicalize_isolating_set",
    "complete",
    "complete_bipartite",
    "contains_pattern",
    "cycle",
    "domination_number",
    "edgeless",
    "enumerate_matchings",
    "enumerate_maximal_matchings",
    "independence_number",
    "is_equimatchable",
    "is_isolating",
    "is_isolating_edge_set",
    "is_isomorphic",
    "is_maximal_matching",
    "is_near_perfect_matching",
    "is_perfect_matching",
    "is_randomly_matchable",
    "isolating_edges_to_matching",
    "isolation_number",
    "isolation_number_general",
    "maximum_matching",
    "middle_graph",
    "min_isolating_edge_set",
    "min_maximal_matching",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "random_connected_graph",
    "random_tree",
    "spider",
    "star",
    "to_dot",
    "to_graph6",
]
