"""Exact laboratory for minimally hamiltonian-connected graphs."""

from mhclab._core import (
    Graph,
    LabeledGraph,
    build_case_even,
    build_case_odd,
    build_wheel,
    canonical_form,
    construct,
    degree_profile,
    dispatch,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    emit_path,
    enumerate_classes,
    fast_minimality_argument,
    find_hamilton_path,
    hamilton_path_exists,
    hunt_min_degree_4,
    is_connected,
    is_hamiltonian_connected,
    is_minimally_hc,
    is_wheel,
    parse_edge_list,
    parse_graph6,
    survey,
    survey_graph6_lines,
    validity,
    verify_all_pairs,
    vertex_connectivity,
)

__all__ = [
    "Graph",
    "LabeledGraph",
    "build_case_even",
    "build_case_odd",
    "build_wheel",
    "canonical_form",
    "construct",
    "degree_profile",
    "dispatch",
    "emit_dot",
    "emit_edge_list",
    "emit_graph6",
    "emit_path",
    "enumerate_classes",
    "fast_minimality_argument",
    "find_hamilton_path",
    "hamilton_path_exists",
    "hunt_min_degree_4",
    "is_connected",
    "is_hamiltonian_connected",
    "is_minimally_hc",
    "is_wheel",
    "parse_edge_list",
    "parse_graph6",
    "survey",
    "survey_graph6_lines",
    "validity",
    "verify_all_pairs",
    "vertex_connectivity",
]
