"""Exact metric dimension, determining number and locating-domination toolkit."""

from .errors import GraphError
from .graph import Graph, build_graph, complement, emit_graph6, parse_graph6, read_graphs
from .invariants import (
    InvariantResult,
    chromatic_number,
    clique_number,
    domination_number,
    independence_number,
    is_distinguishing,
    is_dominating,
    is_locating_dominating,
    is_resolving,
    k_domination_number,
    location_domination_number,
    metric_dimension,
    upper_domination_number,
)
from .symmetry import determining_number, is_determining
from .twins import build_tilde, is_twin_free, twin_decomposition

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "InvariantResult", "build_graph", "build_tilde", "chromatic_number",
    "clique_number", "complement", "determining_number", "domination_number", "emit_graph6",
    "independence_number", "is_determining", "is_distinguishing", "is_dominating",
    "is_locating_dominating", "is_resolving", "is_twin_free", "k_domination_number",
    "location_domination_number", "metric_dimension", "parse_graph6", "read_graphs",
    "twin_decomposition", "upper_domination_number",
]
