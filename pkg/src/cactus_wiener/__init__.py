"""Edge-Wiener index of cactus graphs."""

from .constructors import (
    CactusClassParams,
    bundle,
    chain_cactus,
    clipped_cycle,
    coalesce,
    cycle,
    path,
    saw,
    star,
    triangle_chain,
)
from .enumeration import enumerate_cacti, extremal_scan, filter_oracle
from .graph_core import Graph, canonical_form, from_edge_list, parse_graph6, emit_graph6
from .invariants import coalescence_edge_wiener, edge_wiener, vertex_edge_sum, wiener

__all__ = [
    "CactusClassParams",
    "Graph",
    "bundle",
    "canonical_form",
    "chain_cactus",
    "clipped_cycle",
    "coalesce",
    "coalescence_edge_wiener",
    "cycle",
    "edge_wiener",
    "emit_graph6",
    "enumerate_cacti",
    "extremal_scan",
    "filter_oracle",
    "from_edge_list",
    "parse_graph6",
    "path",
    "saw",
    "star",
    "triangle_chain",
    "vertex_edge_sum",
    "wiener",
]
