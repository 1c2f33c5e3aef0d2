"""Graph representation, distances, block structure and canonical forms."""

from .blocks import (
    BlockDecomposition,
    block_decomposition,
    cactus_cycle_count,
    cut_edges,
    cycle_blocks,
    internal_paths,
    is_cactus,
    is_chain_cactus,
    pendant_paths,
)
from .canonical import CanonicalForm, canonical_form, canonical_labeling
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, read_graph
from .graph import DistanceMatrix, Graph, all_pairs_distances, bfs_distances, from_edge_list, require_connected

__all__ = [
    "BlockDecomposition",
    "CanonicalForm",
    "DistanceMatrix",
    "Graph",
    "all_pairs_distances",
    "bfs_distances",
    "block_decomposition",
    "cactus_cycle_count",
    "canonical_form",
    "canonical_labeling",
    "cut_edges",
    "cycle_blocks",
    "emit_edge_list",
    "emit_graph6",
    "from_edge_list",
    "internal_paths",
    "is_cactus",
    "is_chain_cactus",
    "parse_edge_list",
    "parse_graph6",
    "pendant_paths",
    "read_graph",
    "require_connected",
]
