"""Wiener index, edge-Wiener index and vertex-to-edge distance sums.

Vertex-to-edge distance ``d(v, f)`` is the smaller of the distances from
``v`` to the two endpoints of ``f``, so it is 0 for edges incident to ``v``.
Edge-to-edge distance is that minimum over endpoint pairs plus one, and 0
for an edge paired with itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateOperand, InvalidEdge, InvalidVertex
from .graph_core import DistanceMatrix, Graph, all_pairs_distances

TABLE_MAX_EDGES = 4096


def _dist(g: Graph, dm: DistanceMatrix | None) -> np.ndarray:
    return (dm if dm is not None else all_pairs_distances(g)).dist


def wiener(g: Graph, dm: DistanceMatrix | None = None) -> int:
    d = _dist(g, dm)
    return int(d.sum(dtype=np.int64)) // 2


def _endpoint_min(d: np.ndarray, g: Graph) -> np.ndarray:
    """m x m matrix of min endpoint-pair vertex distances."""
    e = np.asarray(g.edges, dtype=np.intp).reshape(-1, 2)
    a, b = e[:, 0], e[:, 1]
    d = d.astype(np.int64)
    return np.minimum(
        np.minimum(d[np.ix_(a, a)], d[np.ix_(a, b)]),
        np.minimum(d[np.ix_(b, a)], d[np.ix_(b, b)]),
    )


@dataclass(frozen=True)
class EdgeDistanceTable:
    m: int
    dist: np.ndarray = field(repr=False)

    def __getitem__(self, index):
        return self.dist[index]


def edge_distance_table(g: Graph, dm: DistanceMatrix | None = None) -> EdgeDistanceTable:
    if g.m > TABLE_MAX_EDGES:
        raise ValueError(f"edge distance table limited to {TABLE_MAX_EDGES} edges")
    table = _endpoint_min(_dist(g, dm), g) + 1
    np.fill_diagonal(table, 0)
    table.setflags(write=False)
    return EdgeDistanceTable(g.m, table)


def edge_distance(g: Graph, f: int, h: int, dm: DistanceMatrix | None = None) -> int:
    for idx in (f, h):
        if not 0 <= idx < g.m:
            raise InvalidEdge(f"edge index {idx} out of range for m={g.m}")
    if f == h:
        return 0
    d = _dist(g, dm)
    (a, b), (x, y) = g.edges[f], g.edges[h]
    return int(min(d[a, x], d[a, y], d[b, x], d[b, y])) + 1


def edge_wiener(g: Graph, dm: DistanceMatrix | None = None) -> int:
    if g.m < 2:
        if dm is None:
            all_pairs_distances(g)  # connectivity check
        return 0
    d = _dist(g, dm)
    if g.m <= TABLE_MAX_EDGES:
        full = _endpoint_min(d, g)
        iu = np.triu_indices(g.m, k=1)
        return int(full[iu].sum()) + g.m * (g.m - 1) // 2
    # stream one row of edge pairs at a time
    e = np.asarray(g.edges, dtype=np.intp)
    d64 = d.astype(np.int64)
    total = 0
    for i in range(g.m - 1):
        a, b = e[i]
        rest = e[i + 1 :]
        row = np.minimum(
            np.minimum(d64[a, rest[:, 0]], d64[a, rest[:, 1]]),
            np.minimum(d64[b, rest[:, 0]], d64[b, rest[:, 1]]),
        )
        total += int(row.sum()) + len(rest)
    return total


def vertex_edge_distance(g: Graph, v: int, f: int, dm: DistanceMatrix | None = None) -> int:
    d = _dist(g, dm)
    a, b = g.edges[f]
    return int(min(d[v, a], d[v, b]))


def vertex_edge_sum(g: Graph, v: int, dm: DistanceMatrix | None = None) -> int:
    """Sum of ``d(v, f)`` over all edges ``f``."""
    if not 0 <= v < g.vertex_count:
        raise InvalidVertex(f"vertex {v} out of range")
    if g.m == 0:
        if dm is None:
            all_pairs_distances(g)
        return 0
    d = _dist(g, dm)
    e = np.asarray(g.edges, dtype=np.intp)
    return int(np.minimum(d[v, e[:, 0]], d[v, e[:, 1]]).astype(np.int64).sum())


def coalescence_edge_wiener(g1: Graph, u1: int, g2: Graph, u2: int) -> int:
    """Edge-Wiener index of the graph obtained by identifying ``u1`` and ``u2``.

    Evaluated from the two operands alone: the merged graph is never built.
    """
    if g1.m == 0 or g2.m == 0:
        raise DegenerateOperand("both operands need at least one edge")
    d1, d2 = all_pairs_distances(g1), all_pairs_distances(g2)
    m1, m2 = g1.m, g2.m
    return (
        edge_wiener(g1, d1)
        + edge_wiener(g2, d2)
        + m1 * vertex_edge_sum(g2, u2, d2)
        + m2 * vertex_edge_sum(g1, u1, d1)
        + m1 * m2
    )
