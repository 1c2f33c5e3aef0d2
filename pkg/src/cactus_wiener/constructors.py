"""Deterministic builders for the graph families used throughout.

Labelings are fixed so the outputs are byte-stable in graph6:

* ``path(n)``: ``0-1-...-(n-1)``; ``cycle(n)`` adds ``(0, n-1)``;
  ``star(n)``: centre 0.
* ``bundle(n, t)``: hub 0, triangles ``(0, 2i+1, 2i+2)``, then pendant
  vertices ``2t+1 .. n-1`` on the hub.
* ``triangle_chain(i)``: triangles ``(2a, 2a+1, 2a+2)``; ends 0 and ``2i``.
* ``saw(i, j, n)``: left to right, the first chain on ``0..2i``, the joining
  path on ``2i .. 2i+p-1`` with ``p = n-2i-2j``, the second chain on the
  remaining vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateOperand, InvalidParams, InvalidVertex
from .graph_core import Graph, from_edge_list, require_connected


@dataclass(frozen=True, order=True)
class CactusClassParams:
    """A class of cacti with ``n`` vertices and ``t`` cycles."""

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.t < 0 or self.n < 2 * self.t + 1:
            raise InvalidParams(f"no cactus with n={self.n}, t={self.t}")

    @property
    def m(self) -> int:
        return self.n - 1 + self.t

    @property
    def k(self) -> int:
        return self.t // 2


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("star needs n >= 1")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def bundle(n: int, t: int) -> Graph:
    """The bundle C0(n, t): t triangles and n-2t-1 pendant edges at one hub."""
    CactusClassParams(n, t)
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    edges += [(0, x) for x in range(2 * t + 1, n)]
    return from_edge_list(n, edges)


def _triangle_chain_edges(i: int, offset: int = 0) -> list[tuple[int, int]]:
    edges = []
    for a in range(i):
        x = offset + 2 * a
        edges += [(x, x + 1), (x + 1, x + 2), (x, x + 2)]
    return edges


def triangle_chain(i: int) -> tuple[Graph, int, int]:
    """Chain of ``i`` triangles; returns ``(graph, first_end, last_end)``."""
    if i < 0:
        raise InvalidParams("triangle chain length must be >= 0")
    return from_edge_list(2 * i + 1, _triangle_chain_edges(i)), 0, 2 * i


def saw(i: int, j: int, n: int) -> Graph:
    """Saw graph Sw(i, j; n-2i-2j-1) on exactly ``n`` vertices.

    The joining path has ``n-2i-2j`` vertices including both chain ends, so
    for ``n = 2i+2j+1`` the two chains share their ends.
    """
    if i < 0 or j < 0 or n < 2 * i + 2 * j + 1:
        raise InvalidParams(f"saw({i}, {j}, {n}) needs n >= 2i+2j+1")
    p = n - 2 * i - 2 * j
    left_end = 2 * i
    right_start = left_end + p - 1
    edges = _triangle_chain_edges(i)
    edges += [(x, x + 1) for x in range(left_end, right_start)]
    edges += _triangle_chain_edges(j, right_start)
    return from_edge_list(n, edges)


def clipped_cycle(l: int) -> Graph:
    """D_l: the cycle on ``0..l-1`` minus edge ``(0, l-1)`` plus ``(l-3, l-1)``."""
    if l < 4:
        raise InvalidParams("clipped cycle needs l >= 4")
    return from_edge_list(l, [(i, i + 1) for i in range(l - 1)] + [(l - 3, l - 1)])


def chain_cactus(blocks: Sequence[int], exits: Sequence[int] | None = None) -> Graph:
    """Blocks of the given sizes glued end to end at single cut vertices.

    Size 2 is an edge, size ``g >= 3`` a ``g``-cycle. A cycle block is left
    through the vertex ``exits[b]`` steps along it from its entry vertex
    (default ``g // 2``, the antipode); for an edge block the exit is the far
    endpoint. Vertex 0 is the entry of the first block.
    """
    if any(g < 2 for g in blocks):
        raise InvalidParams("block sizes must be >= 2")
    if exits is not None and len(exits) != len(blocks):
        raise InvalidParams("exits must match blocks")
    edges: list[tuple[int, int]] = []
    entry, nxt = 0, 1
    for b, g in enumerate(blocks):
        ring = [entry] + list(range(nxt, nxt + g - 1))
        nxt += g - 1
        if g == 2:
            edges.append((ring[0], ring[1]))
            entry = ring[1]
            continue
        edges += [(ring[k], ring[(k + 1) % g]) for k in range(g)]
        step = g // 2 if exits is None else exits[b]
        if not 1 <= step < g:
            raise InvalidParams(f"exit offset {step} invalid for a {g}-cycle")
        entry = ring[step]
    return from_edge_list(nxt, edges)


def coalesce(g1: Graph, u1: int, g2: Graph, u2: int) -> tuple[Graph, int]:
    """Identify ``u1`` of ``g1`` with ``u2`` of ``g2``.

    ``g1`` keeps its labels and the merged vertex is ``u1``; the other
    vertices of ``g2`` follow in increasing order from ``g1.n``.
    """
    require_connected(g1)
    require_connected(g2)
    if not 0 <= u1 < g1.n or not 0 <= u2 < g2.n:
        raise InvalidVertex("coalescence vertex out of range")
    mapping = {}
    nxt = g1.n
    for x in range(g2.n):
        if x == u2:
            mapping[x] = u1
        else:
            mapping[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[a], mapping[b]) for a, b in g2.edges]
    return from_edge_list(nxt, edges), u1


def merge(g1: Graph, u1: int, g2: Graph, u2: int) -> Graph:
    return coalesce(g1, u1, g2, u2)[0]


def require_edges(*graphs: Graph) -> None:
    if any(g.m == 0 for g in graphs):
        raise DegenerateOperand("operand graph has no edges")
