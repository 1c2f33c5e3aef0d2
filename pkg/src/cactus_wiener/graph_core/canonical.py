"""Canonical forms by individualization-refinement.

The form of a graph is the graph6 encoding of its relabeling that minimises
the sorted relabeled edge list over all leaves of the search tree. The
search tree is built from isomorphism-invariant choices only (equitable
refinement, first smallest non-singleton cell), so the minimum is an
isomorphism invariant. Branches are skipped when a known automorphism that
fixes the current prefix maps them onto an explored branch; swaps of twin
vertices are recognised up front.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from ..errors import TooLarge
from .graph import Graph

DEFAULT_MAX_N = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    bytes: bytes

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


def _refine(adj: list[set[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                counts = [0] * k
                for w in adj[v]:
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            for key in sorted(sig):
                out.append(sig[key])
        if len(out) == k:
            return out
        cells = out


def _twins(adj: list[set[int]], a: int, b: int) -> bool:
    return adj[a] - {b} == adj[b] - {a}


def _orbits(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for x in range(n):
            rx, ry = find(x), find(perm[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


def canonical_labeling(g: Graph, max_n: int | None = None) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` the canonical representative."""
    if max_n is None:
        max_n = int(os.environ.get("CACTUS_CANON_MAX_N", DEFAULT_MAX_N))
    n = g.vertex_count
    if n > max_n:
        raise TooLarge(f"canonical form limited to {max_n} vertices, got {n}")
    if n == 0:
        return []
    adj = [set(a) for a in g.adjacency]
    edges = g.edges
    best_key: tuple | None = None
    best_order: list[int] = []
    autos: list[list[int]] = []

    start: dict[int, list[int]] = {}
    for v in range(n):
        start.setdefault(len(adj[v]), []).append(v)
    root = _refine(adj, [start[d] for d in sorted(start)])

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        key = tuple(sorted((pos[a], pos[b]) if pos[a] < pos[b] else (pos[b], pos[a]) for a, b in edges))
        if best_key is None or key < best_key:
            best_key, best_order = key, order
        elif key == best_key:
            perm = [0] * n
            for x, y in zip(best_order, order):
                perm[x] = y
            autos.append(perm)

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        if len(cells) == n:
            leaf(cells)
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        explored: list[int] = []
        for v in sorted(cells[target]):
            if any(_twins(adj, v, w) for w in explored):
                continue
            if explored and autos:
                fixing = [p for p in autos if all(p[x] == x for x in prefix)]
                if fixing:
                    orb = _orbits(n, fixing)
                    if any(orb[v] == orb[w] for w in explored):
                        continue
            explored.append(v)
            rest = [x for x in cells[target] if x != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(adj, split), prefix + [v])

    search(root, [])
    perm = [0] * n
    for i, v in enumerate(best_order):
        perm[v] = i
    return perm


def canonical_form(g: Graph, max_n: int | None = None) -> CanonicalForm:
    from .formats import emit_graph6

    perm = canonical_labeling(g, max_n)
    return CanonicalForm(emit_graph6(g.relabel(perm)).encode("ascii"))
