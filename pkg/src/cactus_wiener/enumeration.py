"""Exhaustive generation of cacti with ``n`` vertices and ``t`` cycles.

Every cactus with at least two blocks has an end block whose removal leaves
a smaller cactus, so each class is reached by gluing one pendant edge or one
cycle onto every vertex of every member of a smaller class. Duplicates are
removed by canonical form. :func:`filter_oracle` rebuilds the same classes
from scratch by testing every labeled graph with the right edge count.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .constructors import CactusClassParams, cycle
from .errors import TooLarge
from .graph_core import CanonicalForm, Graph, canonical_form, canonical_labeling, from_edge_list, is_cactus, parse_graph6
from .invariants import edge_wiener

DEFAULT_MAX_N = 11
ORACLE_MAX_N = 7


def max_n_cap() -> int:
    return int(os.environ.get("CACTUS_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True)
class EnumerationCell:
    params: CactusClassParams
    graphs: tuple[Graph, ...]
    forms: tuple[CanonicalForm, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)


def _glue(g: Graph, at: int, h: Graph) -> Graph:
    # h is glued by its vertex 0
    edges = list(g.edges) + [
        (at if a == 0 else g.n + a - 1, at if b == 0 else g.n + b - 1) for a, b in h.edges
    ]
    return from_edge_list(g.n + h.n - 1, edges)


_K2 = from_edge_list(2, [(0, 1)])
_cache: dict[tuple[int, int], dict[CanonicalForm, Graph]] = {}


def _canonical_pair(g: Graph) -> tuple[CanonicalForm, Graph]:
    form = canonical_form(g)
    return form, parse_graph6(str(form))


def _cell(n: int, t: int) -> dict[CanonicalForm, Graph]:
    key = (n, t)
    if key in _cache:
        return _cache[key]
    out: dict[CanonicalForm, Graph] = {}
    if n == 1:
        if t == 0:
            single = from_edge_list(1, [])
            out[canonical_form(single)] = single
    elif n >= 2 * t + 1:
        sources: list[tuple[dict[CanonicalForm, Graph], Graph]] = [(_cell(n - 1, t), _K2)]
        if t >= 1:
            for c in range(3, n + 1):
                sources.append((_cell(n - c + 1, t - 1), cycle(c)))
        for smaller, block in sources:
            for g in smaller.values():
                for at in range(g.n):
                    form, rep = _canonical_pair(_glue(g, at, block))
                    out.setdefault(form, rep)
    _cache[key] = dict(sorted(out.items()))
    return _cache[key]


def enumerate_cacti(params: CactusClassParams | tuple[int, int], max_n: int | None = None) -> EnumerationCell:
    """All non-isomorphic cacti of the class, in canonical-form order.

    Graphs are returned in their canonical labeling.
    """
    p = params if isinstance(params, CactusClassParams) else CactusClassParams(*params)
    cap = max_n_cap() if max_n is None else max_n
    if p.n > cap:
        raise TooLarge(f"enumeration capped at n={cap}")
    cell = _cell(p.n, p.t)
    return EnumerationCell(p, tuple(cell.values()), tuple(cell.keys()))


def _connected_bits(n: int, adj: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        x = frontier
        while x:
            low = x & -x
            nxt |= adj[low.bit_length() - 1]
            x ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def filter_oracle(params: CactusClassParams | tuple[int, int]) -> EnumerationCell:
    """Brute force: every labeled graph with ``n-1+t`` edges, filtered.

    Only labelings with non-increasing degrees are kept, which loses no
    isomorphism class; the survivors are tested for connectivity and the
    cactus property, then deduplicated by canonical form.
    """
    p = params if isinstance(params, CactusClassParams) else CactusClassParams(*params)
    if p.n > ORACLE_MAX_N:
        raise TooLarge(f"filter oracle limited to n <= {ORACLE_MAX_N}")
    n, m = p.n, p.m
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[CanonicalForm, Graph] = {}
    for chosen in itertools.combinations(pairs, m):
        deg = [0] * n
        for a, b in chosen:
            deg[a] += 1
            deg[b] += 1
        if any(deg[i] < deg[i + 1] for i in range(n - 1)) or (n > 1 and deg[-1] == 0):
            continue
        adj = [0] * n
        for a, b in chosen:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        if not _connected_bits(n, adj):
            continue
        g = from_edge_list(n, chosen)
        if not is_cactus(g):
            continue
        perm = canonical_labeling(g)
        rep = g.relabel(perm)
        form = canonical_form(rep)
        found.setdefault(form, rep)
    ordered = dict(sorted(found.items()))
    return EnumerationCell(p, tuple(ordered.values()), tuple(ordered.keys()))


@dataclass(frozen=True)
class ExtremalScan:
    min_value: int
    min_forms: tuple[CanonicalForm, ...]
    max_value: int
    max_forms: tuple[CanonicalForm, ...]
    values: tuple[int, ...]


def extremal_scan(params: CactusClassParams | tuple[int, int], max_n: int | None = None) -> ExtremalScan:
    cell = enumerate_cacti(params, max_n)
    values = tuple(edge_wiener(g) for g in cell.graphs)
    lo, hi = min(values), max(values)
    return ExtremalScan(
        lo,
        tuple(f for f, v in zip(cell.forms, values) if v == lo),
        hi,
        tuple(f for f, v in zip(cell.forms, values) if v == hi),
        values,
    )
