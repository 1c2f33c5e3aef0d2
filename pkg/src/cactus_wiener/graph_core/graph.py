"""Simple undirected graphs on dense vertex ids, and exact hop distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..errors import Disconnected, DuplicateEdge, InvalidEdge, InvalidVertex

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..vertex_count-1``.

    Edges are stored as ``(u, v)`` with ``u < v`` and kept sorted, so the
    position of an edge in ``edges`` is a stable edge index.
    Build instances through :func:`from_edge_list`; the constructor trusts
    its input.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        lo, hi = 0, len(self.edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.edges) or self.edges[lo] != key:
            raise InvalidEdge(f"{key} is not an edge")
        return lo

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return len(_reach(self, 0)) == self.vertex_count

    def edit(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Graph":
        """Return a copy with ``remove`` deleted and then ``add`` inserted."""
        current = set(self.edges)
        for u, v in remove:
            key = (min(u, v), max(u, v))
            if key not in current:
                raise InvalidEdge(f"cannot remove missing edge {key}")
            current.remove(key)
        added = list(add)
        for u, v in added:
            if (min(u, v), max(u, v)) in current:
                raise DuplicateEdge(f"edge {(u, v)} already present")
        return from_edge_list(self.vertex_count, list(current) + added)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidVertex("relabeling is not a permutation of the vertex set")
        return from_edge_list(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise InvalidVertex("vertex count must be non-negative")
    seen: set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        for w in (u, v):
            if not 0 <= w < n:
                raise InvalidVertex(f"vertex {w} out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


def _reach(g: Graph, source: int) -> set[int]:
    seen = {source}
    stack = [source]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph (read-only ``uint16``)."""

    n: int
    dist: np.ndarray = field(repr=False)

    def __getitem__(self, index):
        return self.dist[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.dist, other.dist))

    __hash__ = None  # type: ignore[assignment]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    n = g.vertex_count
    out = np.zeros((n, n), dtype=np.uint16)
    for s in range(n):
        row = bfs_distances(g, s)
        if -1 in row:
            raise Disconnected("graph is disconnected")
        out[s] = row
    out.setflags(write=False)
    return DistanceMatrix(n, out)


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected("graph is disconnected")
