"""Independent reference computations used to check the package.

Nothing here imports the package's distance or invariant code: distances
come from a plain BFS written below or from networkx.
"""

from __future__ import annotations

import itertools
from collections import deque

import networkx as nx

from cactus_wiener.graph_core import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def bfs(n: int, edges, s: int) -> list[int]:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = [-1] * n
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def brute_wiener(g: Graph) -> int:
    d = [bfs(g.n, g.edges, s) for s in range(g.n)]
    return sum(d[a][b] for a, b in itertools.combinations(range(g.n), 2))


def brute_edge_wiener(g: Graph) -> int:
    """Pairwise summation of min endpoint distance + 1."""
    d = [bfs(g.n, g.edges, s) for s in range(g.n)]
    total = 0
    for (a, b), (c, e) in itertools.combinations(g.edges, 2):
        total += min(d[a][c], d[a][e], d[b][c], d[b][e]) + 1
    return total


def line_graph_edge_wiener(g: Graph) -> int:
    """Wiener index of the line graph, computed by networkx."""
    if g.m < 2:
        return 0
    return int(nx.wiener_index(nx.line_graph(to_nx(g))))


def isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))
