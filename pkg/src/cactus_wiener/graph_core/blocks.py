"""Block structure, cactus recognition and the path-shape predicates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import Disconnected, NotCactus
from .graph import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components as sorted tuples of edge indices.

    Blocks are ordered by their smallest edge index.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]

    def block_vertices(self, g: Graph, b: int) -> frozenset[int]:
        return frozenset(x for ei in self.blocks[b] for x in g.edges[ei])


def block_decomposition(g: Graph) -> BlockDecomposition:
    # Iterative lowpoint DFS rooted at vertex 0.
    n = g.vertex_count
    if n == 0:
        return BlockDecomposition((), frozenset())
    index = {e: i for i, e in enumerate(g.edges)}

    def eid(a: int, b: int) -> int:
        return index[(a, b) if a < b else (b, a)]

    disc = [-1] * n
    low = [0] * n
    disc[0] = 0
    clock = 0
    estack: list[int] = []
    blocks: list[tuple[int, ...]] = []
    stack = [(0, -1, iter(g.adjacency[0]))]
    while stack:
        v, parent_edge, it = stack[-1]
        descended = False
        for w in it:
            e = eid(v, w)
            if e == parent_edge:
                continue
            if disc[w] == -1:
                clock += 1
                disc[w] = low[w] = clock
                estack.append(e)
                stack.append((w, e, iter(g.adjacency[w])))
                descended = True
                break
            if disc[w] < disc[v]:
                estack.append(e)
                low[v] = min(low[v], disc[w])
        if descended:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    e = estack.pop()
                    block.append(e)
                    if e == parent_edge:
                        break
                blocks.append(tuple(sorted(block)))
    if -1 in disc:
        raise Disconnected("graph is disconnected")
    blocks.sort(key=lambda b: b[0])
    membership: Counter[int] = Counter()
    for b in blocks:
        for x in {x for ei in b for x in g.edges[ei]}:
            membership[x] += 1
    cuts = frozenset(x for x, c in membership.items() if c >= 2)
    return BlockDecomposition(tuple(blocks), cuts)


def _cycle_order(g: Graph, block: tuple[int, ...]) -> list[int] | None:
    """Vertex order of a block that is a chordless cycle, else ``None``."""
    verts = {x for ei in block for x in g.edges[ei]}
    if len(verts) != len(block):
        return None
    local: dict[int, list[int]] = {x: [] for x in verts}
    for ei in block:
        a, b = g.edges[ei]
        local[a].append(b)
        local[b].append(a)
    if any(len(nb) != 2 for nb in local.values()):
        return None
    start = min(verts)
    order = [start]
    prev, cur = start, min(local[start])
    while cur != start:
        order.append(cur)
        a, b = local[cur]
        prev, cur = cur, (b if a == prev else a)
    return order if len(order) == len(verts) else None


def cycle_blocks(g: Graph) -> list[list[int]]:
    """Cycle blocks as vertex sequences in cyclic order.

    Each sequence starts at its smallest vertex and continues towards that
    vertex's smaller cycle neighbour. Raises ``NotCactus`` when some block is
    neither an edge nor a cycle.
    """
    out = []
    for block in block_decomposition(g).blocks:
        if len(block) == 1:
            continue
        order = _cycle_order(g, block)
        if order is None:
            raise NotCactus(f"block with {len(block)} edges is not a cycle")
        out.append(order)
    return out


def cactus_cycle_count(g: Graph) -> int:
    """Number of cycles ``t`` of a cactus; raises ``NotCactus`` otherwise."""
    t = len(cycle_blocks(g))
    # every block is an edge or a cycle, hence the edge count identity
    assert g.m == g.vertex_count - 1 + t
    return t


def is_cactus(g: Graph) -> bool:
    try:
        cactus_cycle_count(g)
    except (NotCactus, Disconnected):
        return False
    return True


def cut_edges(g: Graph) -> list[int]:
    """Edge indices of the bridges (single-edge blocks)."""
    return sorted(b[0] for b in block_decomposition(g).blocks if len(b) == 1)


def is_chain_cactus(g: Graph) -> bool:
    cactus_cycle_count(g)
    dec = block_decomposition(g)
    per_cut: Counter[int] = Counter()
    for i in range(len(dec.blocks)):
        cuts_here = dec.block_vertices(g, i) & dec.cut_vertices
        if len(cuts_here) > 2:
            return False
        per_cut.update(cuts_here)
    return all(c == 2 for c in per_cut.values())


def _walk_degree_two(g: Graph, start: int, first: int) -> list[int]:
    path = [start, first]
    while g.degree(path[-1]) == 2 and path[-1] != start:
        a, b = g.adjacency[path[-1]]
        path.append(b if a == path[-2] else a)
    return path


def internal_paths(g: Graph) -> list[list[int]]:
    """Internal paths in the sense of Hoffman and Smith.

    A path ``v0 .. vs`` (s >= 1) of distinct vertices whose ends have degree
    greater than two and whose interior vertices have degree exactly two.
    Each path is reported once, oriented so the tuple is lexicographically
    smaller than its reverse.
    """
    found = set()
    for v in range(g.vertex_count):
        if g.degree(v) <= 2:
            continue
        for w in g.adjacency[v]:
            path = _walk_degree_two(g, v, w)
            end = path[-1]
            if end == v or g.degree(end) <= 2:
                continue
            found.add(min(tuple(path), tuple(reversed(path))))
    return [list(p) for p in sorted(found)]


def pendant_paths(g: Graph) -> list[list[int]]:
    """Paths from a pendant vertex up to the first vertex of degree >= 3.

    A graph that is itself a path has no attachment vertex and yields ``[]``.
    """
    out = []
    for v in range(g.vertex_count):
        if g.degree(v) != 1:
            continue
        path = _walk_degree_two(g, v, g.adjacency[v][0])
        if g.degree(path[-1]) >= 3:
            out.append(path)
    return out
