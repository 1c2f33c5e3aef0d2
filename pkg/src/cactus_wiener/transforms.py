"""Edge-Wiener monotone graph rewrites.

Each rewrite has three parts: a builder that checks the structural
preconditions and returns the rewritten graph (or the before/after pair
when the rewrite is defined by gluing parts together), a ``*_instance``
helper that bundles the result with the attached component sizes and the
claimed relation, and :func:`evaluate`, which recomputes both edge-Wiener
indices from scratch.

Relations are always stated as ``W_e(after) <rel> W_e(before)``.
"""

from __future__ import annotations

import enum
import itertools
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .constructors import cycle, path
from .errors import (
    CycleTooSmall,
    DegenerateOperand,
    G2IsAPath,
    InvalidVertex,
    MaxNotAtV1,
    NotACycleBlock,
    NotCutEdge,
    NotEndBlock,
    PathTooShort,
    PendantEndpoint,
)
from .graph_core import Graph, all_pairs_distances, block_decomposition, bfs_distances, from_edge_list, require_connected
from .invariants import edge_wiener, vertex_edge_sum


class Rewrite(str, enum.Enum):
    CONTRACT_CUT_EDGE = "contract_cut_edge"
    CONSOLIDATE_CYCLE = "consolidate_cycle"
    SHRINK_END_CYCLE = "shrink_end_cycle"
    SQUARE_TO_TRIANGLE = "square_to_triangle"
    CLIP_CYCLE = "clip_cycle"
    RELOCATE_BRANCH = "relocate_branch"
    DETACH_TRIANGLE = "detach_triangle"
    RELOCATE_PENDANT_PATH = "relocate_pendant_path"
    SLIDE_SAW_TAIL = "slide_saw_tail"


RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass(frozen=True)
class TransformInstance:
    """A rewrite applied at a concrete site.

    ``predicted_delta`` is the closed-form value of
    ``W_e(after) - W_e(before)`` where one is known; ``in_hypothesis`` is
    False for instances that only satisfy the structural preconditions,
    whose relation is recorded but not asserted.
    """

    rewrite: Rewrite
    site: dict
    component_sizes: tuple[int, ...]
    before: Graph
    after: Graph
    claimed_relation: str
    in_hypothesis: bool = True
    predicted_delta: int | Fraction | None = None
    equality_predicted: bool | None = None


@dataclass(frozen=True)
class TransformOutcome:
    instance: TransformInstance = field(repr=False)
    we_before: int
    we_after: int
    claimed_relation: str
    holds: bool

    @property
    def delta(self) -> int:
        return self.we_after - self.we_before

    @property
    def delta_matches(self) -> bool | None:
        p = self.instance.predicted_delta
        return None if p is None else p == self.delta

    @property
    def equality_matches(self) -> bool | None:
        e = self.instance.equality_predicted
        return None if e is None else e == (self.delta == 0)


def evaluate(inst: TransformInstance) -> TransformOutcome:
    before, after = edge_wiener(inst.before), edge_wiener(inst.after)
    holds = RELATIONS[inst.claimed_relation](after, before)
    return TransformOutcome(inst, before, after, inst.claimed_relation, holds)


# ---------------------------------------------------------------- helpers


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _component_edges(g: Graph, removed: set[tuple[int, int]], root: int) -> int:
    comp = next(c for c in _components_off(g, removed) if root in c)
    return sum(1 for a, b in g.edges if a in comp and _norm(a, b) not in removed)


def _components_off(g: Graph, removed: set[tuple[int, int]]) -> list[set[int]]:
    label = [-1] * g.n
    comps = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        comp = {s}
        label[s] = len(comps)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if _norm(x, y) not in removed and label[y] < 0:
                    label[y] = len(comps)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _cycle_edges(g: Graph, cyc: Sequence[int]) -> set[tuple[int, int]]:
    """Validate that ``cyc`` lists a cycle block in order; return its edges."""
    cyc = list(cyc)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycleBlock("cycle needs at least three distinct vertices")
    if any(not 0 <= v < g.n for v in cyc):
        raise InvalidVertex("cycle vertex out of range")
    edges = {_norm(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    if any(not g.has_edge(a, b) for a, b in edges):
        raise NotACycleBlock("listed vertices are not consecutive along a cycle")
    idx = {g.edge_index(a, b) for a, b in edges}
    if not any(set(b) == idx for b in block_decomposition(g).blocks):
        raise NotACycleBlock("cycle is not a block of the graph")
    return edges


def _attachments(g: Graph, cyc: Sequence[int]) -> tuple[set[tuple[int, int]], list[int]]:
    """Cycle edges and the edge counts ``m_i`` of the part hanging at each ``v_i``."""
    edges = _cycle_edges(g, cyc)
    comps = _components_off(g, edges)
    where = {v: i for i, c in enumerate(comps) for v in c}
    if len({where[v] for v in cyc}) != len(cyc):
        raise NotACycleBlock("removing the cycle edges must separate its vertices")
    sizes = []
    for v in cyc:
        comp = comps[where[v]]
        sizes.append(sum(1 for a, b in g.edges if a in comp and _norm(a, b) not in edges))
    return edges, sizes


def _branch_edges(g: Graph, v: int, cycle_edges: set[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(v, w) for w in g.adjacency[v] if _norm(v, w) not in cycle_edges]


def _attach(host: Graph, at: int, g: Graph, x: int) -> tuple[Graph, dict[int, int]]:
    """Glue ``x`` of ``g`` onto ``at`` of ``host``; also return the vertex map of ``g``."""
    mapping = {}
    nxt = host.n
    for y in range(g.n):
        if y == x:
            mapping[y] = at
        else:
            mapping[y] = nxt
            nxt += 1
    edges = list(host.edges) + [(mapping[a], mapping[b]) for a, b in g.edges]
    return from_edge_list(nxt, edges), mapping


def farthest_vertex(g: Graph, source: int) -> int:
    """A vertex at maximum distance from ``source`` (smallest id on ties)."""
    d = bfs_distances(g, source)
    best = max(d)
    return d.index(best)


def _check_operand(g: Graph, x: int, name: str) -> None:
    require_connected(g)
    if g.n < 2:
        raise DegenerateOperand(f"{name} needs at least two vertices")
    if not 0 <= x < g.n:
        raise InvalidVertex(f"{name} attachment vertex out of range")


# ------------------------------------------------- contract a cut edge


def contract_cut_edge(g: Graph, e: int | tuple[int, int]) -> Graph:
    """Contract the cut edge ``v1v2`` into ``v1`` and hang ``v2`` off ``v1``."""
    v1, v2 = g.edges[e] if isinstance(e, int) else e
    if not g.has_edge(v1, v2):
        raise NotCutEdge(f"({v1}, {v2}) is not an edge")
    dec = block_decomposition(g)
    if (g.edge_index(v1, v2),) not in dec.blocks:
        raise NotCutEdge(f"({v1}, {v2}) lies on a cycle")
    if g.degree(v1) < 2 or g.degree(v2) < 2:
        raise PendantEndpoint("both endpoints need degree >= 2")
    moved = [w for w in g.adjacency[v2] if w != v1]
    return g.edit(remove=[(v2, w) for w in moved], add=[(v1, w) for w in moved])


def contract_cut_edge_instance(g: Graph, e: int | tuple[int, int]) -> TransformInstance:
    v1, v2 = g.edges[e] if isinstance(e, int) else e
    after = contract_cut_edge(g, (v1, v2))
    removed = {_norm(v1, v2)}
    m1, m2 = _component_edges(g, removed, v1), _component_edges(g, removed, v2)
    return TransformInstance(
        Rewrite.CONTRACT_CUT_EDGE, {"v1": v1, "v2": v2}, (m1, m2), g, after, "<", predicted_delta=-m1 * m2
    )


# ------------------------------------ move cycle attachments to v1


def consolidate_cycle_attachments(g: Graph, cycle_vertices: Sequence[int]) -> Graph:
    cyc = list(cycle_vertices)
    edges, _ = _attachments(g, cyc)
    v1 = cyc[0]
    remove, add = [], []
    for v in cyc[1:]:
        for _, w in _branch_edges(g, v, edges):
            remove.append((v, w))
            add.append((v1, w))
    return g.edit(remove=remove, add=add)


def consolidate_instance(g: Graph, cycle_vertices: Sequence[int]) -> TransformInstance:
    cyc = list(cycle_vertices)
    _, sizes = _attachments(g, cyc)
    after = consolidate_cycle_attachments(g, cyc)
    l = len(cyc)
    spread = sum(
        sizes[i] * sizes[j] * min(j - i, l - (j - i)) for i, j in itertools.combinations(range(l), 2)
    )
    attached = sum(1 for s in sizes if s > 0)
    return TransformInstance(
        Rewrite.CONSOLIDATE_CYCLE,
        {"cycle": tuple(cyc)},
        tuple(sizes),
        g,
        after,
        "<=",
        predicted_delta=-spread,
        equality_predicted=attached <= 1,
    )


# ------------------------------------------- shrink an end cycle


def shrink_end_cycle(g: Graph, cycle_vertices: Sequence[int]) -> Graph:
    """Replace an end cycle at ``v1`` by a shorter cycle plus pendant edges.

    ``r >= 5``: delete ``v_{r-1}v_r`` and ``v_2v_3``, add ``v_{r-1}v_1`` and
    ``v_3v_1`` (cycle shrinks by two, ``v_2`` and ``v_r`` become pendant).
    ``r = 4``: delete ``v_2v_3``, add ``v_1v_3`` (a triangle at ``v_1`` with
    ``v_2`` pendant on ``v_1``).
    """
    cyc = list(cycle_vertices)
    r = len(cyc)
    _cycle_edges(g, cyc)
    if r < 4:
        raise CycleTooSmall("a triangle cannot be shrunk")
    if any(g.degree(v) != 2 for v in cyc[1:]):
        raise NotEndBlock("only v1 may carry attachments")
    v = [None] + cyc  # 1-based
    if r == 4:
        return g.edit(remove=[(v[2], v[3])], add=[(v[1], v[3])])
    return g.edit(remove=[(v[r - 1], v[r]), (v[2], v[3])], add=[(v[r - 1], v[1]), (v[3], v[1])])


def shrink_end_cycle_predicted(r: int, m: int) -> Fraction:
    """Closed-form ``W_e(before) - W_e(after)`` printed with the rewrite."""
    if r == 4:
        return Fraction(1 + m)
    if r % 2 == 0:
        return Fraction(7, 4) * r * r + (m - Fraction(7, 2)) * r - 2 * m + 2
    return Fraction(1, 4) * r * r + (m - Fraction(1, 2)) * r - 2 * m + Fraction(3, 4)


def shrink_instance(g: Graph, cycle_vertices: Sequence[int]) -> TransformInstance:
    cyc = list(cycle_vertices)
    after = shrink_end_cycle(g, cyc)
    _, sizes = _attachments(g, cyc)
    r, m = len(cyc), sizes[0]
    rewrite = Rewrite.SQUARE_TO_TRIANGLE if r == 4 else Rewrite.SHRINK_END_CYCLE
    return TransformInstance(
        rewrite,
        {"cycle": tuple(cyc)},
        tuple(sizes),
        g,
        after,
        "<",
        predicted_delta=-shrink_end_cycle_predicted(r, m),
    )


# ------------------------------------------------------ clip a cycle


def clip_cycle(g: Graph, cycle_vertices: Sequence[int]) -> Graph:
    """``G - v_1v_l + v_{l-2}v_l``; the largest attachment must sit at ``v_1``."""
    cyc = list(cycle_vertices)
    l = len(cyc)
    if l < 4:
        _cycle_edges(g, cyc)
        raise CycleTooSmall("clipping needs a cycle of length >= 4")
    _, sizes = _attachments(g, cyc)
    if sizes[0] != max(sizes):
        raise MaxNotAtV1(f"attachment sizes {sizes}: the largest must be at v1")
    return g.edit(remove=[(cyc[0], cyc[-1])], add=[(cyc[-3], cyc[-1])])


def clip_predicted_l4(m: Sequence[int]) -> int:
    m1, m2, _, m4 = m
    return (m1 - m2) * m4 + 2 * m1 - m2 - 1


def clip_instance(g: Graph, cycle_vertices: Sequence[int]) -> TransformInstance:
    cyc = list(cycle_vertices)
    after = clip_cycle(g, cyc)
    _, sizes = _attachments(g, cyc)
    l = len(cyc)
    if l == 4:
        delta = clip_predicted_l4(sizes)
        return TransformInstance(
            Rewrite.CLIP_CYCLE,
            {"cycle": tuple(cyc)},
            tuple(sizes),
            g,
            after,
            ">=",
            in_hypothesis=sizes[0] >= 1,
            predicted_delta=delta,
            equality_predicted=all(s == 1 for s in sizes),
        )
    return TransformInstance(
        Rewrite.CLIP_CYCLE, {"cycle": tuple(cyc)}, tuple(sizes), g, after, ">", in_hypothesis=sizes[0] >= 1
    )


# ----------------------------------- move a branch to a far vertex


def relocate_branch_to_farthest(
    g1: Graph, u1: int, g2: Graph, u2: int, g3: Graph, u3: int
) -> tuple[Graph, Graph]:
    """Glue ``g1`` and ``g2`` at ``u = u1``; attach ``g3`` at ``u`` or at ``v``.

    ``v`` is the vertex of ``g1`` farthest from ``u1``. Returns ``(G, G')``
    with ``g3`` at ``u`` in ``G`` and at ``v`` in ``G'``.
    """
    for g, x, name in ((g1, u1, "g1"), (g2, u2, "g2"), (g3, u3, "g3")):
        _check_operand(g, x, name)
    g0, _ = _attach(g1, u1, g2, u2)
    v = farthest_vertex(g1, u1)
    before, _ = _attach(g0, u1, g3, u3)
    after, _ = _attach(g0, v, g3, u3)
    return before, after


def relocate_branch_instance(g1: Graph, u1: int, g2: Graph, u2: int, g3: Graph, u3: int) -> TransformInstance:
    before, after = relocate_branch_to_farthest(g1, u1, g2, u2, g3, u3)
    return TransformInstance(
        Rewrite.RELOCATE_BRANCH,
        {"u1": u1, "u2": u2, "u3": u3, "v": farthest_vertex(g1, u1)},
        (g1.m, g2.m, g3.m),
        before,
        after,
        ">=",
        in_hypothesis=g2.m >= g1.m,
    )


# -------------------------------------------- pull off a triangle


def detach_from_triangle(
    g1: Graph, x1: int, g2: Graph, x2: int, g3: Graph, x3: int
) -> tuple[Graph, Graph]:
    """Triangle ``v1v2v3`` (labels 0, 1, 2) with ``g2`` at ``v2`` and ``g3`` at ``v3``.

    ``G`` attaches ``g1`` at ``v1``; ``G'`` attaches it at ``u2``, the vertex
    of ``g2`` farthest from ``x2``.
    """
    for g, x, name in ((g1, x1, "g1"), (g2, x2, "g2"), (g3, x3, "g3")):
        _check_operand(g, x, name)
    g0, map2 = _attach(cycle(3), 1, g2, x2)
    g0, _ = _attach(g0, 2, g3, x3)
    u2 = map2[farthest_vertex(g2, x2)]
    before, _ = _attach(g0, 0, g1, x1)
    after, _ = _attach(g0, u2, g1, x1)
    return before, after


def detach_instance(g1: Graph, x1: int, g2: Graph, x2: int, g3: Graph, x3: int) -> TransformInstance:
    before, after = detach_from_triangle(g1, x1, g2, x2, g3, x3)
    return TransformInstance(
        Rewrite.DETACH_TRIANGLE,
        {"x1": x1, "x2": x2, "x3": x3},
        (g1.m, g2.m, g3.m),
        before,
        after,
        ">",
        in_hypothesis=g3.m >= g2.m,
    )


# ----------------------------------- move a pendant path outward


def longest_path_ends(g: Graph) -> tuple[int, int]:
    """Ends ``(u, v)`` of a longest path, oriented so ``D_v >= D_u``.

    Exhaustive over simple paths; ties go to the lexicographically first pair.
    """
    best: tuple[int, int, int] | None = None

    def grow(pathv: list[int], seen: set[int]) -> None:
        nonlocal best
        a, b = pathv[0], pathv[-1]
        cand = (len(pathv) - 1, -min(a, b), -max(a, b))
        if best is None or cand > best:
            best = cand
        for w in g.adjacency[b]:
            if w not in seen:
                seen.add(w)
                pathv.append(w)
                grow(pathv, seen)
                pathv.pop()
                seen.remove(w)

    for s in range(g.n):
        grow([s], {s})
    assert best is not None
    u, v = -best[1], -best[2]
    dm = all_pairs_distances(g)
    if vertex_edge_sum(g, v, dm) < vertex_edge_sum(g, u, dm):
        u, v = v, u
    return u, v


def _is_path_graph(g: Graph) -> bool:
    degs = sorted(g.degrees())
    return g.is_connected() and g.m == g.n - 1 and (g.n <= 2 or degs[-1] == 2)


def relocate_pendant_path(g1: Graph, g2: Graph, s: int, u1: int = 0) -> tuple[Graph, Graph]:
    """Pendant path ``p1..ps`` at ``v`` of ``g2``; ``g1`` at ``u`` or at ``p_s``.

    ``u, v`` are the ends of a longest path of ``g2`` with ``D_v >= D_u``.
    ``G`` has ``g1`` glued at ``u``; ``G'`` has it glued at the far end of
    the path, so the path becomes internal.
    """
    _check_operand(g1, u1, "g1")
    require_connected(g2)
    if _is_path_graph(g2):
        raise G2IsAPath("g2 must not be a path")
    if s < 2:
        raise PathTooShort("pendant path needs at least two vertices")
    u, v = longest_path_ends(g2)
    with_path, pmap = _attach(g2, v, path(s), 0)
    far = pmap[s - 1]
    before, _ = _attach(with_path, u, g1, u1)
    after, _ = _attach(with_path, far, g1, u1)
    return before, after


def relocate_pendant_path_predicted(g1: Graph, g2: Graph, s: int) -> int:
    u, v = longest_path_ends(g2)
    dm = all_pairs_distances(g2)
    spread = vertex_edge_sum(g2, v, dm) - vertex_edge_sum(g2, u, dm)
    return g1.m * (spread + (s - 1) * (g2.m - int(dm[u, v])))


def relocate_pendant_path_instance(g1: Graph, g2: Graph, s: int, u1: int = 0) -> TransformInstance:
    before, after = relocate_pendant_path(g1, g2, s, u1)
    u, v = longest_path_ends(g2)
    return TransformInstance(
        Rewrite.RELOCATE_PENDANT_PATH,
        {"u": u, "v": v, "s": s, "u1": u1},
        (g1.m, g2.m, s - 1),
        before,
        after,
        ">",
        predicted_delta=relocate_pendant_path_predicted(g1, g2, s),
    )


# --------------------------------------- slide the saw's triangle


def slide_saw_tail(g1: Graph, u: int, g2: Graph, v: int, s: int) -> tuple[Graph, Graph]:
    """Path ``p1..ps`` (labels ``0..s-1``) with one triangle, ``g1`` at ``p1``, ``g2`` at ``p_{s-1}``.

    ``G`` closes the triangle ``p_{s-2}p_{s-1}p_s`` next to ``g2``; ``G'``
    closes ``p_1p_2p_s`` next to ``g1``.
    """
    if s < 4:
        raise PathTooShort("the path needs s >= 4 vertices")
    for g, x, name in ((g1, u, "g1"), (g2, v, "g2")):
        _check_operand(g, x, name)
    p = [None] + list(range(s))
    spine = [(p[k], p[k + 1]) for k in range(1, s)]
    h = from_edge_list(s, spine + [(p[s - 2], p[s])])
    h2 = h.edit(remove=[(p[s - 2], p[s]), (p[s - 1], p[s])], add=[(p[1], p[s]), (p[2], p[s])])
    graphs = []
    for host in (h, h2):
        x, _ = _attach(host, p[1], g1, u)
        x, _ = _attach(x, p[s - 1], g2, v)
        graphs.append(x)
    return graphs[0], graphs[1]


def slide_saw_tail_instance(g1: Graph, u: int, g2: Graph, v: int, s: int) -> TransformInstance:
    before, after = slide_saw_tail(g1, u, g2, v, s)
    m1, m2 = g1.m, g2.m
    return TransformInstance(
        Rewrite.SLIDE_SAW_TAIL,
        {"u": u, "v": v, "s": s},
        (m1, m2),
        before,
        after,
        ">=",
        in_hypothesis=m2 >= m1 >= 1,
        predicted_delta=(m2 - m1) * (2 * s - 6),
        equality_predicted=m1 == m2,
    )
