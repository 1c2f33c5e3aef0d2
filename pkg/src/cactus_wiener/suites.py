"""Seeded random instances for the rewrites, and the per-rewrite suite runner.

Attached parts are random cacti with at most four edges, grown by gluing
pendant edges and short cycles at uniformly chosen vertices.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .constructors import cycle
from .graph_core import Graph, cut_edges, cycle_blocks, from_edge_list
from .transforms import (
    Rewrite,
    TransformInstance,
    TransformOutcome,
    _attach,
    _attachments,
    _is_path_graph,
    clip_instance,
    consolidate_instance,
    contract_cut_edge_instance,
    detach_instance,
    evaluate,
    relocate_branch_instance,
    relocate_pendant_path_instance,
    shrink_instance,
    slide_saw_tail_instance,
)

MAX_PART_EDGES = 4
HOST_MAX_N = 9


def random_cactus(rng: random.Random, max_edges: int = MAX_PART_EDGES, min_edges: int = 0) -> Graph:
    """Random cactus with between ``min_edges`` and ``max_edges`` edges."""
    target = rng.randint(min_edges, max_edges)
    g = from_edge_list(1, [])
    while g.m < target:
        room = target - g.m
        at = rng.randrange(g.n)
        if room >= 3 and rng.random() < 0.4:
            c = rng.randint(3, min(room, 5))
            g, _ = _attach(g, at, cycle(c), 0)
        else:
            g = from_edge_list(g.n + 1, list(g.edges) + [(at, g.n)])
    return g


def random_host(rng: random.Random, max_n: int = HOST_MAX_N) -> Graph:
    g = from_edge_list(1, [])
    target = rng.randint(2, max_n)
    while g.n < target:
        room = target - g.n
        at = rng.randrange(g.n)
        if room >= 2 and rng.random() < 0.45:
            c = rng.randint(3, min(room + 1, 6))
            g, _ = _attach(g, at, cycle(c), 0)
        else:
            g = from_edge_list(g.n + 1, list(g.edges) + [(at, g.n)])
    return g


def _rotate(cyc: list[int], start: int, reverse: bool) -> list[int]:
    cyc = cyc[start:] + cyc[:start]
    if reverse:
        cyc = [cyc[0]] + cyc[:0:-1]
    return cyc


def _l3(rng: random.Random) -> TransformInstance | None:
    g = random_host(rng)
    choices = [e for e in cut_edges(g) if min(g.degree(x) for x in g.edges[e]) >= 2]
    if not choices:
        return None
    e = rng.choice(choices)
    v1, v2 = g.edges[e]
    if rng.random() < 0.5:
        v1, v2 = v2, v1
    return contract_cut_edge_instance(g, (v1, v2))


def _l4_5(rng: random.Random) -> TransformInstance | None:
    g = random_host(rng)
    cycles = cycle_blocks(g)
    if not cycles:
        return None
    cyc = rng.choice(cycles)
    cyc = _rotate(cyc, rng.randrange(len(cyc)), rng.random() < 0.5)
    return consolidate_instance(g, cyc)


def _end_cycle(rng: random.Random, lengths: tuple[int, ...]) -> TransformInstance:
    r = rng.choice(lengths)
    g0 = random_cactus(rng, MAX_PART_EDGES, min_edges=1)
    at = rng.randrange(g0.n)
    g, mapping = _attach(g0, at, cycle(r), 0)
    cyc = [mapping[i] for i in range(r)]
    return shrink_instance(g, _rotate(cyc, 0, rng.random() < 0.5))


def _l8(rng: random.Random) -> TransformInstance | None:
    l = rng.choice((4, 4, 5, 6, 7))
    g = cycle(l)
    cyc = list(range(l))
    for v in range(l):
        part = random_cactus(rng, 3 if l > 4 else MAX_PART_EDGES)
        g, _ = _attach(g, v, part, rng.randrange(part.n))
    _, sizes = _attachments(g, cyc)
    top = max(sizes)
    start = rng.choice([i for i, s in enumerate(sizes) if s == top])
    return clip_instance(g, _rotate(cyc, start, rng.random() < 0.5))


def _part(rng: random.Random) -> tuple[Graph, int]:
    g = random_cactus(rng, MAX_PART_EDGES, min_edges=1)
    return g, rng.randrange(g.n)


def _l9(rng: random.Random) -> TransformInstance:
    (g1, u1), (g2, u2), (g3, u3) = _part(rng), _part(rng), _part(rng)
    return relocate_branch_instance(g1, u1, g2, u2, g3, u3)


def _l10(rng: random.Random) -> TransformInstance:
    (g1, x1), (g2, x2), (g3, x3) = _part(rng), _part(rng), _part(rng)
    return detach_instance(g1, x1, g2, x2, g3, x3)


def _l11(rng: random.Random) -> TransformInstance | None:
    g2 = random_cactus(rng, MAX_PART_EDGES, min_edges=2)
    if _is_path_graph(g2):
        return None
    g1, u1 = _part(rng)
    return relocate_pendant_path_instance(g1, g2, rng.randint(2, 5), u1)


def _l12(rng: random.Random) -> TransformInstance:
    (g1, u), (g2, v) = _part(rng), _part(rng)
    return slide_saw_tail_instance(g1, u, g2, v, rng.randint(4, 7))


GENERATORS: dict[Rewrite, Callable[[random.Random], TransformInstance | None]] = {
    Rewrite.CONTRACT_CUT_EDGE: _l3,
    Rewrite.CONSOLIDATE_CYCLE: _l4_5,
    Rewrite.SHRINK_END_CYCLE: lambda rng: _end_cycle(rng, (5, 6, 7)),
    Rewrite.SQUARE_TO_TRIANGLE: lambda rng: _end_cycle(rng, (4,)),
    Rewrite.CLIP_CYCLE: _l8,
    Rewrite.RELOCATE_BRANCH: _l9,
    Rewrite.DETACH_TRIANGLE: _l10,
    Rewrite.RELOCATE_PENDANT_PATH: _l11,
    Rewrite.SLIDE_SAW_TAIL: _l12,
}


def instances(rewrite: Rewrite, seed: int = 0) -> Iterator[TransformInstance]:
    """Endless stream of structurally valid instances (in or out of hypothesis)."""
    rng = random.Random(f"{rewrite.value}:{seed}")
    gen = GENERATORS[rewrite]
    while True:
        inst = gen(rng)
        if inst is not None:
            yield inst


@dataclass
class SuiteResult:
    rewrite: Rewrite
    valid: int = 0
    holds: int = 0
    out_of_hypothesis: int = 0
    out_of_hypothesis_holds: int = 0
    delta_checked: int = 0
    delta_matches: int = 0
    equality_checked: int = 0
    equality_matches: int = 0
    by_case: Counter = field(default_factory=Counter)
    failures: list[TransformOutcome] = field(default_factory=list, repr=False)
    delta_mismatches: list[TransformOutcome] = field(default_factory=list, repr=False)
    equality_mismatches: list[TransformOutcome] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.valid > 0 and self.holds == self.valid


def case_of(inst: TransformInstance) -> str:
    if inst.rewrite in (Rewrite.CONSOLIDATE_CYCLE, Rewrite.SHRINK_END_CYCLE, Rewrite.CLIP_CYCLE):
        l = len(inst.site["cycle"])
        return f"{'even' if l % 2 == 0 else 'odd'}"
    return "all"


def run_suite(rewrite: Rewrite, seed: int = 0, count: int = 100, per_case: bool = True) -> SuiteResult:
    """Evaluate in-hypothesis instances until ``count`` are collected.

    With ``per_case`` the even and odd cycle cases of the parity-split
    rewrites each get ``count`` instances.
    """
    res = SuiteResult(rewrite)
    stream = instances(rewrite, seed)
    cases = ("even", "odd") if per_case and rewrite in (Rewrite.CONSOLIDATE_CYCLE, Rewrite.SHRINK_END_CYCLE) else None
    out_budget = count

    def done() -> bool:
        if cases:
            return all(res.by_case[c] >= count for c in cases)
        return res.valid >= count

    while not done():
        inst = next(stream)
        if not inst.in_hypothesis:
            if out_budget > 0:
                out_budget -= 1
                out = evaluate(inst)
                res.out_of_hypothesis += 1
                res.out_of_hypothesis_holds += out.holds
            continue
        case = case_of(inst)
        if cases and res.by_case[case] >= count:
            continue
        out = evaluate(inst)
        res.valid += 1
        res.by_case[case] += 1
        if out.holds:
            res.holds += 1
        else:
            res.failures.append(out)
        if out.delta_matches is not None:
            res.delta_checked += 1
            if out.delta_matches:
                res.delta_matches += 1
            else:
                res.delta_mismatches.append(out)
        if out.equality_matches is not None:
            res.equality_checked += 1
            if out.equality_matches:
                res.equality_matches += 1
            else:
                res.equality_mismatches.append(out)
    return res
