from __future__ import annotations

import pytest

from _oracle import brute_edge_wiener, isomorphic
from cactus_wiener.constructors import bundle, cycle, path, saw, star
from cactus_wiener.errors import (
    CycleTooSmall,
    DegenerateOperand,
    G2IsAPath,
    MaxNotAtV1,
    NotACycleBlock,
    NotCutEdge,
    NotEndBlock,
    PathTooShort,
    PendantEndpoint,
)
from cactus_wiener.graph_core import cactus_cycle_count, from_edge_list
from cactus_wiener.invariants import edge_wiener
from cactus_wiener.suites import instances, run_suite
from cactus_wiener.transforms import (
    Rewrite,
    clip_cycle,
    clip_instance,
    consolidate_cycle_attachments,
    consolidate_instance,
    contract_cut_edge,
    contract_cut_edge_instance,
    detach_from_triangle,
    evaluate,
    relocate_branch_to_farthest,
    relocate_pendant_path,
    relocate_pendant_path_instance,
    shrink_end_cycle,
    shrink_end_cycle_predicted,
    shrink_instance,
    slide_saw_tail,
    slide_saw_tail_instance,
)

K2 = path(2)


def with_pendants(g, at):
    """Hang one pendant edge on each vertex listed in ``at``."""
    edges = list(g.edges) + [(v, g.n + i) for i, v in enumerate(at)]
    return from_edge_list(g.n + len(at), edges)


def delta(before, after) -> int:
    return brute_edge_wiener(after) - brute_edge_wiener(before)


# ------------------------------------------------------ contract cut edge


def test_contract_bridge_between_triangles():
    g = saw(1, 1, 6)
    after = contract_cut_edge(g, (2, 3))
    assert (brute_edge_wiener(g), brute_edge_wiener(after)) == (38, 29)
    assert isomorphic(after, with_pendants(bundle(5, 2), [0]))
    assert contract_cut_edge_instance(g, (2, 3)).predicted_delta == -9


def test_contract_middle_of_p4():
    after = contract_cut_edge(path(4), (1, 2))
    assert isomorphic(after, star(4))
    assert (edge_wiener(path(4)), edge_wiener(after)) == (4, 3)


def test_contract_preconditions():
    with pytest.raises(PendantEndpoint):
        contract_cut_edge(path(4), (0, 1))
    with pytest.raises(NotCutEdge):
        contract_cut_edge(cycle(4), (0, 1))
    with pytest.raises(NotCutEdge):
        contract_cut_edge(path(4), (0, 2))


# ----------------------------------------------------------- consolidate


def test_consolidate_even_cycle():
    g = with_pendants(cycle(4), [0, 2])
    after = consolidate_cycle_attachments(g, [0, 1, 2, 3])
    assert after.degree(0) == 4 and after.degree(2) == 2
    assert delta(g, after) < 0
    out = evaluate(consolidate_instance(g, [0, 1, 2, 3]))
    assert out.holds and out.delta_matches and out.equality_matches


def test_consolidate_end_block_is_identity():
    g = with_pendants(cycle(3), [0])
    after = consolidate_cycle_attachments(g, [0, 1, 2])
    assert after == g
    out = evaluate(consolidate_instance(g, [0, 1, 2]))
    assert out.delta == 0 and out.equality_matches


def test_consolidate_odd_cycle():
    g = with_pendants(cycle(5), [1, 3])
    assert delta(g, consolidate_cycle_attachments(g, [0, 1, 2, 3, 4])) < 0


def test_consolidate_rejects_non_cycles():
    g = with_pendants(cycle(5), [1])
    with pytest.raises(NotACycleBlock):
        consolidate_cycle_attachments(g, [0, 2, 1, 3, 4])
    with pytest.raises(NotACycleBlock):
        consolidate_cycle_attachments(path(4), [0, 1, 2])
    with pytest.raises(NotACycleBlock):
        consolidate_cycle_attachments(cycle(4).edit(add=[(0, 2)]), [0, 1, 2, 3])


# ------------------------------------------------------------ shrink


def test_square_to_triangle_delta_is_one_plus_m():
    for m in range(1, 5):
        g = with_pendants(cycle(4), [0] * m)
        inst = shrink_instance(g, [0, 1, 2, 3])
        assert inst.rewrite is Rewrite.SQUARE_TO_TRIANGLE
        out = evaluate(inst)
        assert -out.delta == 1 + m and out.delta_matches
        assert cactus_cycle_count(inst.after) == 1


def test_square_alternative_reading_increases():
    # deleting v1v4 and adding v2v4 hangs the triangle off a pendant, which goes up
    g = with_pendants(cycle(4), [0])
    other = g.edit(remove=[(0, 3)], add=[(1, 3)])
    assert edge_wiener(other) > edge_wiener(g)


def test_shrink_longer_cycles():
    g = with_pendants(cycle(5), [0])
    assert delta(g, shrink_end_cycle(g, [0, 1, 2, 3, 4])) < 0
    g6 = from_edge_list(8, list(cycle(6).edges) + [(0, 6), (6, 7)])
    after = shrink_end_cycle(g6, [0, 1, 2, 3, 4, 5])
    assert delta(g6, after) < 0 and cactus_cycle_count(after) == 1


def test_shrink_printed_delta_disagrees_for_longer_cycles():
    g = with_pendants(cycle(5), [0])
    out = evaluate(shrink_instance(g, [0, 1, 2, 3, 4]))
    assert shrink_end_cycle_predicted(5, 1).denominator == 2
    assert out.holds and out.delta_matches is False


def test_shrink_preconditions():
    with pytest.raises(CycleTooSmall):
        shrink_end_cycle(with_pendants(cycle(3), [0]), [0, 1, 2])
    with pytest.raises(NotEndBlock):
        shrink_end_cycle(with_pendants(cycle(5), [0, 2]), [0, 1, 2, 3, 4])


# -------------------------------------------------------------- clip


def test_clip_square_all_single_edges_is_equality():
    g = with_pendants(cycle(4), [0, 1, 2, 3])
    out = evaluate(clip_instance(g, [0, 1, 2, 3]))
    assert out.delta == 0 and out.delta_matches and out.equality_matches


def test_clip_square_closed_form():
    g = with_pendants(cycle(4), [0, 0, 1, 2, 3])
    inst = clip_instance(g, [0, 1, 2, 3])
    assert inst.component_sizes == (2, 1, 1, 1)
    out = evaluate(inst)
    assert out.delta == (2 - 1) * 1 + 2 * 2 - 1 - 1 == 3 and out.delta_matches


def test_clip_square_equality_beyond_all_ones():
    # equality also occurs with m1 = m2 = 1 and bare v3, v4
    for at in ([0, 1], [0, 1, 2]):
        g = with_pendants(cycle(4), at)
        out = evaluate(clip_instance(g, [0, 1, 2, 3]))
        assert out.delta == 0 and out.holds
        assert out.equality_matches is False


def test_clip_pentagon_strict():
    g = with_pendants(cycle(5), [0])
    assert delta(g, clip_cycle(g, [0, 1, 2, 3, 4])) > 0


def test_clip_bare_cycles():
    assert edge_wiener(clip_cycle(cycle(5), range(5))) == edge_wiener(cycle(5)) == 15
    bare = clip_instance(cycle(4), [0, 1, 2, 3])
    assert not bare.in_hypothesis and evaluate(bare).delta == -1


def test_clip_preconditions():
    g = with_pendants(cycle(4), [1, 1])
    with pytest.raises(MaxNotAtV1):
        clip_cycle(g, [0, 1, 2, 3])
    with pytest.raises(CycleTooSmall):
        clip_cycle(cycle(3), [0, 1, 2])


# ------------------------------------------------- the glued pairs


def test_relocate_branch_examples():
    before, after = relocate_branch_to_farthest(K2, 0, K2, 0, K2, 0)
    assert edge_wiener(after) >= edge_wiener(before)
    before, after = relocate_branch_to_farthest(K2, 0, path(3), 0, K2, 0)
    assert edge_wiener(after) > edge_wiener(before)
    with pytest.raises(DegenerateOperand):
        relocate_branch_to_farthest(from_edge_list(1, []), 0, K2, 0, K2, 0)


def test_detach_examples():
    before, after = detach_from_triangle(K2, 0, K2, 0, K2, 0)
    assert edge_wiener(after) > edge_wiener(before)
    before, after = detach_from_triangle(K2, 0, K2, 0, path(3), 0)
    assert edge_wiener(after) > edge_wiener(before)
    assert before.n == after.n and before.m == after.m


def test_relocate_pendant_path_examples():
    before, after = relocate_pendant_path(K2, star(4), 3)
    assert delta(before, after) > 0
    tri_pendant = with_pendants(cycle(3), [0])
    inst = relocate_pendant_path_instance(K2, tri_pendant, 2)
    out = evaluate(inst)
    assert out.delta > 0 and out.delta_matches
    with pytest.raises(G2IsAPath):
        relocate_pendant_path(K2, path(4), 3)
    with pytest.raises(PathTooShort):
        relocate_pendant_path(K2, star(4), 1)


@pytest.mark.parametrize("m1, m2, s, expected", [(1, 1, 5, 0), (1, 3, 5, 8), (1, 2, 4, 2)])
def test_slide_saw_tail_deltas(m1, m2, s, expected):
    g1, g2 = path(m1 + 1), path(m2 + 1)
    before, after = slide_saw_tail(g1, 0, g2, 0, s)
    assert delta(before, after) == expected
    out = evaluate(slide_saw_tail_instance(g1, 0, g2, 0, s))
    assert out.delta_matches and out.holds


def test_slide_saw_tail_too_short():
    with pytest.raises(PathTooShort):
        slide_saw_tail(K2, 0, K2, 0, 3)


# --------------------------------------------------------------- suites


@pytest.mark.parametrize("rewrite", list(Rewrite))
def test_rewrites_preserve_counts(rewrite):
    stream = instances(rewrite, seed=3)
    for _ in range(40):
        inst = next(stream)
        a, b = inst.before, inst.after
        assert (a.n, a.m) == (b.n, b.m)
        assert a.is_connected() and b.is_connected()
        assert cactus_cycle_count(a) == cactus_cycle_count(b)


@pytest.mark.parametrize("rewrite", list(Rewrite))
def test_suites_hold_with_other_seed(rewrite):
    res = run_suite(rewrite, seed=7, count=60)
    assert res.passed, [(o.we_before, o.we_after) for o in res.failures[:3]]


def test_exact_deltas_on_suites():
    for rw in (Rewrite.CONTRACT_CUT_EDGE, Rewrite.CONSOLIDATE_CYCLE, Rewrite.RELOCATE_PENDANT_PATH):
        res = run_suite(rw, seed=1, count=60)
        assert res.delta_checked == res.delta_matches > 0


def test_out_of_hypothesis_slides_go_the_other_way():
    res = run_suite(Rewrite.SLIDE_SAW_TAIL, seed=0, count=50)
    assert res.out_of_hypothesis > 0 and res.out_of_hypothesis_holds == 0
