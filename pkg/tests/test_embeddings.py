from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ramseygood.colouring import BLUE, RED, EdgeColouring
from ramseygood.embeddings import (
    BlowupInstance,
    PreconditionError,
    auxiliary_reduced_graph,
    blowup_embed,
    blowup_power_placement,
    default_reduction,
    greedy_power_embed,
    iroot,
    swap_embed,
    swap_embed_traced,
)
from ramseygood.graph import Graph, complete_graph, complete_multipartite, cycle_graph, path_graph, path_power
from ramseygood.instances import planted_blowup, planted_greedy, planted_swap

from oracles import check_copy

RELAXED = dict(p=Fraction(1, 2), floor=0, reduction=0)


def minus(n, removed):
    gone = {(min(u, v), max(u, v)) for u, v in removed}
    return Graph.from_edges(n, [e for e in complete_graph(n).edges() if e not in gone])


def two_parts(colour_across, q=5):
    col = EdgeColouring.from_function(2 * q, 2, lambda u, v: RED if (u < q) == (v < q) else colour_across(u, v))
    return col, [range(q), range(q, 2 * q)]


@given(st.integers(0, 10 ** 30), st.integers(1, 6))
def test_iroot(x, k):
    y = iroot(x, k)
    assert y ** k <= x < (y + 1) ** k


# -- reduced graph --------------------------------------------------------------------------

def test_reduced_graph_r1_no_red_cross():
    col, parts = two_parts(lambda u, v: BLUE)
    aux, _ = auxiliary_reduced_graph(BlowupInstance.make(col, parts, r=1, d=1), reduction=0)
    assert aux.has_edge(0, 1)


def test_reduced_graph_r2_red_bipartite():
    col, parts = two_parts(lambda u, v: RED)
    aux, _ = auxiliary_reduced_graph(BlowupInstance.make(col, parts, r=2, d=1), reduction=0)
    assert not aux.has_edge(0, 1)


def test_reduced_sizes_vanish_at_small_s():
    col, parts = two_parts(lambda u, v: BLUE, q=10)
    inst = BlowupInstance.make(col, parts, r=2, d=2, s=10)
    assert default_reduction(2, 10, 2) == 269
    _, sizes = auxiliary_reduced_graph(inst)
    assert sizes == (0, 0)


def test_blowup_instance_validation():
    col, parts = two_parts(lambda u, v: BLUE)
    with pytest.raises(ValueError):
        BlowupInstance.make(col, [range(5), range(3, 8)], r=1, d=1)
    with pytest.raises(ValueError):
        BlowupInstance(col, tuple(frozenset(p) for p in parts), 1, 3, 4)


# -- allowed-set embedding ----------------------------------------------------------------------

def test_blowup_all_blue_c4():
    col = EdgeColouring.monochromatic(10, BLUE)
    inst = BlowupInstance.make(col, [range(5), range(5, 10)], r=1, d=2)
    emb = blowup_embed(inst, cycle_graph(4), [0, 1, 0, 1], **RELAXED)
    assert check_copy(cycle_graph(4), emb.mapping, lambda u, v: col.colour(u, v) == BLUE)


def test_blowup_empty_pattern():
    col = EdgeColouring.monochromatic(4, BLUE)
    inst = BlowupInstance.make(col, [range(4)], r=1, d=0)
    assert blowup_embed(inst, Graph.empty(0), [], **RELAXED).mapping == ()


def test_blowup_planted_k222():
    q = 12
    col = EdgeColouring.from_function(3 * q, 2, lambda u, v: RED if u // q == v // q else BLUE)
    inst = BlowupInstance.make(col, [range(i * q, (i + 1) * q) for i in range(3)], r=2, d=4)
    H = complete_multipartite([2, 2, 2])
    emb = blowup_embed(inst, H, [0, 0, 1, 1, 2, 2], **RELAXED)
    assert check_copy(H, emb.mapping, lambda u, v: col.colour(u, v) == BLUE)
    assert all(emb.mapping[x] // q == x // 2 for x in range(6))


def test_blowup_rejects_bad_placement():
    col, parts = two_parts(lambda u, v: RED)
    inst = BlowupInstance.make(col, parts, r=1, d=2)
    with pytest.raises(PreconditionError):
        blowup_embed(inst, path_graph(2), [0, 1], **RELAXED)
    with pytest.raises(PreconditionError):
        blowup_embed(inst, complete_graph(4), [0, 1, 0, 1], **RELAXED)


def test_blowup_power_placement_is_proper():
    n, k, q = 12, 2, 2
    place = blowup_power_placement(n, k, q)
    P = path_power(n, k)
    assert all(place[a] != place[b] for a, b in P.edges())
    # each part receives at most q pattern vertices
    assert max(place.count(i) for i in set(place)) <= q


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_blowup_r1_always_succeeds(seed):
    case = planted_blowup(random.Random(seed), 1)
    col = case.instance.colouring
    emb = blowup_embed(case.instance, case.H, case.placement, **RELAXED)
    assert check_copy(case.H, emb.mapping, lambda u, v: col.colour(u, v) == BLUE)


# -- swap embedding ------------------------------------------------------------------------------

def test_swap_complete_host_needs_no_swaps():
    F = complete_graph(20)
    J = cycle_graph(20)
    emb, trace = swap_embed_traced(F, J, 2, Fraction(1, 9))
    assert trace.swaps == [] and trace.bad_counts == [0]
    assert check_copy(J, emb.mapping, F.has_edge)


def test_swap_k12_minus_matching_violates_preconditions():
    F = minus(12, [(2 * i, 2 * i + 1) for i in range(6)])
    with pytest.raises(PreconditionError):
        swap_embed(F, cycle_graph(12), 2, Fraction(1, 13))


def test_swap_k18_minus_matching():
    F = minus(18, [(2 * i, 2 * i + 1) for i in range(9)])
    emb, trace = swap_embed_traced(F, cycle_graph(18), 2, Fraction(1, 9))
    assert check_copy(cycle_graph(18), emb.mapping, F.has_edge)
    assert trace.bad_counts[-1] == 0
    assert all(a > b for a, b in zip(trace.bad_counts, trace.bad_counts[1:]))


def test_swap_isolated_vertex():
    F = minus(18, [(2 * i, 2 * i + 1) for i in range(9)])
    J = path_graph(17).disjoint_union(Graph.empty(1))
    emb = swap_embed(F, J, 2, Fraction(1, 9))
    assert check_copy(J, emb.mapping, F.has_edge)


def test_swap_rejects_order_mismatch():
    with pytest.raises(PreconditionError):
        swap_embed(complete_graph(5), cycle_graph(4), 2, Fraction(1, 9))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_swap_trace_strictly_decreasing(seed):
    case = planted_swap(random.Random(seed))
    emb, trace = swap_embed_traced(case.F, case.J, case.Delta, case.eps)
    assert check_copy(case.J, emb.mapping, case.F.has_edge)
    assert trace.bad_counts[-1] == 0
    assert all(a > b for a, b in zip(trace.bad_counts, trace.bad_counts[1:]))


# -- greedy power embedding ----------------------------------------------------------------------

def test_greedy_complete_host_identity():
    n = 10
    emb = greedy_power_embed(complete_graph(n + 1), n, 2, Fraction(1, 5), check=False)
    assert emb.mapping == tuple(range(n))


def test_greedy_complete_minus_star():
    N, n, k, eps = 90, 49, 1, Fraction(1, 4)
    H = minus(N, [(0, v) for v in range(1, 40)])
    emb = greedy_power_embed(H, n, k, eps)
    assert check_copy(path_power(n, k), emb.mapping, H.has_edge)
    assert 0 not in emb.mapping


def test_greedy_k42_minus_c5_out_of_range():
    # n = 30 is below 3/eps^2, so the checked entry point refuses it
    H = minus(42, [(i, (i + 1) % 5) for i in range(5)] + [(10, 20), (30, 40)])
    with pytest.raises(PreconditionError):
        greedy_power_embed(H, 30, 2, Fraction(1, 5))
    emb = greedy_power_embed(H, 30, 2, Fraction(1, 5), check=False)
    assert check_copy(path_power(30, 2), emb.mapping, H.has_edge)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_greedy_injective_and_inside_good_set(seed):
    case = planted_greedy(random.Random(seed))
    emb = greedy_power_embed(case.H, case.n, case.k, case.eps)
    assert len(set(emb.mapping)) == case.n
    comp = case.H.complement()
    assert all(comp.degree(v) < case.eps * case.n for v in emb.mapping)
    assert check_copy(path_power(case.n, case.k), emb.mapping, case.H.has_edge)
