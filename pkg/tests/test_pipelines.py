from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ramseygood.colouring import BLUE, RED, EdgeColouring
from ramseygood.constructions import burr_colouring, burr_layout, power_lower_colouring, power_lower_layout
from ramseygood.graph import complete_graph, path_graph, path_power
from ramseygood.instances import shuffled
from ramseygood.pipelines import (
    AuxColouring,
    CliqueCover,
    LinkError,
    aux_path_to_power,
    build_auxiliary,
    clique_cover,
    decide_power_vs_H,
    path_vs_power_pipeline,
    power_vs_power_pipeline,
    stability_decompose,
    stability_partition,
)

from oracles import check_copy

EPS = Fraction(1, 10)
K3 = complete_graph(3)


def assert_valid(col, out):
    if out.tag in ("red", "blue"):
        colour = RED if out.tag == "red" else BLUE
        assert out.witness.colour == colour
        assert check_copy(out.pattern, out.witness.mapping, lambda u, v: col.colour(u, v) == colour)


def block_colouring(sizes, rng=None):
    """Red cliques of the given sizes, blue between them, vertices optionally shuffled."""
    owner = [i for i, s in enumerate(sizes) for _ in range(s)]
    col = EdgeColouring.from_function(len(owner), 2, lambda u, v: RED if owner[u] == owner[v] else BLUE)
    return shuffled(col, rng) if rng else col


# -- red-component partition -------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 6])
def test_partition_on_burr(n):
    col = burr_colouring(3, 1, n)
    out = stability_partition(col, 3, n)
    assert out.tag == "partition"
    assert sorted(map(sorted, out.partition.parts)) == [list(r) for r in burr_layout(3, 1, n).values()]


def test_partition_all_red_path():
    out = stability_partition(EdgeColouring.monochromatic(6, RED), 2, 6)
    assert out.tag == "red" and out.pattern == path_graph(6)


def test_partition_all_blue_triangle():
    col = EdgeColouring.monochromatic(5, BLUE)
    out = stability_partition(col, 3, 4)
    assert out.tag == "blue" and out.pattern == K3
    assert_valid(col, out)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(0, 2 ** 32 - 1))
def test_partition_recovers_planted_cliques(sizes, seed):
    rng = random.Random(seed)
    col = block_colouring(sizes, rng)
    n = max(sizes) + 1
    out = stability_partition(col, len(sizes) + 1, n)
    assert out.tag == "partition"
    expected = sorted(len(c) for c in col.red.components())
    assert sorted(len(p) for p in out.partition.parts) == expected == sorted(sizes)
    assert set().union(*out.partition.parts) == set(range(col.n))


# -- clique cover and auxiliary colouring -----------------------------------------------------

def test_clique_cover_examples():
    cover = clique_cover(EdgeColouring.monochromatic(9, RED), 3)
    assert len(cover.cliques) == 3 and not cover.leftover
    cover = clique_cover(EdgeColouring.monochromatic(9, BLUE), 2)
    assert cover.cliques == [] and cover.leftover == frozenset(range(9))


def test_clique_cover_on_power_lower():
    col = power_lower_colouring(2, 2)
    cover = clique_cover(col, 3)
    assert len(cover.cliques) >= 2
    layout = power_lower_layout(2, 2)
    a_blocks = [frozenset(layout["A1"]), frozenset(layout["A2"])]
    # each A-block contributes a clique that lies inside A_i plus its red partners
    assert all(any(q & a for q in cover.cliques) for a in a_blocks)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 12), st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
def test_clique_cover_properties(n, s, seed):
    rng = random.Random(seed)
    col = EdgeColouring.from_function(n, 2, lambda u, v: RED if rng.random() < 0.6 else BLUE)
    cover = clique_cover(col, s)
    seen = set()
    for q in cover.cliques:
        assert len(q) == s and col.red.is_clique(q)
        assert not seen & q
        seen |= q
    assert seen | cover.leftover == set(range(n)) and not seen & cover.leftover


def test_auxiliary_red_and_blue_joins():
    col = EdgeColouring.monochromatic(6, RED)
    cover = CliqueCover([frozenset(range(3)), frozenset(range(3, 6))], frozenset())
    assert build_auxiliary(col, cover, 1).base.colour(0, 1) == RED
    col = block_colouring([3, 3])
    assert build_auxiliary(col, cover, 1).base.colour(0, 1) == BLUE


def test_auxiliary_power_lower_a_blocks():
    col = power_lower_colouring(2, 2)
    layout = power_lower_layout(2, 2)
    cover = CliqueCover([frozenset(layout["A1"]), frozenset(layout["A2"])], frozenset())
    assert build_auxiliary(col, cover, 1).base.colour(0, 1) == BLUE


def test_aux_path_single_clique():
    col = EdgeColouring.monochromatic(5, RED)
    aux = AuxColouring(EdgeColouring.monochromatic(1, RED), [frozenset(range(5))])
    emb = aux_path_to_power(col, aux, [0], 2)
    assert check_copy(path_power(5, 2), emb.mapping, lambda u, v: col.colour(u, v) == RED)


def test_aux_path_two_cliques():
    col = EdgeColouring.monochromatic(8, RED)
    cover = CliqueCover([frozenset(range(4)), frozenset(range(4, 8))], frozenset())
    aux = build_auxiliary(col, cover, 1)
    emb = aux_path_to_power(col, aux, [0, 1], 1)
    assert check_copy(path_graph(8), emb.mapping, lambda u, v: col.colour(u, v) == RED)


def test_aux_path_three_cliques_square():
    # three red 5-cliques; consecutive ones joined by a red K_{2,2}, everything else blue
    links = {(3, 5), (3, 6), (4, 5), (4, 6), (8, 10), (8, 11), (9, 10), (9, 11)}
    col = EdgeColouring.from_function(
        15, 2, lambda u, v: RED if u // 5 == v // 5 or (min(u, v), max(u, v)) in links else BLUE
    )
    cover = CliqueCover([frozenset(range(i, i + 5)) for i in (0, 5, 10)], frozenset())
    aux = build_auxiliary(col, cover, 1)
    emb = aux_path_to_power(col, aux, [0, 1, 2], 2)
    assert len(emb.mapping) == 15
    assert check_copy(path_power(15, 2), emb.mapping, lambda u, v: col.colour(u, v) == RED)


def test_aux_path_missing_link():
    col = block_colouring([4, 4])
    cover = CliqueCover([frozenset(range(4)), frozenset(range(4, 8))], frozenset())
    aux = build_auxiliary(col, cover, 1)
    with pytest.raises(LinkError):
        aux_path_to_power(col, aux, [0, 1], 1)


# -- decomposition and decision ----------------------------------------------------------------

def test_decompose_burr():
    col = burr_colouring(3, 1, 6)
    out = stability_decompose(col, K3, 1, 3, EPS)
    assert out.tag == "partition"
    planted = [set(r) for r in burr_layout(3, 1, 6).values()]
    parts = out.partition.parts
    assert len(parts) == 2
    # each part sits inside its own planted clique
    assert sorted(next(i for i, b in enumerate(planted) if p <= b) for p in parts) == [0, 1]
    assert set().union(*parts) | out.partition.leftover == set(range(col.n))


def test_decompose_all_red():
    col = EdgeColouring.monochromatic(12, RED)
    out = stability_decompose(col, K3, 1, 3, EPS)
    assert out.tag == "red"
    assert_valid(col, out)


def test_decompose_power_lower():
    col = power_lower_colouring(2, 2)
    out = stability_decompose(col, K3, 1, 3, EPS)
    assert_valid(col, out)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_decide_burr_plus_blue_vertex(n):
    col = burr_colouring(3, 1, n).extend(1, BLUE)
    out = decide_power_vs_H(col, K3, n, 1, EPS)
    assert out.tag == "blue"
    assert_valid(col, out)


def test_decide_all_red():
    col = EdgeColouring.monochromatic(9, RED)
    out = decide_power_vs_H(col, K3, 5, 1, EPS)
    assert out.tag == "red"
    assert_valid(col, out)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_decide_on_burr_gives_no_witness(n):
    col = burr_colouring(3, 1, n)
    out = decide_power_vs_H(col, K3, n, 1, EPS, require_size=False)
    assert out.tag in ("partition", "undecided")


def test_decide_refuses_small_colouring():
    with pytest.raises(ValueError):
        decide_power_vs_H(burr_colouring(3, 1, 5), K3, 5, 1, EPS)


# -- path versus power, power versus power ---------------------------------------------------------

@pytest.mark.parametrize("n,k", [(6, 2), (8, 1), (9, 2)])
def test_path_vs_power_all_blue(n, k):
    col = EdgeColouring.monochromatic((k + 2) * n, BLUE)
    out = path_vs_power_pipeline(col, n, k, EPS)
    assert out.tag == "blue"
    assert_valid(col, out)


def test_path_vs_power_all_red():
    col = EdgeColouring.monochromatic(24, RED)
    out = path_vs_power_pipeline(col, 6, 2, EPS)
    assert out.tag == "red"
    assert_valid(col, out)


@pytest.mark.parametrize("n,k", [(6, 2), (8, 1), (5, 3)])
def test_path_vs_power_planted_cliques(n, k):
    col = burr_colouring(k + 2, 1, n)
    out = path_vs_power_pipeline(col, n, k, EPS, require_size=False)
    assert out.tag == "blue"
    assert_valid(col, out)


def test_power_vs_power_monochromatic():
    for colour, tag in ((RED, "red"), (BLUE, "blue")):
        col = EdgeColouring.monochromatic(7 * 4, colour)
        out = power_vs_power_pipeline(col, 4, 2, 8)
        assert out.tag == tag
        assert_valid(col, out)


def test_power_vs_power_padded_lower_colouring():
    k, t = 2, 2
    base = power_lower_colouring(k, t)
    target = int((2 * k + 2 + Fraction(2, k + 1)) * (k + 1) * t) + 1
    col = base.extend(target - base.n, BLUE)
    out = power_vs_power_pipeline(col, (k + 1) * t, k, 8)
    assert out.tag in ("red", "blue")
    assert_valid(col, out)


def test_outcome_json():
    out = stability_partition(burr_colouring(3, 1, 4), 3, 4)
    data = out.to_dict()
    assert data["tag"] == "partition" and data["partition"]["parts"] == [[0, 1, 2], [3, 4, 5]]
