from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from ramseygood.canon import all_graphs
from ramseygood.colouring import BLUE, RED, EdgeColouring
from ramseygood.constructions import burr_colouring
from ramseygood.graph import Graph, complete_graph, complete_multipartite, cycle_graph, path_graph, path_power
from ramseygood.invariants import chromatic_number, sigma
from ramseygood.search import (
    GuardExceeded,
    ResultLedger,
    arrows,
    blow_up,
    burr_bound,
    compute_W,
    compute_Z,
    goodness_report,
    hom_exists,
    hom_ramsey,
    hom_ramsey_result,
    ramsey_number,
    z_stabilization,
)

from oracles import arrows_brute, has_copy, hom_brute, to_nx

K1, K2, K3 = complete_graph(1), complete_graph(2), complete_graph(3)
C3, C5 = cycle_graph(3), cycle_graph(5)


def pair(g, h):
    return [(g, RED), (h, BLUE)]


def check_lower_witness(result, g, h):
    """The witness colouring of K_{R-1} must avoid both targets (networkx check)."""
    w = result.lower_witness
    assert w.n == result.value - 1
    assert not has_copy(to_nx(w.red), to_nx(g))
    assert not has_copy(to_nx(w.blue), to_nx(h))


# -- arrows -----------------------------------------------------------------------

def test_arrows_r33():
    assert arrows(6, pair(K3, K3))[0]
    assert not arrows(5, pair(K3, K3))[0]


def test_arrows_c3_c5():
    ok, cert = arrows(9, pair(C3, C5))
    assert ok and cert.level_sizes[-1] == 0
    assert not arrows(8, pair(C3, C5))[0]


def test_arrows_single_vertex():
    assert arrows(1, pair(K1, K1))[0]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_arrows_r33_against_brute_force(n):
    assert arrows(n, pair(K3, K3))[0] == arrows_brute(n, K3, K3)


small = [g for m in (2, 3, 4) for g in all_graphs(m) if g.num_edges()]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(small), st.sampled_from(small), st.integers(2, 5))
def test_arrows_against_brute_force(g, h, n):
    assert arrows(n, pair(g, h))[0] == arrows_brute(n, g, h)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(small), st.sampled_from(small))
def test_arrows_monotone(g, h):
    res = ramsey_number(pair(g, h))
    assert not arrows(res.value - 1, pair(g, h))[0]
    assert arrows(res.value, pair(g, h))[0]
    assert arrows(res.value + 1, pair(g, h))[0]
    check_lower_witness(res, g, h)


def test_guard():
    with pytest.raises(GuardExceeded) as info:
        ramsey_number(pair(K3, K3), guard=5)
    assert info.value.lower == 6


def test_parallel_matches_sequential():
    a = arrows(8, pair(C3, C5), workers=1)
    b = arrows(8, pair(C3, C5), workers=2)
    assert a[0] == b[0]
    assert a[1].level_sizes == b[1].level_sizes


# -- Ramsey numbers -------------------------------------------------------------------

def test_ramsey_p5_p5():
    res = ramsey_number(pair(path_graph(5), path_graph(5)))
    assert res.value == 6
    check_lower_witness(res, path_graph(5), path_graph(5))


def test_ramsey_p4_k3():
    res = ramsey_number(pair(path_graph(4), K3))
    assert res.value == 7
    check_lower_witness(res, path_graph(4), K3)


def test_ramsey_c5_c5():
    res = ramsey_number(pair(C5, C5))
    assert res.value == 9
    check_lower_witness(res, C5, C5)


def test_ramsey_p6_p6_matches_path_formula():
    # n - 1 + sigma(P_n) with sigma(P_6) = 3
    res = ramsey_number(pair(path_graph(6), path_graph(6)))
    assert res.value == 6 - 1 + sigma(path_graph(6)) == 8
    check_lower_witness(res, path_graph(6), path_graph(6))


def test_ramsey_hints_are_checked():
    res = ramsey_number(pair(K3, K3), lower_hint=4, upper_hint=6)
    assert res.value == 6
    with pytest.raises(ValueError, match="upper hint"):
        ramsey_number(pair(K3, K3), upper_hint=5)


@settings(max_examples=12, deadline=None)
@given(
    st.sampled_from([g for m in (2, 3, 4) for g in all_graphs(m) if g.is_connected()]),
    st.sampled_from([g for m in (2, 3) for g in all_graphs(m)]),
)
def test_ramsey_above_burr_colouring(g, h):
    if g.n <= sigma(h):
        return
    res = ramsey_number(pair(g, h))
    assert res.value > burr_colouring(max(chromatic_number(h), 1), sigma(h), g.n).n


def test_result_json():
    res = ramsey_number(pair(K3, K3))
    data = json.loads(json.dumps(res.to_dict()))
    assert data["value"] == 6
    w = EdgeColouring.from_json(json.dumps(data["lower_witness"]))
    assert w.n == 5


# -- goodness ----------------------------------------------------------------------------

def test_goodness_p4_k3():
    rep = goodness_report(path_graph(4), K3)
    assert (rep.ramsey, rep.burr_bound, rep.good) == (7, 7, True)


def test_goodness_k3_k3():
    rep = goodness_report(K3, K3)
    assert (rep.ramsey, rep.burr_bound, rep.good) == (6, 5, False)


def test_goodness_square_path_vs_triangle():
    # chi and sigma are taken from the second argument: 2*(6-1)+1
    assert burr_bound(path_power(6, 2), K3) == 11
    rep = goodness_report(path_power(6, 2), K3)
    assert rep.ramsey == 11 and rep.good


def test_goodness_rejects_small_or_disconnected():
    with pytest.raises(ValueError):
        goodness_report(Graph.empty(3), K3)
    with pytest.raises(ValueError):
        goodness_report(K1, path_graph(3))


# -- homomorphisms ---------------------------------------------------------------------

def test_hom_examples():
    assert hom_exists(C5, C3)
    assert not hom_exists(C3, C5)
    assert hom_exists(complete_multipartite([2, 3]), K2)
    assert hom_exists(path_power(7, 1), K2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([g for m in (1, 2, 3, 4) for g in all_graphs(m)]),
       st.sampled_from([g for m in (1, 2, 3, 4) for g in all_graphs(m)]))
def test_hom_matches_brute_force(h, t):
    assert hom_exists(h, t) == hom_brute(h, t)


def test_hom_ramsey_values():
    assert hom_ramsey([C3, C5]) == 5
    assert hom_ramsey([K3, K3]) == 6
    assert hom_ramsey([C3]) == 3


def test_hom_ramsey_witness_avoids_homomorphic_images():
    res = hom_ramsey_result([C3, C5])
    w = res.lower_witness
    assert w.n == 4
    # no red subgraph admits a hom from C_3 and no blue one from C_5
    assert not hom_brute(C3, w.red)
    assert not hom_brute(C5, w.blue)


def test_compute_w():
    assert compute_W([C3, C5]) == 4
    assert compute_W([K2]) == 1


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([g for m in (2, 3) for g in all_graphs(m) if g.num_edges()]),
       st.sampled_from([g for m in (2, 3, 4) for g in all_graphs(m) if g.num_edges()]))
def test_hom_ramsey_at_most_ramsey(g, h):
    assert hom_ramsey([g, h]) <= ramsey_number(pair(g, h)).value


# -- blow-ups and Z ------------------------------------------------------------------------

def test_blow_up_examples():
    c4 = blow_up(K2, [0, 1], 2)
    assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))
    g = path_power(5, 2)
    assert blow_up(g, [], 3) == g
    k222 = blow_up(K3, [0, 1, 2], 2)
    assert k222.num_edges() == 12
    assert nx.is_isomorphic(to_nx(k222), to_nx(complete_multipartite([2, 2, 2])))


def test_compute_z_odd_cycles():
    assert compute_Z([C3, C5], 4, 5) == 1


def test_compute_z_single_edge():
    assert compute_Z([K2], 1) == 1


def test_compute_z_cliques():
    # twins created by blowing up are non-adjacent, so for clique targets Z = 1
    # exactly when K_{W+1} already arrows the targets
    assert compute_Z([K3, K3], 5) == 1
    assert arrows_brute(6, K3, K3)


def test_z_stabilization_reports_each_m():
    out = z_stabilization([C3, C5], 4, [3, 4, 5, 6])
    assert out == {3: 1, 4: 1, 5: 1, 6: 1}


def test_compute_z_guard():
    with pytest.raises(GuardExceeded):
        compute_Z([K2], 0, guard=2)


# -- ledger -----------------------------------------------------------------------------------

def test_ledger_round_trip(tmp_path):
    ledger = ResultLedger(tmp_path / "ledger.json")
    res = ramsey_number(pair(K3, K3))
    ledger.put("ramsey", pair(K3, K3), res)
    entry = ledger.get("ramsey", pair(K3, K3))
    assert entry["value"] == 6
    # keys are canonical, so a relabelled target hits the same entry
    tri = Graph.from_edges(3, [(2, 0), (0, 1), (1, 2)])
    assert ledger.get("ramsey", pair(tri, tri))["value"] == 6
    assert ledger.get("ramsey", pair(K3, C5)) is None


def test_ledger_env(tmp_path, monkeypatch):
    monkeypatch.setenv("RAMSEYGOOD_LEDGER", str(tmp_path / "env.json"))
    ledger = ResultLedger()
    ledger.put("ramsey", pair(K2, K2), ramsey_number(pair(K2, K2)))
    assert (tmp_path / "env.json").exists()
