from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest

from tdgraph.errors import CapExceeded, PreconditionError
from tdgraph.graph import Graph, build_td, build_td_closed, build_zero_divisor_graph, tensor_product
from tdgraph.invariants import (clique_loop_number, clique_number, connected_components, degree_sequence, diameter,
                                domination_number, girth, independence_number, is_clique, is_dominating,
                                is_independent, predicted_degree)
from tdgraph.ring import parse_ring_spec
from tdgraph.vectors import norm, vector

SMALL = [("Z2", 2), ("Z2", 3), ("Z3", 2), ("Z4", 2), ("Z2xZ2", 2), ("Z6", 2), ("GF(4)", 2), ("Z5", 2), ("Z2", 4)]


def td(spec, n):
    return build_td(parse_ring_spec(spec), n)


def tdbar(spec, n):
    return build_td_closed(parse_ring_spec(spec), n)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


def brute_domination(g: Graph) -> int:
    for k in range(g.vertex_count + 1):
        if any(is_dominating(g, c) for c in itertools.combinations(range(g.vertex_count), k)):
            return k
    raise AssertionError


# -- degrees -----------------------------------------------------------------------

def test_degree_examples():
    assert sorted(degree_sequence(td("Z2", 3)).per_vertex) == [2, 2, 2, 3, 3, 3, 3]
    r = parse_ring_spec("Z5")
    g = build_td(r, 2)
    for v in range(g.vertex_count):
        iso = norm(g.vector_of(v)) == r.zero
        assert g.degree(v) == (3 if iso else 4)
    assert degree_sequence(g).multiset == {3: 8, 4: 16}
    d = degree_sequence(td("Z7", 2))
    assert d.minimum == d.maximum == 6


def test_predicted_degree_examples():
    z2 = parse_ring_spec("Z2")
    assert predicted_degree(z2, 3, vector(z2, 1, 1, 1)) == 3
    p = parse_ring_spec("Z2xZ3")
    assert predicted_degree(p, 2, vector(p, p.element(1, 1), p.element(0, 0))) == 5
    assert predicted_degree(p, 2, vector(p, p.element(1, 0), p.element(1, 0))) == 16
    g = build_td(p, 2)
    assert g.degree(g.vertex_of_vector(vector(p, p.element(1, 0), p.element(1, 0)))) == 16


def test_predicted_degree_without_formula():
    z4 = parse_ring_spec("Z4")
    assert predicted_degree(z4, 2, vector(z4, 2, 2)) is None


def test_predicted_degree_preconditions():
    z2 = parse_ring_spec("Z2")
    with pytest.raises(PreconditionError):
        predicted_degree(z2, 3, vector(z2, 0, 0, 0))
    with pytest.raises(PreconditionError):
        predicted_degree(z2, 2, vector(z2, 1, 0, 0))


@pytest.mark.parametrize("spec,n", [("Z4", 2), ("Z4", 3), ("Z6", 2), ("Z6", 3), ("Z2xZ3", 2), ("Z2xZ3", 3),
                                    ("Z2xZ2", 2), ("Z2xZ2", 3), ("Z3xZ4", 2), ("Z2xZ2xZ3", 2)])
def test_predicted_degree_matches_brute_force(spec, n):
    g = td(spec, n)
    r = g.ring
    applied = 0
    for v in range(g.vertex_count):
        p = predicted_degree(r, n, g.vector_of(v))
        if p is not None:
            applied += 1
            assert p == g.degree(v), g.label(v)
    assert applied > 0


# -- components ---------------------------------------------------------------------

def test_component_examples():
    comps = connected_components(td("Z3", 2))
    assert [c.describe() for c in comps] == ["K_{2,2}", "K_{2,2}"]
    comps = connected_components(td("Z5", 2))
    assert sorted(c.describe() for c in comps) == ["K_4", "K_4", "K_{4,4}", "K_{4,4}"]
    g = td("Z2", 2)
    comps = connected_components(g)
    assert [sorted(g.label(v) for v in c.vertices) for c in comps] == [["01", "10"], ["11"]]
    assert {c.kind for c in comps} == {"complete-bipartite", "complete"}


@pytest.mark.parametrize("spec,n", SMALL)
def test_components_match_networkx(spec, n):
    g = td(spec, n)
    ours = {frozenset(c.vertices) for c in connected_components(g)}
    assert ours == {frozenset(c) for c in nx.connected_components(to_nx(g))}


def test_component_classification_other():
    comps = connected_components(td("Z2", 3))
    assert len(comps) == 1 and comps[0].kind == "other"


# -- domination ---------------------------------------------------------------------

def test_domination_examples():
    assert domination_number(td("Z2", 3)).value == 2
    assert domination_number(td("Z3", 2)).value == 4
    assert domination_number(td("Z5", 2)).value == 6


@pytest.mark.parametrize("spec,n", [("Z2", 2), ("Z2", 3), ("Z3", 2), ("Z4", 2), ("Z2xZ2", 2), ("GF(4)", 2)])
def test_domination_matches_brute_force(spec, n):
    g = td(spec, n)
    res = domination_number(g)
    assert res.value == brute_domination(g)
    assert is_dominating(g, res.witness) and len(res.witness) == res.value


# TD(Z2,2) has the isolated vertex 11
@pytest.mark.parametrize("spec,n", [c for c in SMALL if c != ("Z2", 2)])
def test_domination_without_isolated_vertices_at_most_half(spec, n):
    g = td(spec, n)
    assert degree_sequence(g).minimum >= 1
    assert domination_number(g).value <= g.vertex_count // 2


def test_regular_lower_bound():
    g = td("Z7", 2)
    d = degree_sequence(g)
    assert d.minimum == d.maximum
    gamma = domination_number(g).value
    assert gamma >= math.ceil(g.vertex_count / (d.maximum + 1))
    assert gamma == 8


# -- cliques and independence ---------------------------------------------------------

def test_clique_examples():
    assert independence_number(td("Z3", 2)).value == 4
    assert independence_number(td("Z5", 2)).value == 10
    assert clique_number(td("Z5", 2)).value == 4
    assert clique_number(td("Z7", 2)).value == 2


def test_clique_loop_examples():
    assert clique_loop_number(tdbar("Z5", 2)).value == 5
    assert clique_loop_number(tdbar("Z5", 3)).value == 5
    assert clique_loop_number(tdbar("Z3", 2)).value == 1
    assert clique_loop_number(tdbar("GF(4)", 2)).value == 4


@pytest.mark.parametrize("spec,n", SMALL + [("Z3", 3), ("Z7", 2)])
def test_clique_and_independence_match_networkx(spec, n):
    g = td(spec, n)
    h = to_nx(g)
    omega = max(len(c) for c in nx.find_cliques(h))
    alpha = max(len(c) for c in nx.find_cliques(nx.complement(h)))
    w = clique_number(g)
    a = independence_number(g)
    assert (w.value, a.value) == (omega, alpha)
    assert is_clique(g, w.witness) and is_independent(g, a.witness)


def test_clique_within_subset():
    g = td("Z5", 2)
    iso = [v for v in range(g.vertex_count) if norm(g.vector_of(v)) == g.ring.zero]
    res = clique_number(g, vertices=iso)
    assert set(res.witness) <= set(iso) and res.value == 4


def test_clique_loop_witness_is_looped():
    g = tdbar("Z2", 4)
    res = clique_loop_number(g)
    assert all(v in g.loops for v in res.witness) and is_clique(g, res.witness)
    assert res.value == 4


# -- distances ------------------------------------------------------------------------

def test_distance_examples():
    assert diameter(td("Z3", 2)).value == math.inf
    assert girth(td("Z2", 3)).value == 3
    assert girth(td("Z2", 2)).value == math.inf


@pytest.mark.parametrize("spec,n", [("Z2", 3), ("Z2", 4), ("Z3", 3), ("Z4", 3), ("Z6", 2), ("Z2xZ2", 2)])
def test_distances_match_networkx(spec, n):
    g = td(spec, n)
    h = to_nx(g)
    d = diameter(g)
    if nx.is_connected(h):
        assert d.value == nx.diameter(h)
        u, v = d.witness
        assert nx.shortest_path_length(h, u, v) == d.value
    else:
        assert d.value == math.inf
    gi = girth(g)
    assert gi.value == nx.girth(h)
    cyc = gi.witness
    if cyc:
        assert len(set(cyc)) == len(cyc) == gi.value
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


# -- certificates, determinism, caps ------------------------------------------------------

@pytest.mark.parametrize("spec,n", SMALL)
def test_witnesses_certify_values(spec, n):
    g = td(spec, n)
    for fn, check in [(domination_number, is_dominating), (clique_number, is_clique),
                      (independence_number, is_independent)]:
        res = fn(g)
        assert len(res.witness) == res.value and check(g, res.witness)


def test_solvers_are_deterministic():
    g = tensor_product(td("Z2", 3), td("Z2", 2))
    for fn in (domination_number, clique_number, independence_number):
        a, b = fn(g), fn(g)
        assert (a.value, a.witness) == (b.value, b.witness)


def test_solver_caps():
    g = td("Z2", 4)
    for fn in (domination_number, clique_number, independence_number, diameter, girth):
        with pytest.raises(CapExceeded):
            fn(g, cap=10)
    with pytest.raises(CapExceeded):
        clique_loop_number(tdbar("Z2", 4), cap=3)


def test_json_form_uses_labels():
    g = td("Z2", 3)
    d = domination_number(g).to_json_dict(g)
    assert d["value"] == 2 and all(isinstance(w, str) for w in d["witness"])
    assert girth(td("Z2", 2)).to_json_dict()["value"] == "infinite"


def test_zero_divisor_graph_invariants():
    g = build_zero_divisor_graph(parse_ring_spec("Z8"))
    assert g.vertex_count == 3
    assert domination_number(g).value == 1     # 4 is adjacent to 2 and 6
