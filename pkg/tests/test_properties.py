"""Randomised properties; every case is also checked against an independent route."""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from tdgraph.graph import Graph, build_td, build_td_closed, build_zero_divisor_graph
from tdgraph.invariants import clique_number, domination_number, independence_number, is_dominating
from tdgraph.isomorphism import check_isomorphism, is_isomorphic
from tdgraph.ring import parse_ring_spec
from tdgraph.vectors import RingVector, dot, norm

RINGS = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "GF(4)", "GF(8)", "GF(9)", "Z2xZ2", "Z2xZ3", "Z3xGF(4)"]


@st.composite
def ring_and_vectors(draw, count=3):
    r = parse_ring_spec(draw(st.sampled_from(RINGS)))
    n = draw(st.integers(1, 4))
    idx = st.integers(0, r.cardinality - 1)
    vecs = [RingVector(r, tuple(r.element_at(draw(idx)) for _ in range(n))) for _ in range(count)]
    scalar = r.element_at(draw(idx))
    return r, vecs, scalar


@given(ring_and_vectors())
def test_dot_is_symmetric_bilinear(data):
    r, (a, b, c), s = data
    assert dot(a, b) == dot(b, a)
    assert dot(a + b, c) == r.add(dot(a, c), dot(b, c))
    assert dot(a.scale(s), b) == r.mul(s, dot(a, b))
    assert norm(a) == dot(a, a)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    return Graph.from_edges(n, edges)


@settings(max_examples=60)
@given(graphs())
def test_solvers_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    assert clique_number(g).value == max(len(c) for c in nx.find_cliques(h))
    assert independence_number(g).value == max(len(c) for c in nx.find_cliques(nx.complement(h)))
    gamma = domination_number(g)
    assert is_dominating(g, gamma.witness)
    smaller = itertools.combinations(range(g.vertex_count), gamma.value - 1)
    assert not any(is_dominating(g, c) for c in smaller)


@settings(max_examples=40)
@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_isomorphic_to_any_relabelling(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges()])
    ok, mapping = is_isomorphic(g, h)
    assert ok and check_isomorphism(g, h, mapping)


@settings(max_examples=30)
@given(st.sampled_from(RINGS), st.integers(1, 3))
def test_td_embeds_in_tdbar(spec, n):
    r = parse_ring_spec(spec)
    if r.cardinality ** n > 1024:
        return
    td, bar = build_td(r, n), build_td_closed(r, n)
    for v in range(td.vertex_count):
        # dropping vertex 0 (the zero vector) shifts every id down by one
        assert td.rows[v] == bar.rows[v + 1] >> 1
        assert (v + 1 in bar.loops) == (norm(td.vector_of(v)) == r.zero)


@given(st.sampled_from(RINGS), st.integers(1, 3))
def test_zero_divisor_graph_embeds_in_each_slot(spec, n):
    r = parse_ring_spec(spec)
    if r.cardinality ** n > 1024:
        return
    z = build_zero_divisor_graph(r)
    td = build_td(r, n)
    zd = [a for a in r.elements() if r.is_zero_divisor(a)]
    for slot in range(n):
        image = []
        for a in zd:
            coords = [r.zero] * n
            coords[slot] = a
            image.append(td.vertex_of_vector(RingVector(r, tuple(coords))))
        assert len(set(image)) == len(image)
        for i, j in itertools.combinations(range(len(zd)), 2):
            assert z.has_edge(i, j) == td.has_edge(image[i], image[j])
