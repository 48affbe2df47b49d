from __future__ import annotations

import itertools
import json

import pytest

from tdgraph.errors import CapExceeded
from tdgraph.graph import Graph, build_td, build_td_closed, build_zero_divisor_graph, tensor_product
from tdgraph.invariants import degree_sequence
from tdgraph.isomorphism import check_isomorphism
from tdgraph.ring import parse_ring_spec
from tdgraph.vectors import dot, norm, vector_at

FIG1_EDGES = {frozenset(e.split("-")) for e in
              ["100-010", "100-001", "010-001", "100-011", "010-101", "001-110", "111-110", "111-101", "111-011"]}

TD_Z2_3_DOT = '''graph "TD(Z2,3)" {
  "001";
  "010";
  "011";
  "100";
  "101";
  "110";
  "111";
  "001" -- "010";
  "001" -- "100";
  "001" -- "110";
  "010" -- "100";
  "010" -- "101";
  "011" -- "100";
  "011" -- "111";
  "101" -- "111";
  "110" -- "111";
}
'''

TDBAR_Z2_2_JSON = ('{"spec": "Z2", "n": 2, "variant": "TDbar", "vertices": ["00", "01", "10", "11"], '
                   '"edges": [["00", "01"], ["00", "10"], ["00", "11"], ["01", "10"]], "loops": ["00", "11"]}\n')


def labelled_edges(g: Graph) -> set[frozenset[str]]:
    return {frozenset((g.label(u), g.label(v))) for u, v in g.edges()}


def test_td_z2_3_edge_set_and_degrees():
    g = build_td(parse_ring_spec("Z2"), 3)
    assert g.vertex_count == 7 and g.edge_count == 9
    assert labelled_edges(g) == FIG1_EDGES
    assert sorted(degree_sequence(g).per_vertex) == [2, 2, 2, 3, 3, 3, 3]
    assert not g.loops


def test_td_z2_2():
    g = build_td(parse_ring_spec("Z2"), 2)
    assert [g.label(v) for v in range(3)] == ["01", "10", "11"]
    assert labelled_edges(g) == {frozenset(("10", "01"))}
    assert g.degree(g.vertex("11")) == 0


@pytest.mark.parametrize("spec", ["Z2", "Z3", "GF(4)", "Z7"])
def test_td_field_n1_is_edgeless(spec):
    r = parse_ring_spec(spec)
    g = build_td(r, 1)
    assert g.vertex_count == r.cardinality - 1 and g.edge_count == 0


def test_tdbar_examples():
    g = build_td_closed(parse_ring_spec("Z2"), 3)
    assert g.vertex_count == 8
    assert {g.label(v) for v in g.loops} == {"000", "110", "101", "011"}
    assert len(build_td_closed(parse_ring_spec("Z3"), 3).loops) == 9
    g = build_td_closed(parse_ring_spec("Z3"), 1)
    assert {g.label(v) for v in g.loops} == {"0"}


@pytest.mark.parametrize("spec,n", [("Z4", 2), ("Z6", 2), ("GF(4)", 2), ("Z2xZ2", 2), ("Z3", 3)])
def test_adjacency_matches_dot_products(spec, n):
    r = parse_ring_spec(spec)
    bar = build_td_closed(r, n)
    td = build_td(r, n)
    vecs = [vector_at(r, n, i) for i in range(r.cardinality ** n)]
    for i, j in itertools.combinations(range(len(vecs)), 2):
        orth = dot(vecs[i], vecs[j]) == r.zero
        assert bar.has_edge(i, j) == orth
        if i:
            assert td.has_edge(i - 1, j - 1) == orth
    assert bar.loops == {i for i, v in enumerate(vecs) if norm(v) == r.zero}
    assert td.vertex_of_vector(vecs[5]) == 4 and td.vector_of(4) == vecs[5]


def test_td_is_tdbar_minus_zero_without_loops():
    r = parse_ring_spec("Z6")
    bar, td = build_td_closed(r, 2), build_td(r, 2)
    assert td.rows == bar.induced(range(1, bar.vertex_count)).without_loops().rows


def test_zero_divisor_graphs():
    g = build_zero_divisor_graph(parse_ring_spec("Z6"))
    assert [g.label(v) for v in range(g.vertex_count)] == ["2", "3", "4"]
    assert labelled_edges(g) == {frozenset(("2", "3")), frozenset(("3", "4"))}
    g = build_zero_divisor_graph(parse_ring_spec("Z4"))
    assert g.vertex_count == 1 and g.edge_count == 0
    g = build_zero_divisor_graph(parse_ring_spec("Z2xZ2"))
    assert {g.label(v) for v in range(2)} == {"(1,0)", "(0,1)"} and g.edge_count == 1
    g = build_zero_divisor_graph(parse_ring_spec("Z9"))
    assert labelled_edges(g) == {frozenset(("3", "6"))}


def test_tensor_of_two_edges():
    k2 = Graph.from_edges(2, [(0, 1)])
    t = tensor_product(k2, k2)
    assert t.vertex_count == 4
    assert set(t.edges()) == {(0, 3), (1, 2)}
    assert not t.loops


def test_tensor_loops_act_as_self_adjacency():
    g = Graph.from_edges(2, [], loops=[0])            # a looped vertex and an isolated one
    h = Graph.from_edges(2, [(0, 1)])
    t = tensor_product(g, h)
    assert set(t.edges()) == {(0, 1)}


@pytest.mark.parametrize("a,b", [("Z2", "Z3"), ("Z2", "Z2"), ("Z3", "Z4")])
def test_tensor_laws(a, b):
    g = build_td_closed(parse_ring_spec(a), 2)
    h = build_td_closed(parse_ring_spec(b), 2)
    gh, hg = tensor_product(g, h), tensor_product(h, g)
    assert gh.vertex_count == g.vertex_count * h.vertex_count
    assert len(gh.loops) == len(g.loops) * len(h.loops)
    nh, ng = h.vertex_count, g.vertex_count
    swap = [(x % nh) * ng + x // nh for x in range(gh.vertex_count)]
    assert check_isomorphism(gh, hg, swap)
    for (u, v), (up, vp) in itertools.combinations(itertools.product(range(ng), range(nh)), 2):
        expected = g.adjacent_or_loop(u, up) and h.adjacent_or_loop(v, vp)
        assert gh.has_edge(u * nh + v, up * nh + vp) == expected


def test_tensor_associative():
    z2 = build_td_closed(parse_ring_spec("Z2"), 2)
    z3 = build_td(parse_ring_spec("Z3"), 1)
    left = tensor_product(tensor_product(z2, z2), z3)
    right = tensor_product(z2, tensor_product(z2, z3))
    assert left.rows == right.rows and left.loops == right.loops


def test_caps():
    r = parse_ring_spec("Z2")
    with pytest.raises(CapExceeded):
        build_td(r, 5, cap=30)
    assert build_td(r, 5, cap=31).vertex_count == 31
    with pytest.raises(CapExceeded):
        build_td_closed(r, 5, cap=31)
    g = build_td_closed(r, 3)
    with pytest.raises(CapExceeded):
        tensor_product(g, g, cap=63)


def test_dot_export_is_byte_stable():
    r = parse_ring_spec("Z2")
    assert build_td(r, 3).to_dot() == TD_Z2_3_DOT
    assert build_td(r, 3).to_dot() == build_td(parse_ring_spec("Z2"), 3).to_dot()


def test_json_export_is_byte_stable():
    assert build_td_closed(parse_ring_spec("Z2"), 2).to_json() == TDBAR_Z2_2_JSON
    data = json.loads(build_td_closed(parse_ring_spec("Z2"), 3).to_json())
    assert set(data) == {"spec", "n", "variant", "vertices", "edges", "loops"}
    assert data["loops"] == ["000", "011", "101", "110"]


def test_product_ring_labels():
    g = build_td(parse_ring_spec("Z2xZ3"), 2)
    assert g.label(0) == "(0,0)|(0,1)"
    assert g.vertex("(1,2)|(0,1)") == g.vertex_of_vector(vector_at(parse_ring_spec("Z2xZ3"), 2, 5 * 6 + 1))


def test_dot_loops_as_self_edges():
    dot_text = build_td_closed(parse_ring_spec("Z2"), 2).to_dot()
    assert '"11" -- "11";' in dot_text and '"00" -- "00";' in dot_text
