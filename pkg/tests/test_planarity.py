from __future__ import annotations

import itertools

import pytest

from tdgraph.graph import Graph, build_td
from tdgraph.planarity import is_planar, kuratowski_kind
from tdgraph.ring import parse_ring_spec

K5 = list(itertools.combinations(range(5), 2))
K33 = [(a, b) for a in range(3) for b in range(3, 6)]

PLANAR = [("Z2", 2), ("Z2", 3), ("Z3", 2)]
NONPLANAR = [("Z2", 4), ("Z3", 3), ("Z4", 2), ("Z5", 2), ("GF(4)", 2), ("Z6", 2)]


def subdivide(edges, which, start):
    """Replace edge number ``which`` by a path through a new vertex."""
    u, v = edges[which]
    return edges[:which] + [(u, start), (start, v)] + edges[which + 1:]


def test_certifier_accepts_kuratowski_graphs():
    assert kuratowski_kind(K5) == "K5"
    assert kuratowski_kind(K33) == "K3,3"
    assert kuratowski_kind(subdivide(K5, 3, 10)) == "K5"
    assert kuratowski_kind(subdivide(subdivide(K33, 0, 10), 5, 11)) == "K3,3"


def test_certifier_rejects_near_misses():
    assert kuratowski_kind(K5[:-1]) is None                    # K5 minus an edge
    assert kuratowski_kind(K33[:-1]) is None
    assert kuratowski_kind(K5 + [(5, 6)]) is None              # stray edge
    assert kuratowski_kind(K5 + [(0, 0)]) is None              # loop
    # six degree-3 vertices that are not bipartite: the triangular prism plus a chord pattern
    prism = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    assert kuratowski_kind(prism) is None
    # K3,3 with a chord path between two branch vertices on the same side
    assert kuratowski_kind(K33 + [(0, 7), (7, 1)]) is None


@pytest.mark.parametrize("spec,n", PLANAR)
def test_planar_instances(spec, n):
    res = is_planar(build_td(parse_ring_spec(spec), n))
    assert res.value is True and res.witness == ()


@pytest.mark.parametrize("spec,n", NONPLANAR)
def test_nonplanar_instances_have_certified_witness(spec, n):
    g = build_td(parse_ring_spec(spec), n)
    res = is_planar(g)
    assert res.value is False
    assert kuratowski_kind(res.witness) == res.extra["kuratowski"]
    assert all(g.has_edge(u, v) for u, v in res.witness)


def test_z2_4_contains_named_k33():
    r = parse_ring_spec("Z2")
    g = build_td(r, 4)
    left = [g.vertex(s) for s in ("1000", "0100", "1100")]
    right = [g.vertex(s) for s in ("0010", "0001", "0011")]
    assert kuratowski_kind([(a, b) for a in left for b in right]) == "K3,3"
    assert all(g.has_edge(a, b) for a in left for b in right)


def test_loops_ignored():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], loops=[0, 1, 2])
    assert is_planar(g).value is True
