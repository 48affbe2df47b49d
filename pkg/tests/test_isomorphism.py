from __future__ import annotations

import itertools
import random

import pytest

from tdgraph.errors import CapExceeded
from tdgraph.graph import Graph, build_td, build_td_closed, tensor_product
from tdgraph.isomorphism import check_isomorphism, is_isomorphic
from tdgraph.ring import parse_ring_spec


def td(spec, n):
    return build_td(parse_ring_spec(spec), n)


def tdbar(spec, n):
    return build_td_closed(parse_ring_spec(spec), n)


def random_graph(rng: random.Random, n: int, p: float, loops: bool = False) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    loop_set = [v for v in range(n) if loops and rng.random() < 0.3]
    return Graph.from_edges(n, edges, loop_set)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of g under v -> perm[v]."""
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph.from_edges(g.vertex_count, edges, [perm[v] for v in g.loops])


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count or len(g.loops) != len(h.loops):
        return False
    return any(check_isomorphism(g, h, list(p)) for p in itertools.permutations(range(g.vertex_count)))


def test_tensor_decomposition_example():
    ok, mapping = is_isomorphic(tdbar("Z6", 2), tensor_product(tdbar("Z2", 2), tdbar("Z3", 2)))
    assert ok and mapping is not None
    assert check_isomorphism(tdbar("Z6", 2), tensor_product(tdbar("Z2", 2), tdbar("Z3", 2)), mapping)


def test_equal_size_non_isomorphic():
    g, h = td("Z2", 4), td("GF(4)", 2)
    assert g.vertex_count == h.vertex_count == 15
    assert is_isomorphic(g, h) == (False, None)


def test_identity_witness():
    g = td("Z2", 2)
    assert is_isomorphic(g, g) == (True, [0, 1, 2])


def test_check_isomorphism_rejects_non_bijection_and_bad_maps():
    g = td("Z2", 3)
    assert not check_isomorphism(g, g, [0] * 7)
    assert not check_isomorphism(g, g, [1, 0, 2, 3, 4, 5, 6])
    assert check_isomorphism(g, g, list(range(7)))


def test_loops_matter():
    a = Graph.from_edges(2, [(0, 1)], loops=[0])
    b = Graph.from_edges(2, [(0, 1)])
    assert not is_isomorphic(a, b)[0]


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_brute_force_on_small_graphs(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    g = random_graph(rng, n, rng.random(), loops=seed % 2 == 0)
    if seed % 3 == 0:
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
    else:
        h = random_graph(rng, n, rng.random(), loops=seed % 2 == 0)
    ok, mapping = is_isomorphic(g, h)
    assert ok == brute_isomorphic(g, h)
    if ok:
        assert check_isomorphism(g, h, mapping)


def test_regular_non_isomorphic_pair():
    # C6 versus two triangles: refinement alone cannot separate them
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_k3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(c6, two_k3)[0]
    assert brute_isomorphic(c6, two_k3) is False


@pytest.mark.parametrize("seed", range(8))
def test_reflexive_and_symmetric(seed):
    rng = random.Random(100 + seed)
    g = random_graph(rng, rng.randint(8, 20), 0.4, loops=True)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert is_isomorphic(g, g)[0]
    ok_gh, m1 = is_isomorphic(g, h)
    ok_hg, m2 = is_isomorphic(h, g)
    assert ok_gh and ok_hg
    assert check_isomorphism(g, h, m1) and check_isomorphism(h, g, m2)


def test_crt_rings_give_isomorphic_graphs():
    ok, mapping = is_isomorphic(td("Z6", 2), td("Z2xZ3", 2))
    assert ok and check_isomorphism(td("Z6", 2), td("Z2xZ3", 2), mapping)


def test_cap():
    with pytest.raises(CapExceeded):
        is_isomorphic(td("Z2", 4), td("Z2", 4), cap=10)
