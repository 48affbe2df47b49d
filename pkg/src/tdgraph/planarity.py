"""Planarity with a certified Kuratowski witness.

The left-right test itself comes from networkx.  The witness it returns is
not trusted: :func:`kuratowski_kind` re-derives, from the edge list alone,
whether it is a subdivision of K5 or K3,3.
"""

from __future__ import annotations

import time
from typing import Iterable

import networkx as nx

from .errors import CapExceeded
from .graph import Graph
from .invariants import SOLVER_CAP, InvariantValue


def _simple_nx(g: Graph) -> nx.Graph:
    # loops play no role in planarity
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


def kuratowski_kind(edges: Iterable[tuple[int, int]]) -> str | None:
    """Return "K5" or "K3,3" if ``edges`` form a subdivision of that graph, else None."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        if u == v or v in adj.get(u, ()):
            return None
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) != 2)
    degrees = {len(adj[v]) for v in branch}
    if not ((len(branch) == 5 and degrees == {4}) or (len(branch) == 6 and degrees == {3})):
        return None
    branch_set = set(branch)
    # contract each chain of degree-2 vertices into a single edge
    contracted: set[frozenset[int]] = set()
    used_inner = 0
    for b in branch:
        for first in adj[b]:
            prev, cur = b, first
            while cur not in branch_set:
                used_inner += 1
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
            if cur == b:
                return None
            key = frozenset((b, cur))
            if key in contracted and b < cur:
                return None
            contracted.add(key)
    # every inner vertex is walked once from each end
    if used_inner != 2 * (len(adj) - len(branch)):
        return None
    if len(branch) == 5:
        return "K5" if len(contracted) == 10 else None
    if len(contracted) != 9:
        return None
    side = {branch[0]: 0}
    stack = [branch[0]]
    cadj = {b: [w for e in contracted if b in e for w in e if w != b] for b in branch}
    while stack:
        v = stack.pop()
        for w in cadj[v]:
            if w not in side:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return None
    if len(side) != 6 or sum(side.values()) != 3:
        return None
    return "K3,3"


def is_planar(g: Graph, cap: int = SOLVER_CAP) -> InvariantValue:
    """Planarity; on failure the witness is the edge list of a certified Kuratowski subgraph."""
    if g.vertex_count > cap:
        raise CapExceeded("planarity", g.vertex_count, cap)
    start = time.perf_counter()
    v, e = g.vertex_count, g.edge_count
    euler_reject = v >= 3 and e > 3 * v - 6
    planar, certificate = nx.check_planarity(_simple_nx(g), counterexample=True)
    if planar:
        if euler_reject:
            raise AssertionError("planarity test contradicts the Euler edge bound")
        return InvariantValue("planar", True, (), (time.perf_counter() - start) * 1000)
    witness = tuple(sorted(tuple(sorted(edge)) for edge in certificate.edges()))
    kind = kuratowski_kind(witness)
    if kind is None or not all(g.has_edge(a, b) for a, b in witness):
        raise AssertionError("Kuratowski witness failed certification")
    extra = {"kuratowski": kind, "euler_reject": euler_reject}
    return InvariantValue("planar", False, witness, (time.perf_counter() - start) * 1000, extra)
