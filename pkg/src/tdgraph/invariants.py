"""Exact graph invariants with certifying witnesses."""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from types import ModuleType
from typing import Sequence

from . import kernels
from .errors import CapExceeded, PreconditionError
from .graph import Graph, iter_bits
from .ring import RingSpec
from .vectors import RingVector, norm

SOLVER_CAP = 4096
COMPLEMENT_CAP = 1024
LOOP_CLIQUE_CAP = 1024


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: object
    witness: tuple = ()
    runtime_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json_dict(self, g: Graph | None = None) -> dict:
        def show(w):
            if g is not None and isinstance(w, int):
                return g.label(w)
            if isinstance(w, tuple):
                return [show(x) for x in w]
            return w

        value = self.value
        if isinstance(value, float) and math.isinf(value):
            value = "infinite"
        out = {"name": self.name, "value": value, "witness": [show(w) for w in self.witness]}
        out.update(self.extra)
        out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def _check(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(what, size, cap)


# -- certificates -----------------------------------------------------------------

def is_dominating(g: Graph, vertices: Sequence[int]) -> bool:
    covered = 0
    for v in vertices:
        covered |= g.closed_rows[v]
    return covered == g.full_mask


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_independent(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


# -- degrees ----------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeSummary:
    per_vertex: tuple[int, ...]
    multiset: dict[int, int]
    minimum: int
    maximum: int


def degree_sequence(g: Graph) -> DegreeSummary:
    """Degrees count distinct neighbours; loops contribute nothing."""
    degs = tuple(g.degree(v) for v in range(g.vertex_count))
    counts = Counter(degs)
    return DegreeSummary(degs, dict(sorted(counts.items())),
                         min(degs, default=0), max(degs, default=0))


def predicted_degree(r: RingSpec, n: int, a: RingVector) -> int | None:
    """Closed-form degree of a in TD(R, n), or ``None`` when no formula applies.

    Tried in order: a unit coordinate, a product of fields, and the recursive
    two-factor split of a product ring.
    """
    if a.ring != r or a.n != n:
        raise PreconditionError("vector does not live in R^n")
    if a.is_zero():
        raise PreconditionError("the zero vector is not a vertex")
    isotropic = norm(a) == r.zero
    q = r.cardinality
    if any(r.is_unit(c) for c in a.coords):
        return q ** (n - 1) - (2 if isotropic else 1)
    if r.all_field_leaves:
        denom = 1
        for i, leaf in enumerate(r.leaves):
            if any(c.components[i] != leaf.zero() for c in a.coords):
                denom *= leaf.cardinality
        return q ** n // denom - (2 if isotropic else 1)
    if r.is_product:
        left, right = r.split(1)
        a_l = RingVector(left, tuple(left.element(c.components[0]) for c in a.coords))
        a_r = RingVector(right, tuple(right.element(*c.components[1:]) for c in a.coords))
        return _product_degree(left, right, n, a_l, a_r)
    return None


def _product_degree(R: RingSpec, S: RingSpec, n: int, a: RingVector, b: RingVector) -> int | None:
    if a.is_zero():
        db = predicted_degree(S, n, b)
        if db is None:
            return None
        return R.cardinality ** n * (1 + db) - 1 if norm(b) != S.zero else R.cardinality ** n * (2 + db) - 2
    if b.is_zero():
        da = predicted_degree(R, n, a)
        if da is None:
            return None
        return S.cardinality ** n * (1 + da) - 1 if norm(a) != R.zero else S.cardinality ** n * (2 + da) - 2
    da = predicted_degree(R, n, a)
    db = predicted_degree(S, n, b)
    if da is None or db is None:
        return None
    za = norm(a) == R.zero
    zb = norm(b) == S.zero
    if not za and not zb:
        return (1 + da) * (1 + db) - 1
    if za and not zb:
        return (2 + da) * (1 + db) - 1
    if not za and zb:
        return (1 + da) * (2 + db) - 1
    return (2 + da) * (2 + db) - 2


# -- components -------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentSummary:
    vertices: tuple[int, ...]
    kind: str                     # "complete" | "complete-bipartite" | "other"
    params: tuple[int, ...]       # (m,) for K_m, (a, b) with a <= b for K_{a,b}

    def describe(self) -> str:
        if self.kind == "complete":
            return f"K_{self.params[0]}"
        if self.kind == "complete-bipartite":
            return f"K_{{{self.params[0]},{self.params[1]}}}"
        return f"other({len(self.vertices)})"


def _classify(g: Graph, comp: list[int]) -> tuple[str, tuple[int, ...]]:
    mask = 0
    for v in comp:
        mask |= 1 << v
    side = {comp[0]: 0}
    stack = [comp[0]]
    bipartite = True
    while stack and bipartite:
        v = stack.pop()
        for w in iter_bits(g.rows[v] & mask):
            if w not in side:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                bipartite = False
                break
    if bipartite and len(comp) >= 2:
        a_mask = sum(1 << v for v in comp if side[v] == 0)
        b_mask = mask & ~a_mask
        if all((g.rows[v] & mask) == (b_mask if side[v] == 0 else a_mask) for v in comp):
            a, b = sorted((a_mask.bit_count(), b_mask.bit_count()))
            return "complete-bipartite", (a, b)
    if all((g.rows[v] & mask) == (mask & ~(1 << v)) for v in comp):
        return "complete", (len(comp),)
    return "other", ()


def connected_components(g: Graph) -> list[ComponentSummary]:
    """Components in order of their smallest vertex, each classified exactly."""
    seen = 0
    out = []
    for start in range(g.vertex_count):
        if (seen >> start) & 1:
            continue
        comp_mask = 1 << start
        frontier = comp_mask
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp_mask
            comp_mask |= frontier
        seen |= comp_mask
        comp = list(iter_bits(comp_mask))
        kind, params = _classify(g, comp)
        out.append(ComponentSummary(tuple(comp), kind, params))
    return out


# -- domination ----------------------------------------------------------------------

def greedy_dominating_set(g: Graph) -> list[int]:
    """Repeatedly take the vertex covering most uncovered vertices (lowest id on ties)."""
    closed = g.closed_rows
    uncovered = g.full_mask
    chosen = []
    while uncovered:
        best_v, best_gain = -1, -1
        for v in range(g.vertex_count):
            gain = (closed[v] & uncovered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        uncovered &= ~closed[best_v]
    return chosen


def domination_number(g: Graph, cap: int = SOLVER_CAP, impl: ModuleType | None = None) -> InvariantValue:
    """Exact domination number by branch and bound over closed neighbourhoods.

    Loops play no role: every vertex dominates its closed neighbourhood.
    """
    _check("domination solver", g.vertex_count, cap)
    t0 = time.perf_counter()
    initial = greedy_dominating_set(g)
    best, nodes = kernels.dominating_search(list(g.closed_rows), initial, impl)
    witness = tuple(sorted(best))
    assert is_dominating(g, witness), "dominating-set witness failed certification"
    ms = (time.perf_counter() - t0) * 1000
    return InvariantValue("domination", len(witness), witness, ms, {"nodes": nodes})


# -- cliques ----------------------------------------------------------------------

def _clique_in(g: Graph, vertices: Sequence[int], impl: ModuleType | None) -> tuple[list[int], int]:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    order = sorted(vertices, key=lambda v: (-(g.rows[v] & mask).bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for w in iter_bits(g.rows[v] & mask):
            row |= 1 << pos[w]
        adj.append(row)
    greedy: list[int] = []
    for i in range(len(order)):
        if all((adj[i] >> j) & 1 for j in greedy):
            greedy.append(i)
    best, nodes = kernels.clique_search(adj, greedy, impl)
    return sorted(order[i] for i in best), nodes


def clique_number(g: Graph, cap: int = SOLVER_CAP, impl: ModuleType | None = None,
                  vertices: Sequence[int] | None = None) -> InvariantValue:
    """Maximum clique (pairwise adjacent distinct vertices), optionally within a vertex subset."""
    vs = list(range(g.vertex_count)) if vertices is None else sorted(vertices)
    _check("clique solver", len(vs), cap)
    t0 = time.perf_counter()
    best, nodes = _clique_in(g, vs, impl)
    assert is_clique(g, best), "clique witness failed certification"
    ms = (time.perf_counter() - t0) * 1000
    return InvariantValue("clique", len(best), tuple(best), ms, {"nodes": nodes})


def independence_number(g: Graph, cap: int = COMPLEMENT_CAP, impl: ModuleType | None = None) -> InvariantValue:
    _check("independence solver", g.vertex_count, cap)
    t0 = time.perf_counter()
    best, nodes = _clique_in(g.complement(), list(range(g.vertex_count)), impl)
    assert is_independent(g, best), "independent-set witness failed certification"
    ms = (time.perf_counter() - t0) * 1000
    return InvariantValue("independence", len(best), tuple(best), ms, {"nodes": nodes})


def clique_loop_number(g: Graph, cap: int = LOOP_CLIQUE_CAP, impl: ModuleType | None = None) -> InvariantValue:
    """Largest set of looped vertices that are pairwise adjacent."""
    loops = sorted(g.loops)
    _check("clique-loop solver", len(loops), cap)
    t0 = time.perf_counter()
    best, nodes = _clique_in(g, loops, impl) if loops else ([], 0)
    assert is_clique(g, best) and all(v in g.loops for v in best)
    ms = (time.perf_counter() - t0) * 1000
    return InvariantValue("clique-loop", len(best), tuple(best), ms, {"nodes": nodes})


# -- distances ----------------------------------------------------------------------

def _bfs_layers(g: Graph, root: int) -> dict[int, int]:
    dist = {root: 0}
    seen = 1 << root
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


def diameter(g: Graph, cap: int = SOLVER_CAP) -> InvariantValue:
    """Largest distance; infinite when the graph is disconnected."""
    _check("diameter", g.vertex_count, cap)
    t0 = time.perf_counter()
    best, pair = 0, ()
    for u in range(g.vertex_count):
        dist = _bfs_layers(g, u)
        if len(dist) < g.vertex_count:
            missing = next(v for v in range(g.vertex_count) if v not in dist)
            best, pair = math.inf, (u, missing)
            break
        far = max(dist, key=lambda v: (dist[v], -v))
        if dist[far] > best:
            best, pair = dist[far], (u, far)
    return InvariantValue("diameter", best, pair, (time.perf_counter() - t0) * 1000)


def girth(g: Graph, cap: int = SOLVER_CAP) -> InvariantValue:
    """Length of a shortest cycle of the simple graph (loops ignored); infinite if acyclic."""
    _check("girth", g.vertex_count, cap)
    t0 = time.perf_counter()
    best, cycle = math.inf, ()
    for root in range(g.vertex_count):
        parent = {root: -1}
        dist = {root: 0}
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            if 2 * dist[x] + 1 >= best:
                break
            for y in iter_bits(g.rows[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    length = dist[x] + dist[y] + 1
                    if length < best:
                        px, py = _path(parent, x), _path(parent, y)
                        if set(px) & set(py) == {root}:
                            best = length
                            cycle = tuple(px + py[1:][::-1])
    return InvariantValue("girth", best, cycle, (time.perf_counter() - t0) * 1000)


def _path(parent: dict[int, int], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out[::-1]
