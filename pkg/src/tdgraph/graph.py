"""Finite graphs with optional loops, and the dot product graph constructions.

Adjacency is stored as one Python-int bitset per vertex (bit ``j`` of
``rows[i]`` set iff i ~ j).  The diagonal is never stored in ``rows``; loops
live in their own set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapExceeded
from .ring import RingSpec
from .vectors import RingVector, coordinate_table, vector_at, vector_label

#: Default cap on the number of vertices of a constructed graph.
GRAPH_CAP = 1 << 14

VARIANTS = ("TD", "TDbar", "Gamma", "tensor", "other")


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    rows: tuple[int, ...]
    loops: frozenset[int] = frozenset()
    labels: tuple[str, ...] | None = None
    variant: str = "other"
    ring: RingSpec | None = None
    n: int | None = None
    name: str = ""
    _offset: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], loops: Iterable[int] = (),
                   labels: Sequence[str] | None = None, **meta) -> "Graph":
        rows = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError("self-adjacency must be given as a loop")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows), frozenset(loops), tuple(labels) if labels is not None else None, **meta)

    # -- queries -----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def adjacent_or_loop(self, u: int, v: int) -> bool:
        """Adjacency where x ~ x means a loop at x."""
        return u in self.loops if u == v else self.has_edge(u, v)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.rows):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    @cached_property
    def closed_rows(self) -> tuple[int, ...]:
        return tuple(row | (1 << v) for v, row in enumerate(self.rows))

    def adjacency_matrix(self) -> np.ndarray:
        words = kernels.ints_to_words(list(self.rows), self.vertex_count)
        bits = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, :self.vertex_count].astype(bool)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {self.label(v): v for v in range(self.vertex_count)}

    def vertex(self, label: str) -> int:
        return self._label_index[label]

    def vertex_of_vector(self, a: RingVector) -> int:
        """Vertex id of a vector in a TD / TDbar graph (index minus one for TD)."""
        if self.ring is None or a.ring != self.ring or a.n != self.n:
            raise ValueError("graph is not built over this vector's space")
        v = a.index() - self._offset
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"{a} is not a vertex of {self.name}")
        return v

    def vector_of(self, v: int) -> RingVector:
        if self.ring is None or self.n is None:
            raise ValueError("graph has no vector labels")
        return vector_at(self.ring, self.n, v + self._offset)

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self.rows[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        labels = tuple(self.label(v) for v in vertices) if self.labels is not None else None
        loops = frozenset(pos[v] for v in vertices if v in self.loops)
        return Graph(tuple(rows), loops, labels, "other", name=f"{self.name}[induced]")

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = tuple((~row & full) & ~(1 << v) for v, row in enumerate(self.rows))
        return Graph(rows, frozenset(), self.labels, "other", name=f"complement({self.name})")

    def without_loops(self) -> "Graph":
        return Graph(self.rows, frozenset(), self.labels, self.variant, self.ring, self.n, self.name, self._offset)

    # -- export ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "spec": self.ring.render() if self.ring is not None else self.name,
            "n": self.n,
            "variant": self.variant,
            "vertices": [self.label(v) for v in range(self.vertex_count)],
            "edges": [[self.label(u), self.label(v)] for u, v in self.edges()],
            "loops": [self.label(v) for v in sorted(self.loops)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=True) + "\n"

    def to_dot(self) -> str:
        lines = [f"graph {json.dumps(self.name or 'G')} {{"]
        for v in range(self.vertex_count):
            lines.append(f"  {json.dumps(self.label(v))};")
        for u, v in self.edges():
            lines.append(f"  {json.dumps(self.label(u))} -- {json.dumps(self.label(v))};")
        for v in sorted(self.loops):
            q = json.dumps(self.label(v))
            lines.append(f"  {q} -- {q};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        lines = [f"# {self.name}: {self.vertex_count} vertices, {self.edge_count} edges, {len(self.loops)} loops"]
        for v in range(self.vertex_count):
            mark = " (loop)" if v in self.loops else ""
            nbrs = " ".join(self.label(w) for w in iter_bits(self.rows[v]))
            lines.append(f"{self.label(v)}{mark}: {nbrs}")
        return "\n".join(lines) + "\n"


# -- builders -------------------------------------------------------------------

def _check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(what, size, cap)


def _orthogonality(r: RingSpec, n: int, cap: int) -> tuple[list[int], np.ndarray]:
    coords = coordinate_table(r, n, cap=max(cap, 1))
    add, mul = r.tables()
    words = kernels.orthogonality_rows(coords, add, mul)
    return kernels.words_to_ints(words), coords


def build_td_closed(r: RingSpec, n: int, cap: int = GRAPH_CAP) -> Graph:
    """TDbar(R, n): vertices R^n, x ~ y iff x.y = 0, loops at isotropic vectors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = r.cardinality ** n
    _check_cap(f"TDbar({r},{n})", size, cap)
    orth, coords = _orthogonality(r, n, cap)
    loops = frozenset(v for v, row in enumerate(orth) if (row >> v) & 1)
    rows = tuple(row & ~(1 << v) for v, row in enumerate(orth))
    labels = tuple(vector_label(r, c) for c in coords)
    return Graph(rows, loops, labels, "TDbar", r, n, f"TDbar({r},{n})", 0)


def build_td(r: RingSpec, n: int, cap: int = GRAPH_CAP) -> Graph:
    """TD(R, n): vertices R^n minus 0, distinct x ~ y iff x.y = 0, no loops."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = r.cardinality ** n - 1
    _check_cap(f"TD({r},{n})", size, cap)
    orth, coords = _orthogonality(r, n, cap + 1)
    rows = tuple((row >> 1) & ~(1 << (v - 1)) for v, row in enumerate(orth) if v)
    labels = tuple(vector_label(r, c) for c in coords[1:])
    return Graph(rows, frozenset(), labels, "TD", r, n, f"TD({r},{n})", 1)


def build_zero_divisor_graph(r: RingSpec, cap: int = GRAPH_CAP) -> Graph:
    """Gamma(R): nonzero zero divisors, distinct a ~ b iff ab = 0."""
    _check_cap(f"Gamma({r})", r.cardinality, cap)
    elems = r.elements()
    zd = [i for i, a in enumerate(elems) if r.is_zero_divisor(a)]
    _, mul = r.tables()
    edges = [(i, j) for i in range(len(zd)) for j in range(i + 1, len(zd)) if mul[zd[i], zd[j]] == 0]
    labels = [r.render_element(elems[i]) for i in zd]
    return Graph.from_edges(len(zd), edges, (), labels, variant="Gamma", ring=r, name=f"Gamma({r})")


def tensor_product(g: Graph, h: Graph, cap: int = GRAPH_CAP) -> Graph:
    """G (x) H on ordered pairs, id(u, v) = u * |V(H)| + v.

    (u, v) ~ (u', v') iff u ~ u' and v ~ v', where x ~ x means a loop at x.
    """
    nh = h.vertex_count
    _check_cap("tensor product", g.vertex_count * nh, cap)
    g_rows = [row | ((1 << u) if u in g.loops else 0) for u, row in enumerate(g.rows)]
    h_rows = [row | ((1 << v) if v in h.loops else 0) for v, row in enumerate(h.rows)]
    rows = []
    loops = []
    for u in range(g.vertex_count):
        partners = list(iter_bits(g_rows[u]))
        for v in range(nh):
            row = 0
            hv = h_rows[v]
            for up in partners:
                row |= hv << (up * nh)
            me = u * nh + v
            if (row >> me) & 1:
                loops.append(me)
            rows.append(row & ~(1 << me))
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(f"{g.label(u)}/{h.label(v)}" for u in range(g.vertex_count) for v in range(nh))
    return Graph(tuple(rows), frozenset(loops), labels, "tensor", name=f"{g.name}*{h.name}")
