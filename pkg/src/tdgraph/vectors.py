"""Vectors in R^n: dot products, the quadratic norm and isotropic vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, PreconditionError, ShapeError
from .ring import RingElement, RingSpec, Zn

#: Default cap on |R|^n for exhaustive enumeration of R^n.
CENSUS_CAP = 1 << 20


@dataclass(frozen=True)
class RingVector:
    ring: RingSpec
    coords: tuple[RingElement, ...]

    def __post_init__(self):
        if not self.coords:
            raise ShapeError("vectors need at least one coordinate")
        for c in self.coords:
            self.ring._check(c)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: "RingVector") -> "RingVector":
        _same_space(self, other)
        r = self.ring
        return RingVector(r, tuple(r.add(x, y) for x, y in zip(self.coords, other.coords)))

    def scale(self, c: RingElement) -> "RingVector":
        r = self.ring
        return RingVector(r, tuple(r.mul(c, x) for x in self.coords))

    def is_zero(self) -> bool:
        return all(c == self.ring.zero for c in self.coords)

    def index(self) -> int:
        """Mixed-radix index in R^n, first coordinate most significant."""
        q = self.ring.cardinality
        i = 0
        for c in self.coords:
            i = i * q + self.ring.index(c)
        return i

    def label(self) -> str:
        return vector_label(self.ring, [self.ring.index(c) for c in self.coords])

    def __str__(self) -> str:
        return self.label()


def _same_space(a: RingVector, b: RingVector) -> None:
    if a.ring != b.ring or a.n != b.n:
        raise ShapeError(f"cannot combine vectors over {a.ring}^{a.n} and {b.ring}^{b.n}")


def vector_at(r: RingSpec, n: int, index: int) -> RingVector:
    q = r.cardinality
    coords = []
    for _ in range(n):
        index, c = divmod(index, q)
        coords.append(r.element_at(c))
    return RingVector(r, tuple(reversed(coords)))


def vector(r: RingSpec, *coords) -> RingVector:
    """Build a vector from elements or plain integers (embedded via ``from_int``)."""
    return RingVector(r, tuple(c if isinstance(c, RingElement) else r.from_int(c) for c in coords))


def basis_vector(r: RingSpec, n: int, i: int) -> RingVector:
    """e_i, with ``i`` counted from 1."""
    if not 1 <= i <= n:
        raise IndexError(i)
    return RingVector(r, tuple(r.one if j == i else r.zero for j in range(1, n + 1)))


def zero_vector(r: RingSpec, n: int) -> RingVector:
    return RingVector(r, (r.zero,) * n)


def _compact(r: RingSpec) -> bool:
    return len(r.leaves) == 1 and isinstance(r.leaves[0], Zn) and r.cardinality <= 10


def vector_label(r: RingSpec, element_indices) -> str:
    """"110" for small Z_n, otherwise rendered coordinates joined by "|"."""
    if _compact(r):
        return "".join(str(int(i)) for i in element_indices)
    return "|".join(r.render_element(r.element_at(int(i))) for i in element_indices)


def dot(a: RingVector, b: RingVector) -> RingElement:
    _same_space(a, b)
    r = a.ring
    acc = r.zero
    for x, y in zip(a.coords, b.coords):
        acc = r.add(acc, r.mul(x, y))
    return acc


def norm(a: RingVector) -> RingElement:
    return dot(a, a)


# -- dense enumeration over element indices ------------------------------------

def coordinate_table(r: RingSpec, n: int, cap: int = CENSUS_CAP) -> np.ndarray:
    """All of R^n as an ``(|R|^n, n)`` array of element indices, in vector order."""
    q = r.cardinality
    size = q ** n
    if size > cap:
        raise CapExceeded(f"{r}^{n}", size, cap)
    idx = np.arange(size, dtype=np.int64)
    cols = [(idx // q ** (n - 1 - i)) % q for i in range(n)]
    return np.ascontiguousarray(np.stack(cols, axis=1).astype(np.int32))


def norms_of(r: RingSpec, coords: np.ndarray) -> np.ndarray:
    add, mul = r.tables()
    sq = np.diagonal(mul)
    acc = np.zeros(len(coords), dtype=np.int32)
    for i in range(coords.shape[1]):
        acc = add[acc, sq[coords[:, i]]]
    return acc


@dataclass(frozen=True)
class IsotropyCensus:
    ring: RingSpec
    n: int
    total_solutions: int
    nontrivial: int

    def __post_init__(self):
        assert self.total_solutions == self.nontrivial + 1 and self.nontrivial >= 0


def isotropy_census(r: RingSpec, n: int, cap: int = CENSUS_CAP) -> IsotropyCensus:
    """Exhaustive count of solutions of x_1^2 + ... + x_n^2 = 0 in R^n."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    coords = coordinate_table(r, n, cap)
    total = int(np.count_nonzero(norms_of(r, coords) == 0))
    return IsotropyCensus(r, n, total, total - 1)


def chevalley_warning_check(r: RingSpec, n: int, cap: int = CENSUS_CAP) -> tuple[int, bool]:
    """Solution count of the diagonal quadric and its divisibility by char(F)."""
    if not r.is_field:
        raise PreconditionError(f"{r} is not a single field")
    if n <= 2:
        raise PreconditionError("the degree bound needs n > 2")
    count = isotropy_census(r, n, cap).total_solutions
    return count, count % r.characteristic == 0


def isotropic_pairs(r: RingSpec):
    """Nonzero (a, b) with a^2 + b^2 = 0, in lexicographic index order."""
    for a, b in itertools.product(r.elements(), repeat=2):
        if a == r.zero and b == r.zero:
            continue
        if r.add(r.mul(a, a), r.mul(b, b)) == r.zero:
            yield a, b


def find_isotropic_pair(r: RingSpec) -> tuple[RingElement, RingElement] | None:
    return next(isotropic_pairs(r), None)


def isotropic_pair_generators(r: RingSpec, n: int, a: RingElement, b: RingElement) -> list[RingVector]:
    """a_i = a e_1 + b e_2 + ... + a e_{2i-1} + b e_{2i} for i = 1..floor(n/2)."""
    gens = []
    for i in range(1, n // 2 + 1):
        coords = [a, b] * i + [r.zero] * (n - 2 * i)
        gens.append(RingVector(r, tuple(coords)))
    return gens


def build_isotropic_pair_clique(r: RingSpec, n: int, a: RingElement, b: RingElement) -> tuple[RingVector, ...]:
    """Pairwise orthogonal vectors built from an isotropic pair (a, b).

    Over a field this is the span of the generators minus zero; over other
    rings only 0/1 combinations are used, and coinciding combinations are
    collapsed, so the result may be smaller than 2^floor(n/2) - 1.  For odd n
    the basis vector e_n is appended.  Members are sorted by vector index.
    """
    if a == r.zero and b == r.zero:
        raise PreconditionError("(a, b) must be nonzero")
    if r.add(r.mul(a, a), r.mul(b, b)) != r.zero:
        raise PreconditionError(f"a^2 + b^2 != 0 for a={a}, b={b} in {r}")
    gens = isotropic_pair_generators(r, n, a, b)
    scalars = r.elements() if r.is_field else [r.zero, r.one]
    members: dict[int, RingVector] = {}
    for combo in itertools.product(scalars, repeat=len(gens)):
        v = zero_vector(r, n)
        for c, g in zip(combo, gens):
            v = v + g.scale(c)
        if not v.is_zero():
            members.setdefault(v.index(), v)
    if n % 2 == 1:
        e = basis_vector(r, n, n)
        members.setdefault(e.index(), e)
    out = tuple(members[k] for k in sorted(members))
    for u, v in itertools.combinations(out, 2):
        if dot(u, v) != r.zero:
            raise AssertionError(f"construction produced non-orthogonal pair {u}, {v}")
    return out
