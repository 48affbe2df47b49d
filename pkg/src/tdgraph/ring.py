"""Finite commutative rings with identity: Z_n, GF(p^k) and their direct products.

A ring is described by a flat tuple of leaves.  Elements are tuples of leaf
components: a Z_n component is an ``int`` in ``[0, n)``, a GF(p^k) component
is a length-``k`` tuple of coefficients in ``[0, p)`` (constant term first).

Elements are numbered mixed-radix with the leftmost leaf most significant;
inside a GF leaf the highest-degree coefficient is most significant.  Index 0
is always the zero element.  Vertex numbering of every graph in the package
is derived from this order.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import CapExceeded, RingSpecError, ShapeError

#: Largest ring for which dense addition/multiplication tables are built.
TABLE_CAP = 2048


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


# -- polynomials over Z_p, coefficient tuples with constant term first -------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    r = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _poly_trim(r)
    return r


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    # lexicographic over (c_0, ..., c_{d-1}) with c_0 most significant
    for low in itertools.product(range(p), repeat=degree):
        yield low + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    if k < 1 or poly[-1] != 1:
        return False
    for d in range(1, k // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over Z_p.

    Coefficient tuples are compared constant-term first.
    """
    for poly in _monic_polys(p, k):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


# -- leaves ------------------------------------------------------------------

@dataclass(frozen=True)
class Zn:
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise RingSpecError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def cardinality(self) -> int:
        return self.modulus

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_field(self) -> bool:
        return prime_power(self.modulus) == (self.modulus, 1)

    def render(self) -> str:
        return f"Z{self.modulus}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1 % self.modulus

    def from_int(self, k: int) -> int:
        return k % self.modulus

    def valid(self, c) -> bool:
        return type(c) is int and 0 <= c < self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def is_unit(self, a: int) -> bool:
        return math.gcd(a, self.modulus) == 1

    def index(self, a: int) -> int:
        return a

    def at(self, i: int) -> int:
        return i

    def render_component(self, a: int) -> str:
        return str(a)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        r = np.arange(self.modulus, dtype=np.int64)
        add = (r[:, None] + r[None, :]) % self.modulus
        mul = (r[:, None] * r[None, :]) % self.modulus
        return add, mul

    def residue_sizes(self) -> list[int]:
        return sorted(factorize(self.modulus))


@dataclass(frozen=True)
class GF:
    p: int
    k: int
    poly: tuple[int, ...]

    def __post_init__(self):
        if prime_power(self.p) != (self.p, 1):
            raise RingSpecError(f"GF characteristic {self.p} is not prime")
        if self.k < 1 or len(self.poly) != self.k + 1:
            raise RingSpecError("GF modulus polynomial must be monic of degree k")
        if not is_irreducible(self.poly, self.p):
            raise RingSpecError(f"polynomial {self.poly} is reducible over Z_{self.p}")

    @classmethod
    def of_order(cls, q: int) -> "GF":
        pk = prime_power(q)
        if pk is None:
            raise RingSpecError(f"GF order {q} is not a prime power")
        p, k = pk
        return cls(p, k, least_irreducible(p, k))

    @property
    def cardinality(self) -> int:
        return self.p ** self.k

    @property
    def characteristic(self) -> int:
        return self.p

    is_field = True

    def render(self) -> str:
        return f"GF({self.cardinality})"

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, k: int) -> tuple[int, ...]:
        return (k % self.p,) + (0,) * (self.k - 1)

    def valid(self, c) -> bool:
        return (type(c) is tuple and len(c) == self.k
                and all(type(x) is int and 0 <= x < self.p for x in c))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        r = _poly_mod(prod, self.poly, self.p)
        return tuple(r) + (0,) * (self.k - len(r))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def is_unit(self, a) -> bool:
        return any(a)

    def index(self, a) -> int:
        i = 0
        for c in reversed(a):
            i = i * self.p + c
        return i

    def at(self, i: int):
        out = []
        for _ in range(self.k):
            i, c = divmod(i, self.p)
            out.append(c)
        return tuple(out)

    def render_component(self, a) -> str:
        return _render_poly(a)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        q, p, k = self.cardinality, self.p, self.k
        r = np.arange(q, dtype=np.int64)
        digits = np.stack([(r // p ** d) % p for d in range(k)])
        add = np.zeros((q, q), dtype=np.int64)
        for d in range(k):
            add += ((digits[d][:, None] + digits[d][None, :]) % p) * p ** d
        # multiplication through discrete logarithms of a primitive element
        exp = self._exp_table()
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        la = log[1:]
        mul = np.zeros((q, q), dtype=np.int64)
        mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
        return add, mul

    def _exp_table(self) -> np.ndarray:
        q = self.cardinality
        for g in range(2 if q > 2 else 1, q):
            gen = self.at(g)
            powers = [self.index(self.one())]
            x = self.one()
            for _ in range(q - 2):
                x = self.mul(x, gen)
                powers.append(self.index(x))
            if len(set(powers)) == q - 1:
                return np.array(powers, dtype=np.int64)
        raise AssertionError("no primitive element found")

    def residue_sizes(self) -> list[int]:
        return [self.cardinality]


Leaf = Union[Zn, GF]


@dataclass(frozen=True)
class RingElement:
    """One element of a ring: a tuple with one component per leaf."""

    components: tuple

    def __str__(self) -> str:
        parts = [_render_raw(c) for c in self.components]
        return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"


def _render_raw(c) -> str:
    return str(c) if isinstance(c, int) else _render_poly(c)


def _render_poly(c: tuple[int, ...]) -> str:
    terms = []
    for d in range(len(c) - 1, -1, -1):
        if c[d]:
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            coef = "" if (c[d] == 1 and d) else str(c[d])
            terms.append(coef + mono)
    return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class MaximalIdealInfo:
    leaf_index: int
    residue_size: int


@dataclass(frozen=True)
class RingSpec:
    """A finite commutative ring with identity, as a direct product of leaves."""

    leaves: tuple[Leaf, ...]

    def __post_init__(self):
        if not self.leaves:
            raise RingSpecError("a ring needs at least one factor")

    # -- structure ---------------------------------------------------------

    @cached_property
    def cardinality(self) -> int:
        return math.prod(leaf.cardinality for leaf in self.leaves)

    @cached_property
    def characteristic(self) -> int:
        return math.lcm(*(leaf.characteristic for leaf in self.leaves))

    @property
    def is_product(self) -> bool:
        return len(self.leaves) > 1

    @property
    def is_field(self) -> bool:
        return len(self.leaves) == 1 and self.leaves[0].is_field

    @property
    def all_field_leaves(self) -> bool:
        return all(leaf.is_field for leaf in self.leaves)

    def render(self) -> str:
        return "x".join(leaf.render() for leaf in self.leaves)

    def __str__(self) -> str:
        return self.render()

    def factor(self, i: int) -> "RingSpec":
        return RingSpec((self.leaves[i],))

    def split(self, at: int) -> tuple["RingSpec", "RingSpec"]:
        """Split into the product of leaves[:at] and leaves[at:]."""
        if not 0 < at < len(self.leaves):
            raise ValueError("split point must leave both sides non-empty")
        return RingSpec(self.leaves[:at]), RingSpec(self.leaves[at:])

    # -- elements ----------------------------------------------------------

    def _check(self, a: RingElement) -> None:
        if not isinstance(a, RingElement) or len(a.components) != len(self.leaves) or not all(
            leaf.valid(c) for leaf, c in zip(self.leaves, a.components)
        ):
            raise ShapeError(f"{a!r} is not an element of {self.render()}")

    def element(self, *components) -> RingElement:
        a = RingElement(tuple(components))
        self._check(a)
        return a

    def from_int(self, k: int) -> RingElement:
        return RingElement(tuple(leaf.from_int(k) for leaf in self.leaves))

    @cached_property
    def zero(self) -> RingElement:
        return RingElement(tuple(leaf.zero() for leaf in self.leaves))

    @cached_property
    def one(self) -> RingElement:
        return RingElement(tuple(leaf.one() for leaf in self.leaves))

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a)
        self._check(b)
        return RingElement(tuple(
            leaf.add(x, y) for leaf, x, y in zip(self.leaves, a.components, b.components)))

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a)
        self._check(b)
        return RingElement(tuple(
            leaf.mul(x, y) for leaf, x, y in zip(self.leaves, a.components, b.components)))

    def neg(self, a: RingElement) -> RingElement:
        self._check(a)
        return RingElement(tuple(leaf.neg(x) for leaf, x in zip(self.leaves, a.components)))

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return self.add(a, self.neg(b))

    def is_zero(self, a: RingElement) -> bool:
        self._check(a)
        return a == self.zero

    def is_unit(self, a: RingElement) -> bool:
        self._check(a)
        return all(leaf.is_unit(x) for leaf, x in zip(self.leaves, a.components))

    def is_zero_divisor(self, a: RingElement) -> bool:
        """Nonzero and annihilated by some nonzero element.

        For a finite ring this is exactly "nonzero and not a unit": a non-unit
        component has a nonzero annihilator in its leaf.
        """
        unit = self.is_unit(a)
        zero = a == self.zero
        zd = not zero and not unit
        assert int(zero) + int(unit) + int(zd) == 1
        return zd

    def index(self, a: RingElement) -> int:
        self._check(a)
        i = 0
        for leaf, c in zip(self.leaves, a.components):
            i = i * leaf.cardinality + leaf.index(c)
        return i

    def element_at(self, i: int) -> RingElement:
        if not 0 <= i < self.cardinality:
            raise IndexError(i)
        comps = []
        for leaf in reversed(self.leaves):
            i, j = divmod(i, leaf.cardinality)
            comps.append(leaf.at(j))
        return RingElement(tuple(reversed(comps)))

    def elements(self) -> list[RingElement]:
        return [self.element_at(i) for i in range(self.cardinality)]

    def units(self) -> list[RingElement]:
        return [a for a in self.elements() if self.is_unit(a)]

    def non_units(self) -> list[RingElement]:
        return [a for a in self.elements() if not self.is_unit(a)]

    def render_element(self, a: RingElement) -> str:
        self._check(a)
        parts = [leaf.render_component(c) for leaf, c in zip(self.leaves, a.components)]
        return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"

    # -- tables over element indices ----------------------------------------

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self.cardinality > TABLE_CAP:
            raise CapExceeded("ring table arithmetic", self.cardinality, TABLE_CAP)
        add, mul = self.leaves[0].tables()
        size = self.leaves[0].cardinality
        for leaf in self.leaves[1:]:
            a2, m2 = leaf.tables()
            s2 = leaf.cardinality
            add = (add[:, None, :, None] * s2 + a2[None, :, None, :]).reshape(size * s2, size * s2)
            mul = (mul[:, None, :, None] * s2 + m2[None, :, None, :]).reshape(size * s2, size * s2)
            size *= s2
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        add.setflags(write=False)
        mul.setflags(write=False)
        return add, mul

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Read-only ``(add, mul)`` tables indexed by element index."""
        return self._tables

    # -- maximal ideals ----------------------------------------------------

    def residue_field_sizes(self) -> list[MaximalIdealInfo]:
        return [MaximalIdealInfo(i, s)
                for i, leaf in enumerate(self.leaves)
                for s in leaf.residue_sizes()]

    @property
    def nu(self) -> int:
        return max(info.residue_size for info in self.residue_field_sizes())


_ATOM = re.compile(r"Z(\d+)|GF\((\d+)\)")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``ring := atom ("x" atom)*`` with ``atom := "Z" INT | "GF(" INT ")"``."""
    pos = 0
    leaves: list[Leaf] = []
    while True:
        m = _ATOM.match(text, pos)
        if m is None:
            raise RingSpecError(f"expected 'Z<int>' or 'GF(<int>)' in {text!r}", pos)
        if m.group(1) is not None:
            value = int(m.group(1))
            if value < 2:
                raise RingSpecError(f"modulus must be >= 2, got {value}", m.start(1))
            leaves.append(Zn(value))
        else:
            value = int(m.group(2))
            if value < 2 or prime_power(value) is None:
                raise RingSpecError(f"GF order {value} is not a prime power", m.start(2))
            leaves.append(GF.of_order(value))
        pos = m.end()
        if pos == len(text):
            return RingSpec(tuple(leaves))
        if text[pos] != "x":
            raise RingSpecError(f"expected 'x' or end of input in {text!r}", pos)
        pos += 1


def enumerate_elements(r: RingSpec) -> list[RingElement]:
    return r.elements()


def residue_field_sizes(r: RingSpec) -> list[MaximalIdealInfo]:
    return r.residue_field_sizes()


def add(r: RingSpec, a: RingElement, b: RingElement) -> RingElement:
    return r.add(a, b)


def mul(r: RingSpec, a: RingElement, b: RingElement) -> RingElement:
    return r.mul(a, b)


def neg(r: RingSpec, a: RingElement) -> RingElement:
    return r.neg(a)


def is_unit(r: RingSpec, a: RingElement) -> bool:
    return r.is_unit(a)


def is_zero_divisor(r: RingSpec, a: RingElement) -> bool:
    return r.is_zero_divisor(a)
