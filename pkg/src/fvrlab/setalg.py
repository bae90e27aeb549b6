"""Dense subsets of a finite valuation ring and their exact set algebra.

An :class:`RSet` stores a membership bit-vector over canonical indices plus
the sorted member array, so sumsets, product sets, dilates and polynomial
images are pairwise vectorized table operations followed by a scatter.  All
counts are exact; nothing here ever rounds.

Set literals on the wire are comma-separated canonical indices ("0,1,5").
Quadratic polynomial data for the three-variable image a*x*y + R(x) + S(y)
+ T(z) travels as "a=<idx>;R=<c2,c1,c0>;S=<c2,c1,c0>;T=<c2,c1,c0>" where
each coefficient is a canonical index and c2 is the leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .ring import Ring

SUM = "sum"
PRODUCT = "product"
POWER_SUM = "power_sum"


class RSet:
    """An immutable subset of one ring, indexed canonically."""

    __slots__ = ("ring", "mask", "members")

    def __init__(self, ring: Ring, mask: np.ndarray):
        self.ring = ring
        self.mask = mask
        self.members = np.flatnonzero(mask).astype(np.int64)

    @classmethod
    def from_indices(cls, ring: Ring, indices) -> "RSet":
        mask = np.zeros(ring.order, dtype=bool)
        for idx in indices:
            ring.check_elem(int(idx))
            mask[int(idx)] = True
        return cls(ring, mask)

    @classmethod
    def full(cls, ring: Ring) -> "RSet":
        return cls(ring, np.ones(ring.order, dtype=bool))

    def indices(self) -> list[int]:
        return [int(a) for a in self.members]

    @property
    def literal(self) -> str:
        return ",".join(str(a) for a in self.indices())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.ring.order and bool(self.mask[a])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RSet)
            and self.ring == other.ring
            and np.array_equal(self.mask, other.mask)
        )

    def __hash__(self):
        return hash((self.ring.key, self.mask.tobytes()))

    def __repr__(self):
        return f"RSet({self.ring.spec_string()}, {{{self.literal}}})"


def parse_set_literal(ring: Ring, text: str) -> RSet:
    """Parse comma-separated canonical indices; 'all' means the whole ring."""
    text = text.strip()
    if text == "all":
        return RSet.full(ring)
    if not text:
        raise ValueError("empty set literal")
    try:
        indices = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed set literal {text!r}") from None
    return RSet.from_indices(ring, indices)


def _same_ring(*sets: RSet) -> Ring:
    ring = sets[0].ring
    for s in sets[1:]:
        if s.ring != ring:
            raise ValueError("sets live in different rings")
    return ring


def _scatter(ring: Ring, values: np.ndarray) -> RSet:
    mask = np.zeros(ring.order, dtype=bool)
    mask[np.asarray(values, dtype=np.int64).ravel()] = True
    return RSet(ring, mask)


def sumset(A: RSet, B: RSet) -> RSet:
    """{a + b : a in A, b in B}."""
    ring = _same_ring(A, B)
    return _scatter(ring, ring.add_arr(A.members[:, None], B.members[None, :]))


def diffset(A: RSet, B: RSet) -> RSet:
    """{a - b : a in A, b in B}."""
    ring = _same_ring(A, B)
    return _scatter(ring, ring.sub_arr(A.members[:, None], B.members[None, :]))


def prodset(A: RSet, B: RSet) -> RSet:
    """{a * b : a in A, b in B}."""
    ring = _same_ring(A, B)
    return _scatter(ring, ring.mul_arr(A.members[:, None], B.members[None, :]))


def translate(A: RSet, c: int) -> RSet:
    """{a + c : a in A}."""
    A.ring.check_elem(c)
    return _scatter(A.ring, A.ring.add_arr(A.members, np.int64(c)))


def dilate(A: RSet, c: int) -> RSet:
    """{c * a : a in A}; c need not be a unit."""
    A.ring.check_elem(c)
    return _scatter(A.ring, A.ring.mul_arr(np.int64(c), A.members))


@lru_cache(maxsize=512)
def _power_table(ring: Ring, d: int) -> np.ndarray:
    return ring.pow_arr(np.arange(ring.order, dtype=np.int64), d)


def power_set(A: RSet, d: int) -> RSet:
    """{a**d : a in A} for d >= 1."""
    if d < 1:
        raise ValueError("power d must be >= 1")
    return _scatter(A.ring, _power_table(A.ring, d)[A.members])


def rep_histogram(A: RSet, B: RSet, op: str, d: int | None = None) -> np.ndarray:
    """Counts of ordered pairs by combined value, one slot per index.

    op is one of SUM ({a+b}), PRODUCT ({a*b}) or POWER_SUM ({a**d + b**d},
    needs d).  The histogram sums to len(A) * len(B).
    """
    ring = _same_ring(A, B)
    x = A.members[:, None]
    y = B.members[None, :]
    if op == SUM:
        vals = ring.add_arr(x, y)
    elif op == PRODUCT:
        vals = ring.mul_arr(x, y)
    elif op == POWER_SUM:
        if d is None or d < 1:
            raise ValueError("power_sum needs d >= 1")
        tab = _power_table(ring, d)
        vals = ring.add_arr(tab[x], tab[y])
    else:
        raise ValueError(f"unknown combiner {op!r}")
    return np.bincount(np.asarray(vals, dtype=np.int64).ravel(), minlength=ring.order)


def energy(A: RSet, d: int) -> int:
    """Ordered quadruples (a,b,c,e) in A**4 with a**d + b**d = c**d + e**d."""
    hist = rep_histogram(A, A, POWER_SUM, d)
    return sum(int(c) * int(c) for c in hist if c)


# ---------------------------------------------------------------------------
# quadratic polynomial images


@dataclass(frozen=True)
class QuadPolySpec:
    """Data of the three-variable map a*x*y + R(x) + S(y) + T(z).

    Coefficient triples are (c2, c1, c0) canonical indices.  Constraints:
    a != 0, T non-constant, and the leading coefficient of T a unit.
    """

    ring: Ring
    a: int
    R: tuple[int, int, int]
    S: tuple[int, int, int]
    T: tuple[int, int, int]

    def __post_init__(self):
        rg = self.ring
        rg.check_elem(self.a)
        for tr in (self.R, self.S, self.T):
            if len(tr) != 3:
                raise ValueError("coefficient triples are (c2, c1, c0)")
            for c in tr:
                rg.check_elem(c)
        if self.a == 0:
            raise ValueError("a must be nonzero")
        if self.deg_T == 0:
            raise ValueError("T must not be constant")
        lead = self.T[0] if self.deg_T == 2 else self.T[1]
        if not rg.is_unit(lead):
            raise ValueError("leading coefficient of T must be a unit")

    @property
    def deg_T(self) -> int:
        return 2 if self.T[0] != 0 else (1 if self.T[1] != 0 else 0)

    @property
    def literal(self) -> str:
        def tr(t):
            return ",".join(str(c) for c in t)

        return f"a={self.a};R={tr(self.R)};S={tr(self.S)};T={tr(self.T)}"


def parse_quadpoly(ring: Ring, text: str) -> QuadPolySpec:
    """Parse 'a=<idx>;R=<c2,c1,c0>;S=<c2,c1,c0>;T=<c2,c1,c0>'."""
    fields: dict[str, str] = {}
    for part in text.strip().split(";"):
        key, eq, val = part.partition("=")
        if not eq:
            raise ValueError(f"malformed polynomial field {part!r}")
        fields[key.strip()] = val.strip()
    if set(fields) != {"a", "R", "S", "T"}:
        raise ValueError("polynomial literal must define a, R, S, T")

    def triple(raw: str) -> tuple[int, int, int]:
        toks = raw.split(",")
        if len(toks) != 3:
            raise ValueError(f"coefficient triple {raw!r} needs 3 entries")
        return (int(toks[0]), int(toks[1]), int(toks[2]))

    return QuadPolySpec(
        ring, int(fields["a"]), triple(fields["R"]), triple(fields["S"]), triple(fields["T"])
    )


@lru_cache(maxsize=512)
def _poly_table(ring: Ring, coeffs: tuple[int, int, int]) -> np.ndarray:
    return ring.table1(*coeffs)


def poly1_table(ring: Ring, coeffs: tuple[int, int, int]) -> np.ndarray:
    """Memoized value table of c2*x**2 + c1*x + c0 over every index."""
    return _poly_table(ring, tuple(int(c) for c in coeffs))


def image_quad3(spec: QuadPolySpec, A: RSet, B: RSet, C: RSet) -> RSet:
    """Exact image {a*x*y + R(x) + S(y) + T(z) : x in A, y in B, z in C}.

    T(z) varies independently of (x, y), so the image is computed as the
    two-variable part followed by a sumset with T(C); the result is the same
    set the triple loop produces.
    """
    ring = _same_ring(A, B, C)
    if ring != spec.ring:
        raise ValueError("sets live in a different ring than the polynomial")
    if not (len(A) and len(B) and len(C)):
        raise ValueError("image needs nonempty A, B, C")
    rt = _poly_table(ring, spec.R)
    st = _poly_table(ring, spec.S)
    tt = _poly_table(ring, spec.T)
    x = A.members[:, None]
    y = B.members[None, :]
    two_var = ring.add_arr(
        ring.mul_arr(np.int64(spec.a), ring.mul_arr(x, y)),
        ring.add_arr(rt[x], st[y]),
    )
    u = np.unique(np.asarray(two_var, dtype=np.int64))
    v = np.unique(tt[C.members])
    return _scatter(ring, ring.add_arr(u[:, None], v[None, :]))


def image_shifted_quad(
    ring: Ring, f: tuple[int, int, int], X: RSet, Y: RSet, Z: RSet
) -> RSet:
    """Exact image {f(x - y) + z} for a one-variable quadratic f."""
    if ring != _same_ring(X, Y, Z):
        raise ValueError("sets live in a different ring than requested")
    if not (len(X) and len(Y) and len(Z)):
        raise ValueError("image needs nonempty X, Y, Z")
    ft = poly1_table(ring, f)
    diffs = np.unique(
        np.asarray(ring.sub_arr(X.members[:, None], Y.members[None, :]), dtype=np.int64)
    )
    vals = np.unique(ft[diffs])
    return _scatter(ring, ring.add_arr(vals[:, None], Z.members[None, :]))
