"""Finite valuation rings with exact canonical-index arithmetic.

A finite valuation ring here is a finite local principal ring: it has a
residue field of size q = p**s (p an odd prime) and a uniformizer z with
z**r = 0, so the ring has q**r elements and its ideals form the chain
(1) > (z) > (z**2) > ... > (z**r) = (0).  Two concrete families are
constructible:

* ``zpr``   -- the integers modulo p**r, uniformizer p (s = 1);
* ``fqxr``  -- polynomials F_q[x] modulo x**r, uniformizer x, where
  F_q = F_p[y]/(g) for the lexicographically smallest monic irreducible
  g of degree s (coefficients compared high degree first).

Every element is addressed by a canonical index in [0, q**r).  For
``zpr`` the index is the integer value itself.  For ``fqxr`` an element
sum_i c_i x**i has index sum_i idx(c_i) * q**i where a field coefficient
with base-p digits (d_0 .. d_{s-1}) has idx(c) = sum_j d_j * p**j.  In
both families the index is the plain base-p digit string of the element,
which makes valuations and ideal cosets uniform in q:

* valuation(a) = number of leading zero base-q digit groups of the index
  (r for zero), and the ideal (z**k) is exactly {t * q**k};
* the coset a + (z**k) is exactly {x : x % q**k == a % q**k}.

Unramified extensions of Z_p with s > 1 and r > 1 are a third family of
finite valuation rings that this module does not construct; ``fqxr``
already realizes every (q, r) shape, which is all the experiments need.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

DEFAULT_MAX_ORDER = 10**6

_M64 = (1 << 64) - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# F_p[y] helpers for the fqxr residue field (dense low-first coefficient
# tuples, only used at construction time and in scalar multiplication).


def _poly_divmod(num: tuple[int, ...], den: tuple[int, ...], p: int):
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(0, len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k] % p
        if c:
            q = (c * inv_lead) % p
            quot[k - dn] = q
            for j, d in enumerate(den):
                num[k - dn + j] = (num[k - dn + j] - q * d) % p
    while len(num) > 1 and num[-1] % p == 0:
        num.pop()
    return tuple(quot), tuple(c % p for c in num)


def _poly_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= deg/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            div = []
            c = code
            for _ in range(d):
                c, dig = divmod(c, p)
                div.append(dig)
            div.append(1)
            _, rem = _poly_divmod(f, tuple(div), p)
            if rem == (0,):
                return False
    return True


def _find_field_modulus(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree s, low-first coefficient tuple.

    Candidates are ordered by the coefficient vector read from the x**(s-1)
    coefficient down to the constant term, so the scan tries y**s, then
    y**s + 1, then y**s + 2, ..., then y**s + y, and so on.
    """
    for code in range(p**s):
        coeffs = [0] * s
        c = code
        for k in range(s - 1, -1, -1):
            coeffs[k] = c % p
            c //= p
        cand = tuple(coeffs) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Coset:
    """The coset rep + (z**ideal_val) inside a ring, as canonical indices."""

    ring: "Ring"
    rep: int
    ideal_val: int

    def __post_init__(self):
        object.__setattr__(self, "rep", self.rep % self.ring.q**self.ideal_val)

    @property
    def size(self) -> int:
        return self.ring.q ** (self.ring.r - self.ideal_val)

    def members(self) -> list[int]:
        step = self.ring.q**self.ideal_val
        return [self.rep + t * step for t in range(self.size)]

    def contains(self, x: int) -> bool:
        return x % self.ring.q**self.ideal_val == self.rep

    def intersects(self, other: "Coset") -> bool:
        m = min(self.ideal_val, other.ideal_val)
        step = self.ring.q**m
        return self.rep % step == other.rep % step


class Ring:
    """One finite valuation ring; elements are canonical indices (ints).

    Scalar operations take and return plain ints.  The ``*_arr`` variants
    operate elementwise on numpy integer arrays (broadcasting) and are what
    the set algebra and counting layers use.
    """

    def __init__(self, kind: str, p: int, s: int, r: int, max_order: int):
        if kind not in ("zpr", "fqxr"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p == 2:
            raise ValueError("p must be odd (2 has to be a unit)")
        if s < 1 or r < 1:
            raise ValueError("s and r must be >= 1")
        if kind == "zpr" and s != 1:
            raise ValueError("zpr rings have s = 1; use fqxr for s > 1")
        order = p ** (s * r)
        if order > max_order:
            raise ValueError(f"order {p}**{s * r} = {order} exceeds cap {max_order}")
        self.kind = kind
        self.p = p
        self.s = s
        self.r = r
        self.q = p**s
        self.order = order
        self.units_count = self.q**r - self.q ** (r - 1)
        self.field_modulus: tuple[int, ...] | None = None
        if kind == "fqxr" and s > 1:
            self.field_modulus = _find_field_modulus(p, s)
            # rows mapping y**t (t < 2s-1) to its canonical s-digit residue
            self._red = self._reduction_rows()
        self._ppow = [p**j for j in range(s)]
        self._inv_table: np.ndarray | None = None

    # -- identity and description ------------------------------------------

    @property
    def key(self):
        return (self.kind, self.p, self.s, self.r)

    def spec_string(self) -> str:
        if self.kind == "zpr":
            return f"zpr:p={self.p},r={self.r}"
        return f"fqxr:p={self.p},s={self.s},r={self.r}"

    def __repr__(self):
        return f"Ring({self.spec_string()}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def _reduction_rows(self) -> np.ndarray:
        s, p = self.s, self.p
        rows = []
        for t in range(2 * s - 1):
            mono = (0,) * t + (1,)
            _, rem = _poly_divmod(mono, self.field_modulus, p)
            row = list(rem) + [0] * (s - len(rem))
            rows.append(row[:s])
        return np.array(rows, dtype=np.int64)

    # -- element structure ---------------------------------------------------

    def coeffs(self, a: int) -> tuple[tuple[int, ...], ...]:
        """r groups of s base-p digits, lowest power of the uniformizer first."""
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.q)
            digs = []
            for _ in range(self.s):
                c, d = divmod(c, self.p)
                digs.append(d)
            out.append(tuple(digs))
        return tuple(out)

    def encode(self, coeffs) -> int:
        a = 0
        for i, group in enumerate(coeffs):
            c = 0
            for j, d in enumerate(group):
                if not 0 <= d < self.p:
                    raise ValueError(f"digit {d} out of range for p={self.p}")
                c += d * self._ppow[j]
            a += c * self.q**i
        if not 0 <= a < self.order:
            raise ValueError("too many coefficients")
        return a

    def poly_str(self, a: int) -> str:
        if self.kind == "zpr":
            return str(a)

        def field_str(digs):
            terms = []
            for j, d in enumerate(digs):
                if d == 0:
                    continue
                if j == 0:
                    terms.append(str(d))
                else:
                    base = "y" if j == 1 else f"y^{j}"
                    terms.append(base if d == 1 else f"{d}{base}")
            return "+".join(terms) if terms else "0"

        parts = []
        for i, group in enumerate(self.coeffs(a)):
            cs = field_str(group)
            if cs == "0":
                continue
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if cs == "1":
                    parts.append(xs)
                elif cs.isdigit():
                    parts.append(f"{cs}{xs}")
                else:
                    parts.append(f"({cs}){xs}")
        return " + ".join(parts) if parts else "0"

    # -- scalar arithmetic ---------------------------------------------------

    def check_elem(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"index {a} out of range for order {self.order}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.kind == "zpr":
            return (a + b) % self.order
        out = 0
        shift = 1
        for _ in range(self.r * self.s):
            out += ((a + b) % self.p) * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.kind == "zpr":
            return (-a) % self.order
        out = 0
        shift = 1
        for _ in range(self.r * self.s):
            out += (-a % self.p) * shift
            a //= self.p
            shift *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _fq_mul(self, ca: int, cb: int) -> int:
        # multiply two residue-field coefficients given as s-digit indices
        p, s = self.p, self.s
        if s == 1:
            return (ca * cb) % p
        da = [0] * s
        db = [0] * s
        for j in range(s):
            ca, da[j] = divmod(ca, p)
            cb, db[j] = divmod(cb, p)
        conv = [0] * (2 * s - 1)
        for u in range(s):
            au = da[u]
            if au:
                for v in range(s):
                    conv[u + v] += au * db[v]
        out = 0
        for j in range(s):
            acc = 0
            for t in range(2 * s - 1):
                acc += conv[t] * int(self._red[t, j])
            out += (acc % p) * self._ppow[j]
        return out

    def mul(self, a: int, b: int) -> int:
        if self.kind == "zpr":
            return (a * b) % self.order
        q, r = self.q, self.r
        ac = [0] * r
        bc = [0] * r
        for i in range(r):
            a, ac[i] = divmod(a, q)
            b, bc[i] = divmod(b, q)
        out = 0
        for k in range(r):  # x**r truncates higher terms
            acc = 0
            for i in range(k + 1):
                if ac[i] and bc[k - i]:
                    acc = self._fq_add_scalar(acc, self._fq_mul(ac[i], bc[k - i]))
            out += acc * q**k
        return out

    def _fq_add_scalar(self, ca: int, cb: int) -> int:
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.s):
            out += ((ca + cb) % p) * shift
            ca //= p
            cb //= p
            shift *= p
        return out

    def pow(self, a: int, d: int) -> int:
        if d < 0:
            raise ValueError("negative exponent; use inv")
        result = 1
        base = a
        while d:
            if d & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            d >>= 1
        return result

    def valuation(self, a: int) -> int:
        if a == 0:
            return self.r
        v = 0
        while a % self.q == 0:
            a //= self.q
            v += 1
        return v

    def is_unit(self, a: int) -> bool:
        return a % self.q != 0 if a else False

    def unit_part(self, a: int) -> int:
        """u with a = u * z**valuation(a); returns 0 only for a = 0."""
        return self.shift_down(a, self.valuation(a))

    def shift_down(self, a: int, v: int) -> int:
        """Divide by z**v; requires valuation(a) >= v."""
        if a % self.q**v:
            raise ValueError("element not divisible by z**v")
        return a // self.q**v

    def shift_up(self, a: int, v: int) -> int:
        """Multiply by z**v."""
        return (a * self.q**v) % self.order

    def uniformizer(self) -> int:
        """Index of z; 0 when r = 1 (see uniformizer_degenerate)."""
        return self.q if self.r > 1 else 0

    @property
    def uniformizer_degenerate(self) -> bool:
        """True when r = 1, where (z) = (0) and the uniformizer is 0."""
        return self.r == 1

    def ideal_size(self, k: int) -> int:
        if not 0 <= k <= self.r:
            raise ValueError("ideal exponent out of range")
        return self.q ** (self.r - k)

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise ValueError(f"element {a} is not a unit")
        if self.kind == "zpr":
            res = pow(a, -1, self.order)
        else:
            res = self.pow(a, self.units_count - 1)
        assert self.mul(a, res) == 1
        return res

    def units(self) -> list[int]:
        return [a for a in range(self.order) if a % self.q != 0]

    def solve_linear(self, m: int, n: int) -> Coset | None:
        """All k with k*m = n, as a coset of an ideal, or None if unsolvable."""
        i = self.valuation(m)
        if self.valuation(n) < i:
            return None
        if i == self.r:  # m = 0 and n = 0: every k works
            return Coset(self, 0, 0)
        k0 = self.mul(self.shift_down(n, i), self.inv(self.shift_down(m, i)))
        return Coset(self, k0, self.r - i)

    # -- array arithmetic ----------------------------------------------------

    def _digits_arr(self, a: np.ndarray) -> np.ndarray:
        """Base-p digits of index arrays, shape (..., r*s), lowest first."""
        a = np.asarray(a, dtype=np.int64)
        out = np.empty(a.shape + (self.r * self.s,), dtype=np.int64)
        for k in range(self.r * self.s):
            out[..., k] = a % self.p
            a = a // self.p
        return out

    def _encode_arr(self, digits: np.ndarray) -> np.ndarray:
        pows = self.p ** np.arange(self.r * self.s, dtype=np.int64)
        return digits @ pows

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.kind == "zpr":
            return (a + b) % self.order
        da, db = np.broadcast_arrays(self._digits_arr(a), self._digits_arr(b))
        return self._encode_arr((da + db) % self.p)

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.kind == "zpr":
            return (-a) % self.order
        return self._encode_arr((-self._digits_arr(a)) % self.p)

    def sub_arr(self, a, b) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(np.asarray(b, dtype=np.int64)))

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.kind == "zpr":
            return (a * b) % self.order
        r, s, p = self.r, self.s, self.p
        da = self._digits_arr(a).reshape(a.shape + (r, s))
        db = self._digits_arr(b).reshape(b.shape + (r, s))
        da, db = np.broadcast_arrays(da, db)
        shape = da.shape[:-2]
        out = np.zeros(shape + (r, s), dtype=np.int64)
        for k in range(r):
            conv = np.zeros(shape + (2 * s - 1,), dtype=np.int64)
            for i in range(k + 1):
                for u in range(s):
                    for v in range(s):
                        conv[..., u + v] += da[..., i, u] * db[..., k - i, v]
            if s == 1:
                out[..., k, 0] = conv[..., 0] % p
            else:
                red = (conv.reshape(-1, 2 * s - 1) @ self._red) % p
                out[..., k, :] = red.reshape(shape + (s,))
        return self._encode_arr(out.reshape(shape + (r * s,)))

    def val_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        v = np.zeros(a.shape, dtype=np.int64)
        for k in range(1, self.r + 1):
            v += (a % self.q**k == 0).astype(np.int64)
        return v

    def pow_arr(self, a, d: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if d < 0:
            raise ValueError("negative exponent; use inv_table")
        result = np.ones(a.shape, dtype=np.int64)
        base = a
        while d:
            if d & 1:
                result = self.mul_arr(result, base)
            base = self.mul_arr(base, base)
            d >>= 1
        return result

    @property
    def inv_table(self) -> np.ndarray:
        """inv of every unit by index; 0 at non-unit slots."""
        if self._inv_table is None:
            idx = np.arange(self.order, dtype=np.int64)
            tab = self.pow_arr(idx, self.units_count - 1)
            tab[self.val_arr(idx) > 0] = 0
            self._inv_table = tab
        return self._inv_table

    def table1(self, c2: int, c1: int, c0: int) -> np.ndarray:
        """Values of c2*x**2 + c1*x + c0 at every index (memoized by callers)."""
        x = np.arange(self.order, dtype=np.int64)
        return self.add_arr(
            self.add_arr(self.mul_arr(c2, self.mul_arr(x, x)), self.mul_arr(c1, x)),
            np.int64(c0),
        )


def make_ring(
    kind: str, p: int, s: int = 1, r: int = 1, max_order: int = DEFAULT_MAX_ORDER
) -> Ring:
    """Construct a finite valuation ring of the given kind and shape."""
    return Ring(kind, p, s, r, max_order)


def parse_ring_spec(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Ring:
    """Parse 'zpr:p=<int>,r=<int>' or 'fqxr:p=<int>,s=<int>,r=<int>'."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise ValueError(f"malformed ring spec {text!r}: missing ':'")
    fields = {}
    for part in rest.split(","):
        key, eq, val = part.partition("=")
        if not eq or not val.lstrip("-").isdigit():
            raise ValueError(f"malformed ring spec field {part!r}")
        if key in fields:
            raise ValueError(f"duplicate ring spec field {key!r}")
        fields[key] = int(val)
    expected = {"zpr": {"p", "r"}, "fqxr": {"p", "s", "r"}}.get(kind)
    if expected is None:
        raise ValueError(f"unknown ring kind {kind!r}")
    if set(fields) != expected:
        raise ValueError(
            f"ring spec {text!r} must define exactly {sorted(expected)}"
        )
    return make_ring(kind, fields["p"], fields.get("s", 1), fields["r"], max_order)
