"""Exact arithmetic in K = Q[pi]/(pi^e - u*p).

Elements are stored as tuples of ``e`` rationals (the coordinates of
1, pi, ..., pi^(e-1)).  The raw tuple kernels on :class:`RingParams` are what
the polynomial code uses in its inner loops; :class:`KElement` is the
user-facing wrapper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import gmpy2
from gmpy2 import mpq

INF = math.inf

Coords = tuple  # tuple of e mpq values


def _vp_int(n: int, p: int) -> int:
    if n == 0:
        return 0
    return int(gmpy2.remove(gmpy2.mpz(n), p)[1])


def vp_rational(c, p: int) -> float:
    """p-adic valuation of a rational number (+inf for zero)."""
    c = mpq(c)
    if c == 0:
        return INF
    return _vp_int(int(c.numerator), p) - _vp_int(int(c.denominator), p)


@dataclass(frozen=True)
class RingParams:
    """Arithmetic context: prime p, ramification e, residue degree f, unit u.

    The uniformizer satisfies pi^e = u*p.  ``q`` and ``d`` are derived on
    access and never stored.
    """

    p: int
    e: int = 1
    f: int = 1
    u: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not gmpy2.is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"ramification degree e={self.e} must be >= 1")
        if self.f < 1:
            raise ValueError(f"residue degree f={self.f} must be >= 1")
        if self.u % self.p == 0:
            raise ValueError(f"u={self.u} is divisible by p={self.p}")

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def d(self) -> int:
        return self.e * self.f

    @cached_property
    def _up(self):
        return mpq(self.u * self.p)

    def __repr__(self):
        extra = "" if self.u == 1 else f", u={self.u}"
        return f"RingParams(p={self.p}, e={self.e}, f={self.f}{extra})"

    # -- raw coordinate kernels ------------------------------------------

    def zero(self) -> Coords:
        return (mpq(0),) * self.e

    def one(self) -> Coords:
        return (mpq(1),) + (mpq(0),) * (self.e - 1)

    def const(self, c) -> Coords:
        return (mpq(c),) + (mpq(0),) * (self.e - 1)

    def is_zero(self, a: Coords) -> bool:
        return not any(a)

    def add(self, a: Coords, b: Coords) -> Coords:
        if self.e == 1:
            return (a[0] + b[0],)
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Coords, b: Coords) -> Coords:
        if self.e == 1:
            return (a[0] - b[0],)
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Coords) -> Coords:
        return tuple(-x for x in a)

    def scale(self, a: Coords, c) -> Coords:
        """Multiply by a rational scalar."""
        return tuple(x * c for x in a)

    def mul(self, a: Coords, b: Coords) -> Coords:
        e = self.e
        if e == 1:
            return (a[0] * b[0],)
        prod = [mpq(0)] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        up = self._up
        for k in range(2 * e - 2, e - 1, -1):
            if prod[k]:
                prod[k - e] += up * prod[k]
        return tuple(prod[:e])

    def pi_power(self, n: int) -> Coords:
        """pi^n for any integer n, using pi^e = u*p."""
        qt, r = divmod(n, self.e)
        c = [mpq(0)] * self.e
        c[r] = self._up**qt
        return tuple(c)

    def pow(self, a: Coords, n: int) -> Coords:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def inv(self, a: Coords) -> Coords:
        """Inverse modulo pi^e - u*p by extended gcd over Q."""
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero in K")
        if self.e == 1:
            return (1 / a[0],)
        modulus = [-self._up] + [mpq(0)] * (self.e - 1) + [mpq(1)]
        s = _poly_inverse(list(a), modulus)
        s = s + [mpq(0)] * (self.e - len(s))
        return tuple(s[: self.e])

    def div(self, a: Coords, b: Coords) -> Coords:
        return self.mul(a, self.inv(b))

    def valuation(self, a: Coords) -> float:
        best = INF
        for i, c in enumerate(a):
            if c:
                v = self.e * vp_rational(c, self.p) + i
                if v < best:
                    best = v
        return best

    def reduce(self, a: Coords) -> int:
        """Image in F_p of an element of valuation >= 0."""
        if self.valuation(a) < 0:
            raise ValueError("cannot reduce an element of negative valuation mod pi")
        c = a[0]
        if c == 0:
            return 0
        num, den = int(c.numerator), int(c.denominator)
        return num * pow(den, -1, self.p) % self.p


# -- polynomial helpers for the inverse ------------------------------------


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list, b: list):
    a = _trim(list(a))
    b = _trim(list(b))
    quot = [mpq(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a.pop()
        _trim(a)
    return quot, a


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_inverse(a: list, modulus: list) -> list:
    # s*a + t*modulus = g with g a nonzero constant when gcd is 1
    r0, r1 = _trim(list(modulus)), _trim(list(a))
    s0, s1 = [], [mpq(1)]
    while len(r1) > 1:
        quot, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible modulo the Eisenstein polynomial")
    g = r1[0]
    return [c / g for c in s1]


# -- public element type ---------------------------------------------------


def _fmt_rational(c) -> str:
    c = mpq(c)
    return f"{int(c.numerator)}/{int(c.denominator)}"


def parse_rational(text: str):
    num, _, den = text.partition("/")
    return mpq(int(num), int(den or 1))


@dataclass(frozen=True, eq=False)
class KElement:
    """An element of K, immutable."""

    ring: RingParams
    coords: Coords

    @classmethod
    def from_coords(cls, ring: RingParams, coords: Sequence) -> "KElement":
        coords = tuple(mpq(c) for c in coords)
        if len(coords) != ring.e:
            raise ValueError(f"expected {ring.e} coordinates, got {len(coords)}")
        return cls(ring, coords)

    @classmethod
    def of(cls, ring: RingParams, value) -> "KElement":
        return cls(ring, ring.const(value))

    @classmethod
    def pi(cls, ring: RingParams, n: int = 1) -> "KElement":
        return cls(ring, ring.pi_power(n))

    def _coerce(self, other) -> Coords:
        if isinstance(other, KElement):
            if other.ring != self.ring:
                raise ValueError("mismatched ring parameters")
            return other.coords
        return self.ring.const(other)

    def __add__(self, other):
        return KElement(self.ring, self.ring.add(self.coords, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return KElement(self.ring, self.ring.sub(self.coords, self._coerce(other)))

    def __rsub__(self, other):
        return KElement(self.ring, self.ring.sub(self._coerce(other), self.coords))

    def __neg__(self):
        return KElement(self.ring, self.ring.neg(self.coords))

    def __mul__(self, other):
        return KElement(self.ring, self.ring.mul(self.coords, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return KElement(self.ring, self.ring.div(self.coords, self._coerce(other)))

    def __rtruediv__(self, other):
        return KElement(self.ring, self.ring.div(self._coerce(other), self.coords))

    def __pow__(self, n: int):
        return KElement(self.ring, self.ring.pow(self.coords, n))

    def __eq__(self, other):
        if isinstance(other, KElement):
            return self.ring == other.ring and self.coords == other.coords
        try:
            return self.coords == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __bool__(self):
        return not self.ring.is_zero(self.coords)

    def valuation(self) -> float:
        return self.ring.valuation(self.coords)

    def reduce(self) -> int:
        return self.ring.reduce(self.coords)

    def to_json(self) -> list[str]:
        return [_fmt_rational(c) for c in self.coords]

    @classmethod
    def from_json(cls, ring: RingParams, data: Sequence[str]) -> "KElement":
        return cls.from_coords(ring, [parse_rational(s) for s in data])

    def __str__(self):
        return format_coords(self.coords)

    def __repr__(self):
        return f"KElement({self})"


def format_coords(coords: Coords) -> str:
    parts = []
    for i, c in enumerate(coords):
        if not c:
            continue
        s = str(c) if c.denominator != 1 else str(c.numerator)
        if i == 0:
            parts.append(s)
        else:
            pi = "pi" if i == 1 else f"pi^{i}"
            parts.append(pi if c == 1 else f"{s}*{pi}")
    if not parts:
        return "0"
    return " + ".join(parts) if len(parts) == 1 else "(" + " + ".join(parts) + ")"


# -- public operations ---------------------------------------------------


def make_ring(p: int, e: int = 1, f: int = 1, u: int = 1) -> RingParams:
    return RingParams(p, e, f, u)


def k_arith(a: KElement, b: KElement, op: str) -> KElement:
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op]()


def pi_valuation(a: KElement) -> float:
    return a.valuation()


def reduce_mod_pi(a: KElement) -> int:
    return a.reduce()
