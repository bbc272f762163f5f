"""Power series in one formal variable X with GradedPoly coefficients.

Two shapes are used: :class:`QTypicalSeries` (c_0 X + c_1 X^q + c_2 X^(q^2) + ...,
the shape of logarithms and strict isomorphisms) and :class:`PowerSeries`, a
general series truncated at a fixed X-power.  The compositional inverse of a
q-typical series is generally *not* q-typical (the inverse of X + a X^q has a
nonzero X^(2q-1) term), so :func:`series_reverse` returns a general series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from gmpy2 import mpq

from .coeff import RingParams
from .gpoly import GradedPoly


def _as_poly(ring, c):
    return c if isinstance(c, GradedPoly) else GradedPoly.const(ring, c)


@dataclass(frozen=True)
class QTypicalSeries:
    """Sum of c_i X^(q^i) for i = 0..n."""

    ring: RingParams
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_as_poly(self.ring, c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def is_strict(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    def order(self, n: Optional[int] = None) -> int:
        """Largest X-power represented at level n."""
        n = self.n if n is None else n
        return self.ring.q ** (n + 1) - 1

    def to_power_series(self, order: Optional[int] = None) -> "PowerSeries":
        q = self.ring.q
        order = self.order() if order is None else order
        coeffs = {q**i: c for i, c in enumerate(self.coeffs) if q**i <= order and c}
        return PowerSeries(self.ring, coeffs, order)

    def __call__(self, arg: GradedPoly, D: Optional[int] = None) -> GradedPoly:
        return series_substitute(self, arg, D)


@dataclass(frozen=True)
class PowerSeries:
    """Sum of c_k X^k for 1 <= k <= order (no constant term)."""

    ring: RingParams
    coeffs: dict = field(default_factory=dict)
    order: int = 1

    def __post_init__(self):
        cleaned = {}
        for k, c in self.coeffs.items():
            if k < 1:
                raise ValueError("power series here have no constant term")
            c = _as_poly(self.ring, c)
            if k <= self.order and c:
                cleaned[k] = c
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def identity(cls, ring, order):
        return cls(ring, {1: GradedPoly.one(ring)}, order)

    def coeff(self, k: int) -> GradedPoly:
        return self.coeffs.get(k, GradedPoly.zero(self.ring))

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.ring, self.coeffs, min(order, self.order))

    def is_q_typical(self) -> bool:
        q = self.ring.q
        return all(_is_q_power(k, q) for k in self.coeffs)

    def q_typical_part(self) -> QTypicalSeries:
        q = self.ring.q
        out = []
        i = 0
        while q**i <= self.order:
            out.append(self.coeff(q**i))
            i += 1
        return QTypicalSeries(self.ring, tuple(out))

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(X)), truncated at the smaller order."""
        order = min(self.order, inner.order)
        result: dict = {}
        power = dict(inner.coeffs)
        top = max(self.coeffs, default=0)
        for k in range(1, top + 1):
            if k > 1:
                power = _series_mul(power, inner.coeffs, order)
            if not power:
                break
            c = self.coeffs.get(k)
            if c is None:
                continue
            for n, a in power.items():
                term = c * a
                result[n] = result[n] + term if n in result else term
        return PowerSeries(self.ring, result, order)

    def reverse(self) -> "PowerSeries":
        return _reverse(self)

    def __call__(self, arg: GradedPoly, D: Optional[int] = None) -> GradedPoly:
        total = GradedPoly.zero(self.ring, D)
        power = GradedPoly.one(self.ring, D)
        for k in range(1, self.order + 1):
            power = power.mul(arg, D)
            if not power:
                break
            c = self.coeffs.get(k)
            if c is not None:
                total = total.add(c.mul(power, D), D)
        return total


def _is_q_power(k: int, q: int) -> bool:
    while k % q == 0:
        k //= q
    return k == 1


def _series_mul(a: dict, b: dict, order: int) -> dict:
    """Product of two {power: coefficient} X-series, dropping powers above order."""
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            n = i + j
            if n > order:
                continue
            prod = x * y
            out[n] = out[n] + prod if n in out else prod
    return {n: c for n, c in out.items() if c}


def _reverse(s: PowerSeries) -> PowerSeries:
    """Compositional inverse r with s(r(X)) = X up to X^order.

    Uses the power recurrence for (1 + g)^m: with r = X(1 + g), the
    coefficients b_k of (1 + g)^m satisfy k b_k = sum_j ((m+1) j - k) g_j b_(k-j).
    """
    ring = s.ring
    if s.coeff(1) != 1:
        raise ValueError("series must have leading coefficient 1")
    order = s.order
    zero = GradedPoly.zero(ring)
    g = [zero] * (order + 1)  # g[j] = coefficient of X^(j+1) in r
    powers: dict[int, list] = {m: [GradedPoly.one(ring)] for m in s.coeffs if m >= 2}

    def extend(m, k):
        lst = powers[m]
        while len(lst) <= k:
            kk = len(lst)
            acc = zero
            for j in range(1, kk + 1):
                factor = (m + 1) * j - kk
                if factor and g[j] and lst[kk - j]:
                    acc = acc + (g[j] * lst[kk - j]) * factor
            lst.append(acc * mpq(1, kk))
        return lst[k]

    for k in range(2, order + 1):
        acc = zero
        for m, c in s.coeffs.items():
            if 2 <= m <= k:
                acc = acc + c * extend(m, k - m)
        g[k - 1] = -acc
    coeffs = {1: GradedPoly.one(ring)}
    for j in range(1, order):
        if g[j]:
            coeffs[j + 1] = g[j]
    return PowerSeries(ring, coeffs, order)


# -- public helpers --------------------------------------------------


def series_substitute(s, arg: GradedPoly, D: Optional[int] = None) -> GradedPoly:
    """sum_i c_i * arg^(q^i), truncated at degree D."""
    if isinstance(s, PowerSeries):
        return s(arg, D)
    ring = s.ring
    q = ring.q
    total = GradedPoly.zero(ring, D)
    power = arg.truncate(D)
    for i, c in enumerate(s.coeffs):
        if i > 0:
            power = power.pow(q, D)
        if not power:
            break
        if c:
            total = total.add(c.mul(power, D), D)
    return total


def series_reverse(s, n: Optional[int] = None) -> PowerSeries:
    """Compositional inverse modulo X^(q^(n+1))."""
    if isinstance(s, QTypicalSeries):
        n = s.n if n is None else n
        return _reverse(s.to_power_series(s.order(n)))
    if n is not None:
        s = s.truncate(s.ring.q ** (n + 1) - 1)
    return _reverse(s)
