"""Logarithm of the universal A-typical formal A-module law and formal sums.

The logarithm is log(X) = sum_h l_h X^(q^h) with l_0 = 1.  Two generator
systems are supported:

* ``araki``:      pi * l_h = sum_(i=0..h) l_i v_(h-i)^(q^i), where v_0 means pi.
  The i = h term is l_h * pi^(q^h), so l_h sits on both sides; solving gives
  l_h = (sum_(i<h) l_i v_(h-i)^(q^i)) / (pi - pi^(q^h)).
* ``hazewinkel``: pi * l_h = sum_(i<h) l_i V_(h-i)^(q^i).

Formal sums are evaluated literally as exp(sum log(a)) on positive-degree
arguments (``fgl_sum``), or through the canonical-form recursion with
generalized Witt polynomials (``structured_formal_sum``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from .coeff import RingParams
from .gpoly import GradedPoly, Var, mono_degree
from .sequences import Seq, compositions, indexed_monomial, pi_A_coords
from .series import QTypicalSeries, series_reverse, series_substitute
from .witt import WittEvaluator

CONVENTIONS = ("araki", "hazewinkel")


def generator_family(convention: str) -> str:
    if convention == "araki":
        return "v"
    if convention == "hazewinkel":
        return "V"
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class LogSeries:
    ring: RingParams
    convention: str
    coeffs: tuple

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def as_series(self) -> QTypicalSeries:
        return QTypicalSeries(self.ring, self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LogSeries):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return tuple(self.coeffs) == tuple(other)


_LOG_CACHE: dict = {}


def _gen(ring, family, i):
    return GradedPoly.var(ring, family, i)


def araki_logs(ring: RingParams, n: int) -> LogSeries:
    return _logs(ring, "araki", n)


def hazewinkel_logs(ring: RingParams, n: int) -> LogSeries:
    return _logs(ring, "hazewinkel", n)


def logs_for(ring: RingParams, convention: str, n: int) -> LogSeries:
    return _logs(ring, convention, n)


def _logs(ring: RingParams, convention: str, n: int) -> LogSeries:
    family = generator_family(convention)
    key = (ring, convention)
    cached = _LOG_CACHE.setdefault(key, [GradedPoly.one(ring)])
    q = ring.q
    while len(cached) <= n:
        h = len(cached)
        acc = GradedPoly.zero(ring)
        for i in range(h):
            acc = acc + cached[i] * _gen(ring, family, h - i).pow(q**i)
        if convention == "araki":
            denom = ring.sub(ring.pi_power(1), ring.pi_power(q**h))
        else:
            denom = ring.pi_power(1)
        cached.append(acc.div_scalar(denom))
    return LogSeries(ring, convention, tuple(cached[: n + 1]))


def closed_form_logs(ring: RingParams, n: int) -> LogSeries:
    """l_h = sum over compositions I of h of v_I / Pi_A(I)."""
    out = []
    for h in range(n + 1):
        acc = GradedPoly.zero(ring)
        for seq in compositions(h):
            acc = acc + indexed_monomial(ring, "v", seq).div_scalar(pi_A_coords(ring, seq))
        out.append(acc)
    return LogSeries(ring, "araki", tuple(out))


def generator_conversion(ring: RingParams, n: int, direction: str = "araki->hazewinkel") -> dict:
    """Express one generator system in the other, index -> GradedPoly.

    ``araki->hazewinkel`` gives each v_i as a polynomial in V_1..V_i;
    ``hazewinkel->araki`` gives each V_i in v_1..v_i.  Both come from the
    fact that the two recursions describe the same logarithm.
    """
    q = ring.q
    direction = direction.replace("→", "->")
    if direction == "araki->hazewinkel":
        logs = hazewinkel_logs(ring, n)  # in V
        table: dict[int, GradedPoly] = {}
        for h in range(1, n + 1):
            lead = ring.sub(ring.pi_power(1), ring.pi_power(q**h))
            acc = logs[h].scale(lead)
            for i in range(1, h):
                acc = acc - logs[i] * table[h - i].pow(q**i)
            table[h] = acc
        return table
    if direction == "hazewinkel->araki":
        logs = araki_logs(ring, n)  # in v
        table = {}
        for h in range(1, n + 1):
            acc = logs[h].scale(ring.pi_power(1))
            for i in range(1, h):
                acc = acc - logs[i] * table[h - i].pow(q**i)
            table[h] = acc
        return table
    raise ValueError(f"unknown direction {direction!r}")


def convert(poly: GradedPoly, table: Mapping[int, GradedPoly], family: str, bound=None) -> GradedPoly:
    """Substitute a conversion table into ``poly`` (replacing ``family`` generators)."""
    return poly.substitute({Var(family, i): img for i, img in table.items()}, bound)


# -- formal sums ---------------------------------------------------------


def _log_levels(ring: RingParams, D: int) -> int:
    """Largest h with 2(q^h - 1) <= D."""
    h = 0
    while 2 * (ring.q ** (h + 1) - 1) <= D:
        h += 1
    return h


def _log_values(ring, logs, D):
    if isinstance(logs, LogSeries):
        return list(logs.coeffs)
    if isinstance(logs, str):
        return list(logs_for(ring, logs, _log_levels(ring, D)).coeffs)
    return list(logs)


def _check_positive(arg: GradedPoly):
    if any(d <= 0 for d in arg.degrees()):
        raise ValueError("formal-sum arguments must consist of positive-degree terms")


def log_of(ring: RingParams, logs, arg: GradedPoly, D: int) -> GradedPoly:
    """log_F(arg) = sum_i l_i arg^(q^i), truncated at D."""
    coeffs = _log_values(ring, logs, D)
    return series_substitute(QTypicalSeries(ring, tuple(coeffs)), arg, D)


def exp_series(ring: RingParams, logs, D: int):
    """exp_F as a power series, enough terms for degree D."""
    coeffs = _log_values(ring, logs, D)
    order = D // 2 + 1
    levels = _log_levels(ring, D)
    coeffs = coeffs[: levels + 1]
    if len(coeffs) < levels + 1:
        raise ValueError("not enough logarithm coefficients for the requested degree bound")
    series = QTypicalSeries(ring, tuple(coeffs)).to_power_series(order)
    return series_reverse(series)


def fgl_sum(ring: RingParams, logs, args: Sequence[GradedPoly], D: int) -> GradedPoly:
    """exp_F(sum log_F(arg)) truncated at degree D."""
    args = [a.truncate(D) for a in args]
    args = [a for a in args if a]
    for a in args:
        _check_positive(a)
    if not args:
        return GradedPoly.zero(ring, D)
    if len(args) == 1:
        return args[0].with_bound(D)
    total = GradedPoly.zero(ring, D)
    for a in args:
        total = total.add(log_of(ring, logs, a, D), D)
    return exp_series(ring, logs, D)(total, D)


@dataclass
class FormalSumResult:
    """Canonical form sum^F_h c_h with c_h = w_empty(B_h), one c_h per level."""

    components: dict  # h -> GradedPoly
    B: dict  # h -> list of GradedPoly

    def values(self):
        return [self.components[h] for h in sorted(self.components)]


def structured_formal_sum(
    ring: RingParams,
    A_sets: Mapping[int, Sequence[GradedPoly]],
    D: int,
    v_map: Optional[Callable[[Seq], GradedPoly]] = None,
) -> FormalSumResult:
    """Canonical form of the formal sum of all elements of all A_h (Araki generators).

    B_h = A_h together with v_J * w_J(B_(h-|J|)) for every nonempty J with
    |J| < h; the formal sum equals sum^F_h w_empty(B_h).  ``v_map`` replaces
    the coefficient v_J (used when the law is the right-unit image).
    """
    q = ring.q
    for h, elems in A_sets.items():
        if h < 1:
            raise ValueError("levels must be positive")
        for a in elems:
            if a and not a.is_homogeneous(2 * (q**h - 1)):
                raise ValueError(f"element of A_{h} is not homogeneous of degree {2 * (q**h - 1)}")
    if v_map is None:
        def v_map(seq):
            return indexed_monomial(ring, "v", seq)
    top = _log_levels(ring, D)
    B: dict[int, list] = {}
    evaluators: dict[int, WittEvaluator] = {}
    components = {}
    for h in range(1, top + 1):
        elems = [a.truncate(D) for a in A_sets.get(h, ())]
        for n in range(1, h):
            ev = evaluators[h - n]
            for seq in compositions(n):
                w = ev.generalized(seq)
                if w:
                    elems.append(v_map(seq).mul(w, D))
        elems = [e for e in elems if e]
        B[h] = elems
        evaluators[h] = WittEvaluator(ring, elems, D)
        components[h] = evaluators[h].generalized(Seq())
    return FormalSumResult(components, B)


def negation(ring: RingParams, logs=None, D: Optional[int] = None) -> QTypicalSeries:
    """The formal inverse series [-1]_F(X), which is -X for odd p."""
    if ring.p == 2:
        raise ValueError("[-1]_F(X) = -X fails at p = 2")
    series = QTypicalSeries(ring, (GradedPoly.const(ring, -1),))
    if logs is not None and D is not None:
        probe = GradedPoly.var(ring, "x", 1, deg=2)
        if fgl_sum(ring, logs, [probe, series(probe, D)], D):
            raise ArithmeticError("x +_F (-x) did not vanish")
    return series


def strict_iso_coeffs(logF: Sequence[GradedPoly], logG: Sequence[GradedPoly], n: int) -> list:
    """Coefficients t_0..t_n with log_G(X) = sum_i log_F(t_i X^(q^i)).

    Solved by t_i = g_i - sum_(j<i) f_(i-j) t_j^(q^(i-j)).
    """
    logF, logG = list(logF), list(logG)
    if not (logF[0] == 1 and logG[0] == 1):
        raise ValueError("both logarithms must be strict")
    ring = logF[0].ring
    q = ring.q
    ts = [GradedPoly.one(ring)]
    for i in range(1, n + 1):
        acc = logG[i]
        for j in range(i):
            acc = acc - logF[i - j] * ts[j].pow(q ** (i - j))
        ts.append(acc)
    return ts
