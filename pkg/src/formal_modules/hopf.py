"""Structure maps of the Hopf algebroid of A-typical formal A-module laws.

* right unit on log coefficients and on generators (triangular solve, and
  the independent N_h / R_h formal-sum route);
* coproduct on t_k (formal-sum route with Witt polynomials, and the
  log-matching route);
* counit, invariance of I_h = (pi, v_1, ..., v_(h-1)), the conjugation
  identity, the Hopf algebroid axioms on truncations, and the reduced
  coproduct modulo I_h.

Tensor products are written in normal form: generators live in slot 0 and
the t variables carry a slot index (t_i, t_i', t_i'').  Moving a generator
across a tensor sign turns it into its right-unit image in the slot to the
left.
"""

from __future__ import annotations

from typing import Optional

from .coeff import RingParams
from .fpoly import FpPoly
from .gpoly import GradedPoly, Var, code_index, code_rank, code_slot, is_generator, is_t, t_code
from .report import Report
from .sequences import Seq, compositions, indexed_monomial, monomial_exponents
from .universal import (
    FormalSumResult,
    convert,
    fgl_sum,
    generator_conversion,
    generator_family,
    logs_for,
    structured_formal_sum,
)
from .witt import WittEvaluator


def top_degree(ring: RingParams, k: int) -> int:
    return 2 * (ring.q**k - 1)


def t_poly(ring: RingParams, i: int, slot: int = 0) -> GradedPoly:
    if i == 0:
        return GradedPoly.one(ring)
    return GradedPoly.var(ring, "t", i, slot)


def _gen(ring, family, i):
    if i == 0:
        return GradedPoly.const(ring, ring.pi_power(1))
    return GradedPoly.var(ring, family, i)


# -- right unit ------------------------------------------------------------


def eta_R_logs(ring: RingParams, n: int, convention: str = "araki") -> list:
    """eta_R(l_i) = sum_j l_j t_(i-j)^(q^j) for i = 0..n."""
    logs = logs_for(ring, convention, n)
    q = ring.q
    out = []
    for i in range(n + 1):
        acc = GradedPoly.zero(ring)
        for j in range(i + 1):
            acc = acc + logs[j] * t_poly(ring, i - j).pow(q**j)
        out.append(acc)
    return out


_ETA_CACHE: dict = {}


def _assert_integral(poly: GradedPoly, what: str):
    bad = poly.non_integral_terms()
    if bad:
        m, c = bad[0]
        witness = GradedPoly(poly.ring, {m: c})
        raise ArithmeticError(f"{what} is not pi-integral; offending term {witness}")


def eta_R_v(ring: RingParams, k: int, convention: str = "araki") -> GradedPoly:
    """eta_R of the k-th generator, solved from pi*eta_R(l_h) = sum eta_R(l_i) eta_R(g_(h-i))^(q^i).

    Araki: the i = h term is eta_R(l_h) * pi^(q^h) (v_0 = pi), so
    eta_R(v_h) = (pi - pi^(q^h)) eta_R(l_h) - sum_(0<i<h) eta_R(l_i) eta_R(v_(h-i))^(q^i).
    Hazewinkel: there is no i = h term, so the lead factor is just pi.
    """
    if k == 0:
        return _gen(ring, "v", 0)
    family = generator_family(convention)
    cache = _ETA_CACHE.setdefault((ring, convention), [None])
    q = ring.q
    if len(cache) <= k:
        er_logs = eta_R_logs(ring, k, convention)
        while len(cache) <= k:
            h = len(cache)
            if convention == "araki":
                lead = ring.sub(ring.pi_power(1), ring.pi_power(q**h))
            else:
                lead = ring.pi_power(1)
            acc = er_logs[h].scale(lead)
            for i in range(1, h):
                acc = acc - er_logs[i] * cache[h - i].pow(q**i)
            _assert_integral(acc, f"eta_R({family}{h})")
            cache.append(acc)
    return cache[k]


def eta_R_monomial(ring: RingParams, seq, convention: str = "araki", source=None) -> GradedPoly:
    """eta_R(v_J) as the product of eta_R(v_j) powers."""
    source = source or (lambda j: eta_R_v(ring, j, convention))
    acc = GradedPoly.one(ring)
    for j, k in sorted(monomial_exponents(Seq(seq), ring.q).items()):
        acc = acc * source(j).pow(k)
    return acc


def right_unit_apply(ring: RingParams, poly: GradedPoly, convention: str = "araki", bound=None) -> GradedPoly:
    """Apply eta_R to a polynomial in the generators."""
    family = generator_family(convention)
    idx = sorted({Var.from_code(c).index for c in poly.codes() if is_generator(c)})
    mapping = {Var(family, i): eta_R_v(ring, i, convention) for i in idx}
    return poly.substitute(mapping, bound)


def n_set(ring: RingParams, h: int) -> list:
    """N_h: (-1)^|I| t_I (v_i t_j^(q^i))^(q^|I|) over |I| + i + j = h, with v_0 = pi, t_0 = 1."""
    q = ring.q
    out = []
    for norm in range(h + 1):
        for seq in compositions(norm):
            tI = indexed_monomial(ring, "t", seq)
            sign = -1 if len(seq) % 2 else 1
            for i in range(h - norm + 1):
                j = h - norm - i
                inner = _gen(ring, "v", i) * t_poly(ring, j).pow(q**i)
                out.append((tI * inner.pow(q**norm)).scale(sign))
    return out


_CLOSED_CACHE: dict = {}


def eta_R_closed(ring: RingParams, h: int) -> GradedPoly:
    """eta_R(v_h) = w_empty(R_h), with R_h = N_h plus eta_R(v_J) w_J(R_(h-|J|)) corrections.

    Lower eta_R(v_j) come from this same route, never from the triangular solve.
    """
    if h == 0:
        return _gen(ring, "v", 0)
    cache = _CLOSED_CACHE.setdefault(ring, {})
    if h in cache:
        return cache[h]
    D = top_degree(ring, h)
    sets = {n: n_set(ring, n) for n in range(1, h + 1)}
    res = structured_formal_sum(
        ring, sets, D, v_map=lambda seq: eta_R_monomial(ring, seq, source=lambda j: eta_R_closed(ring, j))
    )
    for n, val in res.components.items():
        # homogeneous of degree <= D, hence exact: drop the working bound
        cache.setdefault(n, val.with_bound(None))
    return cache[h]


# -- coproduct ---------------------------------------------------------------


def m_set(ring: RingParams, h: int) -> list:
    """M_h = {t_i (x) t_(h-i)^(q^i) : 0 <= i <= h}."""
    q = ring.q
    return [t_poly(ring, i, 0) * t_poly(ring, h - i, 1).pow(q**i) for i in range(h + 1)]


_DELTA_SETS: dict = {}


def coproduct_sets(ring: RingParams, k: int) -> FormalSumResult:
    """The Delta_h sets (h <= k) of the Witt-polynomial coproduct recursion."""
    cached = _DELTA_SETS.get(ring)
    if cached is not None and max(cached.B, default=0) >= k:
        return cached
    D = top_degree(ring, k)
    res = structured_formal_sum(ring, {h: m_set(ring, h) for h in range(1, k + 1)}, D)
    _DELTA_SETS[ring] = res
    return res


_LOGMATCH: dict = {}


def _coproduct_logmatch(ring: RingParams, k: int, convention: str) -> GradedPoly:
    """Delta(t_n) = sum_(m+i+j=n) l_m t_i^(q^m) (x) t_j^(q^(i+m)) - sum_(m>=1) l_m Delta(t_(n-m))^(q^m)."""
    cache = _LOGMATCH.setdefault((ring, convention), [GradedPoly.one(ring)])
    q = ring.q
    if len(cache) <= k:
        logs = logs_for(ring, convention, k)
        while len(cache) <= k:
            n = len(cache)
            acc = GradedPoly.zero(ring)
            for m in range(n + 1):
                for i in range(n - m + 1):
                    j = n - m - i
                    acc = acc + logs[m] * t_poly(ring, i, 0).pow(q**m) * t_poly(ring, j, 1).pow(q ** (i + m))
            for m in range(1, n + 1):
                acc = acc - logs[m] * cache[n - m].pow(q**m)
            cache.append(acc)
    return cache[k]


_WITT_ROUTE: dict = {}


def _coproduct_witt(ring: RingParams, k: int, convention: str) -> GradedPoly:
    if k == 0:
        return GradedPoly.one(ring)
    key = (ring, convention, k)
    if key not in _WITT_ROUTE:
        val = coproduct_sets(ring, k).components[k].with_bound(None)
        if convention == "hazewinkel":
            val = convert(val, generator_conversion(ring, k, "araki->hazewinkel"), "v")
        _WITT_ROUTE[key] = val
    return _WITT_ROUTE[key]


def coproduct_t(
    ring: RingParams, k: int, D: Optional[int] = None, route: str = "witt", convention: str = "araki"
) -> GradedPoly:
    """Delta(t_k) in two tensor slots; route 'both' asserts the two routes agree."""
    if route == "witt":
        val = _coproduct_witt(ring, k, convention)
    elif route == "logmatch":
        val = _coproduct_logmatch(ring, k, convention)
    elif route == "both":
        val = _coproduct_witt(ring, k, convention)
        other = _coproduct_logmatch(ring, k, convention)
        if val != other:
            raise ArithmeticError(f"coproduct routes disagree on t{k}")
    else:
        raise ValueError(f"unknown route {route!r}")
    _assert_integral(val, f"Delta(t{k})")
    return val.truncate(D) if D is not None else val


def counit(ring: RingParams, x: GradedPoly) -> GradedPoly:
    """t_i -> 0 for i >= 1; generators unchanged."""
    return x.set_zero(is_t)


# -- tensor manipulations ---------------------------------------------------


def _slot_shift(code: int, offset: int) -> int:
    if is_t(code):
        return t_code(code_index(code), code_slot(code) + offset)
    return code


def delta_left(ring: RingParams, x: GradedPoly, convention: str = "araki") -> GradedPoly:
    """(Delta (x) 1): slot-0 t_i -> Delta(t_i), slot-1 t's move to slot 2."""
    moved = x.relabel(lambda c: _slot_shift(c, 1) if is_t(c) and code_slot(c) == 1 else c)
    idx = sorted({code_index(c) for c in moved.codes() if is_t(c) and code_slot(c) == 0})
    mapping = {t_code(i, 0): coproduct_t(ring, i, convention=convention) for i in idx}
    return moved.substitute(mapping)


def delta_right(ring: RingParams, x: GradedPoly, convention: str = "araki") -> GradedPoly:
    """(1 (x) Delta): slot-1 t_j -> Delta(t_j) moved one slot right.

    Generators inside Delta(t_j) sit in the middle slot, i.e. they become
    their right-unit images in slot 0.
    """
    idx = sorted({code_index(c) for c in x.codes() if is_t(c) and code_slot(c) == 1})
    mapping = {}
    for j in idx:
        d = coproduct_t(ring, j, convention=convention)
        shifted_t = d.relabel(lambda c: _slot_shift(c, 1))
        mapping[t_code(j, 1)] = right_unit_apply(ring, shifted_t, convention)
    return x.substitute(mapping)


# -- verification suites ----------------------------------------------------


def _in_ideal(ring: RingParams, poly: GradedPoly, h: int, family: str):
    """First term of ``poly`` outside I_h * V^AT, or None."""
    for m, c in poly.sorted_terms():
        if ring.valuation(c) >= 1:
            continue
        if any(is_generator(code) and 0 < code_index(code) < h for code, _ in m):
            continue
        return GradedPoly(ring, {m: c})
    return None


def verify_invariance(ring: RingParams, h: int, kmax: Optional[int] = None, D=None, convention: str = "araki") -> Report:
    """I_h = (pi, g_1, ..., g_(h-1)) is invariant and eta_R(g_h) = g_h mod I_h."""
    if h < 1:
        raise ValueError("h must be >= 1")
    kmax = h if kmax is None else kmax
    if kmax < h:
        raise ValueError("kmax must be >= h")
    family = generator_family(convention)
    report = Report()
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "h": h, "convention": convention}
    pi = GradedPoly.const(ring, ring.pi_power(1))
    witness = _in_ideal(ring, pi, h, family)
    report.add("eta_R(pi) in I_h", params, witness is None, witness)
    for j in range(1, h):
        er = eta_R_v(ring, j, convention)
        witness = _in_ideal(ring, er, h, family)
        report.add(f"eta_R({family}{j}) in I_h", params, witness is None, witness)
    diff = eta_R_v(ring, h, convention) - _gen(ring, family, h)
    witness = _in_ideal(ring, diff, h, family)
    report.add(f"eta_R({family}{h}) = {family}{h} mod I_h", params, witness is None, witness)
    for k in range(1, kmax + 1):
        er = eta_R_v(ring, k, convention)
        ok = er.is_integral() and er.is_homogeneous(top_degree(ring, k))
        report.add(f"eta_R({family}{k}) integral and homogeneous", params, ok)
    return report


def conjugation_terms(ring: RingParams, D: int, reverse: bool = False) -> list:
    """Positive-degree terms (-1)^|I| t_I t_i^(q^|I|) (or t_i t_I^(q^i)) of degree <= D."""
    q = ring.q
    out = []
    n = 1
    while top_degree(ring, n) <= D:
        for norm in range(n + 1):
            i = n - norm
            for seq in compositions(norm):
                sign = -1 if len(seq) % 2 else 1
                if reverse:
                    term = t_poly(ring, i) * indexed_monomial(ring, "t", seq).pow(q**i)
                else:
                    term = indexed_monomial(ring, "t", seq) * t_poly(ring, i).pow(q**norm)
                out.append(term.scale(sign))
        n += 1
    return out


def conjugation_identity(ring: RingParams, D: int, convention: str = "araki") -> Report:
    """The formal sum of (-1)^|I| t_I t_i^(q^|I|) over all (I, i) is the unit term alone."""
    if ring.p == 2:
        raise ValueError("the conjugation identity check uses [-1]_F(X) = -X, which needs p > 2")
    report = Report()
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "D": D}
    for reverse, label in ((False, "t_I t_i^(q^|I|)"), (True, "t_i t_I^(q^i)")):
        total = fgl_sum(ring, convention, conjugation_terms(ring, D, reverse), D)
        witness = None if not total else str(GradedPoly(ring, dict(total.sorted_terms()[:1])))
        report.add(f"conjugation identity {label}", params, not total, witness)
    return report


def hopf_axiom_suite(ring: RingParams, D: int, convention: str = "araki") -> Report:
    report = Report()
    one = GradedPoly.one(ring)
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "D": D, "convention": convention}
    report.add("Delta(1) = 1 (x) 1", params, coproduct_t(ring, 0, convention=convention) == one)
    k = 1
    while top_degree(ring, k) <= D:
        d = coproduct_t(ring, k, convention=convention)
        tk = t_poly(ring, k)
        lhs = delta_left(ring, d, convention)
        rhs = delta_right(ring, d, convention)
        witness = None if lhs == rhs else (lhs - rhs).sorted_terms()[0]
        report.add("coassociativity", dict(params, k=k), lhs == rhs, witness and GradedPoly(ring, {witness[0]: witness[1]}))
        left = d.set_zero(lambda c: is_t(c) and code_slot(c) == 0).relabel(lambda c: _slot_shift(c, -1) if is_t(c) else c)
        report.add("left counit (eps (x) 1) Delta = id", dict(params, k=k), left == tk, None if left == tk else left)
        right = d.set_zero(lambda c: is_t(c) and code_slot(c) == 1)
        report.add("right counit (1 (x) eps) Delta = id", dict(params, k=k), right == tk, None if right == tk else right)
        k += 1
    return report


# -- reduction modulo I_h --------------------------------------------------------


def ideal_drop(h: int):
    """Predicate for generators killed modulo I_h (indices 1..h-1)."""
    return lambda code: is_generator(code) and 0 < code_index(code) < h


def reduce_mod_ideal(poly: GradedPoly, h: int) -> FpPoly:
    return FpPoly.from_graded(poly, drop=ideal_drop(h))


def s_sequences(i: int, h: int, e: int):
    """Length-e sequences of integers >= h summing to i + h*e."""
    total = i + h * e

    def rec(slots, remaining):
        if slots == 1:
            if remaining >= h:
                yield (remaining,)
            return
        for first in range(h, remaining - h * (slots - 1) + 1):
            for rest in rec(slots - 1, remaining - first):
                yield (first,) + rest

    return [Seq(s) for s in rec(e, total)]


def b_value(ring: RingParams, n: int, j: int) -> GradedPoly:
    """b_(n,j) = w_(e copies of j+1)(Delta_n); zero for n <= 0."""
    if n <= 0:
        return GradedPoly.zero(ring)
    sets = coproduct_sets(ring, n)
    return WittEvaluator(ring, sets.B[n]).generalized(
        Seq((j + 1,) * ring.e)
    )


def coproduct_mod_In(ring: RingParams, k: int, h: int, D: Optional[int] = None) -> FpPoly:
    """The reduced coproduct formula modulo I_h for 0 < k <= (e+1)h; asserted against Delta(t_k)."""
    e, q = ring.e, ring.q
    if not 0 < k <= (e + 1) * h:
        raise ValueError(f"k must satisfy 0 < k <= (e+1)h = {(e + 1) * h}")
    p = ring.p
    formula = FpPoly.zero(p)
    for i in range(k + 1):
        formula = formula + FpPoly.from_graded(t_poly(ring, i, 0) * t_poly(ring, k - i, 1).pow(q**i))
    for i in range(0, k - e * h + 1):
        b = reduce_mod_ideal(b_value(ring, k - e * h - i, h - 1), h)
        if not b:
            continue
        vsum = FpPoly.zero(p)
        for seq in s_sequences(i, h, e):
            vsum = vsum + FpPoly.from_graded(indexed_monomial(ring, "v", seq))
        formula = formula + b.pow(q**i) * vsum
    reduced = reduce_mod_ideal(coproduct_t(ring, k), h)
    if formula != reduced:
        raise ArithmeticError(f"reduced coproduct formula disagrees with Delta(t{k}) mod I_{h}")
    return formula
