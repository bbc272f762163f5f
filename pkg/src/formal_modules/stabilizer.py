"""Stabilizer algebras of height-h formal A-modules.

The Hopf algebra F_q[t_1, t_2, ...]/(t_j^(q^h) - t_j) is obtained from the
coproduct recursion by sending v_h -> 1, v_j -> 0 (j != h) and pi -> 0.
The Witt polynomials in that recursion divide by pi, so the reduction cannot
be taken first.  Instead the recursion runs over K in A[t]/(t^(q^h) - t),
which is pi-torsion free (the divisions stay exact and integral) while the
exponent rewrite keeps every polynomial small; reduction mod pi happens at
the very end.

Coefficients of reduced elements live in the prime field: every structure
constant is the image of an element of Z[pi].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coeff import RingParams
from .fpoly import FpPoly
from .gpoly import (
    GradedPoly,
    Var,
    _Packer,
    code_index,
    code_slot,
    is_generator,
    is_t,
    t_code,
    v_code,
)
from .report import Report
from .sequences import Seq, pi_A_coords
from .witt import WittEvaluator


# -- normal form ---------------------------------------------------------------


class ExponentRewrite:
    """Monomial rewrite t^n -> t^(((n-1) mod (Q-1)) + 1) on every t variable."""

    __slots__ = ("Q",)

    def __init__(self, Q: int):
        if Q < 2:
            raise ValueError("Q must be at least 2")
        self.Q = Q

    def __call__(self, mono: tuple) -> tuple:
        Q1 = self.Q - 1
        out = []
        changed = False
        for code, n in mono:
            if n >= self.Q and is_t(code):
                n = (n - 1) % Q1 + 1
                changed = True
            out.append((code, n))
        return tuple(out) if changed else mono

    def __eq__(self, other):
        return isinstance(other, ExponentRewrite) and other.Q == self.Q

    def __hash__(self):
        return hash(("ExponentRewrite", self.Q))

    def __repr__(self):
        return f"ExponentRewrite(Q={self.Q})"


# Elements of the stabilizer algebra are FpPoly values carrying an ExponentRewrite.
StabElement = FpPoly


def stab_normal_form(x: FpPoly, Q: Optional[int] = None) -> FpPoly:
    """Apply t^Q -> t to every t variable; Q defaults to the element's own rewrite."""
    if Q is None:
        if not isinstance(x.normalizer, ExponentRewrite):
            raise ValueError("element carries no exponent rewrite; pass Q")
        Q = x.normalizer.Q
    return x.with_normalizer(ExponentRewrite(Q))


@dataclass(frozen=True)
class StabAlgebra:
    """F_q[t_1..t_imax]/(t_j^(q^h) - t_j) with prime-field coefficients."""

    ring: RingParams
    h: int
    imax: Optional[int] = None

    def __post_init__(self):
        if self.h < 1:
            raise ValueError("height h must be >= 1")

    @property
    def Q(self) -> int:
        return self.ring.q**self.h

    @property
    def normalizer(self) -> ExponentRewrite:
        return ExponentRewrite(self.Q)

    def zero(self) -> FpPoly:
        return FpPoly.zero(self.ring.p, self.normalizer)

    def one(self) -> FpPoly:
        return FpPoly.one(self.ring.p, self.normalizer)

    def t(self, i: int, slot: int = 0) -> FpPoly:
        if i == 0:
            return self.one()
        if self.imax is not None and i > self.imax:
            raise ValueError(f"t{i} is beyond the generator cutoff {self.imax}")
        return FpPoly.var(self.ring.p, "t", i, slot, self.normalizer)

    def normal_form(self, x: FpPoly) -> FpPoly:
        return stab_normal_form(x, self.Q)

    def relations(self) -> list:
        n = self.imax or 0
        return [f"t{j}^{self.Q} = t{j}" for j in range(1, n + 1)]


# -- exact arithmetic in A[t]/(t^Q - t) over K ----------------------------------


class QuotientPoly:
    """K-coefficient polynomial in t variables with the rewrite t^Q -> t applied after every product.

    Only the methods the Witt evaluator needs are provided; ``bound``
    arguments are accepted and ignored (the quotient is not graded).
    """

    __slots__ = ("ring", "terms", "rewrite")

    def __init__(self, ring: RingParams, terms: dict, rewrite: ExponentRewrite):
        self.ring = ring
        self.terms = terms
        self.rewrite = rewrite

    @classmethod
    def from_terms(cls, ring, terms, rewrite):
        out: dict = {}
        for m, c in terms.items():
            m = rewrite(m)
            old = out.get(m)
            c = c if old is None else ring.add(old, c)
            if any(c):
                out[m] = c
            else:
                out.pop(m, None)
        return cls(ring, out, rewrite)

    @classmethod
    def from_graded(cls, poly: GradedPoly, rewrite: ExponentRewrite):
        return cls.from_terms(poly.ring, poly.terms, rewrite)

    def _like(self, terms):
        return QuotientPoly(self.ring, terms, self.rewrite)

    def zero_like(self):
        return self._like({})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def with_bound(self, bound=None):
        return self

    def add(self, other, bound=None):
        radd = self.ring.add
        terms = dict(self.terms)
        for m, c in other.terms.items():
            old = terms.get(m)
            if old is None:
                terms[m] = c
            else:
                s = radd(old, c)
                if any(s):
                    terms[m] = s
                else:
                    del terms[m]
        return self._like(terms)

    __add__ = add

    def __neg__(self):
        neg = self.ring.neg
        return self._like({m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self.add(-other)

    def scale(self, coords):
        ring = self.ring
        if ring.is_zero(coords):
            return self._like({})
        return self._like({m: ring.mul(c, coords) for m, c in self.terms.items()})

    def div_scalar(self, coords):
        return self.scale(self.ring.inv(coords))

    def mul(self, other, bound=None):
        a, b = self.terms, other.terms
        if not a or not b:
            return self._like({})
        ring = self.ring
        packer = _Packer.for_terms(a, b)
        pack, unpack = packer.pack, packer.unpack
        brows = [(pack(m), c) for m, c in b.items()]
        acc: dict = {}
        rmul, radd = ring.mul, ring.add
        for m1, c1 in a.items():
            k1 = pack(m1)
            for k2, c2 in brows:
                k = k1 + k2
                prod = rmul(c1, c2)
                old = acc.get(k)
                acc[k] = prod if old is None else radd(old, prod)
        rewrite = self.rewrite
        out: dict = {}
        for k, c in acc.items():
            m = rewrite(unpack(k))
            old = out.get(m)
            out[m] = c if old is None else radd(old, c)
        return self._like({m: c for m, c in out.items() if any(c)})

    __mul__ = mul

    def pow(self, n: int, bound=None):
        if n < 0:
            raise ValueError("negative power")
        result = self._like({(): self.ring.one()})
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return result

    def to_fp(self) -> FpPoly:
        """Reduce mod pi; raises ValueError on a non-integral coefficient."""
        ring = self.ring
        return FpPoly(ring.p, {m: ring.reduce(c) for m, c in self.terms.items()}, self.rewrite)


class PadicQuotientPoly:
    """Integral element of A[t]/(t^Q - t) known modulo p^N, with coordinates as plain integers.

    Every value met in the Witt recursion is integral and each difference
    quotient divides by exactly one pi, so fixed precision suffices:
    ``prec`` counts the p-adic digits still guaranteed, drops by one per
    division by pi, and must stay >= 1 for the final reduction mod pi.
    """

    __slots__ = ("ring", "terms", "rewrite", "M", "prec")

    def __init__(self, ring: RingParams, terms: dict, rewrite: ExponentRewrite, N: int, prec: Optional[int] = None):
        self.ring = ring
        self.terms = terms
        self.rewrite = rewrite
        self.M = ring.p**N
        self.prec = N if prec is None else prec

    def _like(self, terms, prec=None):
        obj = PadicQuotientPoly.__new__(PadicQuotientPoly)
        obj.ring, obj.terms, obj.rewrite, obj.M = self.ring, terms, self.rewrite, self.M
        obj.prec = self.prec if prec is None else prec
        return obj

    @classmethod
    def monomial(cls, ring, mono, rewrite, N):
        one = (1,) + (0,) * (ring.e - 1)
        return cls(ring, {rewrite(mono): one}, rewrite, N)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def with_bound(self, bound=None):
        return self

    def _mulc(self, a, b):
        M = self.M
        e = self.ring.e
        if e == 1:
            return ((a[0] * b[0]) % M,)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        up = self.ring.u * self.ring.p
        for k in range(2 * e - 2, e - 1, -1):
            if prod[k]:
                prod[k - e] += up * prod[k]
        return tuple(c % M for c in prod[:e])

    def add(self, other, bound=None):
        M = self.M
        terms = dict(self.terms)
        for m, c in other.terms.items():
            old = terms.get(m)
            if old is None:
                terms[m] = c
            else:
                s = tuple((x + y) % M for x, y in zip(old, c))
                if any(s):
                    terms[m] = s
                else:
                    del terms[m]
        return self._like(terms, min(self.prec, other.prec))

    __add__ = add

    def __neg__(self):
        M = self.M
        return self._like({m: tuple((-x) % M for x in c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self.add(-other)

    def _unit_coords(self, coords):
        """Rational coordinates of a p-integral element as integers mod M."""
        M, p = self.M, self.ring.p
        out = []
        for c in coords:
            num, den = int(c.numerator), int(c.denominator)
            if den % p == 0:
                raise ArithmeticError("scalar is not p-integral")
            out.append(num * pow(den, -1, M) % M)
        return tuple(out)

    def _div_pi(self):
        """Exact division by pi; loses one digit of precision."""
        ring = self.ring
        p, e, M = ring.p, ring.e, self.M
        uinv = pow(ring.u, -1, M)
        out = {}
        for m, c in self.terms.items():
            if c[0] % p:
                raise ArithmeticError("difference quotient is not divisible by pi")
            # a / pi = sum_(i>=1) a_i pi^(i-1) + (a_0 / (u p)) pi^(e-1)
            low = (c[0] // p) * uinv % M
            out[m] = tuple(c[1:]) + (low,) if e > 1 else (low,)
        return self._like({m: c for m, c in out.items() if any(c)}, self.prec - 1)

    def div_scalar(self, coords):
        ring = self.ring
        v = ring.valuation(coords)
        if v < 0 or v != int(v):
            raise ArithmeticError("unsupported divisor")
        v = int(v)
        unit = ring.div(coords, ring.pi_power(v))
        inv = self._unit_coords(ring.inv(unit))
        r = self._like({m: self._mulc(c, inv) for m, c in self.terms.items()})
        r.terms = {m: c for m, c in r.terms.items() if any(c)}
        for _ in range(v):
            r = r._div_pi()
        return r

    def scale(self, coords):
        ring = self.ring
        v = ring.valuation(coords)
        if v < 0:
            return self.div_scalar(ring.inv(coords))
        c = self._unit_coords(coords)
        return self._like({m: x for m, x in ((m, self._mulc(a, c)) for m, a in self.terms.items()) if any(x)})

    def mul(self, other, bound=None):
        a, b = self.terms, other.terms
        prec = min(self.prec, other.prec)
        if not a or not b:
            return self._like({}, prec)
        packer = _Packer.for_terms(a, b)
        pack, unpack = packer.pack, packer.unpack
        brows = [(pack(m), c) for m, c in b.items()]
        M = self.M
        rewrite = self.rewrite
        if self.ring.e == 1:
            acc: dict = {}
            get = acc.get
            for m1, c1 in a.items():
                k1 = pack(m1)
                x = c1[0]
                for k2, c2 in brows:
                    k = k1 + k2
                    acc[k] = get(k, 0) + x * c2[0]
            out: dict = {}
            for k, c in acc.items():
                m = rewrite(unpack(k))
                out[m] = out.get(m, 0) + c
            return self._like({m: (c % M,) for m, c in out.items() if c % M}, prec)
        acc = {}
        for m1, c1 in a.items():
            k1 = pack(m1)
            for k2, c2 in brows:
                k = k1 + k2
                prod = self._mulc(c1, c2)
                old = acc.get(k)
                acc[k] = prod if old is None else tuple(x + y for x, y in zip(old, prod))
        out = {}
        for k, c in acc.items():
            m = rewrite(unpack(k))
            old = out.get(m)
            out[m] = c if old is None else tuple(x + y for x, y in zip(old, c))
        out = {m: tuple(x % M for x in c) for m, c in out.items()}
        return self._like({m: c for m, c in out.items() if any(c)}, prec)

    __mul__ = mul

    def pow(self, n: int, bound=None):
        if n < 0:
            raise ValueError("negative power")
        one = (1,) + (0,) * (self.ring.e - 1)
        result = self._like({(): one})
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return result

    def to_fp(self) -> FpPoly:
        if self.prec < 1:
            raise ArithmeticError("precision exhausted before reduction mod pi")
        p = self.ring.p
        return FpPoly(p, {m: c[0] % p for m, c in self.terms.items()}, self.rewrite)


# -- reduced coproduct recursion ---------------------------------------------------


class _ReducedCoproduct:
    """The Delta_n sets of the coproduct recursion under v_h -> 1, v_j -> 0 (j != h)."""

    def __init__(self, ring: RingParams, h: int, exact: bool = False, precision: int = 40):
        self.ring = ring
        self.h = h
        self.exact = exact
        self.precision = precision
        self.rewrite = ExponentRewrite(ring.q**h)
        self.sets: dict = {}
        self.evaluators: dict = {}
        self.values: dict = {}

    def _t(self, i, slot):
        mono = () if i == 0 else ((t_code(i, slot), 1),)
        if self.exact:
            return QuotientPoly(self.ring, {mono: self.ring.one()}, self.rewrite)
        return PadicQuotientPoly.monomial(self.ring, mono, self.rewrite, self.precision)

    def _zero(self):
        if self.exact:
            return QuotientPoly(self.ring, {}, self.rewrite)
        return PadicQuotientPoly(self.ring, {}, self.rewrite, self.precision)

    def evaluator(self, n: int) -> WittEvaluator:
        if n not in self.evaluators:
            ring, h, q = self.ring, self.h, self.ring.q
            elems = [self._t(i, 0).mul(self._t(n - i, 1).pow(q**i)) for i in range(n + 1)]
            m = 1
            while m * h < n:
                # v_J survives only for J = (h, ..., h), where it becomes 1
                w = self.evaluator(n - m * h).generalized(Seq((h,) * m))
                if w:
                    elems.append(w)
                m += 1
            zero = self._zero()
            self.sets[n] = [e for e in elems if e]
            self.evaluators[n] = WittEvaluator(ring, self.sets[n], zero=zero)
        return self.evaluators[n]

    def coproduct(self, n: int) -> FpPoly:
        if n not in self.values:
            self.values[n] = self.evaluator(n).generalized(Seq()).to_fp()
        return self.values[n]

    def b(self, i: int, j: int) -> FpPoly:
        if i <= 0:
            return FpPoly.zero(self.ring.p, self.rewrite)
        return self.evaluator(i).generalized(Seq((j + 1,) * self.ring.e)).to_fp()


_REDUCED: dict = {}


def _reduced(ring: RingParams, h: int, exact: bool = False) -> _ReducedCoproduct:
    """Shared recursion state; ``exact`` selects rational arithmetic instead of fixed precision."""
    if h < 1:
        raise ValueError("height h must be >= 1")
    key = (ring, h, exact)
    if key not in _REDUCED:
        _REDUCED[key] = _ReducedCoproduct(ring, h, exact)
    return _REDUCED[key]


def delta_set(ring: RingParams, h: int, n: int) -> list:
    """The reduced Delta_n as a list of mod-pi two-slot elements."""
    rc = _reduced(ring, h)
    rc.evaluator(n)
    return [e.to_fp() for e in rc.sets[n]]


def b_element(ring: RingParams, h: int, i: int, j: int) -> FpPoly:
    """b_(i,j) = w_(e copies of j+1)(Delta_i) in the reduced setting; zero for i <= 0."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return _reduced(ring, h).b(i, j)


def low_degree_coproduct(ring: RingParams, h: int, k: int) -> FpPoly:
    """sum_i t_i (x) t_(k-i)^(q^i) + b_(k-eh, h-1), normal-formed."""
    alg = StabAlgebra(ring, h)
    q = ring.q
    acc = alg.zero()
    for i in range(k + 1):
        acc = acc + alg.t(i, 0) * alg.t(k - i, 1).pow(q**i)
    return acc + b_element(ring, h, k - ring.e * h, h - 1)


def stab_coproduct(ring: RingParams, h: int, k: int) -> FpPoly:
    """Delta(t_k) in the stabilizer algebra (two slots, normal form)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return StabAlgebra(ring, h).one()
    general = _reduced(ring, h).coproduct(k)
    if k <= (ring.e + 1) * h:
        low = low_degree_coproduct(ring, h, k)
        if low != general:
            raise ArithmeticError(f"low-degree coproduct formula disagrees with the general one on t{k}")
    return general


def reduce_to_stabilizer(poly: FpPoly, h: int, q: int) -> FpPoly:
    """Send v_h -> 1, every other generator -> 0, then normal-form."""

    def fn(m):
        out = []
        for code, k in m:
            if is_generator(code):
                if code_index(code) != h:
                    return None
                continue
            out.append((code, k))
        return tuple(out)

    return poly.map_monomials(fn).with_normalizer(ExponentRewrite(q**h))


def _slot_map(delta: FpPoly, base: int) -> FpPoly:
    """Move the slots of a two-slot element to (base, base+1)."""
    return delta.relabel(lambda c: t_code(code_index(c), code_slot(c) + base) if is_t(c) else c)


def stab_coassoc_check(ring: RingParams, h: int, kmax: int) -> Report:
    """(Delta (x) 1) Delta(t_k) = (1 (x) Delta) Delta(t_k) and both counit laws, k <= kmax."""
    report = Report()
    alg = StabAlgebra(ring, h)
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "h": h}
    deltas = {k: stab_coproduct(ring, h, k) for k in range(1, kmax + 1)}
    for k in range(0, kmax + 1):
        if k == 0:
            one = alg.one()
            report.add("stabilizer coassociativity", dict(params, k=0), one * one == one)
            continue
        dk = deltas[k]
        left_map, right_map = {}, {}
        for i in range(1, k + 1):
            left_map[t_code(i, 0)] = deltas[i]
            left_map[t_code(i, 1)] = alg.t(i, 2)
            right_map[t_code(i, 1)] = _slot_map(deltas[i], 1)
        left = dk.substitute(left_map)
        right = dk.substitute(right_map)
        report.add("stabilizer coassociativity", dict(params, k=k), left == right,
                   None if left == right else left - right)
        tk = alg.t(k, 0)
        lc = dk.set_zero(lambda c: is_t(c) and code_slot(c) == 1)
        rc = dk.set_zero(lambda c: is_t(c) and code_slot(c) == 0)
        rc = rc.relabel(lambda c: t_code(code_index(c), 0) if is_t(c) else c)
        report.add("stabilizer counit", dict(params, k=k), lc == tk and rc == tk,
                   None if lc == tk and rc == tk else f"{lc} ; {rc}")
    return report


def frobenius_check(ring: RingParams, h: int, imax: int = 2, jmax: int = 2) -> Report:
    """b_(i,j) = (b_(i,0))^(p^(dj)) in normal form."""
    report = Report()
    p, d = ring.p, ring.d
    for i in range(1, imax + 1):
        b0 = b_element(ring, h, i, 0)
        for j in range(jmax + 1):
            bij = b_element(ring, h, i, j)
            ok = bij == b0.pow(p ** (d * j))
            report.add("b Frobenius congruence", {"p": ring.p, "e": ring.e, "f": ring.f, "h": h, "i": i, "j": j},
                       ok, None if ok else bij)
    return report


# -- presentation -------------------------------------------------------------------


def specialized_eta_R(ring: RingParams, h: int, kmax: int) -> list:
    """eta_R(v_k), k <= kmax, with the left generators v_j (j != h) set to 0, over K.

    Same triangular solve as the unspecialized right unit; specialization is a
    ring map, so it can be applied to the log coefficients up front.
    """
    q = ring.q
    logs = specialized_logs(ring, "araki", h, kmax)
    t = [GradedPoly.one(ring)] + [GradedPoly.var(ring, "t", i) for i in range(1, kmax + 1)]
    er_logs = []
    for i in range(kmax + 1):
        acc = GradedPoly.zero(ring)
        for j in range(i + 1):
            if logs[j]:
                acc = acc + logs[j] * t[i - j].pow(q**j)
        er_logs.append(acc)
    out = [GradedPoly.const(ring, ring.pi_power(1))]
    for k in range(1, kmax + 1):
        lead = ring.sub(ring.pi_power(1), ring.pi_power(q**k))
        acc = er_logs[k].scale(lead)
        for i in range(1, k):
            acc = acc - er_logs[i] * out[k - i].pow(q**i)
        if not acc.is_integral():
            raise ArithmeticError(f"specialized eta_R(v{k}) is not pi-integral")
        out.append(acc)
    return out


def localized_rewrite(h: int, Q: int, q: int, below: int):
    """Rewrite t_i^Q -> v_h^(q^i - 1) t_i for i < below (the already established relations)."""
    vh = v_code(h)

    def fn(m):
        out = {}
        extra = 0
        for code, n in m:
            if is_t(code) and code_index(code) < below and n >= Q:
                r = (n - 1) // (Q - 1)
                n -= r * (Q - 1)
                extra += r * (q ** code_index(code) - 1)
            out[code] = out.get(code, 0) + n
        if extra:
            out[vh] = out.get(vh, 0) + extra
        return tuple(sorted(out.items()))

    return fn


def relation_poly(ring: RingParams, h: int, i: int) -> FpPoly:
    """v_h t_i^(q^h) - v_h^(q^i) t_i over the prime field."""
    p, q, Q = ring.p, ring.q, ring.q**h
    vh = v_code(h)
    ti = t_code(i)
    return FpPoly(p, {((vh, 1), (ti, Q)): 1, ((vh, q**i), (ti, 1)): p - 1})


def stab_presentation(ring: RingParams, h: int, kmax: int, with_coproducts: bool = True):
    """Derive the relations t_i^(q^h) = t_i (1 <= i <= kmax) from eta_R(v_(h+i)) mod (pi, v_j : j != h).

    Checks: eta_R(v_k) = 0 for 0 < k < h, eta_R(v_h) = v_h, and for each
    i the reduction of eta_R(v_(h+i)), rewritten with the relations for
    smaller i, is a nonzero prime-field multiple of v_h t_i^(q^h) - v_h^(q^i) t_i,
    i.e. of t_i eta_R(v_h)^(q^i) - v_h t_i^(q^h).  Returns (presentation, report).
    """
    if h < 1:
        raise ValueError("height h must be >= 1")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    report = Report()
    p, q = ring.p, ring.q
    Q = q**h
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "h": h}
    etas = specialized_eta_R(ring, h, h + kmax)
    reduced = [FpPoly.from_graded(e) for e in etas]
    for k in range(1, h):
        report.add("eta_R(v_k) vanishes below the height", dict(params, k=k), not reduced[k],
                   reduced[k] or None)
    vh = FpPoly.var(p, "v", h)
    report.add("eta_R(v_h) = v_h", params, reduced[h] == vh, None if reduced[h] == vh else reduced[h])
    for i in range(1, kmax + 1):
        residue = reduced[h + i].map_monomials(localized_rewrite(h, Q, q, i))
        rel = relation_poly(ring, h, i)
        ok = False
        for c in range(1, p):
            if residue == rel.scale(c):
                ok = True
                break
        report.add("stabilizer relation t_i eta_R(v_h)^(q^i) = v_h t_i^(q^h)", dict(params, i=i), ok,
                   None if ok else residue)
    alg = StabAlgebra(ring, h, kmax)
    presentation = {
        "p": ring.p,
        "e": ring.e,
        "f": ring.f,
        "h": h,
        "imax": kmax,
        "generators": [f"t{j}" for j in range(1, kmax + 1)],
        "relations": [
            {"lhs": {"family": "t", "index": j, "exp": Q}, "rhs": {"family": "t", "index": j, "exp": 1}}
            for j in range(1, kmax + 1)
        ],
    }
    if with_coproducts:
        presentation["coproducts"] = {f"t{k}": stab_coproduct(ring, h, k).to_json() for k in range(1, kmax + 1)}
    return presentation, report


# -- equivariant thickening ----------------------------------------------------------


def specialized_logs(ring: RingParams, convention: str, h: int, n: int) -> list:
    """Log coefficients under generator_j -> 0 for j != h, by the specialized recursion."""
    from .universal import generator_family

    family = generator_family(convention)
    q = ring.q
    out = [GradedPoly.one(ring)]
    gen = GradedPoly.var(ring, family, h)
    for m in range(1, n + 1):
        acc = GradedPoly.zero(ring)
        if m >= h:
            acc = out[m - h] * gen.pow(q ** (m - h))
        if convention == "araki":
            denom = ring.sub(ring.pi_power(1), ring.pi_power(q**m))
        else:
            denom = ring.pi_power(1)
        out.append(acc.div_scalar(denom))
    return out


def specialize(poly: GradedPoly, h: int) -> GradedPoly:
    """Set every generator other than the h-th to zero."""
    return poly.set_zero(lambda c: is_generator(c) and code_index(c) != h)


def generators_from_logs(ring: RingParams, convention: str, n: int, h: Optional[int] = None) -> list:
    """Generators as polynomials in free log variables x_j (degree 2(q^j - 1)).

    Solves pi l_m = sum_(i<m) l_i g_(m-i)^(q^i) (plus l_m pi^(q^m) for Araki)
    for g_m.  If ``h`` is given, l_j is set to 0 for h not dividing j.
    """
    q = ring.q
    logs = [GradedPoly.one(ring)]
    for j in range(1, n + 1):
        if h is not None and j % h:
            logs.append(GradedPoly.zero(ring))
        else:
            logs.append(GradedPoly.var(ring, "x", j, deg=2 * (q**j - 1)))
    gens = [None]
    for m in range(1, n + 1):
        lead = ring.sub(ring.pi_power(1), ring.pi_power(q**m)) if convention == "araki" else ring.pi_power(1)
        acc = logs[m].scale(lead)
        for i in range(1, m):
            if logs[i] and gens[m - i]:
                acc = acc - logs[i] * gens[m - i].pow(q**i)
        gens.append(acc)
    return gens


def thickening_check(ring: RingParams, h: int, nmax: int) -> Report:
    """Log conditions for the equivariant thickening A[V_h] and the vanishing lemma, j <= nmax."""
    if h < 1:
        raise ValueError("height h must be >= 1")
    report = Report()
    q = ring.q
    params = {"p": ring.p, "e": ring.e, "f": ring.f, "h": h}
    top = h * nmax
    for convention in ("araki", "hazewinkel"):
        logs = specialized_logs(ring, convention, h, top)
        bad = [i for i in range(1, top + 1) if i % h and logs[i]]
        report.add("specialized logs vanish off multiples of h", dict(params, convention=convention, n=top),
                   not bad, f"alpha_{bad[0]} = {logs[bad[0]]}" if bad else None)
        gens = generators_from_logs(ring, convention, top, h)
        bad = [i for i in range(1, top + 1) if i % h and gens[i]]
        report.add("log vanishing forces generator vanishing", dict(params, convention=convention, n=top),
                   not bad, f"g_{bad[0]} = {gens[bad[0]]}" if bad else None)
    logs = specialized_logs(ring, "hazewinkel", h, top)
    alpha_h = logs[h]
    pi_alpha_h = alpha_h.scale(ring.pi_power(1))
    for j in range(1, nmax + 1):
        expo = (q ** (h * j) - 1) // (q**h - 1)
        expected = pi_alpha_h.pow(expo).scale(ring.pi_power(-j))
        ok = logs[h * j] == expected
        report.add("thickening log formula alpha_hj = pi^-j (pi alpha_h)^((q^hj-1)/(q^h-1))",
                   dict(params, j=j), ok, None if ok else logs[h * j])
    # Araki analogue: alpha_hj = v_h^((q^hj-1)/(q^h-1)) / Pi_A(h, ..., h)
    logs = specialized_logs(ring, "araki", h, top)
    vh = GradedPoly.var(ring, "v", h)
    for j in range(1, nmax + 1):
        expo = (q ** (h * j) - 1) // (q**h - 1)
        expected = vh.pow(expo).div_scalar(pi_A_coords(ring, Seq((h,) * j)))
        ok = logs[h * j] == expected
        report.add("araki thickening log formula", dict(params, j=j), ok, None if ok else logs[h * j])
    return report
