"""Sparse graded polynomials over K in the families v_i, V_i, t_i (per tensor slot) and x_i.

A monomial is a tuple of ``(code, exponent)`` pairs sorted by variable code.
The code packs (family rank, index, declared degree) so that sorting codes
ranks variables as v < V < t (slot 0) < t (slot 1) < t (slot 2) < x, then by
index.  Coefficients are raw coordinate tuples (see :mod:`coeff`).

Degrees follow deg v_i = deg V_i = deg t_i = 2(q^i - 1); x variables carry
whatever degree the caller declares (default 0).  A truncation bound ``D``
discards every term of degree > D; ``None`` means no truncation.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Mapping, NamedTuple, Optional

from gmpy2 import mpq

from .coeff import Coords, KElement, RingParams, format_coords, parse_rational, _fmt_rational

_RANKS = {"v": 0, "V": 1, "t": 2, "x": 5}
_IDX_SHIFT = 24
_RANK_SHIFT = 48
_MASK = (1 << 24) - 1


class Var(NamedTuple):
    family: str
    index: int
    slot: int = 0
    deg: int = 0  # only meaningful for x

    @property
    def code(self) -> int:
        if self.family == "t":
            if not 0 <= self.slot <= 2:
                raise ValueError(f"tensor slot {self.slot} out of range")
            rank = 2 + self.slot
        else:
            rank = _RANKS[self.family]
        deg = self.deg if self.family == "x" else 0
        return (rank << _RANK_SHIFT) | (self.index << _IDX_SHIFT) | deg

    @classmethod
    def from_code(cls, code: int) -> "Var":
        rank = code >> _RANK_SHIFT
        index = (code >> _IDX_SHIFT) & _MASK
        if rank in (2, 3, 4):
            return cls("t", index, rank - 2)
        family = {0: "v", 1: "V", 5: "x"}[rank]
        return cls(family, index, 0, code & _MASK if family == "x" else 0)

    def __str__(self):
        if self.family == "t":
            return f"t{self.index}" + "'" * self.slot
        return f"{self.family}{self.index}"


def code_rank(code: int) -> int:
    return code >> _RANK_SHIFT


def code_index(code: int) -> int:
    return (code >> _IDX_SHIFT) & _MASK


def code_slot(code: int) -> int:
    rank = code >> _RANK_SHIFT
    return rank - 2 if rank in (2, 3, 4) else 0


def t_code(index: int, slot: int = 0) -> int:
    return ((2 + slot) << _RANK_SHIFT) | (index << _IDX_SHIFT)


def v_code(index: int, family: str = "v") -> int:
    return (_RANKS[family] << _RANK_SHIFT) | (index << _IDX_SHIFT)


def is_t(code: int) -> bool:
    return 2 <= (code >> _RANK_SHIFT) <= 4


def is_generator(code: int) -> bool:
    return (code >> _RANK_SHIFT) <= 1


def var_degree(code: int, q: int) -> int:
    rank = code >> _RANK_SHIFT
    if rank == 5:
        return code & _MASK
    return 2 * (q ** ((code >> _IDX_SHIFT) & _MASK) - 1)


_DEG_CACHE: dict[int, dict] = {}


def mono_degree(mono: tuple, q: int) -> int:
    cache = _DEG_CACHE.setdefault(q, {})
    d = cache.get(mono)
    if d is None:
        d = sum(k * var_degree(c, q) for c, k in mono)
        if len(cache) > 2_000_000:
            cache.clear()
        cache[mono] = d
    return d


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for c, k in m2:
        d[c] = d.get(c, 0) + k
    return tuple(sorted(d.items()))


def mono_pow(m: tuple, n: int) -> tuple:
    if n == 0:
        return ()
    return tuple((c, k * n) for c, k in m)


def lex_key(mono: tuple) -> tuple:
    """Sort key: compare exponents starting from the highest-ranked variable."""
    return tuple(reversed(mono))


def lex_compare(m1, m2) -> int:
    """-1, 0 or 1 comparing two monomials (GradedPoly monomials or tuples)."""
    k1, k2 = lex_key(_as_mono(m1)), lex_key(_as_mono(m2))
    return (k1 > k2) - (k1 < k2)


def _as_mono(m) -> tuple:
    if isinstance(m, GradedPoly):
        if len(m.terms) != 1:
            raise ValueError("expected a single monomial")
        return next(iter(m.terms))
    if isinstance(m, Mapping):
        return _mono_from_mapping(m)
    return tuple(m)


def _mono_from_mapping(mapping: Mapping) -> tuple:
    out: dict[int, int] = {}
    for var, k in mapping.items():
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            continue
        code = var.code if isinstance(var, Var) else int(var)
        out[code] = out.get(code, 0) + k
    return tuple(sorted(out.items()))


def _min_bound(*bounds):
    vals = [b for b in bounds if b is not None]
    return min(vals) if vals else None


class GradedPoly:
    """Immutable sparse polynomial over K with a truncation bound."""

    __slots__ = ("ring", "terms", "bound")

    def __init__(self, ring: RingParams, terms: Optional[dict] = None, bound: Optional[int] = None, *, _clean=False):
        self.ring = ring
        self.bound = bound
        if terms is None:
            terms = {}
        elif not _clean:
            q = ring.q
            terms = {
                m: c
                for m, c in terms.items()
                if any(c) and (bound is None or mono_degree(m, q) <= bound)
            }
        self.terms = terms

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring, bound=None):
        return cls(ring, {}, bound, _clean=True)

    @classmethod
    def one(cls, ring, bound=None):
        return cls(ring, {(): ring.one()}, bound, _clean=True)

    @classmethod
    def const(cls, ring, value, bound=None):
        if isinstance(value, KElement):
            coords = value.coords
        elif isinstance(value, tuple):
            coords = value
        else:
            coords = ring.const(value)
        return cls(ring, {(): coords}, bound)

    @classmethod
    def var(cls, ring, family: str, index: int, slot: int = 0, deg: int = 0, bound=None):
        code = Var(family, index, slot, deg).code
        return cls(ring, {((code, 1),): ring.one()}, bound)

    @classmethod
    def monomial(cls, ring, exps, coeff=None, bound=None):
        mono = _as_mono(exps) if not isinstance(exps, Mapping) else _mono_from_mapping(exps)
        if coeff is None:
            coords = ring.one()
        elif isinstance(coeff, KElement):
            coords = coeff.coords
        elif isinstance(coeff, tuple):
            coords = coeff
        else:
            coords = ring.const(coeff)
        return cls(ring, {mono: coords}, bound)

    def _wrap(self, terms, bound):
        return GradedPoly(self.ring, terms, bound, _clean=True)

    # -- basic queries ---------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, KElement)) or type(other).__name__ == "mpq":
            return self.terms == GradedPoly.const(self.ring, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def degrees(self) -> set:
        q = self.ring.q
        return {mono_degree(m, q) for m in self.terms}

    def degree_of(self, mono) -> int:
        return mono_degree(mono, self.ring.q)

    def min_degree(self):
        ds = self.degrees()
        return min(ds) if ds else None

    def max_degree(self):
        ds = self.degrees()
        return max(ds) if ds else None

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        if len(ds) != 1:
            return False
        return degree is None or ds == {degree}

    def variables(self) -> set:
        return {Var.from_code(c) for m in self.terms for c, _ in m}

    def codes(self) -> set:
        return {c for m in self.terms for c, _ in m}

    def coeff(self, exps) -> KElement:
        mono = _mono_from_mapping(exps) if isinstance(exps, Mapping) else _as_mono(exps)
        return KElement(self.ring, self.terms.get(mono, self.ring.zero()))

    def constant_term(self) -> KElement:
        return KElement(self.ring, self.terms.get((), self.ring.zero()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: lex_key(mc[0]))

    def valuation(self) -> float:
        """Minimum pi-adic valuation over the coefficients (+inf for zero)."""
        ring = self.ring
        return min((ring.valuation(c) for c in self.terms.values()), default=math.inf)

    def is_integral(self) -> bool:
        return self.valuation() >= 0

    def non_integral_terms(self):
        ring = self.ring
        return [(m, c) for m, c in self.terms.items() if ring.valuation(c) < 0]

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if isinstance(other, GradedPoly):
            if other.ring != self.ring:
                raise ValueError("mismatched ring parameters")
            return other
        return GradedPoly.const(self.ring, other)

    def add(self, other, bound=None):
        other = self._check(other)
        bound = _min_bound(self.bound, other.bound, bound)
        ring = self.ring
        q = ring.q
        terms = dict(self.terms)
        radd = ring.add
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
        if bound is not None and (
            (self.bound is None or self.bound > bound) or (other.bound is None or other.bound > bound)
        ):
            terms = {m: c for m, c in terms.items() if mono_degree(m, q) <= bound}
        return self._wrap(terms, bound)

    def __add__(self, other):
        return self.add(other)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.neg
        return self._wrap({m: neg(c) for m, c in self.terms.items()}, self.bound)

    def __sub__(self, other):
        return self.add(-self._check(other))

    def __rsub__(self, other):
        return self._check(other).add(-self)

    def scale(self, c) -> "GradedPoly":
        """Multiply by a scalar (KElement, coordinate tuple, int or rational)."""
        ring = self.ring
        if isinstance(c, KElement):
            coords = c.coords
        elif isinstance(c, tuple):
            coords = c
        else:
            coords = ring.const(c)
        if ring.is_zero(coords):
            return GradedPoly.zero(ring, self.bound)
        if ring.e == 1:
            x = coords[0]
            return self._wrap({m: (v[0] * x,) for m, v in self.terms.items()}, self.bound)
        mul = ring.mul
        return self._wrap({m: mul(v, coords) for m, v in self.terms.items()}, self.bound)

    def div_scalar(self, c) -> "GradedPoly":
        ring = self.ring
        coords = c.coords if isinstance(c, KElement) else (c if isinstance(c, tuple) else ring.const(c))
        return self.scale(ring.inv(coords))

    def mul(self, other, bound=None) -> "GradedPoly":
        other = self._check(other)
        bound = _min_bound(self.bound, other.bound, bound)
        return self._wrap(_mul_terms(self.ring, self.terms, other.terms, bound), bound)

    def __mul__(self, other):
        if isinstance(other, GradedPoly):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def pow(self, n: int, bound=None) -> "GradedPoly":
        if n < 0:
            raise ValueError("negative power")
        bound = _min_bound(self.bound, bound)
        return self._wrap(_pow_terms(self.ring, self.terms, n, bound), bound)

    def __pow__(self, n: int):
        return self.pow(n)

    def truncate(self, bound: Optional[int]) -> "GradedPoly":
        bound = _min_bound(self.bound, bound)
        if bound is None:
            return self
        q = self.ring.q
        return self._wrap({m: c for m, c in self.terms.items() if mono_degree(m, q) <= bound}, bound)

    def with_bound(self, bound: Optional[int]) -> "GradedPoly":
        """Same terms, restated bound (terms above it are dropped)."""
        if bound is None:
            return self._wrap(dict(self.terms), None)
        q = self.ring.q
        return self._wrap({m: c for m, c in self.terms.items() if mono_degree(m, q) <= bound}, bound)

    # -- structural maps -------------------------------------------------

    def grade(self) -> dict:
        """Homogeneous components keyed by degree."""
        q = self.ring.q
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(mono_degree(m, q), {})[m] = c
        return {d: self._wrap(t, self.bound) for d, t in sorted(parts.items())}

    def component(self, degree: int) -> "GradedPoly":
        q = self.ring.q
        return self._wrap({m: c for m, c in self.terms.items() if mono_degree(m, q) == degree}, self.bound)

    def map_monomials(self, fn: Callable[[tuple], Optional[tuple]]) -> "GradedPoly":
        """Apply a monomial relabelling; ``None`` from ``fn`` drops the term."""
        ring = self.ring
        out: dict = {}
        for m, c in self.terms.items():
            m2 = fn(m)
            if m2 is None:
                continue
            old = out.get(m2)
            out[m2] = c if old is None else ring.add(old, c)
        out = {m: c for m, c in out.items() if any(c)}
        return self._wrap(out, self.bound)

    def map_coeffs(self, fn: Callable[[Coords], Coords]) -> "GradedPoly":
        out = {}
        for m, c in self.terms.items():
            c2 = fn(c)
            if any(c2):
                out[m] = c2
        return self._wrap(out, self.bound)

    def relabel(self, code_map: Callable[[int], int]) -> "GradedPoly":
        return self.map_monomials(lambda m: tuple(sorted((code_map(c), k) for c, k in m)))

    def shift_slots(self, offset: int) -> "GradedPoly":
        """Move every t variable from slot s to slot s + offset."""

        def shift(code):
            if is_t(code):
                return t_code(code_index(code), code_slot(code) + offset)
            return code

        return self.relabel(shift)

    def set_zero(self, predicate: Callable[[int], bool]) -> "GradedPoly":
        """Substitute 0 for every variable whose code satisfies ``predicate``."""
        return self.map_monomials(lambda m: None if any(predicate(c) for c, _ in m) else m)

    def substitute(self, mapping: Mapping, bound=None) -> "GradedPoly":
        """Replace variables by polynomials; unmapped variables stay."""
        ring = self.ring
        bound = _min_bound(self.bound, bound)
        images: dict[int, GradedPoly] = {}
        for key, val in mapping.items():
            code = key.code if isinstance(key, Var) else int(key)
            images[code] = val if isinstance(val, GradedPoly) else GradedPoly.const(ring, val)
        power_cache: dict = {}

        def img_pow(code, k):
            key = (code, k)
            r = power_cache.get(key)
            if r is None:
                r = _pow_terms(ring, images[code].terms, k, bound)
                power_cache[key] = r
            return r

        total: dict = {}
        radd = ring.add
        for m, c in self.terms.items():
            kept = tuple((code, k) for code, k in m if code not in images)
            acc = {kept: c}
            for code, k in m:
                if code in images:
                    acc = _mul_terms(ring, acc, img_pow(code, k), bound)
                    if not acc:
                        break
            for mm, cc in acc.items():
                old = total.get(mm)
                total[mm] = cc if old is None else radd(old, cc)
        total = {m: c for m, c in total.items() if any(c)}
        return self._wrap(total, bound)

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        pieces = []
        one = ring.one()
        minus_one = ring.neg(one)
        for m, c in self.sorted_terms():
            mono = "*".join(_fmt_var(code, k) for code, k in m)
            if not mono:
                pieces.append(format_coords(c))
            elif c == one:
                pieces.append(mono)
            elif c == minus_one:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_coords(c)}*{mono}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"GradedPoly({self})"

    def to_json(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            vars_ = []
            for code, k in m:
                var = Var.from_code(code)
                entry = {"family": var.family, "index": var.index, "slot": var.slot, "exp": k}
                if var.family == "x" and var.deg:
                    entry["deg"] = var.deg
                vars_.append(entry)
            terms.append({"coeff": [_fmt_rational(x) for x in c], "vars": vars_})
        return {"bound": self.bound, "terms": terms}

    @classmethod
    def from_json(cls, ring: RingParams, data) -> "GradedPoly":
        if isinstance(data, list):
            data = {"bound": None, "terms": data}
        terms = {}
        for t in data["terms"]:
            coords = tuple(parse_rational(s) for s in t["coeff"])
            if len(coords) != ring.e:
                raise ValueError("coefficient length does not match ring")
            mono = {}
            for v in t["vars"]:
                var = Var(v["family"], int(v["index"]), int(v.get("slot", 0)), int(v.get("deg", 0)))
                mono[var] = mono.get(var, 0) + int(v["exp"])
            key = _mono_from_mapping(mono)
            terms[key] = ring.add(terms[key], coords) if key in terms else coords
        return cls(ring, terms, data.get("bound"))


def _fmt_var(code: int, k: int) -> str:
    name = str(Var.from_code(code))
    return name if k == 1 else f"{name}^{k}"


# -- kernels -------------------------------------------------------------


_FIELD = 32
_FIELD_MASK = (1 << _FIELD) - 1


class _Packer:
    """Packs monomials over a fixed variable set into single integers.

    Each exponent gets a 32-bit field, so multiplying monomials becomes
    integer addition.
    """

    __slots__ = ("codes", "shift")

    def __init__(self, codes):
        self.codes = sorted(codes)
        self.shift = {c: _FIELD * i for i, c in enumerate(self.codes)}

    @classmethod
    def for_terms(cls, *term_dicts):
        return cls({c for terms in term_dicts for m in terms for c, _ in m})

    def pack(self, mono: tuple) -> int:
        shift = self.shift
        key = 0
        for c, k in mono:
            key |= k << shift[c]
        return key

    def unpack(self, key: int) -> tuple:
        out = []
        codes = self.codes
        i = 0
        while key:
            k = key & _FIELD_MASK
            if k:
                out.append((codes[i], k))
            key >>= _FIELD
            i += 1
        return tuple(out)


def _mul_terms(ring: RingParams, a: dict, b: dict, bound) -> dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    q = ring.q
    if len(b) == 1:
        ((mb, cb),) = b.items()
        out = {}
        for m, c in a.items():
            mm = mono_mul(m, mb)
            if bound is not None and mono_degree(mm, q) > bound:
                continue
            cc = ring.mul(c, cb)
            if any(cc):
                out[mm] = cc
        return out
    packer = _Packer.for_terms(a, b)
    pack = packer.pack
    brows = sorted(((mono_degree(m, q), pack(m), c) for m, c in b.items()), key=lambda r: r[0])
    arows = [(mono_degree(m, q), pack(m), c) for m, c in a.items()]
    if bound is not None:
        limit = bound - brows[0][0]
        arows = [r for r in arows if r[0] <= limit]
    unpack = packer.unpack
    if ring.e == 1:
        acc: dict = {}
        get = acc.get
        if bound is None:
            bflat = [(k2, c2[0]) for _, k2, c2 in brows]
            for _, k1, c1 in arows:
                x1 = c1[0]
                for k2, y in bflat:
                    k = k1 + k2
                    acc[k] = get(k, 0) + x1 * y
        else:
            for d1, k1, c1 in arows:
                x1 = c1[0]
                room = bound - d1
                for d2, k2, c2 in brows:
                    if d2 > room:
                        break
                    k = k1 + k2
                    acc[k] = get(k, 0) + x1 * c2[0]
        return {unpack(k): (c,) for k, c in acc.items() if c}
    e = ring.e
    up = ring._up
    acc = {}
    for d1, k1, c1 in arows:
        for d2, k2, c2 in brows:
            if bound is not None and d1 + d2 > bound:
                break
            k = k1 + k2
            slot = acc.get(k)
            if slot is None:
                slot = [mpq(0)] * (2 * e - 1)
                acc[k] = slot
            for i, x in enumerate(c1):
                if x:
                    for j, y in enumerate(c2):
                        if y:
                            slot[i + j] += x * y
    out = {}
    for k, slot in acc.items():
        for n in range(2 * e - 2, e - 1, -1):
            if slot[n]:
                slot[n - e] += up * slot[n]
        c = tuple(slot[:e])
        if any(c):
            out[unpack(k)] = c
    return out


_MULTINOMIAL_LIMIT = 400_000


def _count_multinomial(n: int, t: int) -> int:
    return math.comb(n + t - 1, t - 1)


def _pow_terms(ring: RingParams, terms: dict, n: int, bound) -> dict:
    if n == 0:
        return {(): ring.one()}
    if not terms:
        return {}
    if n == 1:
        if bound is None:
            return dict(terms)
        q = ring.q
        return {m: c for m, c in terms.items() if mono_degree(m, q) <= bound}
    q = ring.q
    if bound is not None:
        mind = min(mono_degree(m, q) for m in terms)
        if mind * n > bound:
            return {}
    if len(terms) == 1:
        ((m, c),) = terms.items()
        mm = mono_pow(m, n)
        if bound is not None and mono_degree(mm, q) > bound:
            return {}
        return {mm: ring.pow(c, n)}
    if _count_multinomial(n, len(terms)) <= _MULTINOMIAL_LIMIT:
        return _pow_multinomial(ring, terms, n, bound)
    # split the exponent through a small prime factor when possible
    for small in (2, 3, 5, 7):
        if n % small == 0 and n > small:
            inner = _pow_terms(ring, terms, n // small, bound)
            return _pow_terms(ring, inner, small, bound)
    half = _pow_terms(ring, terms, n // 2, bound)
    sq = _mul_terms(ring, half, half, bound)
    if n % 2:
        sq = _mul_terms(ring, sq, terms, bound)
    return sq


def _pow_multinomial(ring: RingParams, terms: dict, n: int, bound) -> dict:
    q = ring.q
    packer = _Packer.for_terms(terms)
    items = sorted(terms.items(), key=lambda mc: mono_degree(mc[0], q))
    degs = [mono_degree(m, q) for m, _ in items]
    keys = [packer.pack(m) for m, _ in items]
    t = len(items)
    cpow = [[ring.one()] for _ in range(t)]
    fact = [1] * (n + 1)
    for i in range(2, n + 1):
        fact[i] = fact[i - 1] * i
    # lightest degree among the remaining terms, for pruning
    suffix_min = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix_min[i] = degs[i] if i == t - 1 else min(degs[i], suffix_min[i + 1])
    acc: dict = {}
    e1 = ring.e == 1
    fn = fact[n]

    def cp(i, k):
        lst = cpow[i]
        while len(lst) <= k:
            lst.append(ring.mul(lst[-1], items[i][1]))
        return lst[k]

    def rec(i, remaining, deg, key, coeff, denom):
        if i == t - 1:
            k = remaining
            if bound is not None and deg + k * degs[i] > bound:
                return
            c = ring.mul(coeff, cp(i, k)) if k else coeff
            multi = fn // (denom * fact[k])
            key += k * keys[i]
            if e1:
                acc[key] = acc.get(key, 0) + c[0] * multi
            else:
                val = ring.scale(c, multi)
                old = acc.get(key)
                acc[key] = val if old is None else ring.add(old, val)
            return
        for k in range(remaining, -1, -1):
            d = deg + k * degs[i]
            if bound is not None and d + (remaining - k) * suffix_min[i + 1] > bound:
                continue
            c = ring.mul(coeff, cp(i, k)) if k else coeff
            rec(i + 1, remaining - k, d, key + k * keys[i], c, denom * fact[k])

    rec(0, n, 0, 0, ring.one(), 1)
    unpack = packer.unpack
    if e1:
        return {unpack(k): (c,) for k, c in acc.items() if c}
    return {unpack(k): c for k, c in acc.items() if any(c)}


# -- public helpers --------------------------------------------------


def poly_arith(a: GradedPoly, b: GradedPoly, op: str, D: Optional[int] = None) -> GradedPoly:
    if op == "add":
        return a.add(b, D)
    if op == "sub":
        return a.add(-b, D)
    if op == "mul":
        return a.mul(b, D)
    raise ValueError(f"unknown operation {op!r}")


def grade(a: GradedPoly) -> dict:
    return a.grade()


def poly_sum(ring: RingParams, polys: Iterable[GradedPoly], bound=None) -> GradedPoly:
    total = GradedPoly.zero(ring, bound)
    for p in polys:
        total = total.add(p, bound)
    return total


def v(ring, i, bound=None):
    return GradedPoly.var(ring, "v", i, bound=bound)


def V(ring, i, bound=None):
    return GradedPoly.var(ring, "V", i, bound=bound)


def t(ring, i, slot=0, bound=None):
    if i == 0:
        return GradedPoly.one(ring, bound)
    return GradedPoly.var(ring, "t", i, slot, bound=bound)


def x(ring, i, deg=0, bound=None):
    return GradedPoly.var(ring, "x", i, deg=deg, bound=bound)
