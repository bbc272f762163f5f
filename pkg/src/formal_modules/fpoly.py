"""Sparse polynomials with prime-field coefficients, sharing GradedPoly's monomial encoding.

An optional ``normalizer`` (a monomial -> monomial function) is applied after
every product; the stabilizer algebra uses it for the rewrite t^(q^h) -> t.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional

from .gpoly import GradedPoly, Var, _Packer, _as_mono, lex_key, mono_degree, _fmt_var

Normalizer = Optional[Callable[[tuple], tuple]]


class FpPoly:
    __slots__ = ("p", "terms", "normalizer")

    def __init__(self, p: int, terms: Optional[dict] = None, normalizer: Normalizer = None):
        self.p = p
        self.normalizer = normalizer
        out: dict = {}
        for m, c in (terms or {}).items():
            if normalizer is not None:
                m = normalizer(m)
            c = (out.get(m, 0) + c) % p
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        self.terms = out

    @classmethod
    def _raw(cls, p, terms, normalizer):
        obj = cls.__new__(cls)
        obj.p = p
        obj.terms = terms
        obj.normalizer = normalizer
        return obj

    @classmethod
    def zero(cls, p, normalizer=None):
        return cls._raw(p, {}, normalizer)

    @classmethod
    def one(cls, p, normalizer=None):
        return cls._raw(p, {(): 1}, normalizer)

    @classmethod
    def monomial(cls, p, exps, coeff: int = 1, normalizer=None):
        return cls(p, {_as_mono(exps): coeff}, normalizer)

    @classmethod
    def var(cls, p, family, index, slot=0, normalizer=None):
        return cls(p, {((Var(family, index, slot).code, 1),): 1}, normalizer)

    @classmethod
    def from_graded(cls, poly: GradedPoly, drop=None, normalizer=None) -> "FpPoly":
        """Reduce a pi-integral GradedPoly modulo pi, dropping monomials hit by ``drop``."""
        ring = poly.ring
        terms = {}
        for m, c in poly.terms.items():
            if drop is not None and any(drop(code) for code, _ in m):
                continue
            terms[m] = ring.reduce(c)
        return cls(ring.p, terms, normalizer)

    def _like(self, terms):
        return FpPoly._raw(self.p, terms, self.normalizer)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(): other % self.p} if other % self.p else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError("mismatched primes")
            return other
        return FpPoly(self.p, {(): int(other)}, self.normalizer)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = (terms.get(m, 0) + c) % p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return self._like({m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def scale(self, c: int):
        c %= self.p
        if not c:
            return self._like({})
        return self._like({m: (v * c) % self.p for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FpPoly):
            return self.scale(int(other))
        a, b = self.terms, other.terms
        if not a or not b:
            return self._like({})
        packer = _Packer.for_terms(a, b)
        pack, unpack = packer.pack, packer.unpack
        brows = [(pack(m), c) for m, c in b.items()]
        acc: dict = {}
        get = acc.get
        for m1, c1 in a.items():
            k1 = pack(m1)
            for k2, c2 in brows:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        p = self.p
        norm = self.normalizer or other.normalizer
        out: dict = {}
        for k, c in acc.items():
            c %= p
            if not c:
                continue
            m = unpack(k)
            if norm is not None:
                m = norm(m)
                c = (out.get(m, 0) + c) % p
                if not c:
                    out.pop(m, None)
                    continue
            out[m] = c
        return FpPoly._raw(p, out, norm)

    __rmul__ = __mul__

    def pow(self, n: int) -> "FpPoly":
        if n < 0:
            raise ValueError("negative power")
        result = FpPoly.one(self.p, self.normalizer)
        base = self
        # Frobenius: x^(p*m) = (x^m)^p is cheap via monomial-wise p-th powers
        while n and n % self.p == 0:
            base = base.frobenius()
            n //= self.p
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pow__(self, n):
        return self.pow(n)

    def frobenius(self, times: int = 1) -> "FpPoly":
        """x -> x^(p^times); coefficients in the prime field are fixed."""
        k = self.p**times
        norm = self.normalizer
        terms = {}
        for m, c in self.terms.items():
            mm = tuple((code, e * k) for code, e in m)
            if norm is not None:
                mm = norm(mm)
            terms[mm] = (terms.get(mm, 0) + c) % self.p
        return self._like({m: c for m, c in terms.items() if c})

    def map_monomials(self, fn) -> "FpPoly":
        out: dict = {}
        for m, c in self.terms.items():
            m2 = fn(m)
            if m2 is None:
                continue
            out[m2] = (out.get(m2, 0) + c) % self.p
        return self._like({m: c for m, c in out.items() if c})

    def relabel(self, code_map) -> "FpPoly":
        return self.map_monomials(lambda m: tuple(sorted((code_map(c), k) for c, k in m)))

    def set_zero(self, predicate) -> "FpPoly":
        return self.map_monomials(lambda m: None if any(predicate(c) for c, _ in m) else m)

    def with_normalizer(self, normalizer) -> "FpPoly":
        return FpPoly(self.p, self.terms, normalizer)

    def substitute(self, mapping: Mapping[int, "FpPoly"]) -> "FpPoly":
        images = {(k.code if isinstance(k, Var) else int(k)): v for k, v in mapping.items()}
        cache: dict = {}
        total = FpPoly.zero(self.p, self.normalizer)
        for m, c in self.terms.items():
            kept = tuple((code, k) for code, k in m if code not in images)
            acc = FpPoly(self.p, {kept: c}, self.normalizer)
            for code, k in m:
                if code in images:
                    key = (code, k)
                    if key not in cache:
                        cache[key] = images[code].pow(k)
                    acc = acc * cache[key]
            total = total + acc
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: lex_key(mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        half = self.p // 2
        for m, c in self.sorted_terms():
            # print residues symmetrically, e.g. 2 mod 3 as -1
            sc = c - self.p if c > half else c
            mono = "*".join(_fmt_var(code, k) for code, k in m)
            if not mono:
                pieces.append(str(sc))
            elif sc == 1:
                pieces.append(mono)
            elif sc == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{sc}*{mono}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"FpPoly({self})"

    def to_json(self) -> list:
        out = []
        for m, c in self.sorted_terms():
            vars_ = []
            for code, k in m:
                var = Var.from_code(code)
                vars_.append({"family": var.family, "index": var.index, "slot": var.slot, "exp": k})
            out.append({"coeff": c, "vars": vars_})
        return out
