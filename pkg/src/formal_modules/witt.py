"""Witt-style symmetric polynomials over K.

Two families:

* the classical ones ``w_j``, solving
  ``sum_t x_t^(q^k) = sum_(j<=k) pi^j w_j^(q^(k-j))`` for ``w_k``;
* the generalized ones ``w_I`` indexed by sequences, built by the
  difference-quotient recursion
  ``w_K = (w_K'' - w_K'''^(q^k1)) / Pi_A(k1)`` with
  ``w_(k) = (sum x_t^(q^k) - w_empty^(q^k)) / Pi_A(k)``.

Both are evaluated directly on a list of GradedPoly values (a multiset
``S`` standing in for x_1..x_m), which is how the coproduct and right-unit
recursions consume them.  Division happens in K; integrality is checked
afterwards by the callers/tests rather than assumed.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .coeff import RingParams
from .gpoly import GradedPoly, x as x_var
from .sequences import EMPTY, Seq, pi_A_coords


class WittEvaluator:
    """Memoized w_I and w_j values on one fixed multiset of elements."""

    def __init__(self, ring: RingParams, elements: Sequence, bound: Optional[int] = None, zero=None):
        self.ring = ring
        self.bound = bound
        # any element type with add/pow/scale/div_scalar/with_bound works; ``zero`` seeds sums
        self._zero_elt = GradedPoly.zero(ring, bound) if zero is None else zero
        self.elements = [e.with_bound(bound) for e in elements if e]
        self.elements = [e for e in self.elements if e]
        self._gen: dict = {}
        self._classical: dict = {}
        self._power_sums: dict = {}

    def power_sum(self, k: int) -> GradedPoly:
        """sum_t x_t^(q^k)."""
        r = self._power_sums.get(k)
        if r is None:
            q = self.ring.q
            r = self._zero_elt
            for e in self.elements:
                r = r.add(e.pow(q**k, self.bound), self.bound)
            self._power_sums[k] = r
        return r

    def generalized(self, seq) -> GradedPoly:
        seq = Seq(seq)
        r = self._gen.get(seq)
        if r is not None:
            return r
        ring, bound, q = self.ring, self.bound, self.ring.q
        if len(seq) == 0:
            r = self._zero_elt
            for e in self.elements:
                r = r.add(e, bound)
        elif len(self.elements) <= 1:
            # a single variable makes every correction vanish
            r = self._zero_elt
        elif len(seq) == 1:
            k = seq[0]
            diff = self.power_sum(k) - self.generalized(EMPTY).pow(q**k, bound)
            r = diff.div_scalar(pi_A_coords(ring, Seq((k,))))
        else:
            k1 = seq[0]
            diff = self.generalized(seq.dprime) - self.generalized(seq.tprime).pow(q**k1, bound)
            r = diff.div_scalar(pi_A_coords(ring, Seq((k1,))))
        self._gen[seq] = r
        return r

    def classical(self, j: int) -> GradedPoly:
        r = self._classical.get(j)
        if r is not None:
            return r
        ring, bound, q = self.ring, self.bound, self.ring.q
        if j == 0:
            r = self.generalized(EMPTY)
        elif len(self.elements) <= 1:
            r = self._zero_elt
        else:
            acc = self.power_sum(j)
            for i in range(j):
                acc = acc - self.classical(i).pow(q ** (j - i), bound).scale(ring.pi_power(i))
            r = acc.scale(ring.pi_power(-j))
        self._classical[j] = r
        return r


def variables(ring: RingParams, m: int):
    return [x_var(ring, t) for t in range(1, m + 1)]


def classical_witt(ring: RingParams, j: int, m: int) -> GradedPoly:
    """w_j in x_1..x_m."""
    if j < 0 or m < 1:
        raise ValueError("need j >= 0 and m >= 1")
    return WittEvaluator(ring, variables(ring, m)).classical(j)


def generalized_witt(ring: RingParams, seq, m: int) -> GradedPoly:
    """w_I in x_1..x_m."""
    if m < 1:
        raise ValueError("need m >= 1")
    return WittEvaluator(ring, variables(ring, m)).generalized(seq)


def witt_identity_sides(ring: RingParams, seq, m: int):
    """Both sides of sum_t x_t^(q^|K|) = sum_(IJ=K) (Pi(K)/Pi(I)) w_J^(q^|I|)."""
    from .sequences import splittings

    seq = Seq(seq)
    ev = WittEvaluator(ring, variables(ring, m))
    q = ring.q
    lhs = ev.power_sum(seq.norm)
    rhs = GradedPoly.zero(ring)
    pk = pi_A_coords(ring, seq)
    for head, tail in splittings(seq):
        factor = ring.div(pk, pi_A_coords(ring, head))
        rhs = rhs + ev.generalized(tail).pow(q**head.norm).scale(factor)
    return lhs, rhs
