"""Finite sequences of positive integers and the Pi_A weights attached to them."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .coeff import Coords, KElement, RingParams


class Seq(tuple):
    """A finite sequence of positive integers; concatenation with ``+``.

    >>> Seq((1, 2, 3)).dprime
    (3,3)
    """

    def __new__(cls, entries=()):
        entries = tuple(int(i) for i in entries)
        if any(i < 1 for i in entries):
            raise ValueError(f"sequence entries must be positive: {entries}")
        return super().__new__(cls, entries)

    def __add__(self, other):
        return Seq(tuple(self) + tuple(other))

    @property
    def length(self) -> int:
        return len(self)

    @property
    def norm(self) -> int:
        return sum(self)

    @property
    def dprime(self) -> "Seq":
        """(i1 + i2, i3, ...)."""
        if len(self) < 2:
            raise ValueError("I'' needs a sequence of length >= 2")
        return Seq((self[0] + self[1],) + tuple(self[2:]))

    @property
    def tprime(self) -> "Seq":
        """(i2, i3, ...)."""
        if len(self) < 1:
            raise ValueError("I''' needs a nonempty sequence")
        return Seq(self[1:])

    def __str__(self):
        return "(" + ",".join(str(i) for i in self) + ")"

    def __repr__(self):
        return str(self)

    @classmethod
    def parse(cls, text: str) -> "Seq":
        body = text.strip().strip("()").strip()
        if not body:
            return cls()
        return cls(int(tok) for tok in body.split(","))


EMPTY = Seq()


def seq_stats(seq: Seq):
    """(|I|, ||I||, I'', I''') with ``None`` where the operator is undefined."""
    seq = Seq(seq)
    dprime = seq.dprime if len(seq) >= 2 else None
    tprime = seq.tprime if len(seq) >= 1 else None
    return seq.length, seq.norm, dprime, tprime


def compositions(n: int) -> Iterator[Seq]:
    """All sequences with norm n, in lexicographic order."""
    if n == 0:
        yield EMPTY
        return

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    for c in rec(n):
        yield Seq(c)


def splittings(seq: Seq) -> Iterator[tuple[Seq, Seq]]:
    """All (I, J) with I J = seq."""
    for k in range(len(seq) + 1):
        yield Seq(seq[:k]), Seq(seq[k:])


@lru_cache(maxsize=None)
def pi_A_coords(ring: RingParams, seq: Seq) -> Coords:
    if len(seq) == 0:
        return ring.one()
    head = ring.sub(ring.pi_power(1), ring.pi_power(ring.q ** seq.norm))
    if len(seq) == 1:
        return head
    return ring.mul(head, pi_A_coords(ring, Seq(seq[:-1])))


def pi_A_seq(ring: RingParams, seq) -> KElement:
    """Pi_A(I) = Pi_A(||I||) * Pi_A(I minus its last entry), Pi_A(h) = pi - pi^(q^h)."""
    if isinstance(seq, int):
        seq = Seq((seq,))
    return KElement(ring, pi_A_coords(ring, Seq(seq)))


def monomial_exponents(seq: Seq, q: int) -> dict[int, int]:
    """Exponents of x_i in x_I = x_{i1} (x_{(i2,...)})^(q^i1)."""
    exps: dict[int, int] = {}
    power = 1
    for i in seq:
        exps[i] = exps.get(i, 0) + power
        power *= q**i
    return exps


def indexed_monomial(ring: RingParams, family: str, seq, slot: int = 0):
    """v_I, V_I or t_I as a GradedPoly."""
    from .gpoly import GradedPoly, Var

    seq = Seq(seq)
    exps = monomial_exponents(seq, ring.q)
    mono = {Var(family, i, slot): k for i, k in exps.items()}
    return GradedPoly.monomial(ring, mono)
