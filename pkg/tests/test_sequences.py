import pytest
from hypothesis import given, strategies as st

from formal_modules.coeff import KElement, RingParams
from formal_modules.gpoly import GradedPoly
from formal_modules.sequences import (
    EMPTY,
    Seq,
    compositions,
    indexed_monomial,
    monomial_exponents,
    pi_A_seq,
    seq_stats,
    splittings,
)

seqs = st.lists(st.integers(1, 4), max_size=5).map(Seq)


class TestSeq:
    def test_stats_example(self):
        assert seq_stats(Seq((1, 2, 3))) == (3, 6, Seq((3, 3)), Seq((2, 3)))

    def test_stats_empty(self):
        length, norm, dprime, tprime = seq_stats(EMPTY)
        assert (length, norm, dprime, tprime) == (0, 0, None, None)
        with pytest.raises(ValueError):
            EMPTY.dprime
        with pytest.raises(ValueError):
            EMPTY.tprime

    def test_stats_singleton(self):
        assert seq_stats(Seq((5,))) == (1, 5, None, EMPTY)
        with pytest.raises(ValueError):
            Seq((5,)).dprime

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Seq((1, 0))

    def test_text_round_trip(self):
        assert str(Seq((1, 2))) == "(1,2)"
        assert str(EMPTY) == "()"
        assert Seq.parse("(1,2)") == Seq((1, 2))
        assert Seq.parse("()") == EMPTY

    @given(seqs, seqs, seqs)
    def test_monoid(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + EMPTY == a == EMPTY + a
        assert (a + b).norm == a.norm + b.norm
        assert (a + b).length == a.length + b.length


class TestCompositions:
    def test_small(self):
        assert list(compositions(3)) == [Seq((1, 1, 1)), Seq((1, 2)), Seq((2, 1)), Seq((3,))]
        assert list(compositions(0)) == [EMPTY]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_count_and_order(self, n):
        comps = list(compositions(n))
        assert len(comps) == 2 ** (n - 1)
        assert comps == sorted(comps)
        assert all(c.norm == n for c in comps)

    def test_splittings(self):
        assert list(splittings(Seq((1, 2)))) == [(EMPTY, Seq((1, 2))), (Seq((1,)), Seq((2,))), (Seq((1, 2)), EMPTY)]


class TestPiA:
    def test_empty(self, ring):
        assert pi_A_seq(ring, EMPTY) == 1

    def test_singleton(self, ring):
        pi = KElement.pi(ring)
        for h in (1, 2, 3):
            assert pi_A_seq(ring, (h,)) == pi - pi ** (ring.q**h)

    def test_unrolled(self, ring):
        pi = KElement.pi(ring)
        q = ring.q
        assert pi_A_seq(ring, (1, 1)) == (pi - pi ** (q**2)) * (pi - pi**q)

    def test_peel_first_entry(self, small_ring):
        # Pi(K) = Pi(k1) * Pi(K'')
        for n in range(2, 6):
            for K in compositions(n):
                if len(K) >= 2:
                    assert pi_A_seq(small_ring, K) == pi_A_seq(small_ring, K[:1]) * pi_A_seq(small_ring, K.dprime)

    def test_valuation_is_length(self, ring):
        for n in range(0, 7 if ring.q == 3 else 4):
            for K in compositions(n):
                assert pi_A_seq(ring, K).valuation() == len(K)


class TestIndexedMonomial:
    def test_examples(self, r311):
        q = r311.q
        assert indexed_monomial(r311, "v", (2,)) == GradedPoly.var(r311, "v", 2)
        t1 = GradedPoly.var(r311, "t", 1)
        assert indexed_monomial(r311, "t", (1, 1)) == t1 * t1.pow(q)
        assert indexed_monomial(r311, "v", ()) == 1

    def test_exponents(self):
        assert monomial_exponents(Seq((1, 2)), 3) == {1: 1, 2: 3}
        assert monomial_exponents(Seq((1, 1)), 3) == {1: 4}

    @pytest.mark.parametrize("family", ["v", "V", "t"])
    def test_degree(self, ring, family):
        for n in range(1, 4):
            for K in compositions(n):
                mono = indexed_monomial(ring, family, K)
                assert mono.is_homogeneous(2 * (ring.q**n - 1))
