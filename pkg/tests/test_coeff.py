import math

import pytest
from hypothesis import given, strategies as st

from formal_modules.coeff import (
    KElement,
    RingParams,
    k_arith,
    make_ring,
    pi_valuation,
    reduce_mod_pi,
    vp_rational,
)

from conftest import k_elements

R311 = RingParams(3, 1, 1)
R321 = RingParams(3, 2, 1)
R322 = RingParams(3, 2, 2)


class TestMakeRing:
    def test_unramified_derived_values(self):
        r = make_ring(3, 1, 1, 1)
        assert (r.q, r.d) == (3, 1)
        assert KElement.pi(r) == 3

    def test_ramified_relation(self):
        r = make_ring(3, 2, 1, 1)
        assert (r.q, r.d) == (3, 2)
        assert KElement.pi(r) * KElement.pi(r) == 3

    def test_residue_degree(self):
        r = make_ring(3, 2, 2)
        assert (r.q, r.d) == (9, 4)

    @pytest.mark.parametrize("args", [(4, 1, 1, 1), (1, 1, 1, 1), (3, 0, 1, 1), (3, 1, 0, 1), (3, 1, 1, 6)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            make_ring(*args)

    def test_unit_changes_relation(self):
        r = make_ring(5, 2, 1, u=2)
        assert KElement.pi(r) ** 2 == 10


class TestArithmetic:
    def test_pi_squared_is_p(self):
        pi = KElement.pi(R321)
        assert k_arith(pi, pi, "mul") == 3

    def test_pi_minus_pi_q(self):
        pi = KElement.pi(R311)
        assert pi - pi ** R311.q == -24

    def test_inverse_of_pi(self):
        pi = KElement.pi(R321)
        assert k_arith(KElement.of(R321, 1), pi, "div") == KElement.from_coords(R321, [0, "1/3"])

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            k_arith(KElement.of(R321, 1), KElement.of(R321, 0), "div")

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            k_arith(KElement.of(R311, 1), KElement.of(R311, 1), "pow")

    def test_mismatched_rings(self):
        with pytest.raises(ValueError):
            KElement.of(R311, 1) + KElement.of(R321, 1)

    def test_negative_pi_powers(self):
        for n in range(-5, 6):
            assert KElement.pi(R321, n) * KElement.pi(R321, -n) == 1

    @given(k_elements(R321, nonzero=True))
    def test_inverse_law(self, a):
        one = KElement.of(R321, 1)
        assert k_arith(a, k_arith(one, a, "div"), "mul") == one

    @given(k_elements(RingParams(5, 3, 1), nonzero=True))
    def test_inverse_law_cubic(self, a):
        assert a * (1 / a) == 1

    @given(k_elements(R321), k_elements(R321), k_elements(R321))
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == 0


class TestValuation:
    def test_p_has_valuation_e(self):
        for r in (R311, R321, RingParams(5, 3, 1)):
            assert pi_valuation(KElement.of(r, r.p)) == r.e

    def test_pi_A_h_has_valuation_one(self):
        for r in (R311, R321, R322):
            pi = KElement.pi(r)
            for h in range(1, 4):
                assert pi_valuation(pi - pi ** (r.q**h)) == 1

    def test_zero_is_infinite(self):
        assert pi_valuation(KElement.of(R321, 0)) == math.inf

    def test_coordinate_formula(self):
        a = KElement.from_coords(R321, ["1/9", 3])
        # min(2*(-2) + 0, 2*1 + 1)
        assert pi_valuation(a) == -4

    def test_vp_rational(self):
        assert vp_rational(18, 3) == 2
        assert vp_rational(0, 3) == math.inf

    @given(k_elements(R321, nonzero=True), k_elements(R321, nonzero=True))
    def test_multiplicative(self, a, b):
        assert (a * b).valuation() == a.valuation() + b.valuation()

    @given(k_elements(R321, nonzero=True), k_elements(R321, nonzero=True))
    def test_ultrametric(self, a, b):
        s = a + b
        lo = min(a.valuation(), b.valuation())
        assert s.valuation() >= lo
        if a.valuation() != b.valuation():
            assert s.valuation() == lo


class TestReduction:
    def test_pi_reduces_to_zero(self):
        assert reduce_mod_pi(KElement.pi(R321)) == 0

    def test_one_plus_pi(self):
        assert reduce_mod_pi(KElement.pi(R321) + 1) == 1

    def test_negative_valuation(self):
        with pytest.raises(ValueError):
            reduce_mod_pi(1 / KElement.pi(R321))

    def test_rational_unit(self):
        # 1/2 = 2 mod 3
        assert reduce_mod_pi(KElement.of(R311, "1/2")) == 2

    @given(k_elements(R321), k_elements(R321))
    def test_ring_homomorphism(self, a, b):
        if a.valuation() < 0 or b.valuation() < 0:
            return
        p = R321.p
        assert (a * b).reduce() == a.reduce() * b.reduce() % p
        assert (a + b).reduce() == (a.reduce() + b.reduce()) % p


class TestSerialization:
    def test_json_round_trip(self):
        a = KElement.from_coords(R321, ["-4/6", 5])
        assert a.to_json() == ["-2/3", "5/1"]
        assert KElement.from_json(R321, a.to_json()) == a

    @given(k_elements(R322))
    def test_round_trip_property(self, a):
        assert KElement.from_json(R322, a.to_json()) == a

    def test_text(self):
        assert str(KElement.pi(R321) * 2 + 1) == "(1 + 2*pi)"
        assert str(KElement.of(R311, 0)) == "0"
