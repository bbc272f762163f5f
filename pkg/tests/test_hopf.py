import pytest

from formal_modules.coeff import KElement, RingParams
from formal_modules.fpoly import FpPoly
from formal_modules.gpoly import GradedPoly, V, t, v
from formal_modules.hopf import (
    conjugation_identity,
    conjugation_terms,
    coproduct_mod_In,
    coproduct_t,
    counit,
    delta_left,
    delta_right,
    eta_R_closed,
    eta_R_logs,
    eta_R_v,
    hopf_axiom_suite,
    m_set,
    n_set,
    right_unit_apply,
    s_sequences,
    top_degree,
    verify_invariance,
)
from formal_modules.universal import fgl_sum

R = RingParams(3, 1, 1)


class TestRightUnit:
    def test_first_generator(self, ring):
        pi = KElement.pi(ring)
        assert eta_R_v(ring, 1) == v(ring, 1) + t(ring, 1).scale(pi - pi**ring.q)
        assert eta_R_v(ring, 1, "hazewinkel") == V(ring, 1) + t(ring, 1).scale(pi)

    def test_zeroth_generator_is_pi(self, ring):
        assert eta_R_v(ring, 0) == GradedPoly.const(ring, KElement.pi(ring))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_integral_and_homogeneous(self, ring, k):
        for conv in ("araki", "hazewinkel"):
            er = eta_R_v(ring, k, conv)
            assert er.is_integral()
            assert er.is_homogeneous(top_degree(ring, k))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_two_routes(self, ring, k):
        assert eta_R_v(ring, k) == eta_R_closed(ring, k)

    def test_n_set_degrees(self, ring):
        for h in (1, 2):
            assert all(term.is_homogeneous(top_degree(ring, h)) for term in n_set(ring, h))

    def test_counit_recovers_generator(self, ring):
        for k in (1, 2, 3):
            assert counit(ring, eta_R_v(ring, k)) == v(ring, k)

    def test_log_image(self, small_ring):
        # eta_R(l_1) = l_1 + t_1
        logs = eta_R_logs(small_ring, 1)
        from formal_modules.universal import araki_logs

        assert logs[1] == araki_logs(small_ring, 1)[1] + t(small_ring, 1)

    def test_ring_map(self, small_ring):
        a = v(small_ring, 1).pow(2) + v(small_ring, 2).scale(3)
        b = v(small_ring, 1) - v(small_ring, 2)
        ra = right_unit_apply(small_ring, a)
        rb = right_unit_apply(small_ring, b)
        assert right_unit_apply(small_ring, a * b) == ra * rb
        assert right_unit_apply(small_ring, a + b) == ra + rb


class TestCoproduct:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_two_routes_and_integrality(self, ring, k):
        d = coproduct_t(ring, k, route="both")
        assert d.is_integral()
        assert d.is_homogeneous(top_degree(ring, k))

    def test_first(self, ring):
        assert coproduct_t(ring, 1) == t(ring, 1) + t(ring, 1, 1)

    def test_second_classical(self):
        # frozen from the brute-force series oracle (tests/bp_oracle.py at p = 3):
        # Delta(t2) = t2 + t1 t1'^3 + t2' + (v1/8)(t1^2 t1' + t1 t1'^2)
        d = coproduct_t(R, 2)
        t1, s1 = t(R, 1), t(R, 1, 1)
        expected = t(R, 2) + t1 * s1.pow(3) + t(R, 2, 1) - v(R, 1) * (t1.pow(2) * s1 + t1 * s1.pow(2)).scale(3).scale(
            KElement.of(R, "-1/24")
        )
        assert d == expected

    def test_hazewinkel_route(self, small_ring):
        for k in (1, 2):
            assert coproduct_t(small_ring, k, convention="hazewinkel").is_integral()

    def test_m_set(self, ring):
        assert m_set(ring, 1) == [t(ring, 1, 1), t(ring, 1)]

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            coproduct_t(R, 1, route="guess")


@pytest.mark.parametrize("cfg", [(3, 1, 1), (3, 2, 1)])
def test_hopf_axioms(cfg):
    ring = RingParams(*cfg)
    report = hopf_axiom_suite(ring, 2 * (ring.q**3 - 1))
    assert report.passed, report.render()
    assert len(report) == 1 + 3 * 3


def test_coassociativity_detects_corruption():
    d = coproduct_t(R, 2) + t(R, 1) * t(R, 1, 1)
    assert delta_left(R, d) != delta_right(R, d)


@pytest.mark.parametrize("h", [1, 2, 3])
def test_invariance(ring, h):
    for conv in ("araki", "hazewinkel"):
        report = verify_invariance(ring, h, convention=conv)
        assert report.passed, report.render()


def test_invariance_argument_checks():
    with pytest.raises(ValueError):
        verify_invariance(R, 0)
    with pytest.raises(ValueError):
        verify_invariance(R, 2, kmax=1)


def test_ideal_is_not_invariant_without_pi():
    # eta_R(v_1) = v_1 mod (pi) but not modulo (v_1) alone: the t_1 coefficient is pi - pi^q
    er = eta_R_v(R, 1) - v(R, 1)
    assert er.valuation() == 1


@pytest.mark.parametrize("cfg", [(3, 1, 1), (5, 1, 1)])
def test_conjugation(cfg):
    ring = RingParams(*cfg)
    report = conjugation_identity(ring, 2 * (ring.q**3 - 1))
    assert report.passed, report.render()


def test_conjugation_terms_are_nontrivial():
    D = 2 * (R.q**2 - 1)
    terms = conjugation_terms(R, D)
    assert fgl_sum(R, "araki", terms[:-1], D)  # dropping a term breaks the identity


def test_conjugation_requires_odd_prime():
    with pytest.raises(ValueError):
        conjugation_identity(RingParams(2, 1, 1), 2)


class TestModIdeal:
    def test_s_sequences(self):
        assert s_sequences(0, 1, 2) == [(1, 1)]
        assert s_sequences(1, 1, 2) == [(1, 2), (2, 1)]

    @pytest.mark.parametrize("cfg,h", [((3, 1, 1), 1), ((3, 1, 1), 2), ((3, 2, 1), 1), ((5, 1, 1), 1)])
    def test_formula_matches(self, cfg, h):
        ring = RingParams(*cfg)
        top = min(4, (ring.e + 1) * h) if ring.q == 3 else 2
        for k in range(1, top + 1):
            formula = coproduct_mod_In(ring, k, h)
            assert isinstance(formula, FpPoly)

    def test_range_check(self):
        with pytest.raises(ValueError):
            coproduct_mod_In(R, 3, 1)
