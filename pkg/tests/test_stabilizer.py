import json

import pytest
from hypothesis import given, strategies as st

from formal_modules.coeff import RingParams
from formal_modules.fpoly import FpPoly
from formal_modules.hopf import coproduct_mod_In
from formal_modules.stabilizer import (
    ExponentRewrite,
    StabAlgebra,
    _reduced,
    b_element,
    delta_set,
    frobenius_check,
    low_degree_coproduct,
    reduce_to_stabilizer,
    relation_poly,
    specialized_eta_R,
    stab_coassoc_check,
    stab_coproduct,
    stab_normal_form,
    stab_presentation,
    thickening_check,
)

R = RingParams(3, 1, 1)
STAB_CASES = [((3, 1, 1), 1), ((3, 1, 1), 2), ((3, 2, 1), 1)]


def case_id(case):
    (p, e, f), h = case
    return f"p{p}e{e}f{f}-h{h}"


@pytest.fixture(params=STAB_CASES, ids=case_id)
def stab_case(request):
    cfg, h = request.param
    return RingParams(*cfg), h


class TestNormalForm:
    def test_exponent_rewrite(self):
        alg = StabAlgebra(R, 1)
        t1 = alg.t(1)
        assert t1.pow(3) == t1
        assert t1.pow(4) == t1.pow(2)
        assert t1.pow(2) != t1

    def test_rewrite_values(self):
        rw = ExponentRewrite(9)
        from formal_modules.gpoly import t_code

        c = t_code(1, 0)
        assert rw(((c, 9),)) == ((c, 1),)
        assert rw(((c, 17),)) == ((c, 1),)
        assert rw(((c, 10),)) == ((c, 2),)
        assert rw(((c, 8),)) == ((c, 8),)

    def test_rejects_small_Q(self):
        with pytest.raises(ValueError):
            ExponentRewrite(1)

    def test_normal_form_needs_Q(self):
        with pytest.raises(ValueError):
            stab_normal_form(FpPoly.var(3, "t", 1))

    @given(st.lists(st.tuples(st.integers(1, 2), st.integers(0, 1), st.integers(1, 30)), max_size=4))
    def test_idempotent_and_multiplicative(self, spec):
        a = FpPoly.one(3)
        for i, slot, n in spec:
            a = a * FpPoly.var(3, "t", i, slot).pow(n)
        b = FpPoly.var(3, "t", 1) + FpPoly.var(3, "t", 2, 1)
        na = stab_normal_form(a, 9)
        assert stab_normal_form(na, 9) == na
        assert stab_normal_form(a * b, 9) == na * stab_normal_form(b, 9)

    def test_algebra_cutoff(self):
        alg = StabAlgebra(R, 1, imax=2)
        assert alg.relations() == ["t1^3 = t1", "t2^3 = t2"]
        with pytest.raises(ValueError):
            alg.t(3)
        with pytest.raises(ValueError):
            StabAlgebra(R, 0)


class TestCoproduct:
    def test_delta_t2_height_one(self):
        alg = StabAlgebra(R, 1)
        t1, s1 = alg.t(1, 0), alg.t(1, 1)
        expected = alg.t(2, 0) + t1 * s1.pow(3) + alg.t(2, 1) - t1.pow(2) * s1 - t1 * s1.pow(2)
        assert stab_coproduct(R, 1, 2) == alg.normal_form(expected)
        assert str(stab_coproduct(R, 1, 2)) == "t2 + t1*t1' - t1^2*t1' - t1*t1'^2 + t2'"

    def test_b10_height_one(self):
        # b_(1,0) = w_1(t1, t1') = -t1^2 t1' - t1 t1'^2 mod 3
        alg = StabAlgebra(R, 1)
        t1, s1 = alg.t(1, 0), alg.t(1, 1)
        assert b_element(R, 1, 1, 0) == -(t1.pow(2) * s1) - t1 * s1.pow(2)
        assert b_element(R, 1, 0, 0) == 0
        with pytest.raises(ValueError):
            b_element(R, 1, 1, -1)

    def test_primitive_generator(self, stab_case):
        ring, h = stab_case
        alg = StabAlgebra(ring, h)
        assert stab_coproduct(ring, h, 1) == alg.t(1, 0) + alg.t(1, 1)
        assert stab_coproduct(ring, h, 0) == alg.one()

    def test_delta_set_levels(self):
        assert len(delta_set(R, 1, 1)) == 2

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_low_degree_formula(self, stab_case, k):
        ring, h = stab_case
        if k <= (ring.e + 1) * h:
            assert low_degree_coproduct(ring, h, k) == _reduced(ring, h).coproduct(k)

    @pytest.mark.parametrize(
        "cfg,h,kmax", [((3, 1, 1), 1, 2), ((3, 1, 1), 2, 4), ((3, 2, 1), 1, 3), ((5, 1, 1), 1, 2)]
    )
    def test_agrees_with_reduced_integral_coproduct(self, cfg, h, kmax):
        ring = RingParams(*cfg)
        for k in range(1, kmax + 1):
            reduced = reduce_to_stabilizer(coproduct_mod_In(ring, k, h), h, ring.q)
            assert stab_coproduct(ring, h, k) == reduced

    @pytest.mark.parametrize("cfg,h", [((3, 1, 1), 1), ((3, 2, 1), 1), ((5, 1, 1), 1), ((3, 1, 1), 2)])
    def test_fixed_precision_matches_exact(self, cfg, h):
        ring = RingParams(*cfg)
        exact, padic = _reduced(ring, h, exact=True), _reduced(ring, h)
        for k in (1, 2, 3):
            assert exact.coproduct(k) == padic.coproduct(k)
        for i in (1, 2):
            assert exact.b(i, 0) == padic.b(i, 0)

    def test_coassociativity(self, stab_case):
        ring, h = stab_case
        report = stab_coassoc_check(ring, h, 3)
        assert report.passed, report.render()

    def test_coassociativity_catches_corruption(self, monkeypatch):
        import formal_modules.stabilizer as stab

        real = stab.stab_coproduct
        alg = StabAlgebra(R, 1)

        def broken(ring, h, k):
            out = real(ring, h, k)
            return out + alg.t(1, 0).pow(2) * alg.t(1, 1) if k == 2 else out

        monkeypatch.setattr(stab, "stab_coproduct", broken)
        assert not stab_coassoc_check(R, 1, 2).passed

    def test_frobenius(self, stab_case):
        ring, h = stab_case
        report = frobenius_check(ring, h, imax=2, jmax=2)
        assert report.passed, report.render()
        assert len(report) == 6

    @pytest.mark.parametrize("cfg,h", [((5, 1, 1), 1), ((3, 1, 2), 2)])
    def test_frobenius_larger_residue_fields(self, cfg, h):
        assert frobenius_check(RingParams(*cfg), h, imax=1, jmax=1).passed


class TestPresentation:
    def test_relation_emerges(self, stab_case):
        ring, h = stab_case
        pres, report = stab_presentation(ring, h, 3, with_coproducts=False)
        assert report.passed, report.render()
        names = [c.check for c in report.checks]
        assert names.count("stabilizer relation t_i eta_R(v_h)^(q^i) = v_h t_i^(q^h)") == 3
        assert pres["generators"] == ["t1", "t2", "t3"]
        assert len(pres["relations"]) == 3

    def test_specialized_right_unit(self):
        er = specialized_eta_R(R, 1, 2)
        assert len(er) == 3
        assert all(x.is_integral() for x in er[1:])

    def test_relation_poly_shape(self):
        rel = relation_poly(R, 1, 1)
        assert rel == FpPoly.var(3, "v", 1) * FpPoly.var(3, "t", 1).pow(3) - FpPoly.var(3, "v", 1).pow(3) * FpPoly.var(3, "t", 1)

    def test_json_export(self):
        pres, _ = stab_presentation(R, 1, 2)
        data = json.loads(json.dumps(pres))
        assert data["h"] == 1 and data["p"] == 3
        assert set(data["coproducts"]) == {"t1", "t2"}


@pytest.mark.parametrize("h", [1, 2])
def test_thickening(ring, h):
    report = thickening_check(ring, h, 3)
    assert report.passed, report.render()
    names = {c.check for c in report.checks}
    assert any(n.startswith("thickening log formula") for n in names)
