import pytest
from hypothesis import given, strategies as st

from formal_modules.coeff import RingParams
from formal_modules.gpoly import GradedPoly, v
from formal_modules.series import PowerSeries, QTypicalSeries, series_reverse, series_substitute
from formal_modules.universal import araki_logs

R = RingParams(3, 1, 1)


def test_reverse_of_log_negates_first_coefficient(ring):
    logs = araki_logs(ring, 1)
    inv = series_reverse(logs.as_series())
    q = ring.q
    assert inv.coeff(1) == 1
    assert inv.coeff(q) == -logs[1]
    for k in range(2, q):
        assert inv.coeff(k) == 0


def test_inverse_is_not_q_typical():
    a = v(R, 1)
    inv = series_reverse(QTypicalSeries(R, (GradedPoly.one(R), a)), 2)
    assert not inv.is_q_typical()
    assert inv.coeff(2 * R.q - 1) == a.pow(2).scale(R.q)


@pytest.mark.parametrize("n", [1, 2])
def test_round_trip(ring, n):
    if n == 2 and ring.q > 5:
        pytest.skip("order q^3 - 1 reversion at q = 9 is too slow for the unit suite")
    s = araki_logs(ring, n).as_series().to_power_series()
    inv = series_reverse(s)
    ident = PowerSeries.identity(ring, s.order)
    assert s.compose(inv) == ident
    assert inv.compose(s) == ident


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_round_trip_random_integer_series(tail):
    order = len(tail) + 1
    coeffs = {1: 1}
    coeffs.update({k + 2: c for k, c in enumerate(tail)})
    s = PowerSeries(R, coeffs, order)
    inv = s.reverse()
    assert s.compose(inv) == PowerSeries.identity(R, order)


def test_reverse_requires_unit_leading_coefficient():
    with pytest.raises((ValueError, ArithmeticError)):
        PowerSeries(R, {2: 1}, 4).reverse()


def test_substitute_truncates_by_degree():
    q = R.q
    s = araki_logs(R, 2).as_series()
    x = GradedPoly.var(R, "x", 1, deg=2)
    full = series_substitute(s, x)
    assert series_substitute(s, x, 2 * q - 1) == full.truncate(2 * q - 1)
    assert full.component(2 * (q - 1) + 2 * q) == araki_logs(R, 1)[1] * x.pow(q)


def test_q_typical_part_round_trip():
    s = araki_logs(R, 2).as_series()
    assert s.to_power_series().q_typical_part() == s
