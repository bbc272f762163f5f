import pytest
from hypothesis import HealthCheck, settings, strategies as st

from formal_modules.coeff import KElement, RingParams

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# (p, e, f) test rings; q = p^f
CONFIGS = [(3, 1, 1), (5, 1, 1), (3, 2, 1), (3, 1, 2), (3, 2, 2)]
SMALL_CONFIGS = [(3, 1, 1), (3, 2, 1)]


def config_id(cfg):
    return "p{}e{}f{}".format(*cfg)


@pytest.fixture(params=CONFIGS, ids=config_id)
def ring(request):
    return RingParams(*request.param)


@pytest.fixture(params=SMALL_CONFIGS, ids=config_id)
def small_ring(request):
    return RingParams(*request.param)


@pytest.fixture
def r311():
    return RingParams(3, 1, 1)


@pytest.fixture
def r321():
    return RingParams(3, 2, 1)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def k_elements(ring, nonzero=False):
    strat = st.lists(rationals, min_size=ring.e, max_size=ring.e).map(
        lambda cs: KElement.from_coords(ring, cs)
    )
    if nonzero:
        strat = strat.filter(bool)
    return strat
