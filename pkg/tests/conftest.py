import math

import pytest

from apstrip.core.config import get_settings
from apstrip.core.log import configure_logging
from apstrip.core.quadrature import QuadratureSpec, TLadder
from apstrip.core.strip import Strip


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    """Keep structlog output at WARNING while tests run."""
    configure_logging("WARNING")


@pytest.fixture
def fresh_settings():
    """Clear the cached settings before and after a test that changes the environment."""
    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()


@pytest.fixture
def quad() -> QuadratureSpec:
    """Simpson rule on a binary-exact spacing."""
    return QuadratureSpec(h=1.0 / 64.0)


@pytest.fixture
def short_ladder() -> TLadder:
    """Three rungs: T = 3, 9, 27."""
    return TLadder(3.0, 3.0, 3)


@pytest.fixture
def unit_strip() -> Strip:
    """Closed strip |Im z| <= 1/2."""
    return Strip(-0.5, 0.5)


@pytest.fixture
def sqrt_pi() -> float:
    return math.sqrt(math.pi)
