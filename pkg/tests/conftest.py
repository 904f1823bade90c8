import pytest

from rotsurf4.expr import Profile
from rotsurf4.rotational import RotationalSurface


def make_surface(f_text: str, g_text: str, alpha: float, beta: float) -> RotationalSurface:
    return RotationalSurface(Profile.from_text(f_text), Profile.from_text(g_text),
                             alpha, beta)


@pytest.fixture
def parabola():
    """f=u, g=u^2, alpha=1, beta=2 -- the worked elliptic example."""
    return make_surface("u", "u^2", 1.0, 2.0)


@pytest.fixture
def cubic():
    """f=u, g=u^3, alpha=1, beta=2 -- not minimal super-conformal."""
    return make_surface("u", "u^3", 1.0, 2.0)


@pytest.fixture
def linear():
    """f=u, g=2u -- flat everywhere."""
    return make_surface("u", "2*u", 1.0, 2.0)
