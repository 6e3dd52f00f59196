import numpy as np
import pytest
from hypothesis import settings

from global_group_laws import CoefficientRing, LaurentPoly
from global_group_laws.laws import additive_law, multiplicative_law, two_torsion_additive_law

settings.register_profile('ggl', derandomize=True, deadline=None, max_examples=40)
settings.load_profile('ggl')


@pytest.fixture
def Z():
    return CoefficientRing.integers()


@pytest.fixture
def Q():
    return CoefficientRing.rationals()


@pytest.fixture
def F2():
    return CoefficientRing.prime_field(2)


@pytest.fixture
def mult(Z):
    return multiplicative_law(Z)


@pytest.fixture
def add_Z(Z):
    return additive_law(Z)


@pytest.fixture
def add_Q(Q):
    return additive_law(Q)


@pytest.fixture
def tor2():
    return two_torsion_additive_law()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def _clear_ggl_environment(monkeypatch):
    for name in ('GGL_TRUNCATION', 'GGL_DEPTH', 'GGL_DEGREE', 'GGL_BOUND', 'GGL_JOBS'):
        monkeypatch.delenv(name, raising=False)


def random_laurent(ring, nvars, rng, terms=4, spread=2, coef=5, polynomial=False):
    """A random Laurent polynomial with a few terms."""
    low = 0 if polynomial else -spread
    data = {}
    for _ in range(terms):
        exp = tuple(int(v) for v in rng.integers(low, spread + 1, size=nvars))
        data[exp] = int(rng.integers(-coef, coef + 1))
    return LaurentPoly(ring, nvars, data)


@pytest.fixture
def make_poly():
    return random_laurent
