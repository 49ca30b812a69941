import pytest
from numpy import random

from frobpow.monomials import minimalize, parse_ideal

# PARAMS
seed = 20261017
max_vars = 3
max_gens = 3
max_exponent = 4


def random_ideal(genor, max_vars=max_vars, max_gens=max_gens, max_exponent=max_exponent):
    """A proper monomial ideal with small exponents; generators are never 1."""
    m = int(genor.integers(1, max_vars + 1))
    n = int(genor.integers(1, max_gens + 1))
    gens = []
    while len(gens) < n:
        g = tuple(int(x) for x in genor.integers(0, max_exponent + 1, size=m))
        if any(g):
            gens.append(g)
    return minimalize(gens, m)


@pytest.fixture
def square_cube():
    """(x^2 y^2, y^3 z^3), the running example."""
    return parse_ideal('x^2*y^2, y^3*z^3')


@pytest.fixture
def genor():
    return random.default_rng(seed)


@pytest.fixture
def random_ideals():
    genor = random.default_rng(seed)

    def make(count, **kwargs):
        return [random_ideal(genor, **kwargs) for _ in range(count)]
    return make
