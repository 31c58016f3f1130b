"""Shared fixtures: the verification grid and seeded random polynomials."""

import random
from fractions import Fraction

import pytest

from ga3_bundles.algebra.polynomial import Monomial, Polynomial
from ga3_bundles.geometry.bundle import BundleType, DivisorClass, linear_system_basis

GRID = [BundleType(d1=d1, d2=d2) for d1 in range(6) for d2 in range(d1 + 1)]
SMALL_GRID = [BundleType(d1=d1, d2=d2) for d1 in range(3) for d2 in range(d1 + 1)]


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def random_polynomial(rng):
    """Factory for random polynomials with at most `max_terms` terms in the given variables."""

    def make(names=("t1", "t2", "x1", "x2", "x3", "u", "v", "w"), max_terms=6, max_exp=3):
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            monomial = Monomial({name: rng.randint(0, max_exp) for name in rng.sample(names, rng.randint(0, 3))})
            terms[monomial] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return Polynomial.from_terms({m: c for m, c in terms.items() if c != 0})

    return make


@pytest.fixture
def random_bihomogeneous(rng):
    """Factory for random bihomogeneous polynomials of a given class on a bundle."""

    def make(bundle, a, b, max_terms=4):
        basis = linear_system_basis(bundle, DivisorClass(a=a, b=b))
        chosen = rng.sample(basis, min(len(basis), rng.randint(1, max_terms)))
        return Polynomial.from_terms({m: rng.randint(1, 5) for m in chosen})

    return make
