import random
from fractions import Fraction

import pytest

from charvar.polyring import ALL_COORDINATES, BASE_COORDINATES, BasePolynomial, FreePolynomial, NormalForm


def random_base(rng: random.Random, max_terms: int = 3, max_exp: int = 2) -> BasePolynomial:
    total = BasePolynomial.zero()
    for _ in range(rng.randint(0, max_terms)):
        exponents = {}
        for coord in rng.sample(BASE_COORDINATES, rng.randint(0, 3)):
            exponents[coord] = rng.randint(1, max_exp)
        coeff = Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
        total = total + BasePolynomial.monomial(exponents, coeff)
    return total


def random_normal(rng: random.Random, max_terms: int = 3, max_exp: int = 2) -> NormalForm:
    a = random_base(rng, max_terms, max_exp)
    b = random_base(rng, max_terms - 1, max_exp) if rng.random() < 0.5 else BasePolynomial.zero()
    return NormalForm(a, b)


def random_free(rng: random.Random, max_t5_degree: int = 2) -> FreePolynomial:
    levels = {}
    for degree in range(rng.randint(0, max_t5_degree) + 1):
        if rng.random() < 0.8:
            levels[degree] = random_base(rng)
    return FreePolynomial(levels)


def random_point(rng: random.Random) -> dict:
    return {
        c: complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        for c in ALL_COORDINATES
    }


@pytest.fixture(scope="session")
def rng():
    return random.Random(20260809)
