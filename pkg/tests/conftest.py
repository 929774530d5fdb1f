import random
from fractions import Fraction

import pytest
import sympy

from fibrelab.polynomial import UniPoly

X = sympy.Symbol("x")


def random_unipoly(rng: random.Random, max_degree: int, coeff_bound: int = 9) -> UniPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])))
    return UniPoly(tuple(coeffs))


def to_sympy(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * X**i
               for i, c in enumerate(p.coefficients))


def from_sympy_rational(value) -> Fraction:
    num, den = sympy.fraction(sympy.nsimplify(value))
    return Fraction(int(num), int(den))


@pytest.fixture
def rng():
    return random.Random(0xF1B)
