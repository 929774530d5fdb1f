from fractions import Fraction

import pytest

from fibrelab.polynomial import UniPoly, squarefree_decomposition
from fibrelab.quotient import (
    ModulusNotIrreducibleError,
    QuotientElem,
    constant,
    generator,
    lift_unipoly,
    quotient_gcd_degree,
)

SQRT2 = UniPoly((Fraction(-2), Fraction(0), Fraction(1)))  # t^2 - 2


def elem(*coeffs):
    return QuotientElem(UniPoly(tuple(Fraction(c) for c in coeffs)), SQRT2)


def test_reduction_on_construction():
    # t^2 reduces to 2
    assert QuotientElem(UniPoly((0, 0, 1)), SQRT2) == elem(2)


def test_field_arithmetic_in_quadratic_extension():
    rt = generator(SQRT2)
    assert rt * rt == elem(2)
    inv = (elem(1) + rt).inverse()  # 1/(1+sqrt2) = sqrt2 - 1
    assert inv == elem(-1, 1)
    assert (elem(1) + rt) * inv == elem(1)


def test_mixed_scalar_arithmetic():
    rt = generator(SQRT2)
    assert 2 * rt - rt == rt
    assert (rt + Fraction(1, 2)) - Fraction(1, 2) == rt
    assert rt / 2 == rt * Fraction(1, 2)


def test_modulus_must_be_monic():
    with pytest.raises(ValueError, match="monic"):
        QuotientElem(UniPoly.one(), UniPoly((Fraction(1), Fraction(2))))


def test_mixed_moduli_rejected():
    other = UniPoly((Fraction(-3), Fraction(0), Fraction(1)))
    with pytest.raises(ValueError, match="mixed moduli"):
        generator(SQRT2) + generator(other)


def test_reducible_modulus_detected_lazily():
    m = UniPoly((Fraction(-1), Fraction(0), Fraction(1)))  # (t-1)(t+1)
    zero_divisor = QuotientElem(UniPoly((Fraction(-1), Fraction(1))), m)
    with pytest.raises(ModulusNotIrreducibleError, match="modulus not irreducible"):
        zero_divisor.inverse()


class TestQuotientGcdDegree:
    def test_squarefree_over_extension(self):
        # x^2 - lam^2 = x^2 - 2 over Q(sqrt 2): squarefree
        lam = generator(SQRT2)
        p = UniPoly((-(lam * lam), constant(0, SQRT2), constant(1, SQRT2)))
        assert quotient_gcd_degree(p, p.derivative()) == 0

    def test_planted_double_root(self):
        lam = generator(SQRT2)
        p = UniPoly((lam * lam, -(2 * lam), constant(1, SQRT2)))  # (x - lam)^2
        assert quotient_gcd_degree(p, p.derivative()) == 1

    def test_gcd_with_self(self):
        lam = generator(SQRT2)
        p = UniPoly((lam, constant(3, SQRT2), constant(1, SQRT2)))
        assert quotient_gcd_degree(p, p) == p.degree

    def test_zero_first_argument_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            quotient_gcd_degree(UniPoly.zero(), UniPoly.zero())

    def test_rational_coefficients_rejected(self):
        with pytest.raises(TypeError):
            quotient_gcd_degree(UniPoly.one(), UniPoly.one())

    def test_reducible_modulus_surfaces_during_euclid(self):
        # leading coefficient t - 1 is a zero divisor mod t^2 - 1: the first
        # monic-normalisation step must raise the caller-side-bug signal
        m = UniPoly((Fraction(-1), Fraction(0), Fraction(1)))
        zero_div = QuotientElem(UniPoly((Fraction(-1), Fraction(1))), m)
        one = QuotientElem(UniPoly.one(), m)
        p = UniPoly((one, zero_div))
        with pytest.raises(ModulusNotIrreducibleError, match="modulus not irreducible"):
            quotient_gcd_degree(p, p)


def test_yun_runs_over_quotient_field():
    # (x - lam)^2 (x - 1) over Q(sqrt 2) decomposes with the planted shape
    lam = generator(SQRT2)
    one = constant(1, SQRT2)
    sq = UniPoly((lam * lam, -(2 * lam), one))
    p = sq * UniPoly((-one, one))
    decomp = squarefree_decomposition(p)
    assert [(f.degree, m) for f, m in decomp] == [(1, 1), (1, 2)]
    assert decomp[1][0] == UniPoly((-lam, one))


def test_lift_unipoly_preserves_values():
    p = UniPoly((Fraction(1), Fraction(2), Fraction(3)))
    lifted = lift_unipoly(p, SQRT2)
    assert lifted.degree == p.degree
    assert lifted(generator(SQRT2)) == constant(3, SQRT2) * generator(SQRT2) ** 2 \
        + constant(2, SQRT2) * generator(SQRT2) + constant(1, SQRT2)
