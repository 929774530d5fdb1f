"""Irreducible factorization over Q, delegated to sympy.

Everything else in the package is factorization-free; the two places that
genuinely need irreducible factors (minimal polynomials of conjugate
singular points, and the moduli for per-fibre node counting at algebraic
pencil parameters) go through this thin exact bridge.  Factors come back
monic and in a deterministic order.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import UniPoly


def _sympy():
    # deferred: sympy dominates interpreter start-up, and most entry points
    # (classification over Q, linear systems, geography) never factor
    import sympy

    return sympy


def _to_sympy(p: UniPoly):
    sympy = _sympy()
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coefficients)]
    return sympy.Poly(coeffs, sympy.Symbol("t"), domain="QQ")


def _from_sympy(p) -> UniPoly:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    return UniPoly(tuple(coeffs))


def irreducible_factors(p: UniPoly):
    """Monic irreducible factors of ``p`` with multiplicities.

    Returns ``[(factor, multiplicity), ...]`` sorted by (degree,
    coefficient tuple); the product of ``factor**multiplicity`` is ``p``
    up to its leading coefficient.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no factorization")
    if p.degree == 0:
        return []
    _, factors = _to_sympy(p).factor_list()
    out = [(_from_sympy(f).monic(), int(mult)) for f, mult in factors]
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coefficients))
    return out
