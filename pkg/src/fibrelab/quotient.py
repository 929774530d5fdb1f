"""Arithmetic in quotient rings Q[t]/(m) with m monic.

When ``m`` is irreducible the quotient is a number field and every nonzero
element is invertible; irreducibility itself is the caller's obligation
(supplied by factoring discriminants), and is only checked lazily: a failed
inversion raises :class:`ModulusNotIrreducibleError`.

``QuotientElem`` implements enough of the field protocol (including mixed
arithmetic with ints and Fractions) that :class:`fibrelab.polynomial.UniPoly`
works with quotient coefficients unchanged: gcds, Yun decomposition and
polynomial division all run over Q[t]/(m) for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import UniPoly, xgcd


class ModulusNotIrreducibleError(ValueError):
    """A zero divisor was hit while inverting modulo a reducible modulus."""


def _check_modulus(m: UniPoly):
    if m.is_zero or m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if m.leading_coefficient != 1:
        raise ValueError("modulus must be monic")


@dataclass(frozen=True)
class QuotientElem:
    """Residue class ``representative + (modulus)`` with deg(rep) < deg(modulus)."""

    representative: UniPoly
    modulus: UniPoly

    def __post_init__(self):
        _check_modulus(self.modulus)
        if self.representative.degree >= self.modulus.degree:
            object.__setattr__(self, "representative", self.representative % self.modulus)

    # -- coercion helpers -----------------------------------------------

    def _wrap(self, other):
        if isinstance(other, QuotientElem):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli in quotient arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return QuotientElem(UniPoly.constant(other), self.modulus)
        return None

    def __bool__(self) -> bool:
        return not self.representative.is_zero

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return QuotientElem(self.representative + w.representative, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuotientElem(-self.representative, self.modulus)

    def __sub__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return QuotientElem(self.representative - w.representative, self.modulus)

    def __rsub__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return w - self

    def __mul__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return QuotientElem(self.representative * w.representative, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "QuotientElem":
        if not self:
            raise ZeroDivisionError("inverting zero in quotient ring")
        g, s, _ = xgcd(self.representative, self.modulus)
        if g.degree != 0:
            raise ModulusNotIrreducibleError("modulus not irreducible")
        return QuotientElem(s / g.leading_coefficient, self.modulus)

    def __truediv__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return self * w.inverse()

    def __rtruediv__(self, other):
        w = self._wrap(other)
        if w is None:
            return NotImplemented
        return w * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuotientElem(UniPoly.one(), self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base, n = base * base, n >> 1
        return out

    def __str__(self) -> str:
        return f"[{self.representative}] mod ({self.modulus})"


def generator(modulus: UniPoly) -> QuotientElem:
    """The class of the quotient variable t."""
    return QuotientElem(UniPoly.x(), modulus)


def constant(value, modulus: UniPoly) -> QuotientElem:
    return QuotientElem(UniPoly.constant(value), modulus)


def lift_unipoly(p: UniPoly, modulus: UniPoly) -> UniPoly:
    """Reinterpret a rational polynomial as one with quotient coefficients."""
    return UniPoly(tuple(constant(c, modulus) for c in p.coefficients))


def quotient_gcd_degree(p: UniPoly, q: UniPoly) -> int:
    """Degree of gcd(p, q) for polynomials with QuotientElem coefficients.

    Euclid over the field Q[t]/(m); leading-coefficient inversions use the
    extended Euclidean algorithm against the modulus, so a reducible modulus
    surfaces as :class:`ModulusNotIrreducibleError`.
    """
    if p.is_zero:
        raise ValueError("gcd degree requires a nonzero first argument")
    for c in (*p.coefficients, *q.coefficients):
        if not isinstance(c, QuotientElem):
            raise TypeError("quotient_gcd_degree expects QuotientElem coefficients")
    return p.gcd(q).degree
