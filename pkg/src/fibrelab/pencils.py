"""Pencils of hyperelliptic models as fibred surfaces over the line.

A pencil ``f_lam = (1 - lam) f0 + lam f1`` of degree 2g+2 models is treated
as a fibration with P^1 base (the affine lam-chart; a pencil whose member at
the chart's infinity degenerates is outside the simulated window and the
discriminant degree makes that visible).  Singular fibres sit over the roots
of ``Disc_x(f_lam)``; node counts at algebraic parameters are computed
exactly over Q[lam]/(m) per irreducible factor m, never numerically.

The total-space Euler number is assembled fibre-wise as

    e(X) = e(A) e(D) + sum over singular fibres of (e(A_s) - e(A)),

where each ordinary node raises the fibre Euler number by one, so the
contribution of a nodal fibre is exactly its node count.  (Some printed
forms of this formula carry the opposite sign inside the sum; the convention
here is forced by e(A_s) >= e(A) and by the strict lower-bound behaviour of
e(X).)  Worse-than-node fibres contribute their certified node count only
and flag the total as a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Sequence, Tuple, Union

from .curves import (
    DEGREE_DROP,
    FibreClass,
    FibreKind,
    HyperellipticModel,
    classify,
    seeded_rationals,
)
from .factorization import irreducible_factors
from .polynomial import UniPoly, poly_matrix_det, unipoly_to_literal
from .quotient import QuotientElem, generator

NON_CONSTANT = "pencil is non-constant precondition violated"
EVERYWHERE_SINGULAR = "pencil is everywhere-singular"


@dataclass(frozen=True)
class Pencil:
    """One-parameter family (1 - lam) f0 + lam f1 of genus-g models."""

    g: int
    f0: UniPoly
    f1: UniPoly
    base_genus: int = 0

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("pencil genus must be >= 2")
        want = 2 * self.g + 2
        for f in (self.f0, self.f1):
            if f.degree != want:
                raise ValueError(DEGREE_DROP)
        lc0, lc1 = self.f0.leading_coefficient, self.f1.leading_coefficient
        if self.f0 * lc1 == self.f1 * lc0:
            raise ValueError(NON_CONSTANT)

    def coefficient_polys(self):
        """Coefficient of x^k as a polynomial in lam (degree <= 1), k = 0..2g+2."""
        out = []
        for k in range(2 * self.g + 3):
            a = self.f0.coefficients[k]
            b = self.f1.coefficients[k]
            out.append(UniPoly((a, b - a)))
        return out

    def fibre_at(self, lam) -> UniPoly:
        """The member f_lam; may drop degree for non-proportional leading terms."""
        lam = Fraction(lam)
        return UniPoly(tuple(c(lam) for c in self.coefficient_polys()))

    def fibre_at_quotient(self, lam: QuotientElem) -> UniPoly:
        """The member at an algebraic parameter, coefficients in Q[lam]/(m)."""
        return UniPoly(tuple(_eval_in_quotient(c, lam) for c in self.coefficient_polys()))

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "f0": unipoly_to_literal(self.f0),
            "f1": unipoly_to_literal(self.f1),
        }


def _eval_in_quotient(c: UniPoly, lam: QuotientElem) -> QuotientElem:
    acc = QuotientElem(UniPoly.zero(), lam.modulus)
    for coeff in reversed(c.coefficients):
        acc = acc * lam + coeff
    return acc


def seeded_pencil(g: int, seed: int) -> Pencil:
    """Deterministic pencil of two monic squarefree members.

    All ``2 (2g + 2)`` roots come from one collision-rejecting stream, so f0
    and f1 never share a root: the pencil has no base point on the branch
    locus, which is what makes the generic count of one-node fibres typical.
    """
    n = 2 * g + 2
    roots = seeded_rationals(seed, 2 * n)
    return Pencil(g, UniPoly.from_roots(roots[:n]), UniPoly.from_roots(roots[n:]))


@dataclass(frozen=True)
class SingularFibreRecord:
    """One Galois orbit of singular fibres.

    ``parameter`` is the rational parameter value or the monic irreducible
    minimal polynomial of the conjugate orbit; ``conjugate_count`` its
    degree (1 for rational).
    """

    parameter: Union[Fraction, UniPoly]
    conjugate_count: int
    nodes_per_fibre: int
    fibre_class: FibreKind

    def to_dict(self) -> dict:
        if isinstance(self.parameter, Fraction):
            key = {"param": str(self.parameter)
                   if self.parameter.denominator != 1 else str(self.parameter.numerator)}
        else:
            key = {"minpoly": unipoly_to_literal(self.parameter)}
        return {
            **key,
            "conjugates": self.conjugate_count,
            "nodes": self.nodes_per_fibre,
            "class": self.fibre_class.value,
        }


@dataclass(frozen=True)
class FibrationSummary:
    e_fibre: int
    e_base: int
    e_total: int
    singular_fibres: Tuple[SingularFibreRecord, ...]
    bound: int
    strict: bool
    euler_exact: bool = True  # False when a NonNodal fibre makes e_total a lower bound

    def to_dict(self) -> dict:
        return {
            "e_total": self.e_total,
            "bound": self.bound,
            "strict": self.strict,
            "fibres": [r.to_dict() for r in self.singular_fibres],
        }


def pencil_discriminant(pencil: Pencil) -> UniPoly:
    """``Disc_x(f_lam)`` as an exact polynomial in lam.

    Computed as the determinant of the generic Sylvester matrix of
    (f_lam, d f_lam / dx) over Q[lam] (by evaluation-interpolation), with
    the discriminant sign and the division by the leading coefficient
    matching :func:`fibrelab.polynomial.discriminant`, so evaluating the
    result at a rational lam agrees with the scalar discriminant whenever
    the fibre keeps full degree.  Identically zero means every member is
    singular (e.g. f0 and f1 share a square factor) and raises.
    """
    coeffs = pencil.coefficient_polys()
    deriv = [(k + 1) * c for k, c in enumerate(coeffs[1:])]
    n = 2 * pencil.g + 2
    # q-block-on-top orientation, as in polynomial.resultant
    size = n + (n - 1)
    q_desc = list(reversed(deriv))
    p_desc = list(reversed(coeffs))
    rows = []
    for shift in range(n):
        rows.append([UniPoly.zero()] * shift + q_desc + [UniPoly.zero()] * (size - shift - n))
    for shift in range(n - 1):
        rows.append([UniPoly.zero()] * shift + p_desc + [UniPoly.zero()] * (size - shift - n - 1))
    res = poly_matrix_det(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    quot, rem = divmod(sign * res, coeffs[-1])
    assert rem.is_zero, "resultant not divisible by the leading coefficient"
    if quot.is_zero:
        raise ValueError(EVERYWHERE_SINGULAR)
    return quot


def _rational_content_scale(p: UniPoly) -> Fraction:
    """A rational c such that c * p has small integer-like representatives."""
    num_gcd, den_lcm = 0, 1
    for elem in p.coefficients:
        for c in elem.representative.coefficients:
            num_gcd = _int_gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    return Fraction(den_lcm, num_gcd) if num_gcd else Fraction(1)


def _pseudo_rem(p: UniPoly, q: UniPoly) -> UniPoly:
    """``lc(q)^k * p mod q`` for some k >= 0, by synthetic steps (no inversion)."""
    lead = q.leading_coefficient
    zero = lead - lead
    r = p
    while not r.is_zero and r.degree >= q.degree:
        shift = r.degree - q.degree
        mono = UniPoly((zero,) * shift + (r.leading_coefficient,))
        r = r * lead - q * mono
    return r


def _pseudo_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """gcd over Q[lam]/(m) up to a unit, via a content-normalised pseudo-PRS.

    Avoids the per-step leading-coefficient inversions of monic Euclid;
    only degrees and divisibility structure are consumed downstream, for
    which a unit multiple of the gcd is just as good.
    """
    p = p * _rational_content_scale(p)
    q = q * _rational_content_scale(q)
    while not q.is_zero:
        r = _pseudo_rem(p, q)
        p, q = q, r * _rational_content_scale(r)
    return p


def classify_quotient_fibre(g: int, f_quotient: UniPoly) -> FibreClass:
    """Classify a fibre whose coefficients live in Q[lam]/(m).

    Gcd degrees are stable under base change to C, so with
    ``u1 = gcd(f, f')`` and ``u2 = gcd(u1, u1')``:

    * ``deg u1`` counts repeated roots with multiplicity minus one,
    * ``deg u2 > 0`` iff some root has multiplicity >= 3,
    * when ``deg u2 == 0`` every repeated root is a double root, so the
      fibre has exactly ``deg u1`` nodes, and it splits into two components
      exactly when ``2 deg u1 = deg f``.

    This mirrors :func:`fibrelab.curves.classify` fibre-for-fibre (the
    oracle-equivalence tests pin the two routes together).
    """
    u1 = _pseudo_gcd(f_quotient, f_quotient.derivative())
    d1 = u1.degree
    if d1 == 0:
        return FibreClass(FibreKind.SMOOTH, 0, None, g, 2 - 2 * g)
    u2 = _pseudo_gcd(u1, u1.derivative())
    d2 = u2.degree
    if d2 == 0:
        if 2 * d1 == f_quotient.degree:
            assert d1 == g + 1
            return FibreClass(FibreKind.SPLIT_NODAL, g + 1, g + 1, 0, 3 - g)
        assert 1 <= d1 <= g
        return FibreClass(FibreKind.IRREDUCIBLE_NODAL, d1, None, g - d1, 2 - 2 * g + d1)
    u3 = _pseudo_gcd(u2, u2.derivative())
    certified = d1 - 2 * d2 + u3.degree  # degree of the multiplicity-exactly-2 part
    return FibreClass(FibreKind.NON_NODAL, certified, None, None, None)


def _record_nodes(fc: FibreClass) -> int:
    # For nodal fibres t is the exact node count; for NonNodal it is the
    # certified (multiplicity-2) part only.
    return fc.t


def singular_fibres(pencil: Pencil) -> list:
    """Singular-fibre records, one per Galois orbit of discriminant roots.

    Rational parameters are classified directly; conjugate orbits through
    the quotient field Q[lam]/(m) for each irreducible factor m of the
    discriminant's squarefree radical.  Records are ordered: rational
    parameters ascending, then orbits by (degree, minimal polynomial).
    """
    disc = pencil_discriminant(pencil)
    records = []
    for m, _mult in irreducible_factors(disc):
        if m.degree == 1:
            lam = -m.coefficients[0]
            fibre = pencil.fibre_at(lam)
            if fibre.degree != 2 * pencil.g + 2:
                raise ValueError(f"{DEGREE_DROP} at parameter {lam}")
            fc = classify(HyperellipticModel(pencil.g, fibre))
            records.append(SingularFibreRecord(lam, 1, _record_nodes(fc), fc.kind))
        else:
            lam = generator(m)
            fibre = pencil.fibre_at_quotient(lam)
            if fibre.degree != 2 * pencil.g + 2:
                raise ValueError(f"{DEGREE_DROP} along factor {m}")
            fc = classify_quotient_fibre(pencil.g, fibre)
            records.append(SingularFibreRecord(m, m.degree, _record_nodes(fc), fc.kind))
    rational = sorted((r for r in records if isinstance(r.parameter, Fraction)),
                      key=lambda r: r.parameter)
    orbits = sorted((r for r in records if not isinstance(r.parameter, Fraction)),
                    key=lambda r: (r.parameter.degree, r.parameter.coefficients))
    return rational + orbits


def euler_summary(g1: int, g2: int,
                  records: Sequence[SingularFibreRecord]) -> FibrationSummary:
    """Assemble the fibre-wise Euler accounting for arbitrary (g1, g2)."""
    e_fibre = 2 - 2 * g1
    e_base = 2 - 2 * g2
    bound = 4 * (g1 - 1) * (g2 - 1)
    contribution = sum(r.conjugate_count * r.nodes_per_fibre for r in records)
    exact = all(r.fibre_class != FibreKind.NON_NODAL for r in records)
    e_total = e_fibre * e_base + contribution
    assert e_total >= bound
    strict = bool(records) and g1 != 1
    return FibrationSummary(e_fibre, e_base, e_total, tuple(records), bound, strict, exact)


def total_space_euler(pencil: Pencil) -> FibrationSummary:
    """Locate singular fibres and evaluate the Euler-number formula."""
    return euler_summary(pencil.g, pencil.base_genus, singular_fibres(pencil))


def noether_consistency(summary: FibrationSummary, K2: int):
    """``chi = (K^2 + e) / 12``; non-integral chi certifies an impossible K^2.

    Base points of the pencil are not modelled, so K^2 of the resolved total
    space must be supplied by the caller.
    """
    chi = Fraction(K2 + summary.e_total, 12)
    return chi, chi.denominator == 1
