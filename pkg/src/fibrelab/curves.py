"""Genus-g hyperelliptic models y^2 = f(x) and their nodal degenerations.

A model of genus ``g`` is a polynomial ``f`` of degree exactly ``2g + 2``
(so the two points over ``x = infinity`` are smooth whenever the leading
coefficient is nonzero).  The classification of a fibre follows the
squarefree structure of ``f``:

* squarefree                        -> smooth of genus g, e = 2 - 2g
* only double roots + simple roots  -> irreducible with t nodes,
                                       geometric genus g - t, e = 2 - 2g + t
* a perfect square c * s(x)^2       -> two rational components crossing at
                                       the g + 1 roots of s, e = 3 - g
* any root of multiplicity >= 3     -> worse than nodal; only the certified
                                       node count (the multiplicity-2 part)
                                       is reported

The j-invariant uses the standard normalisation
``j = 1728 * 4a^3 / (4a^3 + 27b^2)``, pinned by the fixtures j(1,0) = 1728,
j(0,1) = 0 and by invariance under (a, b) -> (u^4 a, u^6 b).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .factorization import irreducible_factors
from .polynomial import (
    BiPoly,
    UniPoly,
    squarefree_decomposition,
    unipoly_from_literal,
    unipoly_to_literal,
)

DEGREE_DROP = "degenerate model: degree drop"
NODE_RANGE = "node count out of range [0, g]"


class FibreKind(str, enum.Enum):
    SMOOTH = "Smooth"
    IRREDUCIBLE_NODAL = "IrreducibleNodal"
    SPLIT_NODAL = "SplitNodal"
    NON_NODAL = "NonNodal"


@dataclass(frozen=True)
class HyperellipticModel:
    """``y^2 = f(x)`` with deg f = 2g + 2 exactly."""

    g: int
    f: UniPoly

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be >= 1")
        want = 2 * self.g + 2
        if self.f.degree < want:
            raise ValueError(DEGREE_DROP)
        if self.f.degree > want:
            raise ValueError(f"model degree {self.f.degree} exceeds 2g+2 = {want}")

    def to_dict(self) -> dict:
        return {"genus": self.g, "f": unipoly_to_literal(self.f)}

    @classmethod
    def from_dict(cls, obj: dict) -> "HyperellipticModel":
        return cls(int(obj["genus"]), unipoly_from_literal(obj["f"]))


@dataclass(frozen=True)
class FibreClass:
    """Classification of one fibre.

    ``t`` is the certified node count (0 when smooth, g + 1 for a split
    fibre, the multiplicity-2 degree for worse-than-nodal fibres).
    ``geometric_genus`` and ``euler_number`` are None when the fibre is not
    certified nodal (kind ``NonNodal``): the closed formulas only apply to
    nodal curves.
    """

    kind: FibreKind
    t: int
    intersections: Optional[int]
    geometric_genus: Optional[int]
    euler_number: Optional[int]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "t": self.t,
            "intersections": self.intersections,
            "geometric_genus": self.geometric_genus,
            "euler": self.euler_number,
        }


@dataclass(frozen=True)
class WeightedModel:
    """Weighted-plane closure: y^2 = h(x0, x1), weight g + 1 on y."""

    g: int
    h: BiPoly

    def dehomogenize(self) -> UniPoly:
        """``h(1, x)``, recovering the affine right-hand side."""
        return self.h.substitute_x0(1)

    def value_at_infinity(self) -> Fraction:
        """``h(0, 1)``: nonzero iff the two points over x0 = 0 are distinct.

        In the chart x1 = 1 the curve is y^2 = h(x0, 1); at x0 = 0 the
        y-partial of y^2 - h is 2y != 0 there, so nonzero value means two
        smooth points at infinity.
        """
        return self.h(Fraction(0), Fraction(1))

    def smooth_at_infinity(self) -> bool:
        return bool(self.value_at_infinity())


@dataclass(frozen=True)
class SingularPoint:
    """A singular x-locus: a rational point or a conjugate Galois orbit."""

    location: Union[Fraction, UniPoly]  # exact root, or its minimal polynomial
    local_type: str  # "node" | "worse"

    @property
    def conjugates(self) -> int:
        return 1 if isinstance(self.location, Fraction) else self.location.degree


# ---------------------------------------------------------------------------
# deterministic root streams
# ---------------------------------------------------------------------------

_MASK = (1 << 64) - 1


def _splitmix64(state: int):
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK, state


def seeded_rationals(seed: int, count: int):
    """``count`` pairwise distinct small rationals, reproducible bit-for-bit.

    Splitmix-style stream mapped onto numerators in [-20, 20] and
    denominators in [1, 6], drawing again on collisions (Fraction equality,
    so 2/4 collides with 1/2).
    """
    state = seed & _MASK
    out = []
    seen = set()
    while len(out) < count:
        v1, state = _splitmix64(state)
        v2, state = _splitmix64(state)
        r = Fraction(v1 % 41 - 20, v2 % 6 + 1)
        if r in seen:
            continue
        seen.add(r)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def construct_nodal(g: int, t: int, seed: int) -> HyperellipticModel:
    """Monic degree 2g+2 model with exactly t double roots, rest simple.

    For t >= 1 this is an irreducible curve of arithmetic genus g with t
    nodes; t = 0 gives a smooth model.
    """
    if g < 2:
        raise ValueError("construction requires g >= 2")
    if t < 0 or t > g:
        raise ValueError(NODE_RANGE)
    n_double, n_simple = t, 2 * g + 2 - 2 * t
    roots = seeded_rationals(seed, n_double + n_simple)
    f = UniPoly.from_roots(roots[:n_double]) ** 2 * UniPoly.from_roots(roots[n_double:])
    return HyperellipticModel(g, f)


def construct_split(g: int, seed: int) -> HyperellipticModel:
    """Model f = s(x)^2 with s squarefree of degree g + 1: two rational
    components meeting transversally in g + 1 points."""
    if g < 2:
        raise ValueError("construction requires g >= 2")
    s = UniPoly.from_roots(seeded_rationals(seed, g + 1))
    return HyperellipticModel(g, s * s)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify_decomposition(g: int, decomposition) -> FibreClass:
    """Fibre class from a squarefree decomposition of f (any base field).

    Degrees and multiplicities are stable under base change to C, so the
    same decision tree classifies fibres over Q and over Q[t]/(m).
    """
    if all(mult == 1 for _, mult in decomposition):
        return FibreClass(FibreKind.SMOOTH, 0, None, g, 2 - 2 * g)
    t2 = sum(f.degree for f, mult in decomposition if mult == 2)
    if any(mult >= 3 for _, mult in decomposition):
        return FibreClass(FibreKind.NON_NODAL, t2, None, None, None)
    if len(decomposition) == 1:
        # f = c * s^2 with s squarefree: two components, g + 1 crossings
        s = decomposition[0][0]
        assert s.degree == g + 1
        return FibreClass(FibreKind.SPLIT_NODAL, g + 1, g + 1, 0, 3 - g)
    assert 1 <= t2 <= g
    return FibreClass(FibreKind.IRREDUCIBLE_NODAL, t2, None, g - t2, 2 - 2 * g + t2)


def classify(model: HyperellipticModel) -> FibreClass:
    if model.f.degree != 2 * model.g + 2:
        raise ValueError(DEGREE_DROP)
    return classify_decomposition(model.g, squarefree_decomposition(model.f))


def singular_points(model: HyperellipticModel):
    """Singular points of y^2 = f(x), one entry per Galois orbit.

    Rational repeated roots are reported exactly; conjugate orbits by the
    irreducible polynomial they satisfy.  The local type is ``node`` iff
    the root multiplicity in f is exactly 2.
    """
    rational = []
    orbits = []
    for factor, mult in squarefree_decomposition(model.f):
        if mult < 2:
            continue
        local = "node" if mult == 2 else "worse"
        for irr, _ in irreducible_factors(factor):
            if irr.degree == 1:
                root = -irr.coefficients[0]
                rational.append(SingularPoint(root, local))
            else:
                orbits.append(SingularPoint(irr, local))
    rational.sort(key=lambda s: s.location)
    orbits.sort(key=lambda s: (s.location.degree, s.location.coefficients))
    return rational + orbits


def homogenize_weighted(model: HyperellipticModel) -> WeightedModel:
    """Closure in P(1, 1, g+1): h(x0, x1) = x0^(2g+2) f(x1/x0)."""
    n = 2 * model.g + 2
    if model.f.degree != n:
        raise ValueError(DEGREE_DROP)
    terms = {(n - k, k): c for k, c in enumerate(model.f.coefficients)}
    return WeightedModel(model.g, BiPoly.from_dict(terms, bidegree=(n, n)))


def j_invariant(a, b) -> Fraction:
    """j of the smooth cubic y^2 = x^3 + a x + b."""
    a, b = Fraction(a), Fraction(b)
    disc = 4 * a**3 + 27 * b**2
    if not disc:
        raise ValueError("singular cubic has no j-invariant")
    return 1728 * 4 * a**3 / disc
