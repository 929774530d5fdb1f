"""Exact univariate and bivariate polynomial arithmetic over the rationals.

Coefficients are ``fractions.Fraction`` values, so every result is exact and
every emitted rational is automatically in lowest terms with a positive
denominator.  ``UniPoly`` is deliberately coefficient-agnostic: any value
type supporting field arithmetic (``+``, ``-``, ``*``, ``/``, ``bool``,
``int * value``) can serve as a coefficient, which is how the quotient-ring
elements of :mod:`fibrelab.quotient` reuse the gcd and squarefree machinery
verbatim.

Conventions (held fixed throughout the package):

* ``resultant(p, q) = lc(q)^deg(p) * prod p(beta)`` over the roots ``beta``
  of ``q``; equivalently the determinant of the Sylvester block matrix with
  the ``q``-coefficient block on top.  With this orientation
  ``resultant(x - 1, x - 2) = 1``.
* ``discriminant(p) = (-1)^(n(n-1)/2) * resultant(p, p') / lc(p)`` with
  ``n = deg p``.  For a depressed cubic ``x^3 + a x + b`` this evaluates to
  ``-(4 a^3 + 27 b^2)``; for ``a x^2 + b x + c`` to ``b^2 - 4 a c``.
  Note ``deg(p) * deg(p')`` is always even, so the discriminant does not
  depend on the resultant orientation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Optional, Sequence


class LiteralError(ValueError):
    """Malformed polynomial literal (wrong JSON shape or token)."""


def _coerce(value):
    """Coerce ints/strings to Fraction; pass exotic coefficient types through."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not exact; use Fraction")
    return value


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial, coefficients in ascending degree.

    The zero polynomial is the empty tuple; otherwise the leading (last)
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [_coerce(c) for c in self.coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((_coerce(c),))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "UniPoly":
        if power < 0:
            raise ValueError("negative power")
        return cls((Fraction(0),) * power + (_coerce(coeff),))

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "UniPoly":
        """Monic-times-``leading`` product of ``(x - r)`` over ``roots``."""
        p = cls.constant(leading)
        for r in roots:
            p = p * cls((-_coerce(r), Fraction(1)))
        return p

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __call__(self, x):
        """Evaluate by Horner's rule.  ``x`` may be any compatible field value."""
        acc = None
        for c in reversed(self.coefficients):
            acc = c if acc is None else acc * x + c
        return 0 * x if acc is None else acc

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = []
        for a, b in itertools.zip_longest(self.coefficients, other.coefficients):
            out.append(b if a is None else a if b is None else a + b)
        return UniPoly(tuple(out))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero or other.is_zero:
                return UniPoly.zero()
            acc = [None] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    p = a * b
                    acc[i + j] = p if acc[i + j] is None else acc[i + j] + p
            return UniPoly(tuple(acc))
        scalar = _coerce(other)
        return UniPoly(tuple(c * scalar for c in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "UniPoly":
        return UniPoly(tuple(c / _coerce(scalar) for c in self.coefficients))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = UniPoly.one(), self
        while n:
            if n & 1:
                out = out * base
            base, n = base * base, n >> 1
        return out

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.leading_coefficient
        zero = lead - lead
        rem = list(self.coefficients)
        dq = len(rem) - len(other.coefficients)
        if dq < 0:
            return UniPoly.zero(), self
        quot = [zero] * (dq + 1)
        for k in range(len(rem) - 1, other.degree - 1, -1):
            if not rem[k]:
                continue
            c = rem[k] / lead
            quot[k - other.degree] = c
            for i, b in enumerate(other.coefficients):
                rem[k - other.degree + i] = rem[k - other.degree + i] - c * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem))

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    # -- calculus and normal forms --------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self / self.leading_coefficient

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor (Euclid over the coefficient field)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Substitution ``self(inner(x))`` by Horner's rule."""
        acc = UniPoly.zero()
        for c in reversed(self.coefficients):
            acc = acc * inner + UniPoly.constant(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")


def xgcd(a: UniPoly, b: UniPoly):
    """Extended Euclid: returns monic ``g`` and ``s, t`` with ``s a + t b = g``."""
    r0, r1 = a, b
    s0, s1 = UniPoly.one(), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading_coefficient
    return r0 / lead, s0 / lead, t0 / lead


# ---------------------------------------------------------------------------
# squarefree decomposition (Yun), resultants, discriminants, rational roots
# ---------------------------------------------------------------------------


def squarefree_decomposition(p: UniPoly):
    """Yun's squarefree decomposition (characteristic 0).

    Returns ``[(factor, multiplicity), ...]`` with monic squarefree pairwise
    coprime factors in ascending multiplicity, such that the product of
    ``factor**multiplicity`` equals ``p`` up to the leading coefficient.
    A nonzero constant decomposes into the empty list.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    d = p.gcd(p.derivative())
    if d.degree == 0:
        return [(p, 1)]
    b = p // d
    z = (p.derivative() // d) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = b.gcd(z)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        z = (z // a) - b.derivative()
        i += 1
    return out


def is_squarefree(p: UniPoly) -> bool:
    if p.is_zero:
        return False
    return p.degree <= 0 or p.gcd(p.derivative()).degree == 0


def _bareiss_det(mat) -> int:
    """Fraction-free determinant of an integer matrix (destructive)."""
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        for i in range(k + 1, n):
            row_i, row_k = mat[i], mat[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * mat[-1][-1]


def det_fraction(rows) -> Fraction:
    """Exact determinant of a square matrix of Fractions."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // int_gcd(den, c.denominator)
        int_rows.append([int(c * den) for c in row])
        scale /= den
    return scale * _bareiss_det(int_rows)


def _sylvester_rows(p_coeffs: Sequence, q_coeffs: Sequence):
    """Rows of the (q-block-on-top) Sylvester matrix.

    ``p_coeffs`` and ``q_coeffs`` are ascending coefficient sequences of
    exact degrees ``m`` and ``n``; entries may be Fractions or any ring
    elements (the pencil code passes polynomials in the pencil parameter).
    """
    m, n = len(p_coeffs) - 1, len(q_coeffs) - 1
    size = m + n
    p_desc = list(reversed(p_coeffs))
    q_desc = list(reversed(q_coeffs))
    rows = []
    for shift in range(m):
        rows.append([0] * shift + q_desc + [0] * (size - shift - n - 1))
    for shift in range(n):
        rows.append([0] * shift + p_desc + [0] * (size - shift - m - 1))
    return rows


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant of ``p`` and ``q``; see the module docstring for orientation.

    Zero iff ``p`` and ``q`` share a root over the complex numbers (both
    nonzero); antisymmetric up to the sign ``(-1)^(deg p * deg q)``.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("resultant undefined for two zero polynomials")
    if p.is_zero or q.is_zero:
        return Fraction(0)
    rows = _sylvester_rows(p.coefficients, q.coefficients)
    if not rows:
        return Fraction(1)
    rows = [[c if isinstance(c, Fraction) else Fraction(c) for c in row] for row in rows]
    return det_fraction(rows)


def discriminant(p: UniPoly) -> Fraction:
    """Discriminant; zero iff ``p`` has a repeated root.  Degree >= 1 required."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.leading_coefficient


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UniPoly, degree_cap: Optional[int] = None):
    """All rational roots with exact multiplicities, sorted by root.

    Candidates are ``+-d0/dn`` over divisors of the integer-normalised
    constant and leading coefficients; multiplicities by repeated exact
    division.  ``degree_cap`` optionally rejects oversized inputs (the
    divisor search is only meant for desk-scale degrees).
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no roots list")
    if degree_cap is not None and p.degree > degree_cap:
        raise ValueError(f"degree {p.degree} exceeds cap {degree_cap}")
    out = []
    # strip the power of x: root 0 with its multiplicity
    k = 0
    coeffs = list(p.coefficients)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        k += 1
    if k:
        out.append((Fraction(0), k))
    q = UniPoly(tuple(coeffs))
    if q.degree < 1:
        return sorted(out)
    den = 1
    for c in q.coefficients:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in q.coefficients]
    content = 0
    for c in ints:
        content = int_gcd(content, c)
    ints = [c // content for c in ints]
    seen = set()
    for d0 in _divisors(ints[0]):
        for dn in _divisors(ints[-1]):
            for cand in (Fraction(d0, dn), Fraction(-d0, dn)):
                if cand in seen:
                    continue
                seen.add(cand)
                if q(cand):
                    continue
                mult = 0
                factor = UniPoly((-cand, Fraction(1)))
                rem = q
                while True:
                    quo, r = divmod(rem, factor)
                    if not r.is_zero:
                        break
                    rem, mult = quo, mult + 1
                out.append((cand, mult))
    return sorted(out)


# ---------------------------------------------------------------------------
# interpolation (used for determinants of polynomial matrices)
# ---------------------------------------------------------------------------


def interpolate(points) -> UniPoly:
    """Lagrange interpolation through exact ``(x, y)`` points."""
    pts = list(points)
    result = UniPoly.zero()
    for i, (xi, yi) in enumerate(pts):
        num = UniPoly.constant(yi)
        den = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            num = num * UniPoly((-Fraction(xj), Fraction(1)))
            den *= Fraction(xi) - Fraction(xj)
        result = result + num / den
    return result


def poly_matrix_det(rows) -> UniPoly:
    """Determinant of a matrix whose entries are UniPoly (or scalar) values.

    Evaluation-interpolation: the determinant as a polynomial has degree at
    most the sum over rows of the maximal entry degree, so evaluating the
    entries at enough rational nodes and interpolating is exact.
    """
    n = len(rows)
    if n == 0:
        return UniPoly.one()
    norm = [[e if isinstance(e, UniPoly) else UniPoly.constant(e) for e in row] for row in rows]
    bound = sum(max((e.degree for e in row), default=0) for row in norm)
    points = []
    for node in range(bound + 1):
        x = Fraction(node)
        scalar = [[e(x) for e in row] for row in norm]
        points.append((x, det_fraction(scalar)))
    return interpolate(points)


# ---------------------------------------------------------------------------
# literals (the wire format shared by files and the CLI)
# ---------------------------------------------------------------------------


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def unipoly_to_literal(p: UniPoly):
    """Ascending list of coefficient strings, e.g. ``["0", "-1/2", "1"]``."""
    return [_format_fraction(c) for c in p.coefficients]


def unipoly_from_literal(obj) -> UniPoly:
    if not isinstance(obj, (list, tuple)):
        raise LiteralError("polynomial literal must be a JSON array")
    coeffs = []
    for tok in obj:
        if isinstance(tok, bool) or not isinstance(tok, (str, int)):
            raise LiteralError(f"bad coefficient token {tok!r}: expected integer or 'p/q' string")
        try:
            coeffs.append(Fraction(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise LiteralError(f"bad coefficient token {tok!r}: {exc}") from exc
    return UniPoly(tuple(coeffs))


@dataclass(frozen=True)
class BiPoly:
    """Sparse bivariate polynomial: sorted ``((i, j), coeff)`` pairs.

    ``bidegree`` optionally bounds the exponents: every stored term must
    satisfy ``i <= bidegree[0]`` and ``j <= bidegree[1]``.
    """

    terms: tuple = ()
    bidegree: Optional[tuple] = None

    def __post_init__(self):
        cleaned = {}
        for (i, j), c in self.terms:
            c = _coerce(c)
            if not c:
                continue
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if self.bidegree is not None and (i > self.bidegree[0] or j > self.bidegree[1]):
                raise ValueError(f"term ({i},{j}) exceeds bidegree bound {self.bidegree}")
            cleaned[(i, j)] = c
        object.__setattr__(self, "terms", tuple(sorted(cleaned.items())))

    @classmethod
    def from_dict(cls, d, bidegree=None) -> "BiPoly":
        return cls(tuple(d.items()), bidegree)

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, x0, x1):
        total = Fraction(0)
        for (i, j), c in self.terms:
            total += c * x0**i * x1**j
        return total

    def substitute_x0(self, value) -> UniPoly:
        """Collapse to a univariate polynomial in the second variable."""
        value = _coerce(value)
        acc = {}
        for (i, j), c in self.terms:
            acc[j] = acc.get(j, Fraction(0)) + c * value**i
        if not acc:
            return UniPoly.zero()
        top = max(acc)
        return UniPoly(tuple(acc.get(j, Fraction(0)) for j in range(top + 1)))

    def total_degree(self) -> int:
        return max((i + j for (i, j), _ in self.terms), default=-1)


def bipoly_to_literal(p: BiPoly) -> dict:
    """JSON object ``{"i,j": "coeff"}``."""
    return {f"{i},{j}": _format_fraction(c) for (i, j), c in p.terms}


def bipoly_from_literal(obj, bidegree=None) -> BiPoly:
    if not isinstance(obj, dict):
        raise LiteralError("bivariate literal must be a JSON object")
    terms = {}
    for key, tok in obj.items():
        try:
            i_str, j_str = key.split(",")
            pair = (int(i_str), int(j_str))
        except ValueError as exc:
            raise LiteralError(f"bad exponent key {key!r}: expected 'i,j'") from exc
        if isinstance(tok, bool) or not isinstance(tok, (str, int)):
            raise LiteralError(f"bad coefficient token {tok!r}")
        try:
            terms[pair] = Fraction(tok)
        except (ValueError, ZeroDivisionError) as exc:
            raise LiteralError(f"bad coefficient token {tok!r}: {exc}") from exc
    return BiPoly.from_dict(terms, bidegree)
