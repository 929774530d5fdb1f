"""Numerical geography of fibred surfaces: identities, bounds, and scans.

All validators return reports rather than raising, so a scan over thousands
of tuples is never interrupted by a single failing inequality.  Each check
carries its evaluated sides and a short citation of the classical result it
encodes (Noether's formula, the Bogomolov-Miyaoka-Yau inequality, Xiao's
genus-2 fibration bounds, the Arakelov/Liu slope window, Hurwitz's
automorphism bound).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of a surface, possibly with a fibration attached.

    Optional members default to None ("not supplied").  The two defining
    identities chi = 1 - q + p_g and 12 chi = K2 + e are enforced whenever
    all participating members are present; the inequality checks below
    never are (verdicts belong in reports).
    """

    chi: Optional[int] = None
    q: Optional[int] = None
    p_g: Optional[int] = None
    K2: Optional[int] = None
    e: Optional[int] = None
    g1: Optional[int] = None  # genus of the general fibre
    g2: Optional[int] = None  # genus of the base
    epsilon: Optional[int] = None  # Xiao's degree of instability
    d: Optional[int] = None  # elliptic-fibration degree of (R^1 f_* O)^dual

    def __post_init__(self):
        if None not in (self.chi, self.q, self.p_g) and self.chi != 1 - self.q + self.p_g:
            raise ValueError("surface invariants violate chi = 1 - q + p_g")
        if None not in (self.chi, self.K2, self.e) and 12 * self.chi != self.K2 + self.e:
            raise ValueError("surface invariants violate 12 chi = K2 + e")

    def to_dict(self) -> dict:
        return {
            "chi": self.chi, "q": self.q, "p_g": self.p_g, "K2": self.K2,
            "e": self.e, "g1": self.g1, "g2": self.g2,
            "epsilon": self.epsilon, "d": self.d,
        }


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    lhs: Optional[object]
    rhs: Optional[object]
    citation: str
    note: str = ""

    def to_dict(self) -> dict:
        def num(v):
            if isinstance(v, Fraction):
                return int(v) if v.denominator == 1 else str(v)
            return v
        return {
            "name": self.name, "status": self.status.value,
            "lhs": num(self.lhs), "rhs": num(self.rhs),
            "citation": self.citation, "note": self.note,
        }


@dataclass(frozen=True)
class GeographyReport:
    checks: Tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != CheckStatus.FAIL for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == CheckStatus.FAIL]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _cmp(name, lhs, relation, rhs, citation, note="") -> Check:
    holds = {"<=": lhs <= rhs, "<": lhs < rhs, "==": lhs == rhs, ">=": lhs >= rhs,
             ">": lhs > rhs}[relation]
    return Check(name, CheckStatus.PASS if holds else CheckStatus.FAIL,
                 lhs, rhs, citation, note)


def _skip(name, citation, note="") -> Check:
    return Check(name, CheckStatus.INAPPLICABLE, None, None, citation, note)


# ---------------------------------------------------------------------------
# Noether's formula and blow-ups
# ---------------------------------------------------------------------------


def noether_complete(inv: SurfaceInvariants) -> SurfaceInvariants:
    """Complete a partial tuple through 12 chi = K2 + e and chi = 1 - q + p_g.

    Each identity must come with exactly two of its three members supplied
    (a chi computed by the other identity counts); anything else is over- or
    under-determined.  A non-integral chi from (K2, e) is rejected: no
    smooth compact surface has such a pair.
    """
    chi, q, p_g, K2, e = inv.chi, inv.q, inv.p_g, inv.K2, inv.e
    n_count = sum(v is not None for v in (chi, K2, e))
    h_count = sum(v is not None for v in (chi, q, p_g))
    if n_count == 3 or h_count == 3:
        raise ValueError("noether completion is over-determined")
    if n_count < 2 and h_count < 2:
        raise ValueError("noether completion is under-determined")
    for _ in range(2):  # two passes: one identity may unlock chi for the other
        if chi is None and None not in (K2, e):
            total = K2 + e
            if total % 12:
                raise ValueError(f"non-integral completion: chi = {total}/12")
            chi = total // 12
        if chi is None and None not in (q, p_g):
            chi = 1 - q + p_g
        if chi is not None:
            if K2 is None and e is not None:
                K2 = 12 * chi - e
            if e is None and K2 is not None:
                e = 12 * chi - K2
            if q is None and p_g is not None:
                q = 1 - chi + p_g
            if p_g is None and q is not None:
                p_g = chi - 1 + q
    return SurfaceInvariants(chi=chi, q=q, p_g=p_g, K2=K2, e=e,
                             g1=inv.g1, g2=inv.g2, epsilon=inv.epsilon, d=inv.d)


def blow_up(inv: SurfaceInvariants, n: int = 1) -> SurfaceInvariants:
    """Blow up n points: K2 drops by n, e rises by n, chi/q/p_g unchanged."""
    if n < 0:
        raise ValueError("cannot blow up a negative number of points")
    if None in (inv.chi, inv.K2, inv.e):
        raise ValueError("blow-up requires chi, K2 and e")
    return replace(inv, K2=inv.K2 - n, e=inv.e + n)


# ---------------------------------------------------------------------------
# fibration bounds
# ---------------------------------------------------------------------------


def fibration_chi_bounds(inv: SurfaceInvariants) -> GeographyReport:
    """Bounds tying chi, q, e to the fibre and base genera (g1, g2)."""
    if None in (inv.g1, inv.g2) or inv.chi is None:
        raise ValueError("fibration bounds require g1, g2 and chi")
    g1, g2, chi = inv.g1, inv.g2, inv.chi
    checks = [
        _cmp("chi_fibration", chi, ">=", 2 * (g1 - 1) * (g2 - 1),
             "BHPV III, Cor. 11.6"),
    ]
    if g1 == 2:
        checks.append(_cmp("chi_genus2", chi, ">=", g2 - 1,
                           "Beauville; Xiao LNM 1137, p. 7"))
    else:
        checks.append(_skip("chi_genus2", "Beauville; Xiao LNM 1137, p. 7",
                            "needs g1 = 2"))
    if inv.q is not None:
        checks.append(_cmp("q_lower", inv.q, ">=", g2, "pullback of Pic(D) is injective"))
        checks.append(_cmp("q_upper", inv.q, "<=", g1 + g2, "Beauville's irregularity bound"))
    else:
        checks.append(_skip("q_lower", "pullback of Pic(D) is injective", "q not supplied"))
        checks.append(_skip("q_upper", "Beauville's irregularity bound", "q not supplied"))
    if inv.e is not None:
        checks.append(_cmp("euler_fibration", inv.e, ">=", 4 * (g1 - 1) * (g2 - 1),
                           "BHPV III.11.6"))
    else:
        checks.append(_skip("euler_fibration", "BHPV III.11.6", "e not supplied"))
    return GeographyReport(tuple(checks))


# ---------------------------------------------------------------------------
# Xiao's genus-2 system
# ---------------------------------------------------------------------------


class XiaoCase(str, enum.Enum):
    CASE_I = "case_i"   # unstable bundle with the branch divisor containing D0
    CASE_II = "case_ii"  # everything else


def xiao_validate(inv: SurfaceInvariants, case: XiaoCase | str) -> GeographyReport:
    """Evaluate Xiao's genus-2 fibration system on a full invariant tuple.

    Needs chi, q, p_g, K2, g2 and epsilon; the geometric dichotomy between
    the two K2 windows is not determined by the numbers alone, so the case
    is an explicit caller flag.  Case (i) additionally assumes epsilon > 0;
    its checks are inapplicable otherwise.
    """
    case = XiaoCase(case)
    if None in (inv.chi, inv.q, inv.p_g, inv.K2, inv.g2, inv.epsilon):
        raise ValueError("xiao_validate requires chi, q, p_g, K2, g2, epsilon")
    if inv.g1 is not None and inv.g1 != 2:
        raise ValueError("xiao_validate applies to genus-2 fibrations (g1 = 2)")
    chi, q, p_g, K2, g2, eps = inv.chi, inv.q, inv.p_g, inv.K2, inv.g2, inv.epsilon

    checks = [
        _cmp("eps_pg", eps, "<=", p_g + 1, "Xiao LNM 1137, Thm 2.1"),
        _cmp("eps_parity", eps % 2, "==", (chi + g2 - 1) % 2, "Xiao LNM 1137, Thm 2.1"),
        _cmp("eps_lower", eps, ">=", -g2, "Xiao LNM 1137, Thm 2.1"),
        _cmp("eps_upper", eps, "<=", chi - g2 + 1, "Xiao LNM 1137, Thm 2.1"),
    ]
    if q > g2:
        checks.append(_cmp("eps_forced_by_q", eps, "==", chi - g2 + 1,
                           "Xiao LNM 1137, Thm 2.1"))
    else:
        checks.append(_skip("eps_forced_by_q", "Xiao LNM 1137, Thm 2.1", "needs q > g2"))
    if q == g2 + 1:
        checks.append(_cmp("q_iff_eps_forward", eps, "==", p_g + 1 - 2 * g2,
                           "Xiao LNM 1137, Thm 2.1"))
    else:
        checks.append(_skip("q_iff_eps_forward", "Xiao LNM 1137, Thm 2.1",
                            "needs q = g2 + 1"))
    if eps == p_g + 1 - 2 * g2:
        checks.append(_cmp("q_iff_eps_backward", q, "==", g2 + 1,
                           "Xiao LNM 1137, Thm 2.1"))
    else:
        checks.append(_skip("q_iff_eps_backward", "Xiao LNM 1137, Thm 2.1",
                            "needs eps = p_g + 1 - 2 g2"))

    if case is XiaoCase.CASE_I:
        if eps <= 0:
            checks.extend([
                _skip("k2_lower_i", "Xiao LNM 1137, Thm 2.2(i)", "case (i) assumes eps > 0"),
                _skip("k2_upper_i", "Xiao LNM 1137, Thm 2.2(i)", "case (i) assumes eps > 0"),
                _skip("eps_half_i", "Xiao LNM 1137, Thm 2.2(i)", "case (i) assumes eps > 0"),
            ])
        else:
            checks.extend([
                _cmp("k2_lower_i", 2 * chi + 6 * (g2 - 1), "<=", K2,
                     "Xiao LNM 1137, Thm 2.2(i)"),
                _cmp("k2_upper_i", K2, "<=", 3 * chi + 5 * (g2 - 1) - 2 * eps,
                     "Xiao LNM 1137, Thm 2.2(i)"),
                _cmp("eps_half_i", Fraction(eps), "<=", Fraction(chi - g2 + 1, 2),
                     "Xiao LNM 1137, Thm 2.2(i)"),
            ])
    else:
        lower = max(2 * chi + 6 * (g2 - 1), chi + 7 * (g2 - 1) + 3 * eps)
        upper = min(6 * p_g - 5 * q + 3 * g2 + 2, 7 * chi + g2 - 1)
        checks.extend([
            _cmp("k2_lower_ii", lower, "<=", K2, "Xiao LNM 1137, Thm 2.2(ii)"),
            _cmp("k2_upper_ii", K2, "<=", upper, "Xiao LNM 1137, Thm 2.2(ii)"),
        ])
    checks.append(_cmp("k2_8chi", K2, "<=", 8 * chi, "Xiao LNM 1137, p. 18"))
    return GeographyReport(tuple(checks))


@dataclass(frozen=True)
class ScanRow:
    """One admissible (chi, epsilon) tuple with its realizable K2 window."""

    chi: int
    epsilon: int
    q: int
    p_g: int
    k2_min: int
    k2_max: int
    flags: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "chi": self.chi, "epsilon": self.epsilon, "q": self.q, "p_g": self.p_g,
            "k2_min": self.k2_min, "k2_max": self.k2_max, "flags": list(self.flags),
        }

    def csv_row(self) -> str:
        return f"{self.chi},{self.epsilon},{self.k2_min},{self.k2_max},{';'.join(self.flags)}"


CSV_HEADER = "chi,epsilon,k2_min,k2_max,flags"


def xiao_admissible_scan(g2: int, chi_max: int) -> Iterator[ScanRow]:
    """Enumerate genus-2 fibration tuples admissible for a genus-g2 base.

    For g2 - 1 <= chi <= chi_max and 0 <= eps <= chi - g2 + 1 with
    eps = chi + g2 - 1 (mod 2), emit the K2 window of the case-(ii) bounds
    capped by K2 <= 8 chi.  The irregularity is q = g2 (the generic stratum)
    except where that stratum is numerically impossible (for g2 = 0 the top
    value eps = chi + 1 forces q = g2 + 1, and the row is flagged).  Rows with
    eps = 0 carry a weaker existence guarantee and are flagged "eps0".

    Yields rows lazily in (chi, eps) order.
    """
    if g2 < 0:
        raise ValueError("base genus must be nonnegative")
    if chi_max < g2 - 1:
        raise ValueError("chi_max below the minimum chi = g2 - 1")
    for chi in range(g2 - 1, chi_max + 1):
        for eps in range(0, chi - g2 + 2):
            if (eps - (chi + g2 - 1)) % 2:
                continue
            row = _scan_row(g2, chi, eps)
            if row is not None:
                yield row


def _scan_row(g2: int, chi: int, eps: int) -> Optional[ScanRow]:
    flags = []
    q = g2
    p_g = chi - 1 + q
    if p_g < 0 or eps > p_g + 1:
        # generic stratum impossible; the forced-q stratum exists only at
        # the top value eps = chi - g2 + 1
        if eps != chi - g2 + 1:
            return None
        q = g2 + 1
        p_g = chi - 1 + q
        if p_g < 0 or eps > p_g + 1:
            return None
        flags.append("q=g2+1")
    if eps == 0:
        flags.append("eps0")
    lower = max(2 * chi + 6 * (g2 - 1), chi + 7 * (g2 - 1) + 3 * eps)
    upper = min(6 * p_g - 5 * q + 3 * g2 + 2, 7 * chi + g2 - 1, 8 * chi)
    if lower > upper:
        return None
    return ScanRow(chi, eps, q, p_g, lower, upper, tuple(flags))


# ---------------------------------------------------------------------------
# general type, elliptic fibrations, slope, automorphisms
# ---------------------------------------------------------------------------


def general_type_checks(inv: SurfaceInvariants, minimal: bool) -> GeographyReport:
    """BMY inequality, positivity, and the Noether inequality (minimal case)."""
    if None in (inv.K2, inv.e):
        raise ValueError("general-type checks require K2 and e")
    checks = [_cmp("bmy", inv.K2, "<=", 3 * inv.e, "Bogomolov-Miyaoka-Yau")]
    if minimal:
        checks.append(_cmp("k2_positive", inv.K2, ">", 0, "minimal general type"))
        if inv.p_g is not None:
            rhs = Fraction(inv.K2, 2) + 2
            note = "Noether line" if inv.p_g == rhs else ""
            checks.append(_cmp("noether_inequality", Fraction(inv.p_g), "<=", rhs,
                               "Noether inequality", note))
        else:
            checks.append(_skip("noether_inequality", "Noether inequality",
                                "p_g not supplied"))
    else:
        checks.append(_skip("k2_positive", "minimal general type", "surface not minimal"))
        checks.append(_skip("noether_inequality", "Noether inequality",
                            "surface not minimal"))
    return GeographyReport(tuple(checks))


def elliptic_c2(d: int):
    """(c2, chi) = (12 d, d) for a relatively minimal elliptic fibration.

    K2 = 0 in the relatively minimal case, so Noether's formula pins
    c2 = 12 chi = 12 d; d = 0 exactly when the only singular fibres are
    multiple fibres with smooth reduction.
    """
    if d < 0:
        raise ValueError("elliptic fibration degree must be nonnegative")
    return 12 * d, d


class SlopeVerdict(str, enum.Enum):
    PRODUCT_LIKE = "product-like"
    ADMISSIBLE = "admissible"
    INADMISSIBLE = "inadmissible"


def kodaira_slope(K2: int, c2: int):
    """Slope nu = K2/c2 with the Kodaira-fibration verdict.

    Products have nu = 2 exactly; genuine Kodaira fibred surfaces satisfy
    2 < nu < 3 (Arakelov below, Liu above).
    """
    if c2 <= 0:
        raise ValueError("Kodaira fibred surfaces have positive c2")
    nu = Fraction(K2, c2)
    if nu == 2:
        verdict = SlopeVerdict.PRODUCT_LIKE
    elif 2 < nu < 3:
        verdict = SlopeVerdict.ADMISSIBLE
    else:
        verdict = SlopeVerdict.INADMISSIBLE
    return nu, verdict


def hurwitz_bound(g: int) -> int:
    """84(g - 1), the maximal automorphism count of a genus-g curve, g >= 2."""
    if g < 2:
        raise ValueError("automorphism bound requires genus >= 2")
    return 84 * (g - 1)
