"""Spirallikeness criteria: weight tables, coefficient tests, pointwise checks.

For a spiral angle lam in (-pi/2, pi/2) the weight table holds

    A_n = |1 + n e^{-i lam}| + |1 - n e^{-i lam}|,
    B   = |1 + e^{-i lam}| - |1 - e^{-i lam}|,

with A_n/B >= n for every n.  The sufficient coefficient test bounds the
(A_n/B)-weighted coefficient sums by 1; on the sign-restricted class the
(B/A_n)-weighted sum and the plain n-weighted sum are necessary.  Pointwise
checks sample Re(e^{-i lam} Df/f) > 0 on an annulus grid; they refute
reliably but certify only in the sampled sense, and reports mark them so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .harmonic import (
    GridSpec,
    HarmonicMapSpec,
    ScanResult,
    d_operator,
    dg_values,
    dh_values,
    eval_f,
    g_values,
    grid_points,
    h_values,
    jacobian,
    nonvanishing_on_grid,
    sense_preserving_on_grid,
)

#: Uniform pass margin for the strict inequalities in coefficient tests.
PASS_MARGIN = 1e-9


class ClassFormError(ValueError):
    """A check that is only asserted on the sign-restricted class was asked
    of a map that does not declare that form."""


class HypothesisError(ValueError):
    """A bound was requested for a map outside the hypothesis it needs."""


class NearZeroError(ArithmeticError):
    """A denominator came within margin_eps of zero at a sample point."""


@dataclass(frozen=True)
class SpiralParams:
    """Spiral angle in radians, strictly inside (-pi/2, pi/2)."""

    lam: float

    def __post_init__(self):
        if not abs(self.lam) < math.pi / 2:
            raise ValueError("spiral angle must satisfy |lam| < pi/2")

    @property
    def phase(self) -> complex:
        """e^{-i lam}, the factor every pointwise criterion rotates by."""
        return complex(np.exp(-1j * self.lam))


@dataclass(frozen=True, eq=False)
class WeightTable:
    """Weights A_1..A_n_max and B for one spiral angle.

    ``A[n]`` is valid for n >= 1 (``A[0]`` is NaN padding so that indices
    match subscripts).
    """

    A: np.ndarray
    B: float
    lam: float

    @property
    def n_max(self) -> int:
        return self.A.size - 1

    def sufficient_ratios(self) -> np.ndarray:
        """A_n/B for n = 0..n_max (entry 0 is NaN)."""
        return self.A / self.B

    def necessary_ratios(self) -> np.ndarray:
        """B/A_n for n = 0..n_max (entry 0 is NaN)."""
        return self.B / self.A

    def b_over_a1(self) -> float:
        """B/A_1, the growth-bound modulus; equals tan(pi/4 - |lam|/2)."""
        return float(self.B / self.A[1])


def weight_table(p: SpiralParams, n_max: int) -> WeightTable:
    """Compute the weight table by direct complex modulus arithmetic."""
    if n_max < 1:
        raise ValueError("weight table needs n_max >= 1")
    e = np.exp(-1j * p.lam)
    n = np.arange(1, n_max + 1)
    a = np.abs(1.0 + n * e) + np.abs(1.0 - n * e)
    b = float(np.abs(1.0 + e) - np.abs(1.0 - e))
    full = np.concatenate([[np.nan], a])
    full.flags.writeable = False
    return WeightTable(A=full, B=b, lam=p.lam)


@dataclass(frozen=True)
class CheckResult:
    """Value of a coefficient sum together with its pass flag."""

    value: float
    passed: bool


def _tail_magnitudes(m: HarmonicMapSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    na = np.arange(2, m.truncation_order + 1)
    nb = np.arange(1, m.truncation_order + 1)
    return np.abs(m.a), np.abs(m.b), na, nb


def silverman_check(m: HarmonicMapSpec, tol: float = PASS_MARGIN) -> CheckResult:
    """n-weighted coefficient budget: 1 + sum n|a_n| + sum n|b_n| <= 2.

    The leading 1 counts the fixed unit coefficient of h.  Sufficient for
    hereditary starlikeness on the full class, and sharp on the
    sign-restricted class.  For maps with non-decaying coefficients the sum
    is reported at the truncation order and fails at a finite stage.
    """
    amag, bmag, na, nb = _tail_magnitudes(m)
    total = 1.0 + float(np.dot(na, amag) + np.dot(nb, bmag))
    return CheckResult(total, total <= 2.0 + tol)


def sufficient_check(
    m: HarmonicMapSpec, p: SpiralParams, tol: float = PASS_MARGIN
) -> CheckResult:
    """(A_n/B)-weighted coefficient sum; <= 1 certifies hereditary
    spirallikeness at this angle (sums truncated at the map's order)."""
    amag, bmag, na, nb = _tail_magnitudes(m)
    wt = weight_table(p, m.truncation_order)
    ratios = wt.sufficient_ratios()
    total = float(np.dot(ratios[na], amag) + np.dot(ratios[nb], bmag))
    return CheckResult(total, total <= 1.0 + tol)


def necessary_weighted_check(
    m: HarmonicMapSpec, p: SpiralParams, tol: float = PASS_MARGIN
) -> CheckResult:
    """(B/A_n)-weighted sum; every sign-restricted hereditarily spirallike
    map satisfies <= 1.  Only asserted on the sign-restricted class."""
    if not m.signed_form:
        raise ClassFormError(
            "the weighted necessary condition is only asserted on sign-restricted maps"
        )
    amag, bmag, na, nb = _tail_magnitudes(m)
    wt = weight_table(p, m.truncation_order)
    ratios = wt.necessary_ratios()
    total = float(np.dot(ratios[na], amag) + np.dot(ratios[nb], bmag))
    return CheckResult(total, total <= 1.0 + tol)


def necessary_sharp_check(m: HarmonicMapSpec, tol: float = PASS_MARGIN) -> CheckResult:
    """Plain n-weighted tail sum; <= 1 is necessary on the sign-restricted
    class (equivalently <= 2 once the unit leading coefficient is counted,
    which is the n-weighted budget of :func:`silverman_check`)."""
    if not m.signed_form:
        raise ClassFormError(
            "the sharp necessary condition is only asserted on sign-restricted maps"
        )
    amag, bmag, na, nb = _tail_magnitudes(m)
    total = float(np.dot(na, amag) + np.dot(nb, bmag))
    return CheckResult(total, total <= 1.0 + tol)


# ------------------------------------------------------------ pointwise checks


def pointwise_spiral_check(
    m: HarmonicMapSpec, p: SpiralParams, grid: GridSpec
) -> ScanResult:
    """Sampled minimum of Re(e^{-i lam} Df/f) over the annulus grid.

    Raises :class:`NearZeroError` naming the point if |f| dips below
    margin_eps anywhere on the grid (the division guard; equivalent to the
    nonvanishing scan failing).
    """
    pts = grid_points(grid)
    fv = eval_f(m, pts)
    absf = np.abs(fv)
    k = int(np.argmin(absf))
    if absf[k] < grid.margin_eps:
        raise NearZeroError(
            f"|f| = {absf[k]:.3e} below margin {grid.margin_eps:.1e} at z = {pts[k]}"
        )
    margins = np.real(p.phase * d_operator(m, pts) / fv)
    k = int(np.argmin(margins))
    return ScanResult(
        float(margins[k]), complex(pts[k]), bool(margins[k] > -grid.margin_eps)
    )


def pointwise_fully_starlike_check(m: HarmonicMapSpec, grid: GridSpec) -> ScanResult:
    """Sampled minimum of Re(Df/f): the spiral check at angle 0."""
    return pointwise_spiral_check(m, SpiralParams(0.0), grid)


def spiral_inequality_sides(
    m: HarmonicMapSpec, p: SpiralParams, z
) -> tuple[float, float]:
    """Both sides of the analytic/co-analytic form of the spiral inequality.

    The criterion Re(e^{-i lam} Df/f) > 0, cleared of quotients by
    multiplying through with |f|^2, splits into a part carried by h and g
    separately and a cross term.  Returned in units of |z|^2 cos(lam), with
    the co-analytic part folded into the left side:

        lhs = [Re(e^{-i lam} z h' conj(h)) - Re(e^{i lam} z g' conj(g))] / s
        rhs = Re(z e^{i lam} (h g' - e^{-2 i lam} g h')) / s,   s = |z|^2 cos lam

    The product form is total (points with g(z) = 0 are admissible) and
    sign(lhs - rhs) = sign(Re(e^{-i lam} Df/f)) wherever f(z) != 0.  With
    this normalization the classical counterexample z - conj(z)/2 at angle
    pi/4 and z = (1+i)/2 reads exactly (3/4, 1).  At z = 0 both sides
    vanish.
    """
    zc = complex(z)
    if zc == 0:
        return (0.0, 0.0)
    hv = h_values(m, zc)
    gv = g_values(m, zc)
    dhv = dh_values(m, zc)
    dgv = dg_values(m, zc)
    el = p.phase
    analytic_side = (el * zc * dhv * np.conj(hv)).real
    coanalytic_side = (np.conj(el) * zc * dgv * np.conj(gv)).real
    cross = (zc * np.conj(el) * (hv * dgv - el * el * gv * dhv)).real
    scale = abs(zc) ** 2 * math.cos(p.lam)
    return (
        float((analytic_side - coanalytic_side) / scale),
        float(cross / scale),
    )


def spiral_margin(m: HarmonicMapSpec, p: SpiralParams, z):
    """Two-modulus margin |f + e^{-i lam} Df| - |f - e^{-i lam} Df|.

    Positive exactly where Re(e^{-i lam} Df/f) is positive (for f(z) != 0),
    but computed without any division, so it is total.
    """
    fv = eval_f(m, z)
    dv = p.phase * d_operator(m, z)
    out = np.abs(fv + dv) - np.abs(fv - dv)
    return float(out) if np.ndim(out) == 0 else out


def spiral_margin_on_grid(
    m: HarmonicMapSpec, p: SpiralParams, grid: GridSpec
) -> ScanResult:
    """Minimum of the two-modulus margin over the annulus grid."""
    pts = grid_points(grid)
    v = spiral_margin(m, p, pts)
    k = int(np.argmin(v))
    return ScanResult(float(v[k]), complex(pts[k]), bool(v[k] > -grid.margin_eps))


@dataclass(frozen=True)
class GrowthBounds:
    """Modulus bounds (1 -+ B/A_1) r and the covering radius 1 - B/A_1."""

    lower: float
    upper: float
    covering_radius: float


def growth_bounds(m: HarmonicMapSpec, p: SpiralParams, r: float) -> GrowthBounds:
    """Sharp modulus bounds on |z| = r for maps passing the sufficient test.

    Raises :class:`HypothesisError` when the sufficient test fails, since
    the bounds are only asserted under it.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError("radius must lie in [0, 1)")
    check = sufficient_check(m, p)
    if not check.passed:
        raise HypothesisError(
            f"growth bounds need the sufficient test to pass (sum = {check.value:.6g})"
        )
    c = weight_table(p, max(1, m.truncation_order)).b_over_a1()
    return GrowthBounds(lower=(1.0 - c) * r, upper=(1.0 + c) * r, covering_radius=1.0 - c)


@dataclass(frozen=True)
class EpsilonScanResult:
    """Minimum over a unimodular family and the grid, with both witnesses."""

    min_value: float
    witness: complex
    witness_eps: complex
    passed: bool


def epsilon_starlike_check(
    m: HarmonicMapSpec, grid: GridSpec, n_eps: int = 64
) -> EpsilonScanResult:
    """Starlikeness margins of the analytic family h + eps*g over |eps| = 1.

    Samples n_eps equally spaced unimodular eps and returns the minimum of
    Re(z (h + eps g)' / (h + eps g)) over the family and the grid.  The
    family quantifier is sampled, so a positive result is heuristic while a
    negative one is a genuine refutation.
    """
    if n_eps < 1:
        raise ValueError("need at least one unimodular sample")
    pts = grid_points(grid)
    hv = h_values(m, pts)
    gv = g_values(m, pts)
    dhv = dh_values(m, pts)
    dgv = dg_values(m, pts)
    best = math.inf
    witness = 0j
    witness_eps = 1 + 0j
    for k in range(n_eps):
        eps = complex(np.exp(2j * np.pi * k / n_eps))
        den = hv + eps * gv
        absden = np.abs(den)
        j = int(np.argmin(absden))
        if absden[j] < grid.margin_eps:
            raise NearZeroError(
                f"|h + eps g| = {absden[j]:.3e} below margin at eps = {eps}, z = {pts[j]}"
            )
        vals = np.real(pts * (dhv + eps * dgv) / den)
        j = int(np.argmin(vals))
        if vals[j] < best:
            best = float(vals[j])
            witness = complex(pts[j])
            witness_eps = eps
    return EpsilonScanResult(best, witness, witness_eps, best > -grid.margin_eps)


def axis_profile(m: HarmonicMapSpec, r):
    """The positive-axis profile (phi(r), psi(r)) built from |a_n|, |b_n|.

    phi(r) = 1 - sum |a_n| r^(n-1) + sum |b_n| r^(n-1) so that a
    sign-restricted map has f(r) = r phi(r) on the positive axis, and
    psi(r) = sum n |a_n| r^(n-1) + sum n |b_n| r^(n-1) so that
    Re(e^{-i lam} Df(r)/f(r)) = cos(lam) (1 - psi(r)) / phi(r) there.
    """
    rarr = np.asarray(r, dtype=np.float64)
    amag, bmag, na, nb = _tail_magnitudes(m)
    ra = rarr[..., None] ** (na - 1)
    rb = rarr[..., None] ** (nb - 1)
    phi = 1.0 - ra @ amag + rb @ bmag
    psi = ra @ (na * amag) + rb @ (nb * bmag)
    if rarr.ndim == 0:
        return float(phi), float(psi)
    return phi, psi


# --------------------------------------------------------------- full report


@dataclass(frozen=True)
class VerificationReport:
    """Structured outcome of every applicable check on one map.

    Pointwise results are sampled on ``grid`` and flagged as such; pass
    flags are pure functions of the reported numbers and the margins used.
    Optional fields are None when the corresponding check is not applicable
    (necessary checks outside the sign-restricted class, growth bounds when
    the sufficient test fails, pointwise results when a near-zero |f| makes
    the quotient ill-defined).
    """

    lam: float
    truncation_order: int
    grid: GridSpec
    sampled: bool
    silverman: CheckResult
    sufficient: CheckResult
    necessary_weighted: Optional[CheckResult]
    necessary_sharp: Optional[CheckResult]
    sense_preserving: ScanResult
    nonvanishing: ScanResult
    pointwise: Optional[ScanResult]
    inequality_sides: Optional[tuple[float, float]]
    margin: Optional[ScanResult]
    growth: Optional[GrowthBounds]

    def all_passed(self) -> bool:
        checks = [
            self.silverman.passed,
            self.sufficient.passed,
            self.sense_preserving.passed,
            self.nonvanishing.passed,
        ]
        if self.necessary_weighted is not None:
            checks.append(self.necessary_weighted.passed)
        if self.necessary_sharp is not None:
            checks.append(self.necessary_sharp.passed)
        checks.append(self.pointwise.passed if self.pointwise else False)
        if self.margin is not None:
            checks.append(self.margin.passed)
        return all(checks)


def run_all_checks(
    m: HarmonicMapSpec, p: SpiralParams, grid: GridSpec = GridSpec()
) -> VerificationReport:
    """Run every applicable check and assemble the report."""
    silverman = silverman_check(m)
    sufficient = sufficient_check(m, p)
    if m.signed_form:
        necessary_weighted = necessary_weighted_check(m, p)
        necessary_sharp = necessary_sharp_check(m)
    else:
        necessary_weighted = None
        necessary_sharp = None
    sense = sense_preserving_on_grid(m, grid)
    nonvan = nonvanishing_on_grid(m, grid)
    try:
        pointwise = pointwise_spiral_check(m, p, grid)
        sides = spiral_inequality_sides(m, p, pointwise.witness)
    except NearZeroError:
        pointwise = None
        sides = None
    margin = spiral_margin_on_grid(m, p, grid)
    growth = (
        growth_bounds(m, p, grid.r_max) if sufficient.passed else None
    )
    return VerificationReport(
        lam=p.lam,
        truncation_order=m.truncation_order,
        grid=grid,
        sampled=True,
        silverman=silverman,
        sufficient=sufficient,
        necessary_weighted=necessary_weighted,
        necessary_sharp=necessary_sharp,
        sense_preserving=sense,
        nonvanishing=nonvan,
        pointwise=pointwise,
        inequality_sides=sides,
        margin=margin,
        growth=growth,
    )
