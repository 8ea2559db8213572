"""One-parameter shape optimization over the mass split.

lambda(s) is the first twisted eigenvalue of the isoperimetric pair whose
left component carries the mass fraction s.  Its derivative along the
split has the closed form

    d lambda / d s = (du_right^2 - du_left^2) * total_mass,

the 1D reduction of the Hadamard boundary formula: the transport field is
never built, because (du/dn)^2 is constant on each boundary component and
V.n integrates to the mass flux there (+total_mass on the left component,
-total_mass on the right, for a mass-preserving transfer).

`certify_minimum` checks the grid minimum at s = 1/2, the relabeling
symmetry of the curve, the derivative sign pattern, agreement of the
analytic derivative with finite differences of the curve itself, and a
golden-section refinement landing at the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import closedform, measures, numerics
from .closedform import TwistedSolution
from .errors import DomainError
from .measures import MeasureSpec, PairConfig

DEFAULT_WINDOW = (0.3, 0.7)
DEFAULT_POINTS = 41


def lambda_of_split(measure: MeasureSpec, total_mass: float,
                    s: float) -> TwistedSolution:
    """Twisted eigenvalue of the pair with left-mass fraction s."""
    config = measures.config_from_split(measure, total_mass, s)
    if measure.is_gaussian:
        return closedform.twisted_pair_gauss(config)
    return closedform.twisted_pair_power(config)


def shape_derivative(sol: TwistedSolution, config: PairConfig,
                     ds_mass: float) -> float:
    """Analytic d lambda / ds for the normalized solution, with ds_mass the
    mass rate of the left component (total_mass for the unit split rate)."""
    if abs(sol.normalization - 1.0) > 1e-8:
        raise DomainError("shape_derivative needs a normalized solution")
    return closedform.boundary_gradient_gap(sol, config) * ds_mass


@dataclass
class ScanCurve:
    measure: MeasureSpec
    total_mass: float
    splits: np.ndarray
    lambdas: np.ndarray
    derivative_analytic: np.ndarray
    derivative_fd: np.ndarray          # NaN where the stencil does not fit
    solutions: list[TwistedSolution] = field(default_factory=list)
    window: tuple[float, float] = DEFAULT_WINDOW
    all_single_signed: bool = True

    def max_adjacent_jump(self) -> float:
        return float(np.max(np.abs(np.diff(self.lambdas))))


def feasible_window(measure: MeasureSpec, total_mass: float,
                    window: tuple[float, float] = DEFAULT_WINDOW
                    ) -> tuple[float, float]:
    """Requested window intersected with the family's feasibility limits."""
    lo, hi = window
    if measure.is_gaussian:
        s_min, s_max = measures.gaussian_split_window(total_mass)
        margin = 1e-9
        lo = max(lo, s_min + margin)
        hi = min(hi, s_max - margin)
    if not lo < hi:
        raise DomainError(
            f"empty split window for total mass {total_mass:g}: "
            f"[{lo:g}, {hi:g}]")
    return lo, hi


def split_grid(measure: MeasureSpec, total_mass: float,
               points: int = DEFAULT_POINTS,
               window: tuple[float, float] = DEFAULT_WINDOW) -> np.ndarray:
    """Uniform split grid, symmetric about 1/2 and containing it."""
    lo, hi = feasible_window(measure, total_mass, window)
    half = min(0.5 - lo, hi - 0.5)
    if half <= 0:
        raise DomainError("window must contain s = 1/2")
    if points < 3 or points % 2 == 0:
        raise DomainError("points must be odd and >= 3")
    return np.linspace(0.5 - half, 0.5 + half, points)


def _fd_derivative(s: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """Five-point central differences on the uniform grid (three-point next
    to the ends, NaN at the ends)."""
    n = len(s)
    out = np.full(n, np.nan)
    h = s[1] - s[0]
    for i in range(1, n - 1):
        if 2 <= i <= n - 3:
            out[i] = (lam[i - 2] - 8 * lam[i - 1] + 8 * lam[i + 1]
                      - lam[i + 2]) / (12 * h)
        else:
            out[i] = (lam[i + 1] - lam[i - 1]) / (2 * h)
    return out


def scan(measure: MeasureSpec, total_mass: float,
         s_grid: Optional[np.ndarray] = None,
         points: int = DEFAULT_POINTS,
         window: tuple[float, float] = DEFAULT_WINDOW) -> ScanCurve:
    """Solve the pair problem on a split grid and collect the curve."""
    if s_grid is None:
        s_grid = split_grid(measure, total_mass, points, window)
    s_grid = np.asarray(s_grid, dtype=float)
    sols = []
    lams = np.empty_like(s_grid)
    dana = np.empty_like(s_grid)
    for i, s in enumerate(s_grid):
        sol = lambda_of_split(measure, total_mass, float(s))
        cfg = sol.config
        sols.append(sol)
        lams[i] = sol.eigenvalue
        dana[i] = shape_derivative(sol, cfg, total_mass)
    dfd = _fd_derivative(s_grid, lams)
    return ScanCurve(
        measure=measure, total_mass=total_mass, splits=s_grid,
        lambdas=lams, derivative_analytic=dana, derivative_fd=dfd,
        solutions=sols,
        window=(float(s_grid[0]), float(s_grid[-1])),
        all_single_signed=all(s.single_signed for s in sols))


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    detail: str


@dataclass
class CertificationReport:
    checks: list[CheckOutcome]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckOutcome]:
        return [c for c in self.checks if not c.passed]


def certify_minimum(curve: ScanCurve, symmetry_tol: float = 1e-8,
                    deriv_tol: float = 1e-4) -> CertificationReport:
    """Certify that the half split minimizes the curve.

    Checks: (a) global grid minimum at s = 1/2; (b) relabeling symmetry
    lambda(s) = lambda(1-s); (c) analytic derivative sign pattern (<= 0
    left of the center, >= 0 right of it); (d) analytic-vs-FD derivative
    agreement within max(deriv_tol, 1e-3 |dlambda/ds|); (e) golden-section
    refinement of the grid bracket lands within one grid step of 1/2.
    """
    s, lam = curve.splits, curve.lambdas
    checks = []
    n = len(s)
    mid = int(np.argmin(np.abs(s - 0.5)))
    if abs(s[mid] - 0.5) > 1e-12:
        raise DomainError("certification grid must contain s = 1/2")

    imin = int(np.argmin(lam))
    checks.append(CheckOutcome(
        "grid_minimum_at_half", imin == mid,
        f"argmin at s={s[imin]:.6g} (lambda={lam[imin]:.10g}), "
        f"center lambda={lam[mid]:.10g}"))

    sym_gap = 0.0
    for i in range(n):
        j = n - 1 - i
        if abs((s[i] + s[j]) - 1.0) < 1e-12:
            sym_gap = max(sym_gap, abs(lam[i] - lam[j]))
    scale = float(np.max(np.abs(lam)))
    checks.append(CheckOutcome(
        "curve_symmetry", sym_gap <= symmetry_tol * max(1.0, scale),
        f"max |lambda(s) - lambda(1-s)| = {sym_gap:.3g}"))

    eps = 1e-8 * max(1.0, scale)
    left_ok = bool(np.all(curve.derivative_analytic[s < 0.5 - 1e-12] <= eps))
    right_ok = bool(np.all(curve.derivative_analytic[s > 0.5 + 1e-12] >= -eps))
    center_ok = abs(curve.derivative_analytic[mid]) <= math.sqrt(eps) * 10
    checks.append(CheckOutcome(
        "derivative_sign_pattern", left_ok and right_ok and center_ok,
        f"left<=0: {left_ok}, right>=0: {right_ok}, "
        f"|d(0.5)|={abs(curve.derivative_analytic[mid]):.3g}"))

    worst = 0.0
    for i in range(2, n - 2):
        tol_i = max(deriv_tol, 1e-3 * abs(curve.derivative_fd[i]))
        gap = abs(curve.derivative_analytic[i] - curve.derivative_fd[i])
        worst = max(worst, gap / tol_i)
    checks.append(CheckOutcome(
        "derivative_fd_agreement", worst <= 1.0,
        f"worst gap / tolerance ratio = {worst:.3g}"))

    h = s[1] - s[0]
    a, b = max(s[0], 0.5 - 2 * h), min(s[-1], 0.5 + 2 * h)
    x_star, _ = numerics.minimize_scalar(
        lambda x: lambda_of_split(curve.measure, curve.total_mass, x).eigenvalue,
        a, b, tol=min(1e-6, h / 10))
    checks.append(CheckOutcome(
        "golden_section_refinement", abs(x_star - 0.5) <= h,
        f"refined minimizer at s={x_star:.8f} (grid step {h:.3g})"))

    return CertificationReport(checks=checks)
