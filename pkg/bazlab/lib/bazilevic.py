"""Construction of Bazilevic functions, the operator P[alpha, f] and the C_I correspondence.

Every integral of the form ``alpha z^-alpha int_0^z t^(alpha-1) u(t) dt`` is taken
termwise: a unit series ``u`` maps to ``sum alpha / (alpha + n) u_n z^n``, so the
non-integer power ``z^alpha`` is never materialized.
"""

from __future__ import annotations

import math
import logging
from typing import List, Optional, Sequence

import numpy as np

from .powser import (
    Series,
    pow_real,
    antideriv,
    deriv,
    evaluate_points,
    eval_circle,
    theta_deriv,
    divide_by_z,
)
from .hardy import tail_bound
from .classes import caratheodory, koebe_type, omega_values, schwarz_function, starlike_janowski
from .quadrature import arc_trapezoid, circle_angles, cumulative_periodic, richardson_error, points_for_radius, aligned
from .._constants import (
    R_MAX,
    TWO_PI,
    UNIT_TOL,
    MIN_ORDER,
    HONEST_TAIL,
    MIN_ARC_POINTS,
    DEFAULT_SCAN_GRID,
    DEFAULT_SCAN_RADII,
    DEFAULT_QUAD_POINTS,
)
from .._exceptions import (
    SpecInvalid,
    AlphaMismatch,
    QuadratureError,
    BetaUnsupported,
    AlphaOutOfRange,
    RadiusOutOfRange,
    NormalizationError,
    DivisionByVanishing,
    TruncationInsufficient,
)
from .._utils import parallel_map
from ..types.omega_spec import OmegaSpec
from ..types.bazilevic_spec import BazFunction, BazilevicSpec
from ..types.herglotz_measure import HerglotzMeasure
from ..types.correspondence_report import CorrespondenceReport
from ..types.necessary_scan_report import RadiusScan, NecessaryScanReport
from ..types.bazilevic_spec_params import BazilevicSpecParams

__all__ = [
    "power_integral",
    "resolve_spec",
    "construct",
    "b1_member",
    "koebe_counterexample",
    "p_operator",
    "p_closed_form",
    "necessary_condition",
    "necessary_scan",
    "to_CI",
    "from_CI",
    "correspondence",
]

log: logging.Logger = logging.getLogger(__name__)


def power_integral(u: Series, alpha: float) -> Series:
    """``alpha z^-alpha int_0^z t^(alpha-1) u(t) dt``: degree-n coefficient ``alpha / (alpha + n) * u_n``."""
    n = np.arange(u.order + 1)
    return Series(u.coeffs * (alpha / (alpha + n)))


def resolve_spec(params: BazilevicSpecParams) -> BazilevicSpec:
    """Builds the series behind a JSON spec document."""
    N = params.order
    if N < MIN_ORDER:
        raise SpecInvalid(f"Order N must be at least {MIN_ORDER}, got {N}")

    if params.factors:
        if len(params.factors) != len(params.alphas):
            raise SpecInvalid(f"Got {len(params.factors)} factors for {len(params.alphas)} exponents")
        factors = []
        omegas: Optional[List[OmegaSpec]] = []
        for entry in params.factors:
            if isinstance(entry, OmegaSpec):
                omega = schwarz_function(entry, N)
                factors.append(starlike_janowski(params.janowski, omega, N))
                if omegas is not None:
                    omegas.append(entry)
            else:
                factors.append(Series(entry.coeffs, order=N))
                omegas = None
        trivial = all(not np.any(g.coeffs[1:]) for g in factors)
    else:
        factors = [Series.constant(1.0, N) for _ in params.alphas]
        omegas = None
        trivial = True

    measure = params.h.measure
    if measure is not None:
        h = caratheodory(measure, N)
    else:
        assert params.h.series is not None
        h = Series(params.h.series.coeffs, order=N)

    return BazilevicSpec(
        alphas=list(params.alphas),
        beta=params.beta,
        starlike_factors=factors,
        h=h,
        order=N,
        measure=measure,
        trivial_factors=trivial,
        janowski=params.janowski if omegas else None,
        omegas=omegas or None,
    )


def construct(spec: BazilevicSpec) -> BazFunction:
    """``f/z = (power_integral(prod (g_i/z)^alpha_i * h, alpha))^(1/alpha)`` with ``alpha = sum alpha_i``."""
    if spec.beta != 0:
        raise BetaUnsupported(spec.beta)

    u = Series(spec.h.coeffs, order=spec.order)
    for g, a in zip(spec.starlike_factors, spec.alphas):
        u = u * pow_real(g, a)

    alpha = spec.alpha_total
    unit = pow_real(power_integral(u, alpha), 1.0 / alpha)
    log.debug("constructed member with alpha=%s (%d factors) at order %d", alpha, len(spec.alphas), unit.order)
    return BazFunction(
        unit=unit,
        alpha_total=alpha,
        alphas=tuple(spec.alphas),
        measure=spec.measure,
        b1=spec.trivial_factors,
        janowski=spec.janowski,
        omegas=None if spec.omegas is None else tuple(spec.omegas),
    )


def b1_member(alpha: float, measure: HerglotzMeasure, N: int) -> BazFunction:
    """The member of B_1(alpha) whose Caratheodory factor has Herglotz measure `measure`."""
    spec = BazilevicSpec(
        alphas=[alpha],
        starlike_factors=[Series.constant(1.0, N)],
        h=caratheodory(measure, N),
        order=N,
        measure=measure,
        trivial_factors=True,
    )
    return construct(spec)


def koebe_counterexample(theta: float, alpha: float, N: int) -> BazFunction:
    """Takes ``g = k_theta`` and ``h = z k_theta' / k_theta``; the result is ``f = k_theta`` itself."""
    g = divide_by_z(koebe_type(theta, N + 1))
    measure = HerglotzMeasure.point_mass(theta)
    spec = BazilevicSpec(
        alphas=[alpha],
        starlike_factors=[g],
        h=caratheodory(measure, N),
        order=N,
    )
    return construct(spec)


def p_operator(f: BazFunction, alpha: float) -> Series:
    """``P[alpha, f] = 1 + z f''/f' + (alpha - 1) z f'/f`` as a series with constant term alpha."""
    u = f.unit
    fp = u + theta_deriv(u)  # f'
    if fp[0] == 0:
        raise DivisionByVanishing("f'(0) vanishes")
    curvature = theta_deriv(fp) / fp
    starlike = fp / u
    return 1.0 + curvature + (alpha - 1.0) * starlike


def _closed_form_available(f: BazFunction, alpha: float) -> bool:
    if f.measure is None or abs(alpha - f.alpha_total) > UNIT_TOL:
        return False
    return f.b1 or f.omegas is not None


def p_closed_form(f: BazFunction, z: np.ndarray) -> np.ndarray:
    """``P[alpha, f](z) = alpha + z U'(z) / U(z)`` with ``U = prod (g_i/z)^alpha_i * h``.

    With ``z g_i'/g_i = phi(omega_i(z))`` this is
    ``alpha + sum alpha_i (phi(omega_i(z)) - 1) + z h'(z) / h(z)``, exact at every
    point of the open disk, so radii close to 1 need no truncated series.
    """
    if f.measure is None or not (f.b1 or f.omegas is not None):
        raise SpecInvalid(
            "The closed form needs h from a Herglotz measure and every starlike factor from a Schwarz recipe"
        )
    z = np.asarray(z, dtype=np.complex128)
    values = f.alpha_total + z * f.measure.derivative_values(z) / f.measure.values(z)
    if f.omegas is not None:
        assert f.janowski is not None
        for omega, a in zip(f.omegas, f.alphas):
            values = values + a * (f.janowski.phi(omega_values(omega, z, f.order)) - 1.0)
    return values


def _series_tail(P: Series, r: float, length: float) -> float:
    # bound on the arc integral of the part of P beyond its order
    return length * tail_bound(P, r)


def _check_alpha(alpha: float) -> None:
    if not (alpha > 1) or not math.isfinite(alpha):
        raise AlphaOutOfRange(alpha, "(1, inf)")


def _check_r(r: float) -> None:
    if not (0.0 < r <= R_MAX):
        raise RadiusOutOfRange(r, R_MAX)


def necessary_condition(
    f: BazFunction,
    alpha: float,
    r: float,
    theta1: float,
    theta2: float,
    K: int = DEFAULT_QUAD_POINTS,
) -> float:
    """Trapezoid value of ``int_theta1^theta2 Re P[alpha, f](r e^(i theta)) d theta``."""
    _check_alpha(alpha)
    _check_r(r)
    if not (theta1 < theta2 <= theta1 + TWO_PI + 1e-12):
        raise SpecInvalid(f"Need theta1 < theta2 <= theta1 + 2 pi, got ({theta1!r}, {theta2!r})")
    if K < MIN_ARC_POINTS:
        raise QuadratureError(K, MIN_ARC_POINTS)

    theta = np.linspace(theta1, theta2, K + 1)
    z = r * np.exp(1j * theta)
    if _closed_form_available(f, alpha):
        values = p_closed_form(f, z).real
    else:
        P = p_operator(f, alpha)
        error = _series_tail(P, r, theta2 - theta1)
        if error > HONEST_TAIL:
            raise TruncationInsufficient(P.order, r)
        values = evaluate_points(P, z).real
    return arc_trapezoid(values, theta1, theta2)


def _arc_table(values: np.ndarray, grid: int) -> np.ndarray:
    # entry [i, j]: arc from 2 pi i / grid of length 2 pi (j + 1) / grid
    step = values.size // grid
    C = cumulative_periodic(values, turns=2)
    starts = np.arange(grid) * step
    ends = starts[:, None] + np.arange(1, grid + 1)[None, :] * step
    return C[ends] - C[starts][:, None]


def necessary_scan(
    f: BazFunction,
    alpha: float,
    radii: Sequence[float] = DEFAULT_SCAN_RADII,
    grid: int = DEFAULT_SCAN_GRID,
    K: int = DEFAULT_QUAD_POINTS,
    *,
    threads: int | None = None,
) -> NecessaryScanReport:
    """Minimizes the arc integral of Re P[alpha, f] over radii and ``grid x grid`` arcs.

    Arcs start at ``2 pi i / grid`` and have length ``2 pi j / grid`` for
    ``j = 1 .. grid``, so the last column is the whole circle. The result is
    sampled evidence for the lower bound -pi, never a proof of it.
    """
    _check_alpha(alpha)
    if grid < 1:
        raise SpecInvalid(f"Scan grid must be positive, got {grid}")
    if not radii:
        raise SpecInvalid("At least one radius is required")
    for r in radii:
        _check_r(r)
    if K < MIN_ARC_POINTS:
        raise QuadratureError(K, MIN_ARC_POINTS)
    if not aligned(K, 2 * grid):
        K = (K // (2 * grid) + 1) * 2 * grid
        log.debug("rounded quadrature points up to %d to align with the %d-point scan grid", K, grid)

    closed = _closed_form_available(f, alpha)
    P = None if closed else p_operator(f, alpha)

    def scan_one(r: float) -> RadiusScan:
        Kr = points_for_radius(r, K)
        if Kr != K:
            log.debug("r=%s: escalated quadrature points from %d to %d", r, K, Kr)
        truncation_error = None
        if P is None:
            values = p_closed_form(f, r * np.exp(1j * circle_angles(Kr))).real
        else:
            values = eval_circle(P, r, Kr).real
            truncation_error = _series_tail(P, r, TWO_PI)
        fine = _arc_table(values, grid)
        coarse = _arc_table(values[::2], grid)
        k = int(np.argmin(fine))
        i, j = divmod(k, grid)
        theta1 = TWO_PI * i / grid
        return RadiusScan(
            r=float(r),
            min_value=float(fine[i, j]),
            theta1=theta1,
            theta2=theta1 + TWO_PI * (j + 1) / grid,
            full_circle=float(fine[0, -1]),
            quad_points=Kr,
            quad_error=float(np.max(richardson_error(coarse, fine))),
            truncation_error=truncation_error,
            honest=truncation_error is None or truncation_error <= HONEST_TAIL,
        )

    scans = parallel_map(scan_one, list(radii), threads=threads)
    honest = [scan for scan in scans if scan.honest]
    if not honest:
        raise TruncationInsufficient(f.order, min(radii))
    if len(honest) < len(scans):
        log.warning(
            "P series of order %d is not trusted at r=%s; those radii are left out of the minimum",
            f.order,
            [scan.r for scan in scans if not scan.honest],
        )
    worst = min(scan.min_value for scan in honest)
    return NecessaryScanReport(
        alpha=alpha,
        grid=grid,
        evaluation="closed-form" if closed else "series",
        radii=scans,
        min_value=worst,
        exceeds_bound=worst > -math.pi,
    )


def to_CI(g: BazFunction, alpha: float) -> Series:
    """``G = int_0^z (g/t)^(1 - 1/alpha) g'^(1/alpha) dt``.

    For ``g`` in B_1(alpha) built from h, ``G' = h^(1/alpha)``.
    """
    _check_alpha(alpha)
    if abs(g.alpha_total - alpha) > UNIT_TOL:
        raise AlphaMismatch(g.alpha_total, alpha)
    u = g.unit
    gp = u + theta_deriv(u)
    integrand = pow_real(pow_real(u, alpha - 1.0) * gp, 1.0 / alpha)
    return antideriv(integrand)


def from_CI(F: Series, beta: float) -> BazFunction:
    """The member of B_1(1/beta) whose Caratheodory factor is ``F'^(1/beta)``."""
    if not (0.0 < beta < 1.0):
        raise AlphaOutOfRange(beta, "(0, 1)", name="beta")
    if abs(F[0]) > UNIT_TOL:
        raise NormalizationError(f"F(0) must vanish, got {F[0]!r}")
    if F.order < 1 or abs(F[1] - 1.0) > UNIT_TOL:
        raise NormalizationError("F'(0) must equal 1")

    alpha = 1.0 / beta
    p = pow_real(deriv(F), alpha)
    unit = pow_real(power_integral(p, alpha), beta)
    return BazFunction(unit=unit, alpha_total=alpha, alphas=(alpha,), b1=True)


def correspondence(g: BazFunction, alpha: float) -> CorrespondenceReport:
    """``to_CI`` followed by ``from_CI``, reporting how far the round trip lands from g."""
    G = to_CI(g, alpha)
    back = from_CI(G, 1.0 / alpha)
    n = back.order + 1
    error = float(np.max(np.abs(back.unit.coeffs[:n] - g.unit.coeffs[:n])))
    return CorrespondenceReport(alpha=alpha, G=G, round_trip_error=error)
