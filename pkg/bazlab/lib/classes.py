"""Constructors and sampled checks for the ingredient classes.

Members are produced by construction (Herglotz atoms, Schwarz functions), so
they belong to their class by design. The sampled checks are regression tests:
they can refute membership of a truncated series, they cannot certify it.
"""

from __future__ import annotations

import math
import logging
from typing import Sequence

import numpy as np

from .powser import Series, mul, div, scale, compose, exp_series, eval_circle, theta_deriv, evaluate_points
from .._constants import (
    R_MAX,
    TWO_PI,
    POSITIVITY_TOL,
    SCHWARZ_MARGIN,
    SCHWARZ_CHECK_POINTS,
    SCHWARZ_CHECK_RADIUS,
)
from .._exceptions import SpecInvalid, OmegaNotSchwarz, RadiusOutOfRange
from ..types.omega_spec import OmegaSpec
from ..types.janowski_params import JanowskiParams
from ..types.sampled_reports import StarlikeReport, PositivityReport
from ..types.herglotz_measure import HerglotzMeasure

__all__ = [
    "caratheodory",
    "janowski_phi",
    "starlike_janowski",
    "koebe_type",
    "check_positive_real_part",
    "check_starlike_janowski",
    "schwarz_function",
    "omega_values",
    "random_schwarz",
]

log: logging.Logger = logging.getLogger(__name__)


def caratheodory(mu: HerglotzMeasure, N: int) -> Series:
    """``p(z) = sum_k lam_k (1 + z e^{-i t_k}) / (1 - z e^{-i t_k})``, so ``p_n = 2 sum_k lam_k e^{-i n t_k}``."""
    lam = np.array([atom.lam for atom in mu.atoms])
    t = np.array([atom.t for atom in mu.atoms])
    n = np.arange(1, N + 1)
    c = np.empty(N + 1, dtype=np.complex128)
    c[0] = 1.0
    c[1:] = 2.0 * (np.exp(-1j * np.outer(n, t)) @ lam)
    return Series(c)


def janowski_phi(jp: JanowskiParams, N: int) -> Series:
    """``(1 + A z) / (1 + B z) = 1 + (A - B) sum_{n>=1} (-B)^{n-1} z^n``."""
    n = np.arange(1, N + 1)
    c = np.empty(N + 1, dtype=np.complex128)
    c[0] = 1.0
    c[1:] = (jp.A - jp.B) * np.power(-jp.B, n - 1)
    return Series(c)


def _check_schwarz(omega: Series) -> None:
    if abs(omega[0]) > 0:
        raise OmegaNotSchwarz(f"omega(0) must vanish, got {omega[0]!r}")
    sup = float(np.max(np.abs(eval_circle(omega, SCHWARZ_CHECK_RADIUS, SCHWARZ_CHECK_POINTS))))
    if sup >= 1.0 - SCHWARZ_MARGIN:
        raise OmegaNotSchwarz(
            f"omega reaches modulus {sup!r} on |z| = {SCHWARZ_CHECK_RADIUS}, it is not a self-map of the disk"
        )


def starlike_janowski(jp: JanowskiParams, omega: Series, N: int) -> Series:
    """Unit series ``g/z`` of the starlike function with ``z g'/g = phi_{A,B}(omega)``.

    ``g = z exp(integral_0^z (phi(omega(t)) - 1) / t dt)``.
    """
    _check_schwarz(omega)
    q = compose(janowski_phi(jp, N), omega)
    c = q.coeffs.copy()
    c[0] = 0.0
    degrees = np.arange(1, c.size)
    c[1:] = c[1:] / degrees
    return exp_series(Series(c))


def koebe_type(theta: float, N: int) -> Series:
    """``k_theta(z) = z (1 - e^{-i theta} z)^{-2}``; degree-n coefficient ``n e^{-i (n-1) theta}``."""
    n = np.arange(N + 1)
    c = n * np.exp(-1j * (n - 1) * theta)
    c[0] = 0.0
    return Series(c)


def check_positive_real_part(
    p: Series,
    r_grid: Sequence[float],
    K: int,
    *,
    tolerance: float = POSITIVITY_TOL,
) -> PositivityReport:
    if len(r_grid) == 0:
        raise SpecInvalid("At least one radius is required")
    for r in r_grid:
        if not (0.0 < r <= R_MAX):
            raise RadiusOutOfRange(r, R_MAX)
    best = math.inf
    best_r = math.nan
    best_theta = math.nan
    for r in r_grid:
        re = eval_circle(p, r, K).real
        k = int(np.argmin(re))
        if re[k] < best:
            best = float(re[k])
            best_r = float(r)
            best_theta = TWO_PI * k / K
    return PositivityReport(
        min_real_part=best,
        radius=best_r,
        theta=best_theta,
        violated=best < -tolerance,
        tolerance=tolerance,
    )


def check_starlike_janowski(
    jp: JanowskiParams,
    unit: Series,
    radii: Sequence[float] = (0.5, 0.9),
    K: int = 512,
) -> StarlikeReport:
    """Samples ``w = phi^{-1}(z g'/g)``; a member of the class has ``|w| < 1``."""
    zg_over_g = div(theta_deriv(unit), unit) + 1.0
    worst = 0.0
    worst_r = None
    for r in radii:
        w = jp.phi_inverse(eval_circle(zg_over_g, r, K))
        m = float(np.max(np.abs(w)))
        if m > worst:
            worst, worst_r = m, float(r)
    return StarlikeReport(max_modulus=worst, radius=worst_r, member=worst < 1.0)


def schwarz_function(spec: OmegaSpec, N: int) -> Series:
    if spec.kind == "z":
        omega = Series.identity(N)
    elif spec.kind == "power":
        if spec.k < 1:
            raise OmegaNotSchwarz(f"power Schwarz functions need k >= 1, got {spec.k}")
        if not (0 < spec.scale <= 1):
            raise OmegaNotSchwarz(f"scale must lie in (0, 1], got {spec.scale!r}")
        omega = Series.monomial(spec.k, N, spec.scale)
    elif spec.kind == "blaschke":
        if spec.c is None or len(spec.c) != 2:
            raise OmegaNotSchwarz("blaschke Schwarz functions need c = [re, im]")
        c = complex(spec.c[0], spec.c[1])
        if abs(c) >= 1:
            raise OmegaNotSchwarz(f"blaschke parameter must satisfy |c| < 1, got {c!r}")
        if not (0 < spec.scale <= 1):
            raise OmegaNotSchwarz(f"scale must lie in (0, 1], got {spec.scale!r}")
        factor = div(Series([c, 1.0], order=N), Series([1.0, c.conjugate()], order=N))
        omega = scale(mul(Series.identity(N), factor), spec.scale)
    else:
        if spec.coeffs is None:
            raise OmegaNotSchwarz("series Schwarz functions need explicit coeffs")
        omega = Series(spec.coeffs.coeffs, order=N)
    _check_schwarz(omega)
    return omega


def omega_values(spec: OmegaSpec, z: np.ndarray, N: int) -> np.ndarray:
    """Closed-form ``omega(z)`` for a recipe already accepted by :func:`schwarz_function`.

    Explicit `series` recipes are polynomials of degree at most N and are evaluated as given.
    """
    z = np.asarray(z, dtype=np.complex128)
    if spec.kind == "z":
        return z
    if spec.kind == "power":
        return spec.scale * z**spec.k
    if spec.kind == "blaschke":
        assert spec.c is not None
        c = complex(spec.c[0], spec.c[1])
        return spec.scale * z * (z + c) / (1.0 + c.conjugate() * z)
    assert spec.coeffs is not None
    return evaluate_points(Series(spec.coeffs.coeffs, order=N), z)


def random_schwarz(rng: np.random.Generator, N: int, *, max_terms: int = 3, max_degree: int = 3) -> Series:
    """Convex combination of rotated monomials ``e^{i phi} z^k``; its modulus never exceeds ``|z|``."""
    terms = int(rng.integers(1, max_terms + 1))
    weights = rng.dirichlet(np.ones(terms))
    degrees = rng.integers(1, max_degree + 1, size=terms)
    phases = rng.uniform(0.0, TWO_PI, size=terms)
    c = np.zeros(N + 1, dtype=np.complex128)
    for w, k, phi in zip(weights, degrees, phases):
        if k <= N:
            c[k] += w * np.exp(1j * phi)
    log.debug("random Schwarz function with %d terms, degrees %s", terms, degrees.tolist())
    return Series(c)
