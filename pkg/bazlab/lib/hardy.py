"""Integral means on circles and the growth checks built on them.

``M_p(r, f) = ((1/2 pi) int |f(r e^(i theta))|^p d theta)^(1/p)``, and for
``p = inf`` the maximum modulus on the circle. A truncated series is only
trusted up to the radius where its tail bound stays small next to the means
themselves; radii beyond it are dropped, never extrapolated.
"""

from __future__ import annotations

import csv
import math
import logging
from typing import List, Tuple, Union, Optional, Sequence
from pathlib import Path

import numpy as np

from .powser import Series, eval_circle, evaluate_points
from .classes import koebe_type
from .quadrature import circle_angles, points_for_radius, periodic_trapezoid
from .._constants import (
    R_MAX,
    HONEST_TAIL,
    MONOTONE_SLACK,
    POWER_EXPONENTS,
    BOUNDED_RESIDUAL,
    MIN_MEANS_POINTS,
    DEFAULT_QUAD_POINTS,
)
from .._exceptions import SpecInvalid, QuadratureError, RadiusOutOfRange, TruncationInsufficient
from .._utils import parallel_map
from ..types.means_report import GrowthFit, MeansEntry, MeansReport, WitnessEntry, WitnessReport

__all__ = [
    "integral_means",
    "tail_bound",
    "honest_radius",
    "fit_growth",
    "means_profile",
    "koebe_divergence_witness",
    "write_plot_data",
]

log: logging.Logger = logging.getLogger(__name__)


def _check_p(p: float) -> None:
    if math.isnan(p) or not (p > 0):
        raise SpecInvalid(f"The exponent p must be positive, got {p!r}")


def _check_radii(radii: Sequence[float]) -> List[float]:
    radii = [float(r) for r in radii]
    if not radii:
        raise SpecInvalid("At least one radius is required")
    for r in radii:
        if not (0.0 < r <= R_MAX):
            raise RadiusOutOfRange(r, R_MAX)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise SpecInvalid(f"Radii must be strictly increasing, got {radii!r}")
    return radii


def _mean_of_moduli(moduli: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(moduli))
    return float(np.mean(moduli**p) ** (1.0 / p))


def integral_means(f: Series, p: float, r: float, K: int = DEFAULT_QUAD_POINTS) -> float:
    """``M_p(r, f)`` by the trapezoid rule on K equispaced points; ``p = inf`` gives the sampled max modulus."""
    _check_p(p)
    if K < MIN_MEANS_POINTS:
        raise QuadratureError(K, MIN_MEANS_POINTS)
    if not (0.0 < r <= R_MAX):
        raise RadiusOutOfRange(r, R_MAX)
    return _mean_of_moduli(np.abs(eval_circle(f, r, K)), p)


def tail_bound(f: Series, r: float) -> float:
    """Bound for ``sum_{n>N} |a_n| r^n`` assuming ``|a_n| <= C n`` beyond the order.

    ``C`` is the largest ``|a_n| / n`` over the upper half of the known
    coefficients, and ``sum_{n>N} n r^n = r^(N+1) ((N+1) - N r) / (1-r)^2``.
    """
    N = f.order
    if r <= 0:
        return 0.0
    if r >= 1:
        return math.inf
    lo = max(1, N // 2)
    n = np.arange(lo, N + 1)
    if n.size == 0:
        return 0.0
    C = float(np.max(np.abs(f.coeffs[lo:]) / n))
    if C == 0.0:
        return 0.0
    return C * r ** (N + 1) * ((N + 1) - N * r) / (1.0 - r) ** 2


def honest_radius(f: Series, tol: float = HONEST_TAIL) -> float:
    """Largest radius where the tail bound is at most ``tol * |a_1| r``.

    ``|a_1| r`` is a lower bound for ``M_p(r, f)`` at every p when ``f(0) = 0``;
    without a linear term the comparison is absolute.
    """
    scale = abs(f[1]) if f.order >= 1 and f[1] != 0 else 1.0

    def honest(r: float) -> bool:
        return tail_bound(f, r) <= tol * scale * r

    if honest(R_MAX):
        return R_MAX
    lo, hi = 0.0, R_MAX
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if honest(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _relative_rms(values: np.ndarray, fitted: np.ndarray) -> float:
    scale = float(np.mean(np.abs(values)))
    if scale == 0.0:
        return 0.0
    return float(np.sqrt(np.mean((values - fitted) ** 2)) / scale)


def _linear_fit(x: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    design = np.column_stack([np.ones_like(x), x])
    (a, b), *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(a), float(b), _relative_rms(y, design @ np.array([a, b]))


def fit_growth(radii: Sequence[float], values: Sequence[float]) -> Optional[GrowthFit]:
    """Picks a growth model for ``values`` against ``r``.

    The constant model wins outright when its relative RMS residual is below
    ``BOUNDED_RESIDUAL``. Otherwise ``a + b log(1/(1-r))`` and the best
    ``a + b (1-r)^-s`` over ``POWER_EXPONENTS`` compete on residual. Fewer than
    three points support no claim and give None.
    """
    if len(radii) != len(values):
        raise SpecInvalid(f"Got {len(values)} values for {len(radii)} radii")
    if len(radii) < 3:
        return None
    r = np.asarray(radii, dtype=float)
    y = np.asarray(values, dtype=float)

    mean = float(np.mean(y))
    constant_residual = _relative_rms(y, np.full_like(y, mean))
    if constant_residual < BOUNDED_RESIDUAL:
        return GrowthFit(model="bounded", parameters={"a": mean}, residual=constant_residual)

    a, b, log_residual = _linear_fit(np.log(1.0 / (1.0 - r)), y)
    best_power: Optional[Tuple[float, float, float, float]] = None
    for s in POWER_EXPONENTS:
        pa, pb, residual = _linear_fit((1.0 - r) ** -s, y)
        if best_power is None or residual < best_power[3]:
            best_power = (s, pa, pb, residual)
    assert best_power is not None

    s, pa, pb, power_residual = best_power
    if log_residual <= power_residual:
        return GrowthFit(model="log-divergent", parameters={"a": a, "b": b}, residual=log_residual)
    return GrowthFit(model="power-divergent", parameters={"a": pa, "b": pb, "s": s}, residual=power_residual)


def means_profile(
    f: Series,
    p: float,
    radii: Sequence[float],
    K: int = DEFAULT_QUAD_POINTS,
    *,
    threads: Optional[int] = None,
) -> MeansReport:
    """``M_p(r, f)`` over increasing radii with a growth classification.

    The fit runs on ``M_p(r, f/z)^p``, which equals ``(M_p(r, f) / r)^p`` when
    ``f(0) = 0``; for ``p = inf`` the power is dropped.
    """
    _check_p(p)
    radii = _check_radii(radii)
    if K < MIN_MEANS_POINTS:
        raise QuadratureError(K, MIN_MEANS_POINTS)

    limit = honest_radius(f)
    kept = [r for r in radii if r <= limit]
    dropped = [r for r in radii if r > limit]
    if dropped:
        log.warning(
            "dropping radii %s: the order-%d truncation is only trusted up to r=%.6g", dropped, f.order, limit
        )

    values = parallel_map(lambda r: integral_means(f, p, r, K), kept, threads=threads)
    entries = [MeansEntry(r=r, value=v, truncation_error=tail_bound(f, r)) for r, v in zip(kept, values)]

    monotone = all(b >= a - MONOTONE_SLACK for a, b in zip(values, values[1:]))
    if not monotone:
        log.warning("integral means decrease in r beyond slack %g: %s", MONOTONE_SLACK, values)

    vanishing = abs(f[0]) == 0.0
    normalized = [v / r if vanishing else v for r, v in zip(kept, values)]
    if not math.isinf(p):
        normalized = [v**p for v in normalized]

    return MeansReport(
        p=p,
        entries=entries,
        fit=fit_growth(kept, normalized),
        monotone=monotone,
        dropped_radii=dropped,
    )


def _koebe_moduli(theta: float, r: float, K: int) -> Tuple[np.ndarray, np.ndarray]:
    # |k_theta(r e^(i phi))| = r / |1 - r e^(i (phi - theta))|^2 on the grid phi = theta + 2 pi k / K
    offsets = circle_angles(K)
    moduli = r / np.abs(1.0 - r * np.exp(1j * offsets)) ** 2
    return offsets + theta, moduli


def koebe_divergence_witness(
    theta: float,
    radii: Sequence[float],
    N: int,
    K: int = DEFAULT_QUAD_POINTS,
    *,
    threads: Optional[int] = None,
) -> WitnessReport:
    """``int_0^2pi |k_theta(r e^(i phi))|^(1/2) d phi`` against ``sqrt(2) r^(1/2) log(1/(1-r))``.

    The integrand is evaluated in closed form. The order-N series is integrated
    as a cross-check at the radii where its tail changes the integral by at
    most 1% of the bound.
    """
    radii = _check_radii(radii)
    if K < MIN_MEANS_POINTS:
        raise QuadratureError(K, MIN_MEANS_POINTS)
    series = koebe_type(theta, N)

    def sample(r: float) -> WitnessEntry:
        angles, moduli = _koebe_moduli(theta, r, points_for_radius(r, K))
        lhs = periodic_trapezoid(np.sqrt(moduli))
        rhs = math.sqrt(2.0) * math.sqrt(r) * math.log(1.0 / (1.0 - r))
        tail = tail_bound(series, r)
        series_lhs = None
        if 2.0 * math.pi * math.sqrt(tail) <= 0.01 * rhs:
            values = evaluate_points(series, r * np.exp(1j * angles))
            series_lhs = periodic_trapezoid(np.sqrt(np.abs(values)))
        return WitnessEntry(r=r, lhs=lhs, rhs=rhs, ratio=lhs / rhs, series_lhs=series_lhs, truncation_error=tail)

    entries = parallel_map(sample, radii, threads=threads)
    if entries[0].series_lhs is None:
        raise TruncationInsufficient(N, radii[0])
    log.debug("Koebe witness: series cross-check honest at %d of %d radii", sum(e.series_lhs is not None for e in entries), len(entries))

    fit = fit_growth(radii, [e.lhs for e in entries])
    return WitnessReport(
        theta=theta,
        order=N,
        entries=entries,
        fit=fit,
        divergent=None if fit is None else fit.model != "bounded",
    )


def write_plot_data(report: MeansReport, prefix: Union[str, Path]) -> Tuple[Path, Path]:
    """Writes ``(r, M_p)`` to ``<prefix>_r.dat`` and ``(log(1/(1-r)), M_p)`` to ``<prefix>_log.dat``."""
    prefix = Path(prefix)
    linear = prefix.with_name(prefix.name + "_r.dat")
    logarithmic = prefix.with_name(prefix.name + "_log.dat")
    for path, header, transform in (
        (linear, "r", lambda r: r),
        (logarithmic, "log(1/(1-r))", lambda r: math.log(1.0 / (1.0 - r))),
    ):
        with path.open("w", newline="") as fh:
            fh.write(f"# {header} M_p  p={report.p}\n")
            writer = csv.writer(fh, delimiter=" ")
            for entry in report.entries:
                writer.writerow([repr(transform(entry.r)), repr(entry.value)])
    return linear, logarithmic
