"""Coefficient estimates for B_1(alpha) through ``psi = (f/z)^alpha = 1 + sum A_n z^n``.

``z psi' + alpha psi = alpha p`` compares coefficientwise to ``(n + alpha) A_n = alpha p_n``,
which together with ``|p_n| <= 2`` gives the sharp bound ``|A_n| <= 2 alpha / (n + alpha)``.
"""

from __future__ import annotations

import math
import logging
from typing import List, Tuple, Optional, Sequence
from typing_extensions import Literal

import numpy as np

from .powser import Series, pow_real, times_z, theta_deriv
from .classes import caratheodory, check_positive_real_part
from .sampling import trial_rng, random_measure
from .bazilevic import b1_member, power_integral
from .._constants import (
    BOUND_SLACK,
    SWEEP_MAX_DEGREE,
    DOMINATION_SLACK,
    COUNTEREXAMPLE_TOL,
    DEFAULT_QUAD_POINTS,
)
from .._exceptions import SpecInvalid, LengthMismatch, AlphaOutOfRange
from .._utils import parallel_map
from ..types.psi_series import PsiSeries
from ..types.bazilevic_spec import BazFunction
from ..types.bound_report import BoundRecord, BoundReport, DominationReport
from ..types.sweep_report import SweepReport, SweepArgmax, Counterexample
from ..types.sampled_reports import PositivityReport
from ..types.herglotz_measure import HerglotzMeasure
from ..types.bazilevic_spec_params import HParams, BazilevicSpecParams

__all__ = [
    "psi_from_f",
    "coefficients_of_f",
    "recurrence_check",
    "bound_check",
    "extremal_G",
    "domination_check",
    "subordination_check",
    "conjecture1_reference",
    "conjecture_ratios",
    "conjecture_sweep",
]

log: logging.Logger = logging.getLogger(__name__)

Conjecture = Literal[1, 2]


def psi_from_f(f: BazFunction) -> PsiSeries:
    return PsiSeries(coeffs=pow_real(f.unit, f.alpha_total), alpha=f.alpha_total)


def coefficients_of_f(psi: PsiSeries) -> Series:
    """``f = z psi^(1/alpha)`` at the order of psi; entry n is a_n."""
    return times_z(pow_real(psi.coeffs, 1.0 / psi.alpha)).truncate(psi.order)


def recurrence_check(psi: PsiSeries, p: Series) -> float:
    """``max |(n + alpha) A_n - alpha p_n|`` over ``1 <= n <= N-1``."""
    top = psi.order - 1
    if p.order < top:
        raise LengthMismatch(f"p has order {p.order}, psi needs at least {top}")
    if top < 1:
        return 0.0
    n = np.arange(1, top + 1)
    A = psi.coeffs.coeffs[1 : top + 1]
    residual = (n + psi.alpha) * A - psi.alpha * p.coeffs[1 : top + 1]
    return float(np.max(np.abs(residual)))


def _bounds(alpha: float, N: int) -> np.ndarray:
    n = np.arange(1, N + 1)
    return 2.0 * alpha / (n + alpha)


def bound_check(psi: PsiSeries) -> BoundReport:
    bounds = _bounds(psi.alpha, psi.order)
    moduli = np.abs(psi.coeffs.coeffs[1:])
    ratios = moduli / bounds
    records = [
        BoundRecord(n=n, abs_An=float(m), bound=float(b), ratio=float(q))
        for n, m, b, q in zip(range(1, psi.order + 1), moduli, bounds, ratios)
    ]
    if not records:
        return BoundReport(alpha=psi.alpha, records=[], max_ratio=0.0)
    k = int(np.argmax(ratios))
    if ratios[k] > 1.0 + BOUND_SLACK:
        log.warning("|A_%d| exceeds the sharp bound: ratio %.12g", k + 1, ratios[k])
    return BoundReport(alpha=psi.alpha, records=records, max_ratio=float(ratios[k]), witness_degree=k + 1)


def _check_positive(alpha: float) -> None:
    if not (alpha > 0) or not math.isfinite(alpha):
        raise AlphaOutOfRange(alpha, "(0, inf)")


def extremal_G(alpha: float, N: int) -> PsiSeries:
    """``G = alpha z^-alpha int_0^z t^(alpha-1) (1+t)/(1-t) dt``, so ``A_n = 2 alpha / (n + alpha)``."""
    _check_positive(alpha)
    p = caratheodory(HerglotzMeasure.point_mass(0.0), N)
    return PsiSeries(coeffs=power_integral(p, alpha), alpha=alpha)


def domination_check(psi: PsiSeries) -> DominationReport:
    """``psi << G``: every ``|A_n|`` at most the extremal coefficient ``2 alpha / (n + alpha)``."""
    if psi.order < 1:
        return DominationReport(dominated=True, margin=math.inf)
    gaps = _bounds(psi.alpha, psi.order) - np.abs(psi.coeffs.coeffs[1:])
    k = int(np.argmin(gaps))
    return DominationReport(
        dominated=bool(np.all(gaps >= -DOMINATION_SLACK)),
        margin=float(gaps[k]),
        worst_degree=k + 1,
    )


def subordination_check(
    psi: PsiSeries,
    r_grid: Sequence[float] = (0.5, 0.8),
    K: int = DEFAULT_QUAD_POINTS,
) -> PositivityReport:
    """Samples ``(z psi' + alpha psi) / alpha``, which is subordinate to ``(1+z)/(1-z)`` exactly when Re > 0."""
    q = (theta_deriv(psi.coeffs) + psi.alpha * psi.coeffs) / psi.alpha
    return check_positive_real_part(q, r_grid, K)


def conjecture1_reference(alpha: float, N: int) -> Series:
    """Coefficients b_n of the g with ``g' (g/z)^(alpha-1) = (1+z)/(1-z)``, for ``0 < alpha <= 1``."""
    if not (0 < alpha <= 1):
        raise AlphaOutOfRange(alpha, "(0, 1]")
    return b1_member(alpha, HerglotzMeasure.point_mass(0.0), N).series


def _check_conjecture(which: int, alpha: float) -> None:
    if which == 1:
        if not (0 < alpha <= 1):
            raise AlphaOutOfRange(alpha, "(0, 1]")
    elif which == 2:
        if not (alpha >= 1) or not math.isfinite(alpha):
            raise AlphaOutOfRange(alpha, "[1, inf)")
    else:
        raise SpecInvalid(f"Unknown conjecture {which!r}, expected 1 or 2")


def conjecture_ratios(
    which: Conjecture,
    alpha: float,
    measure: HerglotzMeasure,
    N: int,
    n_max: int = SWEEP_MAX_DEGREE,
    *,
    reference: Optional[Series] = None,
) -> np.ndarray:
    """``|a_n| / bound_n`` for ``n = 2 .. n_max``; entry 0 is degree 2.

    Conjecture 1 bounds by ``|b_n|`` of :func:`conjecture1_reference`, conjecture 2 by
    ``2 / (n - 1 + alpha)``.
    """
    _check_conjecture(which, alpha)
    if not (2 <= n_max <= N):
        raise SpecInvalid(f"n_max must lie in [2, N={N}], got {n_max}")
    a = coefficients_of_f(psi_from_f(b1_member(alpha, measure, N)))
    n = np.arange(2, n_max + 1)
    moduli = np.abs(a.coeffs[2 : n_max + 1])
    if which == 1:
        if reference is None:
            reference = conjecture1_reference(alpha, N)
        bounds = np.abs(reference.coeffs[2 : n_max + 1])
    else:
        bounds = 2.0 / (n - 1 + alpha)
    return moduli / bounds


def conjecture_sweep(
    which: Conjecture,
    alpha: float,
    trials: int,
    seed: int,
    N: int,
    *,
    n_max: int = SWEEP_MAX_DEGREE,
    threads: Optional[int] = None,
) -> SweepReport:
    """Compares ``|a_n|`` of random B_1(alpha) members against a conjectured bound.

    Trial ``i`` draws from a stream split off ``seed`` by ``i`` alone, so the
    report does not depend on scheduling and a longer sweep extends a shorter one.
    Ratios above ``1 + COUNTEREXAMPLE_TOL`` are collected with a replayable spec;
    raising on them is left to the caller.
    """
    _check_conjecture(which, alpha)
    if trials < 0:
        raise SpecInvalid(f"trials cannot be negative, got {trials}")
    n_max = min(n_max, N)
    reference = conjecture1_reference(alpha, N) if which == 1 else None

    def run_trial(trial: int) -> Tuple[HerglotzMeasure, np.ndarray]:
        measure = random_measure(trial_rng(seed, trial))
        return measure, conjecture_ratios(which, alpha, measure, N, n_max, reference=reference)

    log.debug("conjecture %d sweep: alpha=%s, %d trials, seed %d, N=%d", which, alpha, trials, seed, N)
    results = parallel_map(run_trial, range(trials), threads=threads)

    max_ratio = 0.0
    argmax: Optional[SweepArgmax] = None
    found: List[Counterexample] = []
    for trial, (measure, ratios) in enumerate(results):
        k = int(np.argmax(ratios))
        ratio = float(ratios[k])
        if argmax is None or ratio > max_ratio:
            max_ratio, argmax = ratio, SweepArgmax(trial=trial, n=k + 2)
        if ratio > 1.0 + COUNTEREXAMPLE_TOL:
            log.info("trial %d: |a_%d| exceeds the conjectured bound by ratio %.12g", trial, k + 2, ratio)
            found.append(
                Counterexample(
                    trial=trial,
                    n=k + 2,
                    ratio=ratio,
                    measure=measure,
                    spec=BazilevicSpecParams(alphas=[alpha], h=HParams(measure=measure), N=N),
                )
            )

    return SweepReport(
        conjecture=which,
        alpha=alpha,
        trials=trials,
        seed=seed,
        N=N,
        n_max=n_max,
        max_ratio=max_ratio,
        argmax=argmax,
        counterexamples=found,
    )
