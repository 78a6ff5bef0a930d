"""Unit tests for the coefficient estimates and conjecture sweeps in lib/coeffs.py."""

import math

import mpmath
import numpy as np
import pytest

from bazlab import Series, SpecInvalid, LengthMismatch, AlphaOutOfRange
from bazlab.types import PsiSeries, HerglotzMeasure
from bazlab.lib.powser import evaluate
from bazlab.lib.classes import caratheodory
from bazlab.lib.sampling import trial_rng, random_measure
from bazlab.lib.bazilevic import b1_member, construct, resolve_spec
from bazlab.lib.coeffs import (
    psi_from_f,
    extremal_G,
    bound_check,
    conjecture_sweep,
    domination_check,
    recurrence_check,
    coefficients_of_f,
    conjecture_ratios,
    subordination_check,
    conjecture1_reference,
)


def _sharp(alpha, N):
    n = np.arange(1, N + 1)
    return 2.0 * alpha / (n + alpha)


class TestPsi:
    """Test psi = (f/z)^alpha and the sharp bound on its coefficients."""

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0, 3.5])
    def test_extremal_member_attains_the_bound(self, alpha):
        """Test A_n = 2 alpha / (n + alpha) for h = (1 + z) / (1 - z)."""
        psi = psi_from_f(b1_member(alpha, HerglotzMeasure.point_mass(0.0), 32))
        np.testing.assert_allclose(psi.coeffs.coeffs[1:], _sharp(alpha, 32), atol=1e-9)

    def test_coefficients_of_f_inverts_psi(self, rng):
        """Test that f = z psi^(1/alpha) recovers f."""
        f = b1_member(1.3, random_measure(rng), 24)
        np.testing.assert_allclose(coefficients_of_f(psi_from_f(f)).coeffs, f.series.coeffs, atol=1e-12)

    @pytest.mark.parametrize("alpha", [0.3, 1.0, 2.0])
    def test_random_members_obey_recurrence_and_bound(self, alpha):
        """Test (n + alpha) A_n = alpha p_n and |A_n| <= 2 alpha / (n + alpha) on 200 random measures."""
        for trial in range(200):
            measure = random_measure(trial_rng(2024, trial))
            f = b1_member(alpha, measure, 32)
            psi = psi_from_f(f)
            assert recurrence_check(psi, caratheodory(measure, 32)) <= 1e-10
            assert bound_check(psi).max_ratio <= 1.0 + 1e-9

    def test_every_single_atom_is_sharp_at_every_degree(self, rng):
        """Test that a point mass at any angle attains the bound at every n."""
        t = float(rng.uniform(0.0, 2 * math.pi))
        report = bound_check(psi_from_f(b1_member(0.8, HerglotzMeasure.point_mass(t), 32)))
        for record in report.records:
            assert record.ratio == pytest.approx(1.0, abs=1e-9)

    def test_recurrence_needs_enough_coefficients(self):
        """Test that p must reach degree N - 1."""
        psi = psi_from_f(b1_member(1.0, HerglotzMeasure.point_mass(0.0), 32))
        with pytest.raises(LengthMismatch):
            recurrence_check(psi, Series.geometric(16))


class TestExtremal:
    """Test the extremal function G and domination."""

    def test_coefficients(self):
        """Test the first coefficients of G for alpha = 1 and 2."""
        np.testing.assert_allclose(extremal_G(1.0, 3).coeffs.coeffs, [1, 1, 2 / 3, 1 / 2])
        np.testing.assert_allclose(extremal_G(2.0, 3).coeffs.coeffs, [1, 4 / 3, 1, 4 / 5])

    def test_alpha_must_be_positive(self):
        """Test alpha > 0."""
        with pytest.raises(AlphaOutOfRange):
            extremal_G(0.0, 8)

    def test_extremal_is_sharp_and_dominated(self):
        """Test that G meets the bound with equality."""
        psi = extremal_G(2.0, 32)
        assert bound_check(psi).max_ratio == pytest.approx(1.0, abs=1e-12)
        report = domination_check(psi)
        assert report.dominated
        assert abs(report.margin) <= 1e-12

    def test_constant_psi(self):
        """Test psi = 1 has ratio 0 and the largest margin at the top degree."""
        psi = PsiSeries(coeffs=Series.constant(1.0, 16), alpha=0.7)
        assert bound_check(psi).max_ratio == 0.0
        report = domination_check(psi)
        assert report.dominated
        assert report.worst_degree == 16
        assert report.margin == pytest.approx(1.4 / 16.7)

    def test_excess_is_reported(self):
        """Test that an inflated A_1 breaks domination at degree 1."""
        alpha = 1.5
        psi = PsiSeries(coeffs=Series([1.0, 2 * alpha / (1 + alpha) + 0.1], order=8), alpha=alpha)
        report = domination_check(psi)
        assert not report.dominated
        assert report.worst_degree == 1
        assert report.margin == pytest.approx(-0.1)
        bounds = bound_check(psi)
        assert bounds.max_ratio > 1.0
        assert bounds.witness_degree == 1

    def test_subordination_of_random_members(self, rng):
        """Test that (z psi' + alpha psi) / alpha has positive real part."""
        psi = psi_from_f(b1_member(2.0, random_measure(rng), 32))
        report = subordination_check(psi)
        assert not report.violated
        assert report.min_real_part > 0


class TestConjectureReference:
    """Test the reference function of the first conjecture."""

    def test_alpha_one(self):
        """Test b_n = 2/n for alpha = 1."""
        b = conjecture1_reference(1.0, 16)
        assert b[1] == pytest.approx(1.0)
        for n in range(2, 17):
            assert b[n] == pytest.approx(2.0 / n, abs=1e-12)

    @pytest.mark.parametrize("x", [0.3, 0.6])
    def test_alpha_half_against_quadrature(self, x):
        """Test g(x) for alpha = 1/2 against the defining integral in high precision."""
        with mpmath.workdps(30):
            root = mpmath.sqrt(x)
            integral = mpmath.quad(lambda s: 2 * (1 + s**2) / (1 - s**2), [0, root])
            expected = float(x * (integral / (2 * root)) ** 2)
        g = conjecture1_reference(0.5, 64)
        assert evaluate(g, x).real == pytest.approx(expected, rel=1e-10)
        assert abs(evaluate(g, x).imag) < 1e-14

    def test_order(self):
        """Test that the reference function has the requested order."""
        assert conjecture1_reference(0.5, 32).order == 32
        psi = extremal_G(2.0, 32)
        assert coefficients_of_f(psi).order == psi.order

    @pytest.mark.parametrize("alpha", [0.0, 1.2])
    def test_alpha_range(self, alpha):
        """Test 0 < alpha <= 1."""
        with pytest.raises(AlphaOutOfRange):
            conjecture1_reference(alpha, 8)


class TestConjectureRatios:
    """Test ratios of |a_n| to the conjectured bounds."""

    def test_second_conjecture_is_sharp_for_alpha_one(self):
        """Test a_n = 2/n against 2 / (n - 1 + alpha) at alpha = 1."""
        ratios = conjecture_ratios(2, 1.0, HerglotzMeasure.point_mass(0.0), 32)
        assert ratios.shape == (15,)
        np.testing.assert_allclose(ratios, 1.0, atol=1e-10)

    def test_first_conjecture_is_rotation_invariant(self):
        """Test that the rotated reference function has ratio 1 at every degree."""
        ratios = conjecture_ratios(1, 0.5, HerglotzMeasure.point_mass(2.0), 32)
        np.testing.assert_allclose(ratios, 1.0, atol=1e-9)

    def test_ranges(self):
        """Test the admissible alphas and degrees."""
        mu = HerglotzMeasure.point_mass(0.0)
        with pytest.raises(AlphaOutOfRange):
            conjecture_ratios(2, 0.5, mu, 32)
        with pytest.raises(AlphaOutOfRange):
            conjecture_ratios(1, 2.0, mu, 32)
        with pytest.raises(SpecInvalid):
            conjecture_ratios(2, 2.0, mu, 32, n_max=40)
        with pytest.raises(SpecInvalid):
            conjecture_ratios(3, 2.0, mu, 32)


class TestConjectureSweep:
    """Test randomized conjecture sweeps."""

    def test_deterministic(self):
        """Test that the same seed gives byte-identical reports."""
        first = conjecture_sweep(2, 1.5, 100, 7, 16)
        second = conjecture_sweep(2, 1.5, 100, 7, 16)
        assert first.to_json() == second.to_json()

    def test_independent_of_threads(self):
        """Test that the report does not depend on the worker count."""
        assert conjecture_sweep(1, 0.5, 40, 3, 16, threads=1) == conjecture_sweep(1, 0.5, 40, 3, 16, threads=4)

    def test_longer_sweeps_extend_shorter_ones(self):
        """Test that the maximum ratio is monotone in the number of trials."""
        short = conjecture_sweep(2, 2.0, 10, 11, 16)
        long = conjecture_sweep(2, 2.0, 20, 11, 16)
        assert long.max_ratio >= short.max_ratio

    def test_no_trials(self):
        """Test that an empty sweep reports nothing."""
        report = conjecture_sweep(2, 1.5, 0, 1, 16)
        assert report.max_ratio == 0.0
        assert report.argmax is None
        assert report.counterexamples == []

    def test_negative_trials(self):
        """Test that trials must be non-negative."""
        with pytest.raises(SpecInvalid):
            conjecture_sweep(2, 1.5, -1, 1, 16)

    def test_degree_is_clipped_to_the_order(self):
        """Test n_max <= N."""
        assert conjecture_sweep(2, 1.5, 2, 1, 8).n_max == 8

    @pytest.mark.parametrize(
        "which,alpha",
        [(1, 0.25), (1, 0.5), (1, 0.75), (1, 1.0), (2, 1.0), (2, 1.5), (2, 2.0), (2, 3.0), (2, 4.0)],
    )
    def test_full_sweep(self, which, alpha):
        """Test 1000 trials: proven cases stay below the bound and every excess replays from its spec."""
        report = conjecture_sweep(which, alpha, 1000, 42, 16)
        assert report.trials == 1000
        assert report.argmax is not None
        if alpha == 1.0:
            assert report.max_ratio <= 1.0 + 1e-6
            assert report.counterexamples == []
        for found in report.counterexamples:
            f = construct(resolve_spec(found.spec))
            a = coefficients_of_f(psi_from_f(f))
            if which == 1:
                bound = abs(conjecture1_reference(alpha, 16)[found.n])
            else:
                bound = 2.0 / (found.n - 1 + alpha)
            assert abs(a[found.n]) / bound == pytest.approx(found.ratio, rel=1e-12)
