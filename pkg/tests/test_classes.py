"""Unit tests for the ingredient classes in lib/classes.py and lib/sampling.py."""

import math

import numpy as np
import pytest

from bazlab import Series, SpecInvalid, InvalidMeasure, InvalidJanowski, OmegaNotSchwarz, RadiusOutOfRange
from bazlab.types import Atom, OmegaSpec, JanowskiParams, HerglotzMeasure
from bazlab.lib.powser import deriv, eval_circle, evaluate_points
from bazlab.lib.classes import (
    koebe_type,
    caratheodory,
    janowski_phi,
    random_schwarz,
    schwarz_function,
    starlike_janowski,
    check_starlike_janowski,
    check_positive_real_part,
)
from bazlab.lib.sampling import trial_rng, random_measure


class TestHerglotzMeasure:
    """Test validation of atomic measures."""

    def test_point_mass(self):
        """Test the single atom constructor."""
        mu = HerglotzMeasure.point_mass(1.0)
        assert mu.atoms == [Atom(t=1.0, lam=1.0)]

    def test_angles_are_reduced(self):
        """Test that angles are reduced to [0, 2 pi)."""
        mu = HerglotzMeasure(atoms=[{"t": 7.0, "lam": 1.0}])
        assert mu.atoms[0].t == pytest.approx(7.0 - 2 * math.pi)

    def test_weights_must_sum_to_one(self):
        """Test that the measure must be a probability measure."""
        with pytest.raises(InvalidMeasure):
            HerglotzMeasure(atoms=[{"t": 0.0, "lam": 0.5}, {"t": 1.0, "lam": 0.4}])

    def test_weights_must_be_positive(self):
        """Test that negative weights are refused."""
        with pytest.raises(InvalidMeasure):
            HerglotzMeasure(atoms=[{"t": 0.0, "lam": 1.5}, {"t": 1.0, "lam": -0.5}])

    def test_needs_an_atom(self):
        """Test that the empty measure is refused."""
        with pytest.raises(InvalidMeasure):
            HerglotzMeasure(atoms=[])

    def test_closed_form_matches_series(self, rng):
        """Test p(z) and p'(z) in closed form against the Caratheodory series."""
        mu = random_measure(rng)
        p = caratheodory(mu, 64)
        z = np.array([0.3 + 0.2j, -0.1 + 0.4j, 0.25])
        np.testing.assert_allclose(mu.values(z), evaluate_points(p, z), atol=1e-12)
        np.testing.assert_allclose(mu.derivative_values(z), evaluate_points(deriv(p), z), atol=1e-10)


class TestCaratheodory:
    """Test Caratheodory functions generated by Herglotz measures."""

    def test_point_mass_at_zero(self):
        """Test that the atom at 0 gives (1 + z) / (1 - z)."""
        p = caratheodory(HerglotzMeasure.point_mass(0.0), 8)
        np.testing.assert_allclose(p.coeffs, [1] + [2] * 8)

    def test_coefficients_are_bounded(self, rng):
        """Test |p_n| <= 2 for random measures."""
        for _ in range(20):
            p = caratheodory(random_measure(rng), 32)
            assert p[0] == 1
            assert np.max(np.abs(p.coeffs[1:])) <= 2.0 + 1e-12

    def test_positive_real_part(self, rng):
        """Test that the sampled real part stays positive inside the truncation-honest radii."""
        p = caratheodory(random_measure(rng), 64)
        report = check_positive_real_part(p, (0.5, 0.8), 512)
        assert not report.violated
        assert report.min_real_part > 0

    def test_negative_real_part_is_reported(self):
        """Test that 1 - 2z is flagged on |z| = 0.8."""
        report = check_positive_real_part(Series([1, -2], order=4), (0.8,), 64)
        assert report.violated
        assert report.min_real_part == pytest.approx(1 - 1.6)
        assert report.theta == pytest.approx(0.0)

    @pytest.mark.parametrize("radius", [0.0, -0.5, 1.0, 1.5])
    def test_radii_inside_the_disk(self, radius):
        """Test that every sampled radius lies in (0, 1)."""
        p = caratheodory(HerglotzMeasure.point_mass(0.0), 16)
        with pytest.raises(RadiusOutOfRange):
            check_positive_real_part(p, (0.5, radius), 64)

    def test_needs_a_radius(self):
        """Test that an empty radius grid is refused."""
        with pytest.raises(SpecInvalid):
            check_positive_real_part(caratheodory(HerglotzMeasure.point_mass(0.0), 16), (), 64)


class TestJanowski:
    """Test Janowski maps and starlike factors."""

    def test_parameters_are_validated(self):
        """Test -1 <= B < A <= 1."""
        with pytest.raises(InvalidJanowski):
            JanowskiParams(A=0.5, B=0.5)
        with pytest.raises(InvalidJanowski):
            JanowskiParams(A=1.0, B=-1.5)

    def test_phi_series(self):
        """Test (1 + z) / (1 - z) and 1 + z."""
        np.testing.assert_allclose(janowski_phi(JanowskiParams(), 5).coeffs, [1, 2, 2, 2, 2, 2])
        np.testing.assert_allclose(janowski_phi(JanowskiParams(A=1.0, B=0.0), 5).coeffs, [1, 1, 0, 0, 0, 0])

    def test_phi_inverse(self):
        """Test that phi_inverse undoes phi."""
        jp = JanowskiParams(A=0.7, B=-0.3)
        w = np.array([0.2 + 0.1j, -0.5j])
        np.testing.assert_allclose(jp.phi_inverse(jp.phi(w)), w)

    def test_koebe_is_the_starlike_factor_for_omega_z(self):
        """Test that A=1, B=-1, omega=z gives k(z)/z = (1 - z)^-2."""
        unit = starlike_janowski(JanowskiParams(), Series.identity(16), 16)
        np.testing.assert_allclose(unit.coeffs, np.arange(1, 18), atol=1e-10)

    def test_koebe_type(self):
        """Test k_theta has coefficients n e^{-i (n-1) theta}."""
        np.testing.assert_allclose(koebe_type(0.0, 6).coeffs, np.arange(7))
        k = koebe_type(math.pi, 4)
        np.testing.assert_allclose(k.coeffs, [0, 1, -2, 3, -4], atol=1e-12)

    def test_sampled_membership(self):
        """Test z exp(z/2) in S*(1/2, 0) and the Koebe function outside it."""
        jp = JanowskiParams(A=0.5, B=0.0)
        unit = starlike_janowski(jp, Series.identity(32), 32)
        report = check_starlike_janowski(jp, unit)
        assert report.member
        assert report.max_modulus == pytest.approx(0.9, abs=1e-9)

        koebe_unit = Series(np.arange(1, 34))
        assert not check_starlike_janowski(jp, koebe_unit).member


class TestSchwarz:
    """Test Schwarz function recipes."""

    def test_power(self):
        """Test omega = scale * z^k."""
        omega = schwarz_function(OmegaSpec(kind="power", k=2, scale=0.5), 8)
        np.testing.assert_allclose(omega.coeffs, [0, 0, 0.5, 0, 0, 0, 0, 0, 0])

    def test_blaschke_stays_in_the_disk(self):
        """Test that a Blaschke factor maps the disk into itself."""
        omega = schwarz_function(OmegaSpec(kind="blaschke", c=[0.3, 0.2]), 64)
        assert omega[0] == 0
        assert np.max(np.abs(eval_circle(omega, 0.9, 256))) < 1.0

    def test_blaschke_parameter_inside_disk(self):
        """Test that |c| >= 1 is refused."""
        with pytest.raises(OmegaNotSchwarz):
            schwarz_function(OmegaSpec(kind="blaschke", c=[1.0, 0.0]), 8)

    def test_series_must_vanish_at_zero(self):
        """Test omega(0) = 0."""
        spec = OmegaSpec(kind="series", coeffs=[[0.1, 0.0], [0.5, 0.0]])
        with pytest.raises(OmegaNotSchwarz):
            schwarz_function(spec, 8)

    def test_series_must_be_a_self_map(self):
        """Test that 1.2 z leaves the disk."""
        spec = OmegaSpec(kind="series", coeffs=[[0.0, 0.0], [1.2, 0.0]])
        with pytest.raises(OmegaNotSchwarz):
            schwarz_function(spec, 8)

    def test_random_schwarz_is_dominated_by_z(self, rng):
        """Test |omega(z)| <= |z| for random Schwarz functions."""
        for _ in range(10):
            omega = random_schwarz(rng, 16)
            assert omega[0] == 0
            assert np.max(np.abs(eval_circle(omega, 0.9, 256))) <= 0.9 + 1e-12


class TestSampling:
    """Test seeded sampling of measures."""

    def test_trial_streams_are_reproducible(self):
        """Test that a trial sees the same stream every time."""
        assert random_measure(trial_rng(7, 3)) == random_measure(trial_rng(7, 3))

    def test_trial_streams_differ(self):
        """Test that different trials and seeds get different streams."""
        first = random_measure(trial_rng(7, 3))
        assert first != random_measure(trial_rng(7, 4))
        assert first != random_measure(trial_rng(8, 3))

    def test_random_measure_is_valid(self, rng):
        """Test atom counts and weights."""
        for _ in range(20):
            mu = random_measure(rng, max_atoms=4)
            assert 1 <= len(mu.atoms) <= 4
            assert math.fsum(a.lam for a in mu.atoms) == pytest.approx(1.0, abs=1e-12)
