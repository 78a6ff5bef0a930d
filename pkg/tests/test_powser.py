"""Unit tests for the truncated power series in lib/powser.py."""

import math

import mpmath
import numpy as np
import pytest

from bazlab import Series, SeriesError, QuadratureError, ZeroConstantTerm, RadiusOutOfRange, NonUnitConstantTerm
from bazlab.types import PsiSeries
from bazlab.lib.powser import (
    div,
    deriv,
    compose,
    evaluate,
    log_unit,
    pow_real,
    times_z,
    antideriv,
    eval_circle,
    exp_series,
    divide_by_z,
    theta_deriv,
    evaluate_points,
)
from bazlab._exceptions import NonzeroInnerConstant


def _random_unit(rng, N, spread=0.2):
    c = spread * (rng.normal(size=N + 1) + 1j * rng.normal(size=N + 1))
    c[0] = 1.0
    return Series(c)


class TestSeriesConstruction:
    """Test building and inspecting Series values."""

    def test_pads_to_requested_order(self):
        """Test that missing coefficients are filled with zeros."""
        s = Series([1, 2], order=4)
        assert s.order == 4
        np.testing.assert_array_equal(s.coeffs, [1, 2, 0, 0, 0])

    def test_truncates_to_requested_order(self):
        """Test that extra coefficients are dropped."""
        assert Series([1, 2, 3, 4], order=1).order == 1

    def test_coefficients_are_read_only(self):
        """Test that a series cannot be mutated in place."""
        s = Series.geometric(4)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0

    def test_rejects_non_finite(self):
        """Test that NaN coefficients are refused."""
        with pytest.raises(SeriesError):
            Series([1.0, float("nan")])

    def test_rejects_empty(self):
        """Test that a series needs at least one coefficient."""
        with pytest.raises(SeriesError):
            Series([])

    def test_json_round_trip_is_exact(self, rng):
        """Test that to_json keeps every bit of every coefficient."""
        s = _random_unit(rng, 12)
        np.testing.assert_array_equal(Series.from_json(s.to_json()).coeffs, s.coeffs)

    def test_embedded_in_models(self, rng):
        """Test that a Series inside a model serializes as [re, im] pairs."""
        psi = PsiSeries(coeffs=_random_unit(rng, 6), alpha=0.5)
        data = psi.to_dict()
        assert data["coeffs"][0] == [1.0, 0.0]
        restored = PsiSeries.model_validate_json(psi.to_json())
        np.testing.assert_array_equal(restored.coeffs.coeffs, psi.coeffs.coeffs)

    def test_malformed_pairs(self):
        """Test that coefficient lists must hold [re, im] pairs."""
        with pytest.raises(SeriesError):
            Series.from_pairs([[1.0, 0.0], ["x", 1.0]])


class TestArithmetic:
    """Test ring operations and their truncation rule."""

    def test_product(self):
        """Test (1 + z)(1 - z) = 1 - z^2."""
        product = Series([1, 1], order=4) * Series([1, -1], order=4)
        np.testing.assert_allclose(product.coeffs, [1, 0, -1, 0, 0])

    def test_binary_operations_keep_the_smaller_order(self):
        """Test that coefficients above either order are treated as unknown."""
        a = Series([1, 1, 1])
        b = Series([1, 1])
        assert (a * b).order == 1
        assert (a + b).order == 1
        assert (a - b).order == 1

    def test_scalars(self):
        """Test that scalars act on the constant term or scale every term."""
        s = Series.identity(3)
        assert (s + 1)[0] == 1
        np.testing.assert_allclose((2 * s).coeffs, [0, 2, 0, 0])
        np.testing.assert_allclose((1 - s).coeffs, [1, -1, 0, 0])

    def test_division(self):
        """Test 1 / (1 - z) = 1 + z + z^2 + ..."""
        q = div(Series.constant(1, 8), Series([1, -1], order=8))
        np.testing.assert_allclose(q.coeffs, np.ones(9))

    def test_division_inverts_product(self, rng):
        """Test (a * b) / b = a."""
        a = _random_unit(rng, 16)
        b = _random_unit(rng, 16)
        np.testing.assert_allclose(((a * b) / b).coeffs, a.coeffs, atol=1e-12)

    def test_division_by_vanishing_constant(self):
        """Test that a divisor must not vanish at 0."""
        with pytest.raises(ZeroConstantTerm):
            div(Series.constant(1, 4), Series.identity(4))


class TestCalculus:
    """Test derivatives and antiderivatives."""

    def test_deriv_of_antideriv(self, rng):
        """Test that differentiation undoes integration up to order N-1."""
        a = _random_unit(rng, 10)
        back = deriv(antideriv(a))
        assert back.order == 9
        np.testing.assert_allclose(back.coeffs, a.coeffs[:10], atol=1e-14)

    def test_theta_deriv(self):
        """Test z f'(z) has coefficients n a_n."""
        np.testing.assert_allclose(theta_deriv(Series.geometric(5)).coeffs, np.arange(6))

    def test_times_z_and_divide_by_z(self, rng):
        """Test that multiplying and dividing by z are exact inverses."""
        a = _random_unit(rng, 7)
        shifted = times_z(a)
        assert shifted.order == 8
        np.testing.assert_array_equal(divide_by_z(shifted).coeffs, a.coeffs)

    def test_divide_by_z_needs_a_zero(self):
        """Test that only series vanishing at 0 can be divided by z."""
        with pytest.raises(SeriesError):
            divide_by_z(Series([1, 1]))


class TestTranscendental:
    """Test logarithm, exponential, powers and composition."""

    def test_log_of_geometric(self):
        """Test -log(1 - z) = sum z^n / n."""
        L = log_unit(Series.geometric(16))
        expected = np.concatenate([[0.0], 1.0 / np.arange(1, 17)])
        np.testing.assert_allclose(L.coeffs, expected, atol=1e-14)

    def test_log_needs_unit(self):
        """Test that the logarithm is only taken of unit series."""
        with pytest.raises(NonUnitConstantTerm):
            log_unit(Series([2, 1]))

    def test_exp_of_log(self, rng):
        """Test that exp undoes log."""
        a = _random_unit(rng, 16)
        np.testing.assert_allclose(exp_series(log_unit(a)).coeffs, a.coeffs, atol=1e-12)

    def test_exp_scales_by_constant(self):
        """Test exp(c + z) = e^c exp(z)."""
        e = exp_series(Series([1.0, 1.0], order=6))
        expected = [math.e / math.factorial(n) for n in range(7)]
        np.testing.assert_allclose(e.coeffs, expected, rtol=1e-13)

    def test_square_root_of_inverse_square(self):
        """Test ((1 - z)^-2)^(1/2) = 1 / (1 - z)."""
        inverse_square = Series(np.arange(1, 10))
        np.testing.assert_allclose(pow_real(inverse_square, 0.5).coeffs, np.ones(9), atol=1e-12)

    def test_binomial_series(self):
        """Test (1 + z)^0.3 against binomial coefficients computed in high precision."""
        s = pow_real(Series([1, 1], order=20), 0.3)
        expected = [float(mpmath.binomial(0.3, n)) for n in range(21)]
        np.testing.assert_allclose(s.coeffs.real, expected, atol=1e-14)
        np.testing.assert_allclose(s.coeffs.imag, 0.0, atol=1e-14)

    def test_composition(self):
        """Test 1 / (1 - z/2) = sum 2^-n z^n."""
        c = compose(Series.geometric(12), Series([0, 0.5], order=12))
        np.testing.assert_allclose(c.coeffs, 0.5 ** np.arange(13))

    def test_composition_needs_vanishing_inner(self):
        """Test that the inner series must vanish at 0."""
        with pytest.raises(NonzeroInnerConstant):
            compose(Series.geometric(4), Series([0.1, 1.0], order=4))


class TestEvaluation:
    """Test point and circle evaluation."""

    def test_evaluate(self):
        """Test evaluating a polynomial at a point."""
        assert evaluate(Series([1, 2, 3]), 0.5) == pytest.approx(2.75)
        assert Series.identity(8)(0.25j) == pytest.approx(0.25j)

    def test_evaluate_outside_the_disk(self):
        """Test that radii beyond R_MAX are refused."""
        with pytest.raises(RadiusOutOfRange):
            evaluate(Series.geometric(4), 1.0)

    def test_circle_matches_pointwise_evaluation_when_aliased(self, rng):
        """Test that folding coefficients modulo K gives exact circle values."""
        a = _random_unit(rng, 40)
        K = 8
        z = 0.7 * np.exp(2j * np.pi * np.arange(K) / K)
        np.testing.assert_allclose(eval_circle(a, 0.7, K), evaluate_points(a, z), atol=1e-12)

    def test_circle_needs_points(self):
        """Test that a circle grid needs at least eight points."""
        with pytest.raises(QuadratureError):
            eval_circle(Series.geometric(4), 0.5, 4)
