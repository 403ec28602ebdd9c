import math
from fractions import Fraction

import numpy as np
import pytest

from apstrip.calculations.bochner_fejer import (
    RationalBasis,
    bf_approximate,
    build_kernel,
    convolve_exact,
    fejer_factor,
    fit_profile,
    kernel_closed_form,
    kernel_eval,
)
from apstrip.calculations.exp_sums import ExponentialProfile, ExpSum, PolynomialProfile
from apstrip.calculations.metrics import mean_leakage_bound
from apstrip.core.constants import ProfileKind
from apstrip.core.exceptions import InvalidParameterError, KernelSizeError, ProfileFitError
from apstrip.core.function import exponential
from apstrip.core.strip import Strip

SQRT2 = math.sqrt(2.0)


class TestRationalBasis:
    def test_accepts_independent_elements(self):
        assert len(RationalBasis((1.0, SQRT2))) == 2

    @pytest.mark.parametrize("betas", [(), (1.0, 0.5), (1.0, -SQRT2), (math.inf,), (2.0, 2.0 / 3.0)])
    def test_rejects_bad_bases(self, betas):
        with pytest.raises(InvalidParameterError):
            RationalBasis(betas)


class TestKernel:
    @pytest.fixture
    def scalar_kernel(self):
        return build_kernel(RationalBasis((1.0,)), [2])

    @pytest.fixture
    def pair_kernel(self):
        return build_kernel(RationalBasis((1.0, SQRT2)), [3, 2])

    def test_scalar_weights(self, scalar_kernel):
        np.testing.assert_array_equal(scalar_kernel.frequencies, [-2.0, -1.0, 0.0, 1.0, 2.0])
        np.testing.assert_allclose(scalar_kernel.weights, [1 / 3, 2 / 3, 1.0, 2 / 3, 1 / 3])
        assert scalar_kernel.weight_fraction((1,)) == Fraction(2, 3)
        assert scalar_kernel.weight((3,)) == 0.0

    def test_size_and_symmetry(self, pair_kernel):
        assert pair_kernel.size == 7 * 5
        assert pair_kernel.coefficient_at(1.0 + SQRT2) == pytest.approx(0.75 * 2.0 / 3.0)
        assert pair_kernel.coefficient_at(-1.0 - SQRT2) == pair_kernel.coefficient_at(1.0 + SQRT2)
        assert pair_kernel.coefficient_at(0.5) == 0.0

    def test_tuple_length_checked(self, pair_kernel):
        with pytest.raises(InvalidParameterError):
            pair_kernel.weight((1,))

    def test_degrees_checked(self):
        basis = RationalBasis((1.0, SQRT2))
        with pytest.raises(InvalidParameterError):
            build_kernel(basis, [2])
        with pytest.raises(InvalidParameterError):
            build_kernel(basis, [2, 0])

    def test_size_limit(self):
        with pytest.raises(KernelSizeError) as excinfo:
            build_kernel(RationalBasis((1.0,)), [10 ** 7])
        assert excinfo.value.tuple_count == 2 * 10 ** 7 + 1

    def test_value_at_zero_is_product_of_degrees(self, pair_kernel):
        assert kernel_eval(pair_kernel, 0.0) == pytest.approx(12.0)

    def test_matches_product_form(self, pair_kernel):
        t = np.linspace(-20.0, 20.0, 401)
        np.testing.assert_allclose(kernel_eval(pair_kernel, t), kernel_closed_form(pair_kernel, t), atol=1e-10)

    def test_nonnegative(self, pair_kernel):
        assert np.all(kernel_eval(pair_kernel, np.linspace(0.0, 50.0, 1001)) >= -1e-10)

    def test_csv_rows(self, scalar_kernel):
        assert scalar_kernel.csv_rows()[0] == ("-2", -2.0, pytest.approx(1 / 3))


class TestFejerFactor:
    def test_removable_singularity(self):
        assert fejer_factor(4, 0.0) == 5.0
        assert fejer_factor(4, 2.0 * math.pi) == 5.0

    def test_closed_form(self):
        s = 0.7
        expected = (math.sin(1.5 * s) / math.sin(s / 2.0)) ** 2 / 3.0
        assert fejer_factor(2, s) == pytest.approx(expected)


class TestConvolution:
    def test_multiplies_by_kernel_weights(self):
        kernel = build_kernel(RationalBasis((1.0,)), [2])
        s = ExpSum([(0.0, 1.0), (1.0, 2.0), (0.5, 3.0)])
        result = convolve_exact(s, kernel)
        assert result.frequencies == (0.0, 1.0)
        assert result.coefficient(1.0).value == pytest.approx(4.0 / 3.0)


class TestFitProfile:
    def test_constant(self):
        ys = np.array([0.0, 0.5, 1.0])
        profile, residual = fit_profile(ys, np.full(3, 2 - 1j), ProfileKind.CONSTANT, 1.0)
        assert profile.value == 2 - 1j
        assert residual == 0.0

    def test_polynomial(self):
        ys = np.linspace(-1.0, 1.0, 5)
        samples = (1.0 + 2j) + 0.5 * ys ** 2
        profile, residual = fit_profile(ys, samples, ProfileKind.POLYNOMIAL, 1.0, degree=2)
        assert isinstance(profile, PolynomialProfile)
        assert residual < 1e-12

    def test_exponential(self):
        ys = np.linspace(-0.5, 0.5, 3)
        profile, residual = fit_profile(ys, 3.0 * np.exp(-2.0 * ys), ProfileKind.EXPONENTIAL, 2.0)
        assert profile.amplitude == pytest.approx(3.0)
        assert profile.rate == -2.0
        assert residual < 1e-12


class TestApproximation:
    def test_coefficients_within_leakage(self, quad, short_ladder):
        f = ExpSum([(0.0, 1.0), (1.0, 0.5)])
        kernel = build_kernel(RationalBasis((1.0,)), [2])
        approx = bf_approximate(f, kernel, [0.0], short_ladder, quad)
        assert approx.strip == Strip(0.0, 0.0)
        for lam, weight in zip(kernel.frequencies, kernel.weights):
            error = abs(approx.coefficient(float(lam))(0.0) - weight * f.coefficient(float(lam))(0.0))
            assert error <= weight * mean_leakage_bound(f, float(lam), 0.0, short_ladder.last, quad) + 1e-12

    def test_exponential_family(self, quad, short_ladder):
        kernel = build_kernel(RationalBasis((1.0,)), [1])
        approx = bf_approximate(
            exponential(1.0), kernel, [-0.5, 0.0, 0.5], short_ladder, quad,
            family=ProfileKind.EXPONENTIAL, tolerance=0.05,
        )
        profile = approx.coefficient(1.0)
        assert isinstance(profile, ExponentialProfile)
        assert profile.rate == -1.0
        assert profile.amplitude == pytest.approx(0.5, rel=1e-9)

    def test_wrong_family_rejected(self, quad, short_ladder):
        f = ExpSum([(0.0, PolynomialProfile((0.0, 1.0)))])
        kernel = build_kernel(RationalBasis((1.0,)), [1])
        with pytest.raises(ProfileFitError) as excinfo:
            bf_approximate(f, kernel, [0.0, 0.5, 1.0], short_ladder, quad)
        assert excinfo.value.residual > 0

    def test_needs_samples(self, quad):
        kernel = build_kernel(RationalBasis((1.0,)), [1])
        with pytest.raises(InvalidParameterError):
            bf_approximate(exponential(1.0), kernel, [], quad=quad)
