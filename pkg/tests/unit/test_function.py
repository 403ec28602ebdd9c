import cmath
import math

import numpy as np
import pytest
from scipy import integrate

from apstrip.core.constants import EVALUATION_CHUNK
from apstrip.core.exceptions import (
    DomainError,
    InvalidParameterError,
    InvalidStripError,
    NonFiniteValueError,
)
from apstrip.core.function import Constant, Holomorphic, exponential, gaussian
from apstrip.core.parallel import ordered_map
from apstrip.core.quadrature import QuadratureSpec
from apstrip.core.sampling import check_exponent, grid_sup, window_integral
from apstrip.core.strip import Strip


class TestEvaluableFunction:
    def test_constant(self):
        assert Constant(2.5)(1.0 + 3.0j) == 2.5

    def test_exponential_decays_upwards(self):
        assert exponential(2.0)(0.5j) == pytest.approx(math.exp(-1.0))

    def test_gaussian(self):
        assert gaussian(1.0)(1.0) == pytest.approx(math.exp(-1.0))
        assert gaussian(2.0, center=1.0)(1.0) == pytest.approx(1.0)

    def test_algebra(self):
        f = exponential(1.0)
        g = gaussian()
        z = 0.3 + 0.2j
        assert (f + g)(z) == pytest.approx(f(z) + g(z))
        assert (f - 1)(z) == pytest.approx(f(z) - 1)
        assert (2 * f)(z) == pytest.approx(2 * f(z))
        assert (f * 1j)(z) == pytest.approx(1j * f(z))
        assert (-g)(z) == pytest.approx(-g(z))

    def test_shift_and_modulation(self):
        g = gaussian()
        z = 0.7 - 0.1j
        assert g.shifted(0.5)(z) == g(z + 0.5)
        assert g.modulated(3.0)(z) == pytest.approx(g(z) * cmath.exp(3.0j * 0.7))

    def test_line_values_match_point_values(self):
        g = gaussian().modulated(2.0).shifted(-0.25)
        x = np.linspace(-2.0, 2.0, 9)
        np.testing.assert_allclose(g.sample(x, 0.4), [g(complex(t, 0.4)) for t in x], rtol=1e-14)

    def test_domain_checked(self):
        f = Holomorphic(lambda z: z, name="id", domain=Strip(-1.0, 1.0))
        with pytest.raises(DomainError) as excinfo:
            f(2.0j)
        assert excinfo.value.point == (0.0, 2.0)
        with pytest.raises(DomainError):
            f.sample(np.zeros(3), -1.5)

    def test_sum_domain_is_intersection(self):
        f = Holomorphic(lambda z: z, domain=Strip(-1.0, 1.0))
        g = Holomorphic(lambda z: z, domain=Strip(0.0, 2.0))
        assert (f + g).domain == Strip(0.0, 1.0)
        with pytest.raises(InvalidStripError):
            _ = (f + Holomorphic(lambda z: z, domain=Strip(3.0, 4.0))).domain

    def test_non_finite_values_rejected(self):
        f = Holomorphic(lambda z: np.where(z.real > 0.5, np.inf, 1.0), name="step")
        with pytest.raises(NonFiniteValueError) as excinfo:
            f.sample(np.array([-1.0, 0.0, 1.0, 2.0]), 0.0)
        assert excinfo.value.node == (1.0, 0.0)

    def test_chunked_sampling(self):
        x = np.linspace(-3.0, 3.0, EVALUATION_CHUNK + 5)
        g = gaussian()
        np.testing.assert_array_equal(g.sample(x, 0.1), g.line_values(x, 0.1))


class TestSampling:
    @pytest.mark.parametrize("p", [0.5, math.nan, math.inf])
    def test_exponent_below_one_rejected(self, p):
        with pytest.raises(InvalidParameterError):
            check_exponent(p)

    def test_constant_window_integral(self):
        assert window_integral(Constant(2.0), 0.0, 3.0, p=2.0) == pytest.approx(24.0)

    def test_exponential_modulus_on_a_line(self):
        assert window_integral(exponential(1.0), 0.5j, 2.0) == pytest.approx(4.0 * math.exp(-0.5))

    def test_matches_adaptive_quadrature(self):
        expected, _ = integrate.quad(lambda t: math.exp(-1.5 * (0.3 + t) ** 2), -2.0, 2.0)
        actual = window_integral(gaussian(), 0.3, 2.0, p=1.5, quad=QuadratureSpec(h=0.02))
        assert actual == pytest.approx(expected, rel=1e-6)

    def test_grid_sup_of_gaussian(self, unit_strip):
        assert grid_sup(gaussian(), unit_strip, (-1.0, 1.0), 0.1, 0.25) == pytest.approx(math.exp(0.25))

    def test_refinement_finds_off_grid_peak(self):
        f = gaussian(center=0.03)
        line = Strip.line(0.0)
        coarse = grid_sup(f, line, (-1.0, 1.0), 0.1, 0.1)
        refined = grid_sup(f, line, (-1.0, 1.0), 0.1, 0.1, refine=True)
        assert coarse < refined
        assert refined == pytest.approx(1.0, abs=1e-8)

    def test_grid_sup_needs_bounded_strip(self):
        with pytest.raises(InvalidStripError):
            grid_sup(gaussian(), Strip.plane(), (0.0, 1.0), 0.1, 0.1)


class TestOrderedMap:
    def test_preserves_order(self):
        assert ordered_map(lambda x: x * x, range(10), workers=4) == [x * x for x in range(10)]

    def test_empty_input(self):
        assert ordered_map(str, [], workers=3) == []

    def test_default_pool_from_settings(self, monkeypatch, fresh_settings):
        monkeypatch.setenv("APSTRIP_THREADS", "2")
        fresh_settings.cache_clear()
        assert ordered_map(abs, [-3, 2, -1]) == [3, 2, 1]
