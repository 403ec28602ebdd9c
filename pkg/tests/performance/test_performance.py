"""
Performance tests for window integrals, metric ladders and kernels
"""
import numpy as np
import pytest

from apstrip.calculations.bochner_fejer import RationalBasis, build_kernel, kernel_eval
from apstrip.calculations.exp_sums import random_sum
from apstrip.calculations.metrics import SupShiftGrid, weyl_distance
from apstrip.calculations.separators import SeparatorSpec, separator_function
from apstrip.core.function import Constant
from apstrip.core.grid import GridSpec
from apstrip.core.quadrature import QuadratureSpec, TLadder, WindowLattice
from apstrip.core.strip import Strip

pytestmark = pytest.mark.performance

# --- Performance Test Setup ---

@pytest.fixture
def quad():
    return QuadratureSpec(h=1.0 / 64.0)


@pytest.fixture
def lattice(quad):
    """Six rungs around 61 shifts: about 94k lattice nodes"""
    centers = GridSpec(0.0, 3.0, 0.05).nodes()
    return WindowLattice.build(centers, [(-T, T) for T in TLadder(3.0, 3.0, 6)], quad)


# --- Calculation Speed Tests ---

def test_lattice_integration_speed(lattice, benchmark):
    """Test speed of reading every window from one pass of prefix sums"""
    values = np.cos(lattice.nodes) ** 2
    result = benchmark(lattice.integrate, values)
    assert result.shape == (6, 61)


def test_weyl_ladder_speed(quad, benchmark):
    """Test speed of a Weyl-2 ladder on a strip"""
    f = random_sum(np.random.default_rng(0), [-2.0, -0.5, 1.0, np.sqrt(2.0)])
    grid = SupShiftGrid(GridSpec(0.0, 3.0, 0.1), GridSpec.over(-0.5, 0.5, 4))
    estimate = benchmark(weyl_distance, f, Constant(0.0), 2.0, Strip(-0.5, 0.5), grid, TLadder(3.0, 3.0, 4), quad)
    assert len(estimate.rungs) == 4


def test_separator_evaluation_speed(benchmark):
    """Test speed of evaluating the T2 series on 100k nodes"""
    f = separator_function(SeparatorSpec())
    x = np.linspace(-500.0, 500.0, 100_000)
    values = benchmark(f.sample, x, 0.25)
    assert np.all(np.isfinite(values))


def test_kernel_evaluation_speed(benchmark):
    """Test speed of a two-dimensional Fejer kernel on a dense grid"""
    kernel = build_kernel(RationalBasis((1.0, np.sqrt(2.0))), (8, 8))
    t = np.linspace(-100.0, 100.0, 20_001)
    values = benchmark(kernel_eval, kernel, t)
    assert values.min() > -1e-8
