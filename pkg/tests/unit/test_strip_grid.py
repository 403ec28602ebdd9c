import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from apstrip.core.exceptions import EmptyGridError, InvalidParameterError, InvalidStripError
from apstrip.core.grid import GridSpec
from apstrip.core.strip import ComplexPoint, Strip, as_point


class TestStrip:
    def test_inverted_bounds_rejected(self):
        with pytest.raises(InvalidStripError):
            Strip(1.0, 0.0)

    def test_degenerate_open_strip_rejected(self):
        with pytest.raises(InvalidStripError):
            Strip(0.0, 0.0, closed=False)

    def test_nan_bound_rejected(self):
        with pytest.raises(InvalidStripError):
            Strip(math.nan, 1.0)

    def test_plane_contains_every_line(self):
        plane = Strip.plane()
        assert not plane.closed
        assert not plane.is_bounded
        for y in (-1e6, 0.0, 3.5):
            assert plane.contains(y)

    def test_open_strip_excludes_boundary(self):
        strip = Strip(0.0, 1.0, closed=False)
        assert not strip.contains(0.0)
        assert not strip.contains(1.0)
        assert strip.contains(0.5)

    def test_line(self):
        line = Strip.line(0.25)
        assert line.contains(0.25)
        assert not line.contains(0.26)
        assert line.height == 0.0

    def test_substrip_of_closed_strip(self):
        assert Strip(-1.0, 1.0).substrip(-1.0, 0.5) == Strip(-1.0, 0.5)

    def test_substrip_must_stay_inside_open_strip(self):
        strip = Strip(0.0, 1.0, closed=False)
        with pytest.raises(InvalidStripError):
            strip.substrip(0.0, 0.5)
        assert strip.substrip(0.1, 0.9).closed

    def test_substrip_needs_finite_bounds(self):
        with pytest.raises(InvalidStripError):
            Strip.plane().substrip(-math.inf, 0.0)

    def test_plane_meets_line_in_closed_line(self):
        assert Strip.plane().intersection(Strip.line(0.3)) == Strip.line(0.3)

    def test_intersection_keeps_open_bound(self):
        result = Strip(0.0, 1.0, closed=False).intersection(Strip(0.5, 2.0))
        assert result == Strip(0.5, 1.0, closed=False)

    def test_disjoint_strips(self):
        with pytest.raises(InvalidStripError):
            Strip(0.0, 1.0).intersection(Strip(2.0, 3.0))

    def test_open_edge_meets_line_in_nothing(self):
        with pytest.raises(InvalidStripError):
            Strip(0.0, 1.0, closed=False).intersection(Strip.line(1.0))

    def test_require_bounded(self):
        strip = Strip(-1.0, 1.0)
        assert strip.require_bounded() is strip
        with pytest.raises(InvalidStripError):
            Strip.plane().require_bounded()
        with pytest.raises(InvalidStripError):
            Strip(-1.0, 1.0, closed=False).require_bounded()


class TestComplexPoint:
    def test_coercion(self):
        point = as_point(1.5 - 2j)
        assert (point.x, point.y) == (1.5, -2.0)
        assert as_point(3.0) == ComplexPoint(3.0, 0.0)
        assert as_point(point) is point

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidParameterError):
            ComplexPoint(math.inf, 0.0)

    def test_shift_is_horizontal(self):
        assert ComplexPoint(1.0, 2.0).shifted(0.5) == ComplexPoint(1.5, 2.0)
        assert ComplexPoint(1.0, 2.0).z == complex(1.0, 2.0)


class TestGridSpec:
    def test_nodes_include_stop(self):
        np.testing.assert_array_equal(GridSpec(0.0, 1.0, 0.25).nodes(), [0.0, 0.25, 0.5, 0.75, 1.0])

    def test_rounding_slack_keeps_stop(self):
        assert GridSpec(0.0, 0.3, 0.1).size == 4

    def test_single_node(self):
        np.testing.assert_array_equal(GridSpec.single(2.0).nodes(), [2.0])
        assert GridSpec.over(0.5, 0.5).size == 1

    def test_over_splits_evenly(self):
        np.testing.assert_array_equal(GridSpec.over(-1.0, 1.0, 4).nodes(), [-1.0, -0.5, 0.0, 0.5, 1.0])

    @pytest.mark.parametrize("args, error", [
        ((0.0, 1.0, 0.0), InvalidParameterError),
        ((0.0, 1.0, -0.1), InvalidParameterError),
        ((math.nan, 1.0, 0.1), InvalidParameterError),
        ((1.0, 0.0, 0.1), EmptyGridError),
    ])
    def test_invalid_grids(self, args, error):
        with pytest.raises(error):
            GridSpec(*args)

    def test_over_needs_divisions(self):
        with pytest.raises(InvalidParameterError):
            GridSpec.over(0.0, 1.0, 0)

    @given(
        start=st.floats(-100.0, 100.0),
        length=st.floats(0.0, 50.0),
        step=st.floats(0.01, 5.0),
    )
    def test_nodes_stay_in_range(self, start, length, step):
        grid = GridSpec(start, start + length, step)
        nodes = grid.nodes()
        slack = 1e-9 * (1.0 + abs(grid.start) + abs(grid.stop))
        assert nodes[0] == grid.start
        assert nodes[-1] <= grid.stop + slack
        assert nodes[-1] + step > grid.stop - slack
