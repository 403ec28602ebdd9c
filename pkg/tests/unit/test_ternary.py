import numpy as np
import pytest
from hypothesis import given, strategies as st

from apstrip.calculations.ternary import (
    ProgressionIq,
    is_in_I,
    levels_and_membership,
    progression_for_shift,
    ternary_level,
)
from apstrip.core.exceptions import InvalidParameterError

nonzero = st.integers(-10 ** 6, 10 ** 6).filter(lambda n: n != 0)


class TestTernarySet:
    @pytest.mark.parametrize("n, level", [(1, 1), (2, 1), (3, 2), (18, 3), (-9, 3), (81, 5)])
    def test_levels(self, n, level):
        assert ternary_level(n) == level

    def test_zero_has_no_level(self):
        with pytest.raises(InvalidParameterError):
            ternary_level(0)

    @pytest.mark.parametrize("n, member", [
        (1, True), (2, False), (3, True), (4, True), (6, False),
        (-2, True), (-1, False), (0, False), (12, True), (15, False),
    ])
    def test_membership(self, n, member):
        assert is_in_I(n) is member

    @given(nonzero)
    def test_scaling_by_three_preserves_membership(self, n):
        assert is_in_I(3 * n) == is_in_I(n)
        assert ternary_level(3 * n) == ternary_level(n) + 1

    @given(nonzero)
    def test_exactly_one_of_n_and_minus_n(self, n):
        """Numbers and their negatives split I from its complement."""
        assert is_in_I(n) != is_in_I(-n)

    def test_vectorised_agrees(self):
        ns = np.arange(-300, 301)
        levels, members = levels_and_membership(ns)
        assert levels[300] == 0
        assert not members[300]
        for n, level, member in zip(ns, levels, members):
            if n:
                assert level == ternary_level(int(n))
                assert member == is_in_I(int(n))


class TestProgressions:
    @pytest.mark.parametrize("q", [q for q in range(-50, 51) if q])
    def test_progression_avoids_shifted_set(self, q):
        progression = progression_for_shift(q)
        assert progression.holds(-200, 200)
        assert progression.difference in (3 ** ternary_level(q), 3 ** (ternary_level(q) + 1))

    def test_known_progressions(self):
        assert progression_for_shift(1) == ProgressionIq(q=1, start=1, difference=3)
        assert progression_for_shift(2) == ProgressionIq(q=2, start=-5, difference=9)

    def test_first_at_least(self):
        progression = ProgressionIq(q=1, start=1, difference=3)
        assert progression.first_at_least(5) == 7
        assert progression.first_at_least(4) == 4
        assert progression.first_at_least(-7.5) == -5

    @pytest.mark.parametrize("kwargs", [{"q": 0, "start": 1, "difference": 3}, {"q": 1, "start": 1, "difference": 0}])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParameterError):
            ProgressionIq(**kwargs)

    def test_zero_shift(self):
        with pytest.raises(InvalidParameterError):
            progression_for_shift(0)
