"""
Composite quadrature, window ladders and shared window lattices
"""
import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from .constants import (
    DEFAULT_LADDER_GROWTH,
    DEFAULT_LADDER_RUNGS,
    DEFAULT_LADDER_START,
    DEFAULT_NODE_SPACING,
    PREFIX_BLOCK,
    QuadratureRule,
)
from .exceptions import InvalidParameterError, NonFiniteValueError, QuadratureError


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite rule with node spacing h"""

    h: float = DEFAULT_NODE_SPACING
    rule: QuadratureRule = QuadratureRule.SIMPSON
    normalized: bool = True

    def __post_init__(self):
        if not math.isfinite(self.h) or self.h <= 0:
            raise InvalidParameterError(f"Node spacing must be positive, got {self.h}")
        if not isinstance(self.rule, QuadratureRule):
            object.__setattr__(self, "rule", QuadratureRule(self.rule))

    @property
    def min_intervals(self) -> int:
        return 2 if self.rule is QuadratureRule.SIMPSON else 1

    def interval_count(self, length: float) -> int:
        """Number of sub-intervals used for a window of the given length"""
        n = max(self.min_intervals, int(round(length / self.h)))
        if self.rule is QuadratureRule.SIMPSON and n % 2:
            n += 1
        return n

    def unit_weights(self, n: int) -> np.ndarray:
        """
        Weights for n sub-intervals of unit width.

        Args:
            n: Number of sub-intervals

        Returns:
            n weights (midpoint) or n + 1 weights (trapezoid, Simpson)
        """
        if self.rule is QuadratureRule.MIDPOINT:
            return np.ones(n)
        if self.rule is QuadratureRule.TRAPEZOID:
            weights = np.ones(n + 1)
            weights[0] = weights[-1] = 0.5
            return weights
        if n % 2:
            raise QuadratureError(f"Simpson rule needs an even interval count, got {n}")
        weights = np.full(n + 1, 2.0)
        weights[1::2] = 4.0
        weights[0] = weights[-1] = 1.0
        return weights / 3.0

    def unit_offsets(self, n: int) -> np.ndarray:
        """Node positions in units of the step, measured from the window start"""
        if self.rule is QuadratureRule.MIDPOINT:
            return np.arange(n, dtype=float) + 0.5
        return np.arange(n + 1, dtype=float)

    @property
    def panel(self) -> int:
        """Intervals in one panel of the rule"""
        return 2 if self.rule is QuadratureRule.SIMPSON else 1

    def _side_weights(self, n: int, size: int) -> np.ndarray:
        # Unit weights of n intervals measured outward from the center, padded to size intervals
        out = np.zeros(size if self.rule is QuadratureRule.MIDPOINT else size + 1)
        if n:
            weights = self.unit_weights(n)
            out[:weights.size] = weights
        return out

    def window(self, center: float, T: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Nodes and weights for the window [center - T, center + T].

        Normalized windows put their nodes on the lattice center + k*h (cell
        midpoints for the midpoint rule). When T/h is a whole number of panels the
        weights are the composite rule; in between they interpolate linearly in T
        between the rules of the neighbouring panel counts, so the outermost panel
        on each side carries a weight proportional to the part of it inside the
        window. Every weight is nondecreasing in T and the weights sum to 2T.
        Otherwise the nominal spacing h starts at center - T and the weights sum
        to n*h.

        Args:
            center: Window center
            T: Half width

        Returns:
            Tuple of (nodes, weights)
        """
        if not math.isfinite(T) or T <= 0:
            raise InvalidParameterError(f"Window half width must be positive, got {T}")
        length = 2.0 * T
        if not self.normalized:
            n = self.interval_count(length)
            nodes = (center - T) + self.h * self.unit_offsets(n)
            return nodes, self.h * self.unit_weights(n)

        stride = self.panel
        u = T / self.h
        inner = stride * int(u // stride)
        fraction = (u - inner) / stride
        outer = inner + stride if fraction > 0 else inner
        side = (1.0 - fraction) * self._side_weights(inner, outer)
        if fraction > 0:
            side = side + fraction * self._side_weights(outer, outer)

        offsets = self.unit_offsets(outer)
        if self.rule is QuadratureRule.MIDPOINT:
            offsets = np.concatenate((-offsets[::-1], offsets))
            weights = np.concatenate((side[::-1], side))
        else:
            offsets = np.concatenate((-offsets[:0:-1], offsets))
            weights = np.concatenate((side[:0:-1], side))
            weights[outer] *= 2.0
        weights = self.h * weights
        return center + self.h * offsets, weights * (length / math.fsum(weights))

    def leakage_numerator(self, delta: float) -> float:
        """
        Bound on |sum_j w_j exp(i*delta*t_j)| over any window of this rule.

        Dominates the continuous value 2/|delta| and tends to it as h -> 0.
        """
        if delta == 0:
            return math.inf
        h = self.h
        half = abs(delta) * h / 2.0
        sin_half = abs(math.sin(half))
        if sin_half == 0.0:
            return math.inf
        bound = h / sin_half
        if self.rule is QuadratureRule.TRAPEZOID:
            bound += h
        elif self.rule is QuadratureRule.SIMPSON:
            cos_half = abs(math.cos(half))
            if cos_half == 0.0:
                return math.inf
            bound += h / (3.0 * cos_half) + 2.0 * h / 3.0
        return bound


@dataclass(frozen=True)
class TLadder:
    """Window half widths T_k = t0 * growth**k, k = 0..rungs-1"""

    t0: float = DEFAULT_LADDER_START
    growth: float = DEFAULT_LADDER_GROWTH
    rungs: int = DEFAULT_LADDER_RUNGS

    def __post_init__(self):
        if not math.isfinite(self.t0) or self.t0 <= 0:
            raise InvalidParameterError(f"Ladder start must be positive, got {self.t0}")
        if not math.isfinite(self.growth) or self.growth <= 1:
            raise InvalidParameterError(f"Ladder growth must exceed 1, got {self.growth}")
        if self.rungs < 1:
            raise InvalidParameterError(f"Ladder needs at least one rung, got {self.rungs}")

    @property
    def values(self) -> Tuple[float, ...]:
        return tuple(self.t0 * self.growth ** k for k in range(self.rungs))

    @property
    def last(self) -> float:
        return self.values[-1]

    @property
    def upper_half(self) -> range:
        """Rung indices used by the limsup surrogate"""
        return range(self.rungs // 2, self.rungs)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.rungs


def _two_sum(a: float, b: float) -> Tuple[float, float]:
    # Error-free transformation: a + b == s + t exactly
    s = a + b
    ap = s - b
    bp = s - ap
    return s, (a - ap) + (b - bp)


class CompensatedPrefix:
    """
    Exclusive prefix sums P[k] = sum(values[:k]) with compensated block offsets.

    Block totals are exactly rounded (math.fsum) and chained through an error-free
    running sum; inside a block plain cumulative sums are used, so any range sum
    carries an error of the order of eps times the range magnitude.
    """

    def __init__(self, values: np.ndarray, block: int = PREFIX_BLOCK):
        values = np.asarray(values, dtype=float)
        self.block = block
        self.size = values.size
        block_count = values.size // block + 1
        padded = np.zeros(block_count * block)
        padded[: values.size] = values
        blocks = padded.reshape(block_count, block)

        local = np.zeros_like(blocks)
        local[:, 1:] = np.cumsum(blocks[:, :-1], axis=1)
        self._local = local.ravel()

        hi = np.empty(block_count)
        lo = np.empty(block_count)
        running, carry = 0.0, 0.0
        for index, row in enumerate(blocks):
            hi[index], lo[index] = running, carry
            running, error = _two_sum(running, math.fsum(row))
            carry += error
        self._hi = hi
        self._lo = lo

    def range_sum(self, start, stop):
        """Sum of values[start:stop]; start and stop may be integer arrays"""
        start = np.asarray(start)
        stop = np.asarray(stop)
        b_start = start // self.block
        b_stop = stop // self.block
        head = (self._hi[b_stop] - self._hi[b_start]) + (self._local[stop] - self._local[start])
        return head + (self._lo[b_stop] - self._lo[b_start])


@dataclass(frozen=True, eq=False)
class WindowLattice:
    """
    Shared node lattice for windows [c + a, c + b] over many centers c on one line.

    Nodes sit at origin + k*h (cell midpoints for the midpoint rule). Window ends
    and centers are snapped to the lattice, so every window reads its weighted sum
    from prefix sums of a single evaluation of the integrand.
    """

    quad: QuadratureSpec
    origin: float
    center_index: np.ndarray
    bounds: Tuple[Tuple[int, int], ...]
    lengths: Tuple[float, ...]
    first: int
    count: int
    _weight_totals: Tuple[float, ...] = field(default=(), repr=False)

    @classmethod
    def build(
        cls,
        centers: Sequence[float],
        windows: Sequence[Tuple[float, float]],
        quad: QuadratureSpec,
    ) -> "WindowLattice":
        """
        Build the lattice covering every window around every center.

        Args:
            centers: Window reference points (shifts)
            windows: Relative windows (a, b) with a < b
            quad: Quadrature rule and spacing

        Returns:
            WindowLattice
        """
        centers = np.asarray(centers, dtype=float)
        if centers.size == 0 or not windows:
            raise QuadratureError("A window lattice needs at least one center and one window")
        h = quad.h
        origin = float(centers[0])
        center_index = np.rint((centers - origin) / h).astype(np.int64)

        bounds: List[Tuple[int, int]] = []
        lengths: List[float] = []
        totals: List[float] = []
        for a, b in windows:
            if not b > a:
                raise QuadratureError(f"Window ({a}, {b}) is empty")
            i_lo, i_hi = int(round(a / h)), int(round(b / h))
            n = i_hi - i_lo
            if n < quad.min_intervals:
                raise QuadratureError(f"Window ({a}, {b}) is shorter than the node spacing {h}")
            if quad.rule is QuadratureRule.SIMPSON and n % 2:
                raise QuadratureError(
                    f"Window ({a}, {b}) spans {n} intervals; Simpson needs an even count"
                )
            bounds.append((i_lo, i_hi))
            lengths.append(b - a)
            totals.append(cls._rule_sum(quad, n))

        lows = [lo for lo, _ in bounds]
        highs = [hi for _, hi in bounds]
        first = int(center_index.min()) + min(lows)
        last = int(center_index.max()) + max(highs)
        if quad.rule is QuadratureRule.MIDPOINT:
            last -= 1
        return cls(
            quad=quad,
            origin=origin,
            center_index=center_index,
            bounds=tuple(bounds),
            lengths=tuple(lengths),
            first=first,
            count=last - first + 1,
            _weight_totals=tuple(totals),
        )

    @staticmethod
    def _rule_sum(quad: QuadratureSpec, n: int) -> float:
        # Total weight of n intervals, grouped the way integrate() groups terms
        h = quad.h
        if quad.rule is not QuadratureRule.SIMPSON:
            return h * n
        return (h / 3.0) * (2.0 + 4.0 * (n // 2) + 2.0 * (n // 2 - 1))

    @property
    def nodes(self) -> np.ndarray:
        k = self.first + np.arange(self.count, dtype=float)
        if self.quad.rule is QuadratureRule.MIDPOINT:
            k = k + 0.5
        return self.origin + k * self.quad.h

    @property
    def centers(self) -> np.ndarray:
        """Snapped centers actually used"""
        return self.origin + self.center_index * self.quad.h

    def integrate(self, values: np.ndarray, y: float = 0.0) -> np.ndarray:
        """
        Window integrals of a real integrand sampled at the lattice nodes.

        Args:
            values: Integrand at self.nodes
            y: Line the integrand was sampled on (only used in error messages)

        Returns:
            Array of shape (len(windows), len(centers))
        """
        values = np.asarray(values, dtype=float)
        if values.shape != (self.count,):
            raise QuadratureError(f"Expected {self.count} samples, got {values.shape}")
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise NonFiniteValueError((float(self.nodes[bad[0]]), y))

        h = self.quad.h
        rule = self.quad.rule
        if rule is QuadratureRule.SIMPSON:
            parity = np.arange(self.count) % 2
            even = CompensatedPrefix(np.where(parity == 0, values, 0.0))
            odd = CompensatedPrefix(np.where(parity == 1, values, 0.0))
        else:
            total = CompensatedPrefix(values)

        result = np.empty((len(self.bounds), self.center_index.size))
        for row, ((i_lo, i_hi), length, weight_total) in enumerate(
            zip(self.bounds, self.lengths, self._weight_totals)
        ):
            a = self.center_index + (i_lo - self.first)
            b = self.center_index + (i_hi - self.first)
            if rule is QuadratureRule.MIDPOINT:
                raw = h * total.range_sum(a, b)
            elif rule is QuadratureRule.TRAPEZOID:
                raw = h * (total.range_sum(a, b + 1) - 0.5 * (values[a] + values[b]))
            else:
                starts_even = (a % 2) == 0
                in_even = even.range_sum(a + 1, b)
                in_odd = odd.range_sum(a + 1, b)
                odd_rel = np.where(starts_even, in_odd, in_even)
                even_rel = np.where(starts_even, in_even, in_odd)
                raw = (h / 3.0) * ((values[a] + values[b]) + 4.0 * odd_rel + 2.0 * even_rel)
            if self.quad.normalized:
                raw = raw * (length / weight_total)
            result[row] = raw
        return result

    def means(self, values: np.ndarray, y: float = 0.0) -> np.ndarray:
        """Window integrals divided by the window lengths"""
        integrals = self.integrate(values, y)
        return integrals / np.asarray(self.lengths)[:, None]
