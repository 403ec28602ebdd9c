"""
Finite-T estimators of the uniform, Stepanov, Weyl and Besicovitch distances,
mean values and the interior sup bound for holomorphic functions
"""
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ..core.constants import DEFAULT_SHIFT_STEP, DEFAULT_Y_DIVISIONS, MetricTag
from ..core.exceptions import InvalidParameterError, InvalidStripError
from ..core.function import EvaluableFunction
from ..core.grid import GridSpec
from ..core.parallel import ordered_map
from ..core.quadrature import QuadratureSpec, TLadder, WindowLattice
from ..core.sampling import check_exponent, grid_sup, powered_modulus
from ..core.strip import Strip
from .exp_sums import ExpSum

logger = structlog.get_logger(__name__)

# Allowed overshoot of grid y nodes past the substrip edge (rounding of start + k*step)
_EDGE_SLACK = 1e-12


@dataclass(frozen=True)
class MetricKind:
    """Metric tag with its exponent"""

    tag: MetricTag
    p: float = 1.0

    def __post_init__(self):
        if not isinstance(self.tag, MetricTag):
            object.__setattr__(self, "tag", MetricTag(self.tag))
        check_exponent(self.p)

    @property
    def label(self) -> str:
        if self.tag is MetricTag.UNIFORM:
            return self.tag.value
        return f"{self.tag.value}-{self.p:g}"


@dataclass(frozen=True)
class MetricEstimate:
    """Windowed distance values over a ladder of T with a limsup surrogate"""

    kind: MetricKind
    substrip: Tuple[float, float]
    rungs: Tuple[Tuple[float, float], ...]
    surrogate: float

    CSV_COLUMNS = ("kind", "p", "alpha", "beta", "T", "value")

    def __post_init__(self):
        if any(value < 0 for _, value in self.rungs):
            raise InvalidParameterError("Metric rung values must be nonnegative")

    @classmethod
    def from_values(
        cls,
        kind: MetricKind,
        substrip: Strip,
        ladder: TLadder,
        values: Sequence[float],
    ) -> "MetricEstimate":
        """Attach rung values to the ladder; surrogate = max over the upper half"""
        rungs = tuple((float(T), float(v)) for T, v in zip(ladder.values, values))
        surrogate = max(rungs[k][1] for k in ladder.upper_half)
        return cls(kind, (substrip.y_min, substrip.y_max), rungs, surrogate)

    @property
    def values(self) -> Tuple[float, ...]:
        return tuple(value for _, value in self.rungs)

    def csv_rows(self) -> List[Tuple]:
        alpha, beta = self.substrip
        return [
            (self.kind.tag.value, self.kind.p, alpha, beta, T, value)
            for T, value in self.rungs
        ]

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind.tag.value,
            "p": self.kind.p,
            "alpha": self.substrip[0],
            "beta": self.substrip[1],
            "rungs": [{"T": T, "value": value} for T, value in self.rungs],
            "surrogate": self.surrogate,
        }


@dataclass(frozen=True)
class SupShiftGrid:
    """x-shift samples and y samples over which window values are maximized"""

    x: GridSpec
    y: GridSpec

    @classmethod
    def default(cls, alpha: float, beta: float, period: float = 3.0,
                step: float = DEFAULT_SHIFT_STEP) -> "SupShiftGrid":
        """
        Shifts over one cell [0, period]; y split into equal parts.

        The default period 3 is the cell of the T2 series and of its first partial
        sum. A partial sum f_m repeats only every 3^m, so pass period=3**m for it.
        """
        return cls(GridSpec(0.0, period, step), GridSpec.over(alpha, beta, DEFAULT_Y_DIVISIONS))

    @classmethod
    def covering(cls, shifts: "SupShiftGrid", ladder: TLadder, quad: QuadratureSpec) -> "SupShiftGrid":
        """
        Node grid visiting every quadrature node of every window around every shift.

        A uniform estimate on this grid dominates the Weyl and Besicovitch rungs
        computed with the same shifts, ladder and rule.
        """
        reach = quad.h * round(ladder.last / quad.h)
        return cls(GridSpec(shifts.x.start - reach, shifts.x.stop + reach, quad.h), shifts.y)


def _require_substrip(substrip: Strip) -> Strip:
    if not isinstance(substrip, Strip):
        raise InvalidStripError("A closed substrip is required")
    return substrip.require_bounded()


def _line_samples(y_grid: GridSpec, substrip: Strip) -> np.ndarray:
    ys = y_grid.nodes()
    if ys[0] < substrip.y_min - _EDGE_SLACK or ys[-1] > substrip.y_max + _EDGE_SLACK:
        raise InvalidStripError(
            f"y samples [{ys[0]}, {ys[-1]}] leave the substrip "
            f"[{substrip.y_min}, {substrip.y_max}]"
        )
    return np.clip(ys, substrip.y_min, substrip.y_max)


def _line_means(
    diff: EvaluableFunction,
    ys: np.ndarray,
    lattice: WindowLattice,
    p: float,
) -> List[np.ndarray]:
    # One evaluation per line; every window mean is read from prefix sums
    nodes = lattice.nodes

    def one_line(y: float) -> np.ndarray:
        values = diff.sample(nodes, y)
        return lattice.means(powered_modulus(values, p, nodes, y), y)

    return ordered_map(one_line, [float(y) for y in ys])


def uniform_distance(
    f: EvaluableFunction,
    g: EvaluableFunction,
    substrip: Strip,
    grid: SupShiftGrid,
) -> float:
    """
    Grid sup of |f - g| over the shift grid (a lower bound of the uniform distance).

    Args:
        f: First function
        g: Second function
        substrip: Closed substrip containing the y samples
        grid: Sample grid

    Returns:
        Maximum of |f - g| over the grid nodes
    """
    substrip = _require_substrip(substrip)
    _line_samples(grid.y, substrip)
    return grid_sup(
        f - g,
        Strip(grid.y.start, grid.y.stop),
        (grid.x.start, grid.x.stop),
        grid.x.step,
        grid.y.step,
    )


def stepanov_distance(
    f: EvaluableFunction,
    g: EvaluableFunction,
    p: float,
    substrip: Strip,
    grid: SupShiftGrid,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """
    Sup over the grid of (integral over [0, 1] of |f - g|^p at z + t)^(1/p).

    Args:
        f: First function
        g: Second function
        p: Exponent (>= 1)
        substrip: Closed substrip containing the y samples
        grid: Window start points and lines
        quad: Quadrature rule

    Returns:
        Stepanov distance estimate
    """
    p = check_exponent(p)
    substrip = _require_substrip(substrip)
    ys = _line_samples(grid.y, substrip)
    lattice = WindowLattice.build(grid.x.nodes(), [(0.0, 1.0)], quad)
    lines = _line_means(f - g, ys, lattice, p)
    value = max(float(line.max()) for line in lines) ** (1.0 / p)
    logger.debug("metrics.stepanov", p=p, value=value)
    return value


def weyl_distance(
    f: EvaluableFunction,
    g: EvaluableFunction,
    p: float,
    substrip: Strip,
    grid: Optional[SupShiftGrid] = None,
    ladder: TLadder = TLadder(),
    quad: QuadratureSpec = QuadratureSpec(),
) -> MetricEstimate:
    """
    Weyl distance ladder: per rung T, sup over shifts of the p-mean over [-T, T].

    Args:
        f: First function
        g: Second function
        p: Exponent (>= 1)
        substrip: Closed substrip
        grid: Shift grid; defaults to SupShiftGrid.default on the substrip
        ladder: Window half widths
        quad: Quadrature rule

    Returns:
        MetricEstimate with one value per rung
    """
    p = check_exponent(p)
    substrip = _require_substrip(substrip)
    grid = grid or SupShiftGrid.default(substrip.y_min, substrip.y_max)
    ys = _line_samples(grid.y, substrip)
    lattice = WindowLattice.build(grid.x.nodes(), [(-T, T) for T in ladder], quad)
    lines = _line_means(f - g, ys, lattice, p)
    per_rung = np.max(np.stack([line.max(axis=1) for line in lines]), axis=0)
    estimate = MetricEstimate.from_values(
        MetricKind(MetricTag.WEYL, p), substrip, ladder, per_rung ** (1.0 / p)
    )
    logger.debug("metrics.weyl", p=p, rungs=estimate.values, surrogate=estimate.surrogate)
    return estimate


def besicovitch_distance(
    f: EvaluableFunction,
    g: EvaluableFunction,
    p: float,
    substrip: Strip,
    ladder: TLadder = TLadder(),
    quad: QuadratureSpec = QuadratureSpec(),
    y_samples: Optional[GridSpec] = None,
) -> MetricEstimate:
    """
    Besicovitch distance ladder: windows centered at x = 0, sup over y samples only.
    """
    p = check_exponent(p)
    substrip = _require_substrip(substrip)
    y_samples = y_samples or GridSpec.over(substrip.y_min, substrip.y_max, DEFAULT_Y_DIVISIONS)
    ys = _line_samples(y_samples, substrip)
    lattice = WindowLattice.build([0.0], [(-T, T) for T in ladder], quad)
    lines = _line_means(f - g, ys, lattice, p)
    per_rung = np.max(np.stack([line[:, 0] for line in lines]), axis=0)
    estimate = MetricEstimate.from_values(
        MetricKind(MetricTag.BESICOVITCH, p), substrip, ladder, per_rung ** (1.0 / p)
    )
    logger.debug("metrics.besicovitch", p=p, rungs=estimate.values, surrogate=estimate.surrogate)
    return estimate


@dataclass(frozen=True)
class MeanValueEstimate:
    """Window means of f on the line Im z = y along a ladder"""

    y: float
    rungs: Tuple[Tuple[float, complex], ...]
    surrogate: complex
    shift_deviation: Tuple[float, ...]

    @property
    def values(self) -> Tuple[complex, ...]:
        return tuple(value for _, value in self.rungs)


def complex_window_means(
    f: EvaluableFunction,
    y: float,
    lattice: WindowLattice,
) -> np.ndarray:
    """Complex window means of f on one line, shape (windows, centers)"""
    nodes = lattice.nodes
    values = f.sample(nodes, y)
    return lattice.means(values.real, y) + 1j * lattice.means(values.imag, y)


def mean_value(
    f: EvaluableFunction,
    y: float,
    ladder: TLadder = TLadder(),
    quad: QuadratureSpec = QuadratureSpec(),
    shifts: Optional[GridSpec] = None,
) -> MeanValueEstimate:
    """
    Mean values (1/2T) * integral of f(t + iy) over [-T, T] along the ladder.

    The surrogate is the last rung. shift_deviation[k] is the largest distance
    between the rung-k mean over [x - T, x + T] and the surrogate, over the shifts x.

    Args:
        f: Function
        y: Line
        ladder: Window half widths
        quad: Quadrature rule
        shifts: x-shift samples for the uniformity residual

    Returns:
        MeanValueEstimate
    """
    shifts = shifts or GridSpec(0.0, 3.0, 0.5)
    centers = np.concatenate(([0.0], shifts.nodes()))
    lattice = WindowLattice.build(centers, [(-T, T) for T in ladder], quad)
    means = complex_window_means(f, float(y), lattice)
    values = [complex(v) for v in means[:, 0]]
    surrogate = values[-1]
    deviation = tuple(float(np.max(np.abs(row[1:] - surrogate))) for row in means)
    logger.debug("metrics.mean_value", y=y, surrogate=surrogate)
    return MeanValueEstimate(
        y=float(y),
        rungs=tuple(zip(ladder.values, values)),
        surrogate=surrogate,
        shift_deviation=deviation,
    )


def snapped_length(T: float, quad: QuadratureSpec) -> float:
    """Length of the window [-T, T] after snapping its ends to the node lattice"""
    return 2.0 * round(T / quad.h) * quad.h


def mean_leakage_bound(
    s: ExpSum,
    lam: float,
    y: float,
    T: float,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """
    Bound on |window mean of s(t + iy) e^{-i lam t} - c_lam(y)| over [-T, T].

    Each term with frequency lambda_n != lam contributes
    |c_n(y)| * |sum_j w_j exp(i (lambda_n - lam) t_j)| / (2T), bounded through the
    rule's geometric sums; the bound is never below 2 * sum |c_n(y)| / |lambda_n - lam| / (2T).
    """
    length = snapped_length(T, quad)
    total = 0.0
    for frequency, coeff in s.terms:
        if frequency == lam:
            continue
        magnitude = abs(coeff(y))
        if magnitude == 0.0:
            continue
        total += magnitude * quad.leakage_numerator(frequency - lam)
    return total / length


def windowed_l1_bound(
    f: EvaluableFunction,
    substrip: Strip,
    T0: float,
    grid: SupShiftGrid,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """
    Measured C: sup over the grid of the integral of |f(z + u)| over u in [-T0, T0].
    """
    substrip = _require_substrip(substrip)
    ys = _line_samples(grid.y, substrip)
    lattice = WindowLattice.build(grid.x.nodes(), [(-T0, T0)], quad)
    lines = _line_means(f, ys, lattice, 1.0)
    return max(float(line.max()) for line in lines) * 2.0 * T0


def interior_sup_bound(C: float, T0: float, r: float) -> float:
    """
    Sup bound 2*T0*C / (pi*r^2) for a holomorphic f on the strip shrunk by r,
    given that every window integral of |f| over [-T0, T0] is at most C.

    Args:
        C: Windowed L1 bound
        T0: Window half width
        r: Distance from the strip boundary

    Returns:
        Interior sup bound
    """
    for name, value in (("C", C), ("T0", T0), ("r", r)):
        if not math.isfinite(value) or value <= 0:
            raise InvalidParameterError(f"{name} must be positive, got {value}")
    return 2.0 * T0 * C / (math.pi * r * r)
