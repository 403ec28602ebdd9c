"""
Window integrals and sampled suprema
"""
import math
from typing import Tuple

import numpy as np
import structlog
from scipy.optimize import minimize_scalar

from .exceptions import InvalidParameterError, NonFiniteValueError
from .function import EvaluableFunction
from .grid import GridSpec
from .quadrature import QuadratureSpec
from .strip import PointLike, Strip, as_point

logger = structlog.get_logger(__name__)


def check_exponent(p: float) -> float:
    """Validate a metric exponent p >= 1"""
    if not math.isfinite(p) or p < 1:
        raise InvalidParameterError(f"Exponent p must be a finite number >= 1, got {p}")
    return float(p)


def powered_modulus(values: np.ndarray, p: float, nodes: np.ndarray, y: float) -> np.ndarray:
    """|values|**p, rejecting overflow to infinity"""
    powered = np.abs(values) ** p
    bad = np.flatnonzero(~np.isfinite(powered))
    if bad.size:
        raise NonFiniteValueError((float(nodes[bad[0]]), y))
    return powered


def window_integral(
    f: EvaluableFunction,
    center: PointLike,
    T: float,
    p: float = 1.0,
    quad: QuadratureSpec = QuadratureSpec(),
) -> float:
    """
    Quadrature of the integral of |f(center + t)|^p over t in [-T, T].

    With normalized weights the nodes stay on one lattice for every T, so the
    value is nondecreasing in T.

    Args:
        f: Function to integrate
        center: Window center; its imaginary part selects the line
        T: Half width (> 0)
        p: Exponent (>= 1)
        quad: Quadrature rule

    Returns:
        Nonnegative window integral
    """
    p = check_exponent(p)
    point = as_point(center)
    nodes, weights = quad.window(point.x, T)
    values = f.sample(nodes, point.y)
    return math.fsum(weights * powered_modulus(values, p, nodes, point.y))


def grid_sup(
    f: EvaluableFunction,
    strip: Strip,
    x_range: Tuple[float, float],
    x_step: float,
    y_step: float,
    refine: bool = False,
) -> float:
    """
    Maximum of |f| over a rectangular sample grid (a lower bound of the true sup).

    Args:
        f: Function to sample
        strip: Closed strip with finite bounds giving the y range
        x_range: (x_start, x_stop)
        x_step: Horizontal step
        y_step: Vertical step
        refine: Polish the best node with a bounded golden-section search along x

    Returns:
        Grid sup (lower bound)
    """
    strip.require_bounded()
    x_grid = GridSpec(float(x_range[0]), float(x_range[1]), x_step)
    y_grid = GridSpec(strip.y_min, strip.y_max, y_step)
    xs = x_grid.nodes()

    best, best_x, best_y = -math.inf, xs[0], strip.y_min
    for y in y_grid.nodes():
        moduli = np.abs(f.sample(xs, float(y)))
        index = int(np.argmax(moduli))
        if moduli[index] > best:
            best, best_x, best_y = float(moduli[index]), float(xs[index]), float(y)

    if refine and x_grid.size > 1:
        lo = max(x_grid.start, best_x - x_step)
        hi = min(x_grid.stop, best_x + x_step)
        result = minimize_scalar(
            lambda x: -abs(f(complex(x, best_y))),
            bounds=(lo, hi),
            method="bounded",
        )
        if result.success and -result.fun > best:
            logger.debug("sampling.refine", node=best_x, refined=float(result.x), gain=-result.fun - best)
            best = float(-result.fun)
    return best
