"""
Lacunary Gaussian-bump functions over the ternary set I and their bounds
"""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog
from scipy.special import erf, zeta

from ..core.constants import (
    BUMP_RATE,
    DEFAULT_BUMP_WINDOW,
    DEFAULT_MAX_LEVEL,
    MIN_BUMP_WINDOW,
    SQRT_PI,
    BoundVariant,
    SeparatorVariant,
)
from ..core.exceptions import InvalidParameterError
from ..core.function import EvaluableFunction
from ..core.quadrature import QuadratureSpec
from ..core.sampling import check_exponent, window_integral
from ..core.strip import PointLike
from .ternary import levels_and_membership

logger = structlog.get_logger(__name__)

# Series truncation: stop once a term is this small relative to the running sum
_SERIES_RATIO = 1e-15


@dataclass(frozen=True)
class SeparatorSpec:
    """
    One of the bump series over I.

    T2 weights every bump by 1 and is not truncated in level; T3 weights level l
    by l and T4 by 3^(l/p0), both summed over levels l <= l_max. Bumps farther
    than window from x are dropped.
    """

    variant: SeparatorVariant = SeparatorVariant.T2
    l_max: int = DEFAULT_MAX_LEVEL
    window: float = DEFAULT_BUMP_WINDOW
    p0: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.variant, SeparatorVariant):
            object.__setattr__(self, "variant", SeparatorVariant(self.variant))
        if self.l_max < 1:
            raise InvalidParameterError(f"l_max must be at least 1, got {self.l_max}")
        if not self.window >= MIN_BUMP_WINDOW:
            raise InvalidParameterError(
                f"Bump window must be at least {MIN_BUMP_WINDOW}, got {self.window}"
            )
        if self.variant is SeparatorVariant.T4:
            if self.p0 is None or not math.isfinite(self.p0) or self.p0 <= 1:
                raise InvalidParameterError(f"T4 needs a finite p0 > 1, got {self.p0}")

    @property
    def max_level(self) -> Optional[int]:
        """Highest level summed, None for the untruncated T2 series"""
        return None if self.variant is SeparatorVariant.T2 else self.l_max

    def level_weight(self, levels):
        """Weight of a bump at the given level(s)"""
        levels = np.asarray(levels, dtype=float)
        if self.variant is SeparatorVariant.T2:
            return np.ones_like(levels)
        if self.variant is SeparatorVariant.T3:
            return levels
        return 3.0 ** (levels / self.p0)

    def window_tail_bound(self, y: float) -> float:
        """Bound on the bumps dropped by the x-window on the line Im z = y"""
        top = self.max_level or 1
        weight = float(self.level_weight(top)) if self.max_level else 1.0
        w = self.window
        return weight * math.exp(BUMP_RATE * y * y) * 2.0 * math.exp(-BUMP_RATE * w * w) / (
            1.0 - math.exp(-2.0 * BUMP_RATE * w)
        )

    def truncation_bound(self, x: float, y: float) -> float:
        """
        Bound on the levels above l_max at z = x + iy.

        Level-l bumps sit at least 3^(l-1) - |x| from x and are spaced 3^l apart;
        returns inf when |x| is too large for that estimate.
        """
        if self.max_level is None:
            return 0.0
        total = 0.0
        growth = math.exp(BUMP_RATE * y * y)
        for level in range(self.l_max + 1, self.l_max + 64):
            gap = 3.0 ** (level - 1) - abs(x)
            if gap <= 0:
                return math.inf
            period = 3.0 ** level
            term = float(self.level_weight(level)) * growth * 2.0 * math.exp(-BUMP_RATE * gap * gap) / (
                1.0 - math.exp(-2.0 * BUMP_RATE * gap * period)
            )
            total += term
            if term == 0.0 or term <= _SERIES_RATIO * total:
                break
        return total


class SeparatorFunction(EvaluableFunction):
    """Bump series of a SeparatorSpec restricted to the levels lo..hi"""

    def __init__(self, spec: SeparatorSpec, level_lo: int = 1, level_hi: Optional[int] = None):
        if level_lo < 1:
            raise InvalidParameterError(f"Lowest level must be at least 1, got {level_lo}")
        if level_hi is not None and level_hi < level_lo:
            raise InvalidParameterError(f"Empty level band [{level_lo}, {level_hi}]")
        self.spec = spec
        self.level_lo = level_lo
        self.level_hi = level_hi
        self._reach = int(math.ceil(spec.window))

    def __repr__(self) -> str:
        return f"SeparatorFunction({self.spec.variant.value}, levels {self.level_lo}..{self.level_hi})"

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.size == 0:
            return np.zeros(x.shape, dtype=complex)
        flat = x.ravel()
        base = np.floor(flat).astype(np.int64)
        offsets = np.arange(-self._reach, self._reach + 1, dtype=np.int64)

        # Levels of every integer the windows can touch, looked up by offset
        lo = int(base.min()) - self._reach
        span = np.arange(lo, int(base.max()) + self._reach + 1, dtype=np.int64)
        levels, members = levels_and_membership(span)
        keep = members & (levels >= self.level_lo)
        if self.level_hi is not None:
            keep &= levels <= self.level_hi
        weights = np.where(keep, self.spec.level_weight(levels), 0.0)

        n = base[:, None] + offsets[None, :]
        d = flat[:, None] - n
        w = np.where(np.abs(d) <= self.spec.window, weights[n - lo], 0.0)
        bumps = np.exp(-BUMP_RATE * (d + 1j * y) ** 2)
        return (w * bumps).sum(axis=1).reshape(x.shape)


def separator_function(spec: SeparatorSpec) -> SeparatorFunction:
    """The full (level-truncated) series of spec"""
    return SeparatorFunction(spec, 1, spec.max_level)


def level_function(l: int, W: float = DEFAULT_BUMP_WINDOW) -> SeparatorFunction:
    """phi_l: unit bumps at the level-l points of I, an entire function of period 3^l"""
    return SeparatorFunction(SeparatorSpec(SeparatorVariant.T2, l_max=max(l, 1), window=W), l, l)


def phi_l(z: PointLike, l: int, W: float = DEFAULT_BUMP_WINDOW) -> complex:
    """Value of phi_l at z"""
    return level_function(l, W)(z)


def separator_eval(spec: SeparatorSpec, z: PointLike) -> complex:
    """Value of the truncated series of spec at z"""
    return separator_function(spec)(z)


def partial_sum_f_m(spec: SeparatorSpec, m: int) -> SeparatorFunction:
    """
    Levels 1..m of the series with the variant's weights; periodic with period 3^m.

    Args:
        spec: Series
        m: Highest level, 1 <= m <= l_max

    Returns:
        SeparatorFunction
    """
    if not 1 <= m <= spec.l_max:
        raise InvalidParameterError(f"m must lie in [1, {spec.l_max}], got {m}")
    return SeparatorFunction(spec, 1, m)


def gaussian_window_mass(p: float, T0: float) -> float:
    """Integral of exp(-4 p t^2) over [-T0, T0]"""
    return math.sqrt(math.pi / (BUMP_RATE * p)) * float(erf(2.0 * math.sqrt(p) * T0))


def _level_series(term, start: int) -> float:
    total = 0.0
    level = start
    while True:
        value = term(level)
        total += value
        if value <= _SERIES_RATIO * total:
            return total
        level += 1


def theorem_bounds(variant: BoundVariant, **params) -> float:
    """
    Closed-form bounds attached to the separators.

    T2(m, H, T=None): Weyl-1 bound for f - f_m on |y| <= H; limit (3 sqrt(pi)/2) 3^-m e^(4H^2),
        finite window form (sqrt(pi)/2)(3^(1-m) + 1/T) e^(4H^2).
    T3tail(m, p): 2^(p-1) 9 sqrt(pi) sum_{l>m} l^(2p) / 3^l.
    T3window(l, p, T0): l^p * integral of exp(-4 p t^2) over [-T0, T0].
    T4window(l, p, p0, T0=1/2): 3^(l p / p0) * integral of exp(-4 p t^2) over [-T0, T0].
    T4tail(m, p, p0): 2^(p-1) 9 sqrt(pi) sum_{l>m} l^p / 3^(l (1 - 1/p0)).
    """
    if not isinstance(variant, BoundVariant):
        variant = BoundVariant(variant)
    try:
        if variant is BoundVariant.T2:
            m, H, T = int(params["m"]), float(params["H"]), params.get("T")
            growth = math.exp(BUMP_RATE * H * H)
            if T is None:
                return 1.5 * SQRT_PI * 3.0 ** (-m) * growth
            if T <= 0:
                raise InvalidParameterError(f"T must be positive, got {T}")
            return 0.5 * SQRT_PI * (3.0 ** (1 - m) + 1.0 / float(T)) * growth
        if variant is BoundVariant.T3_TAIL:
            m, p = int(params["m"]), check_exponent(params["p"])
            series = _level_series(lambda l: l ** (2 * p) / 3.0 ** l, m + 1)
            return 2.0 ** (p - 1) * 9.0 * SQRT_PI * series
        if variant is BoundVariant.T3_WINDOW:
            l, p, T0 = int(params["l"]), check_exponent(params["p"]), float(params["T0"])
            return l ** p * gaussian_window_mass(p, T0)
        if variant is BoundVariant.T4_WINDOW:
            l, p, p0 = int(params["l"]), check_exponent(params["p"]), float(params["p0"])
            T0 = float(params.get("T0", 0.5))
            return 3.0 ** (l * p / p0) * gaussian_window_mass(p, T0)
        m, p, p0 = int(params["m"]), check_exponent(params["p"]), float(params["p0"])
        if p0 <= 1:
            raise InvalidParameterError(f"p0 must exceed 1, got {p0}")
        series = _level_series(lambda l: l ** p / 3.0 ** (l * (1.0 - 1.0 / p0)), m + 1)
        return 2.0 ** (p - 1) * 9.0 * SQRT_PI * series
    except KeyError as e:
        raise InvalidParameterError(f"Missing parameter {e.args[0]} for bound {variant.value}") from e


def holder_factor(m: int, p: float) -> float:
    """(sum_{l>m} l^-q)^(1/q) with 1/p + 1/q = 1; 1/(m+1) when p = 1"""
    p = check_exponent(p)
    if p == 1.0:
        return 1.0 / (m + 1)
    q = p / (p - 1.0)
    return float(zeta(q, m + 1)) ** (1.0 / q)


def separation_level_threshold(c: float, p: float, T0: float) -> float:
    """Smallest level past which a level-l window exceeds 2c and 3^l exceeds 2*T0"""
    p = check_exponent(p)
    if c <= 0 or T0 <= 0:
        raise InvalidParameterError("c and T0 must be positive")
    by_mass = (2.0 * c / gaussian_window_mass(p, T0)) ** (1.0 / p)
    by_width = math.log(2.0 * T0) / math.log(3.0)
    return max(by_mass, by_width)


@dataclass(frozen=True)
class WindowedNorm:
    """p-integral of a separator over [x_n - T0, x_n + T0], x_n = 3^l n + 3^(l-1)"""

    variant: SeparatorVariant
    l: int
    n: int
    p: float
    T0: float
    value: float
    bound: float

    CSV_COLUMNS = ("variant", "l", "n", "p", "T0", "value", "bound")

    @property
    def center(self) -> float:
        return 3.0 ** self.l * self.n + 3.0 ** (self.l - 1)

    def csv_row(self) -> Tuple:
        return (self.variant.value, self.l, self.n, self.p, self.T0, self.value, self.bound)


def level_center(l: int, n: int) -> float:
    """x_n = 3^l n + 3^(l-1), a level-l point of I"""
    return float(3 ** l * n + 3 ** (l - 1))


def windowed_norm_at_centers(
    spec: SeparatorSpec,
    l: int,
    n_range: Sequence[int],
    p: float,
    T0: float,
    quad: QuadratureSpec = QuadratureSpec(),
) -> List[WindowedNorm]:
    """
    Window p-integrals of the series around level-l points of I.

    Args:
        spec: Series
        l: Level of the centers
        n_range: Center indices n
        p: Exponent
        T0: Window half width
        quad: Quadrature rule

    Returns:
        One WindowedNorm per n, with the matching lower bound
    """
    p = check_exponent(p)
    if spec.max_level is not None and l > spec.max_level:
        raise InvalidParameterError(f"Level {l} exceeds l_max = {spec.max_level}")
    if spec.variant is SeparatorVariant.T4:
        bound = theorem_bounds(BoundVariant.T4_WINDOW, l=l, p=p, p0=spec.p0, T0=T0)
    else:
        weight = l if spec.variant is SeparatorVariant.T3 else 1
        bound = theorem_bounds(BoundVariant.T3_WINDOW, l=weight, p=p, T0=T0)
    f = separator_function(spec)
    rows = []
    for n in n_range:
        value = window_integral(f, level_center(l, int(n)), T0, p, quad)
        rows.append(WindowedNorm(spec.variant, int(l), int(n), p, float(T0), value, bound))
    logger.debug("separators.windowed_norms", variant=spec.variant.value, l=l, count=len(rows))
    return rows
