"""
Horizontal strips and points of the complex plane
"""
import math
from dataclasses import dataclass
from typing import Union

from .exceptions import InvalidParameterError, InvalidStripError


@dataclass(frozen=True)
class Strip:
    """A horizontal strip {y_min <= Im z <= y_max} (or its open interior)"""

    y_min: float = -math.inf
    y_max: float = math.inf
    closed: bool = True

    def __post_init__(self):
        """Validate strip bounds"""
        if math.isnan(self.y_min) or math.isnan(self.y_max):
            raise InvalidStripError("Strip bounds must not be NaN")
        if self.y_min > self.y_max:
            raise InvalidStripError(
                f"Strip lower bound {self.y_min} exceeds upper bound {self.y_max}"
            )
        if not self.closed and self.y_min == self.y_max:
            raise InvalidStripError("An open strip needs y_min < y_max")

    @classmethod
    def plane(cls) -> "Strip":
        """The whole complex plane as an open strip"""
        return cls(-math.inf, math.inf, closed=False)

    @classmethod
    def line(cls, y: float) -> "Strip":
        """Degenerate closed strip consisting of one horizontal line"""
        return cls(y, y, closed=True)

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.y_min) and math.isfinite(self.y_max)

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def contains(self, y: float) -> bool:
        """
        Check whether the horizontal line Im z = y belongs to the strip

        Args:
            y: Vertical coordinate

        Returns:
            True if the line lies in the strip
        """
        if self.closed:
            return self.y_min <= y <= self.y_max
        return self.y_min < y < self.y_max

    def substrip(self, alpha: float, beta: float) -> "Strip":
        """
        Closed substrip [alpha, beta] of this strip.

        Open strips only admit substrips strictly inside them.

        Args:
            alpha: Lower bound
            beta: Upper bound

        Returns:
            Closed strip
        """
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            raise InvalidStripError("Substrip bounds must be finite")
        if alpha > beta:
            raise InvalidStripError(f"Substrip lower bound {alpha} exceeds upper bound {beta}")
        if not (self.contains(alpha) and self.contains(beta)):
            kind = "open" if not self.closed else "closed"
            raise InvalidStripError(
                f"Substrip [{alpha}, {beta}] does not lie in the {kind} strip "
                f"({self.y_min}, {self.y_max})"
            )
        return Strip(alpha, beta, closed=True)

    def intersection(self, other: "Strip") -> "Strip":
        """
        Largest strip contained in both strips.

        Infinite bounds carry no openness; a finite bound is kept closed only if
        every strip supplying it is closed.
        """
        lo = max(self.y_min, other.y_min)
        hi = min(self.y_max, other.y_max)
        flags = []
        for bound, attr in ((lo, "y_min"), (hi, "y_max")):
            if math.isinf(bound):
                continue
            flags.extend(s.closed for s in (self, other) if getattr(s, attr) == bound)
        closed = all(flags) if flags else self.closed and other.closed
        if lo > hi or (lo == hi and not closed):
            raise InvalidStripError(f"Strips do not intersect: {self} and {other}")
        return Strip(lo, hi, closed=closed)

    def require_bounded(self) -> "Strip":
        """Return self if it is a closed strip with finite bounds"""
        if not (self.closed and self.is_bounded):
            raise InvalidStripError(
                "A closed substrip with finite bounds is required; "
                "call substrip(alpha, beta) first"
            )
        return self


@dataclass(frozen=True)
class ComplexPoint:
    """A point z = x + iy"""

    x: float
    y: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParameterError(f"Point components must be finite, got ({self.x}, {self.y})")

    @classmethod
    def from_complex(cls, z: Union[complex, float]) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def shifted(self, tau: float) -> "ComplexPoint":
        """Horizontal shift z -> z + tau"""
        return ComplexPoint(self.x + tau, self.y)


PointLike = Union[ComplexPoint, complex, float]


def as_point(z: PointLike) -> ComplexPoint:
    """Coerce a complex number, float or point to a ComplexPoint"""
    if isinstance(z, ComplexPoint):
        return z
    return ComplexPoint.from_complex(z)
