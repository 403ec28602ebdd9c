"""
Arithmetic sample grids
"""
import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_Y_DIVISIONS
from .exceptions import EmptyGridError, InvalidParameterError

# Absorbs rounding in (stop - start) / step so that stop itself is a node when intended
_COUNT_SLACK = 1e-9


@dataclass(frozen=True)
class GridSpec:
    """Nodes start + i*step for 0 <= i <= floor((stop - start) / step)"""

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.start, self.stop, self.step)):
            raise InvalidParameterError("Grid bounds and step must be finite")
        if self.step <= 0:
            raise InvalidParameterError(f"Grid step must be positive, got {self.step}")
        if self.stop < self.start:
            raise EmptyGridError(f"Grid [{self.start}, {self.stop}] is empty")

    @classmethod
    def single(cls, value: float) -> "GridSpec":
        return cls(value, value, 1.0)

    @classmethod
    def over(cls, lo: float, hi: float, divisions: int = DEFAULT_Y_DIVISIONS) -> "GridSpec":
        """Grid splitting [lo, hi] into equal parts; a single node when lo == hi"""
        if divisions < 1:
            raise InvalidParameterError("divisions must be at least 1")
        if hi == lo:
            return cls.single(lo)
        return cls(lo, hi, (hi - lo) / divisions)

    @property
    def size(self) -> int:
        return int(math.floor((self.stop - self.start) / self.step + _COUNT_SLACK)) + 1

    def nodes(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.size, dtype=float)
