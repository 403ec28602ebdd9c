"""
Evaluable functions on horizontal strips
"""
import cmath
from abc import ABC, abstractmethod
from typing import Callable, Union

import numpy as np

from .constants import EVALUATION_CHUNK
from .exceptions import DomainError, NonFiniteValueError
from .strip import PointLike, Strip, as_point

Scalar = Union[int, float, complex]


class EvaluableFunction(ABC):
    """
    A complex-valued function on a strip, evaluated along horizontal lines.

    Subclasses implement line_values(); point evaluation, chunked evaluation and
    the algebra (sum, difference, scalar multiple, shift, modulation) come from
    this base class.
    """

    @property
    def domain(self) -> Strip:
        """Strip the function is defined on"""
        return Strip.plane()

    @abstractmethod
    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        """
        Values at x + iy for real nodes x on one horizontal line.

        Args:
            x: Real parts
            y: Common imaginary part

        Returns:
            Complex array shaped like x
        """
        pass

    def check_line(self, y: float) -> None:
        if not self.domain.contains(y):
            raise DomainError(
                f"Line Im z = {y} lies outside the strip "
                f"({self.domain.y_min}, {self.domain.y_max})",
                point=(float("nan"), y),
            )

    def __call__(self, z: PointLike) -> complex:
        point = as_point(z)
        if not self.domain.contains(point.y):
            raise DomainError(f"Point {point.z} lies outside the strip", point=(point.x, point.y))
        return complex(self.line_values(np.array([point.x]), point.y)[0])

    def sample(self, x: np.ndarray, y: float) -> np.ndarray:
        """
        Evaluate on a line in chunks, rejecting non-finite values.

        Args:
            x: Real parts in evaluation order
            y: Imaginary part

        Returns:
            Complex array of values
        """
        self.check_line(y)
        x = np.asarray(x, dtype=float)
        out = np.empty(x.shape, dtype=complex)
        for start in range(0, x.size, EVALUATION_CHUNK):
            out[start:start + EVALUATION_CHUNK] = self.line_values(x[start:start + EVALUATION_CHUNK], y)
        bad = np.flatnonzero(~np.isfinite(out))
        if bad.size:
            raise NonFiniteValueError((float(x[bad[0]]), y))
        return out

    def __add__(self, other: "EvaluableFunction") -> "EvaluableFunction":
        if isinstance(other, (int, float, complex)):
            other = Constant(other)
        return _Sum(self, other)

    def __sub__(self, other: "EvaluableFunction") -> "EvaluableFunction":
        if isinstance(other, (int, float, complex)):
            other = Constant(other)
        return _Sum(self, _Scaled(other, -1.0))

    def __mul__(self, factor: Scalar) -> "EvaluableFunction":
        if not isinstance(factor, (int, float, complex)):
            return NotImplemented
        return _Scaled(self, complex(factor))

    __rmul__ = __mul__

    def __neg__(self) -> "EvaluableFunction":
        return _Scaled(self, -1.0)

    def shifted(self, tau: float) -> "EvaluableFunction":
        """The function z -> f(z + tau)"""
        return _Shifted(self, float(tau))

    def modulated(self, lam: float) -> "EvaluableFunction":
        """The function z -> f(z) * exp(i*lam*x)"""
        return _Modulated(self, float(lam))


class Constant(EvaluableFunction):
    """The constant function c"""

    def __init__(self, value: Scalar):
        self.value = complex(value)

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        return np.full(np.shape(x), self.value, dtype=complex)

    def __repr__(self) -> str:
        return f"Constant({self.value!r})"


class Holomorphic(EvaluableFunction):
    """Wraps a vectorised callable of complex z, e.g. lambda z: np.exp(-z**2)"""

    def __init__(self, func: Callable[[np.ndarray], np.ndarray], name: str = "f",
                 domain: Strip = None):
        self.func = func
        self.name = name
        self._domain = domain or Strip.plane()

    @property
    def domain(self) -> Strip:
        return self._domain

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        z = np.asarray(x, dtype=float) + 1j * y
        return np.asarray(self.func(z), dtype=complex) * np.ones(np.shape(z))

    def __repr__(self) -> str:
        return f"Holomorphic({self.name})"


def exponential(lam: float) -> Holomorphic:
    """exp(i*lam*z)"""
    return Holomorphic(lambda z: np.exp(1j * lam * z), name=f"exp({lam}iz)")


def gaussian(rate: float = 1.0, center: float = 0.0) -> Holomorphic:
    """exp(-rate*(z - center)**2)"""
    return Holomorphic(lambda z: np.exp(-rate * (z - center) ** 2), name=f"gauss({rate},{center})")


class _Sum(EvaluableFunction):

    def __init__(self, left: EvaluableFunction, right: EvaluableFunction):
        self.left = left
        self.right = right

    @property
    def domain(self) -> Strip:
        return self.left.domain.intersection(self.right.domain)

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        return self.left.line_values(x, y) + self.right.line_values(x, y)


class _Scaled(EvaluableFunction):

    def __init__(self, inner: EvaluableFunction, factor: Scalar):
        self.inner = inner
        self.factor = factor

    @property
    def domain(self) -> Strip:
        return self.inner.domain

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        return self.factor * self.inner.line_values(x, y)


class _Shifted(EvaluableFunction):

    def __init__(self, inner: EvaluableFunction, tau: float):
        self.inner = inner
        self.tau = tau

    @property
    def domain(self) -> Strip:
        return self.inner.domain

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        return self.inner.line_values(np.asarray(x, dtype=float) + self.tau, y)

    def __call__(self, z: PointLike) -> complex:
        # Same floating point path as evaluating the inner function at z + tau
        return self.inner(as_point(z).shifted(self.tau))


class _Modulated(EvaluableFunction):

    def __init__(self, inner: EvaluableFunction, lam: float):
        self.inner = inner
        self.lam = lam

    @property
    def domain(self) -> Strip:
        return self.inner.domain

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.inner.line_values(x, y) * np.exp(1j * self.lam * x)

    def __call__(self, z: PointLike) -> complex:
        point = as_point(z)
        return self.inner(point) * cmath.exp(1j * self.lam * point.x)
