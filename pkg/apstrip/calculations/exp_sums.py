"""
Finite exponential sums with y-dependent coefficient profiles
"""
import cmath
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from ..core.constants import ProfileKind
from ..core.exceptions import InvalidParameterError
from ..core.function import EvaluableFunction
from ..core.strip import PointLike, Strip

ProfileInput = Union["CoefficientProfile", int, float, complex]


class CoefficientProfile(ABC):
    """A map y -> complex from one of the closed-form families"""

    kind: ProfileKind

    @abstractmethod
    def __call__(self, y):
        """Evaluate at a float or an array of y values"""
        pass

    @abstractmethod
    def scaled(self, factor: complex) -> "CoefficientProfile":
        """The profile multiplied by a constant, in the same family"""
        pass

    @abstractmethod
    def parameters(self) -> Dict[str, Union[complex, List[complex]]]:
        pass

    @property
    @abstractmethod
    def is_zero(self) -> bool:
        pass

    def __add__(self, other: "CoefficientProfile") -> "CoefficientProfile":
        other = as_profile(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        return _combine(self, other)

    def __neg__(self) -> "CoefficientProfile":
        return self.scaled(-1.0)

    def __sub__(self, other: "CoefficientProfile") -> "CoefficientProfile":
        return self + as_profile(other).scaled(-1.0)


@dataclass(frozen=True)
class ConstantProfile(CoefficientProfile):
    """c(y) = value"""

    value: complex = 0j
    kind = ProfileKind.CONSTANT

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    def __call__(self, y):
        if np.ndim(y):
            return np.full(np.shape(y), self.value, dtype=complex)
        return self.value

    def scaled(self, factor: complex) -> "ConstantProfile":
        return ConstantProfile(self.value * factor)

    def parameters(self):
        return {"value": self.value}

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class PolynomialProfile(CoefficientProfile):
    """c(y) = sum_k coefficients[k] * y**k (ascending powers)"""

    coefficients: Tuple[complex, ...] = (0j,)
    kind = ProfileKind.POLYNOMIAL

    def __post_init__(self):
        coefficients = [complex(c) for c in self.coefficients] or [0j]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, y):
        value = P.polyval(y, np.asarray(self.coefficients, dtype=complex))
        return value if np.ndim(y) else complex(value)

    def scaled(self, factor: complex) -> "PolynomialProfile":
        return PolynomialProfile(tuple(c * factor for c in self.coefficients))

    def parameters(self):
        return {"coefficients": list(self.coefficients)}

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


@dataclass(frozen=True)
class ExponentialProfile(CoefficientProfile):
    """c(y) = amplitude * exp(rate * y), rate complex"""

    amplitude: complex = 0j
    rate: complex = 0j
    kind = ProfileKind.EXPONENTIAL

    def __post_init__(self):
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        object.__setattr__(self, "rate", complex(self.rate))

    def __call__(self, y):
        if np.ndim(y):
            return self.amplitude * np.exp(self.rate * np.asarray(y, dtype=float))
        return self.amplitude * cmath.exp(self.rate * y)

    def scaled(self, factor: complex) -> "ExponentialProfile":
        return ExponentialProfile(self.amplitude * factor, self.rate)

    def parameters(self):
        return {"amplitude": self.amplitude, "rate": self.rate}

    @property
    def is_zero(self) -> bool:
        return self.amplitude == 0


ZERO_PROFILE = ConstantProfile(0j)


def as_profile(value: ProfileInput) -> CoefficientProfile:
    """Promote a number to a constant profile"""
    if isinstance(value, CoefficientProfile):
        return value
    return ConstantProfile(complex(value))


def _polynomial_coefficients(profile: CoefficientProfile) -> Optional[Tuple[complex, ...]]:
    if isinstance(profile, ConstantProfile):
        return (profile.value,)
    if isinstance(profile, PolynomialProfile):
        return profile.coefficients
    return None


def _combine(left: CoefficientProfile, right: CoefficientProfile) -> CoefficientProfile:
    if isinstance(left, ConstantProfile) and isinstance(right, ConstantProfile):
        return ConstantProfile(left.value + right.value)
    a, b = _polynomial_coefficients(left), _polynomial_coefficients(right)
    if a is not None and b is not None:
        size = max(len(a), len(b))
        a = a + (0j,) * (size - len(a))
        b = b + (0j,) * (size - len(b))
        return PolynomialProfile(tuple(x + y for x, y in zip(a, b)))
    if (
        isinstance(left, ExponentialProfile)
        and isinstance(right, ExponentialProfile)
        and left.rate == right.rate
    ):
        return ExponentialProfile(left.amplitude + right.amplitude, left.rate)
    raise InvalidParameterError(
        f"Cannot add profiles of kinds {left.kind.value} and {right.kind.value} "
        "without leaving the closed-form families"
    )


class ExpSum(EvaluableFunction):
    """
    Finite sum of c_n(y) * exp(i * lambda_n * x) on a strip.

    Terms are stored sorted by frequency; frequencies are pairwise distinct
    (compared exactly as floats).
    """

    def __init__(
        self,
        terms: Iterable[Tuple[float, ProfileInput]] = (),
        strip: Strip = None,
    ):
        normalized = []
        for lam, coeff in terms:
            lam = float(lam)
            if not np.isfinite(lam):
                raise InvalidParameterError(f"Frequency must be finite, got {lam}")
            normalized.append((lam, as_profile(coeff)))
        normalized.sort(key=lambda term: term[0])
        for (a, _), (b, _) in zip(normalized, normalized[1:]):
            if a == b:
                raise InvalidParameterError(f"Duplicate frequency {a}")
        self.terms: Tuple[Tuple[float, CoefficientProfile], ...] = tuple(normalized)
        self.strip = strip or Strip.plane()

    @property
    def domain(self) -> Strip:
        return self.strip

    @property
    def frequencies(self) -> Tuple[float, ...]:
        return tuple(lam for lam, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpSum):
            return NotImplemented
        return self.terms == other.terms and self.strip == other.strip

    def __hash__(self):
        return hash((self.terms, self.strip))

    def __repr__(self) -> str:
        body = ", ".join(f"({lam!r}, {coeff!r})" for lam, coeff in self.terms)
        return f"ExpSum([{body}])"

    def line_values(self, x: np.ndarray, y: float) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        total = np.zeros(x.shape, dtype=complex)
        for lam, coeff in self.terms:
            total += coeff(y) * np.exp(1j * lam * x)
        return total

    def coefficient(self, lam: float) -> CoefficientProfile:
        """Profile at an exact frequency, or the zero profile"""
        for frequency, coeff in self.terms:
            if frequency == lam:
                return coeff
        return ZERO_PROFILE

    def map_coefficients(self, func) -> "ExpSum":
        """New sum with each (lambda, c) replaced by (lambda, func(lambda, c))"""
        return ExpSum(((lam, func(lam, coeff)) for lam, coeff in self.terms), self.strip)

    def _merge(self, other: "ExpSum", sign: float) -> "ExpSum":
        merged: Dict[float, CoefficientProfile] = {lam: coeff for lam, coeff in self.terms}
        for lam, coeff in other.terms:
            coeff = coeff.scaled(sign) if sign != 1.0 else coeff
            merged[lam] = merged[lam] + coeff if lam in merged else coeff
        return ExpSum(merged.items(), self.strip.intersection(other.strip))

    def __add__(self, other):
        if isinstance(other, ExpSum):
            return self._merge(other, 1.0)
        if isinstance(other, (int, float, complex)):
            return self._merge(ExpSum([(0.0, other)]), 1.0)
        return super().__add__(other)

    def __sub__(self, other):
        if isinstance(other, ExpSum):
            return self._merge(other, -1.0)
        if isinstance(other, (int, float, complex)):
            return self._merge(ExpSum([(0.0, other)]), -1.0)
        return super().__sub__(other)

    def __mul__(self, factor):
        if not isinstance(factor, (int, float, complex)):
            return NotImplemented
        return self.map_coefficients(lambda lam, coeff: coeff.scaled(complex(factor)))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def to_json(self) -> str:
        return dumps_sum(self)

    @classmethod
    def from_json(cls, text: str, strip: Strip = None) -> "ExpSum":
        return loads_sum(text, strip)


def eval_sum(s: ExpSum, z: PointLike) -> complex:
    """Value of the sum at z; raises DomainError outside its strip"""
    return s(z)


def fourier_coefficient(s: ExpSum, lam: float) -> CoefficientProfile:
    """
    Coefficient of exp(i*lam*x), i.e. the mean of s(x + t) * exp(-i*lam*t).

    Distinct frequencies are orthogonal, so this is the profile of the matching
    term or the zero profile.
    """
    return s.coefficient(float(lam))


def mean_coefficient(s: ExpSum) -> CoefficientProfile:
    """Coefficient at frequency 0 (the mean value profile)"""
    return fourier_coefficient(s, 0.0)


def shift_sum(s: ExpSum, tau: float) -> ExpSum:
    """
    The sum z -> s(z + tau): each c_n becomes exp(i*lambda_n*tau) * c_n.

    Args:
        s: Exponential sum
        tau: Finite horizontal shift

    Returns:
        Shifted sum with the same frequencies
    """
    tau = float(tau)
    if not np.isfinite(tau):
        raise InvalidParameterError(f"Shift must be finite, got {tau}")
    return s.map_coefficients(
        lambda lam, coeff: coeff if lam == 0.0 else coeff.scaled(cmath.exp(1j * lam * tau))
    )


# JSON document: [{"lambda": ..., "coeff": {"kind": ..., "parameters": {...}}}, ...]

class ComplexValue(BaseModel):
    """A complex number as {"re", "im"}"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    re: float
    im: float = 0.0

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        value = complex(value)
        return cls(re=value.real, im=value.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class CoefficientModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: ProfileKind
    parameters: Dict[str, Union[ComplexValue, List[ComplexValue]]]


class TermModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    lambda_: float = Field(alias="lambda")
    coeff: CoefficientModel


_TERMS = TypeAdapter(List[TermModel])


def profile_to_model(profile: CoefficientProfile) -> CoefficientModel:
    parameters = {}
    for name, value in profile.parameters().items():
        if isinstance(value, list):
            parameters[name] = [ComplexValue.of(v) for v in value]
        else:
            parameters[name] = ComplexValue.of(value)
    return CoefficientModel(kind=profile.kind, parameters=parameters)


def profile_from_model(model: CoefficientModel) -> CoefficientProfile:
    params = model.parameters
    try:
        if model.kind is ProfileKind.CONSTANT:
            return ConstantProfile(params["value"].to_complex())
        if model.kind is ProfileKind.POLYNOMIAL:
            return PolynomialProfile(tuple(v.to_complex() for v in params["coefficients"]))
        return ExponentialProfile(params["amplitude"].to_complex(), params["rate"].to_complex())
    except (KeyError, AttributeError, TypeError) as e:
        raise InvalidParameterError(
            f"Malformed parameters for a {model.kind.value} profile: {e}"
        ) from e


def dumps_sum(s: ExpSum) -> str:
    """Serialize the terms of an ExpSum as a JSON array"""
    models = [TermModel(lambda_=lam, coeff=profile_to_model(coeff)) for lam, coeff in s.terms]
    return json.dumps(_TERMS.dump_python(models, mode="json", by_alias=True))


def loads_sum(text: str, strip: Strip = None) -> ExpSum:
    """Parse a JSON array written by dumps_sum"""
    models = _TERMS.validate_python(json.loads(text))
    return ExpSum(((m.lambda_, profile_from_model(m.coeff)) for m in models), strip)


def random_sum(
    rng: np.random.Generator,
    frequencies: Sequence[float],
    scale: float = 1.0,
    strip: Strip = None,
) -> ExpSum:
    """Sum with constant complex coefficients drawn uniformly from the box [-scale, scale]^2"""
    parts = rng.uniform(-scale, scale, size=(len(frequencies), 2))
    return ExpSum(
        ((lam, complex(re, im)) for lam, (re, im) in zip(frequencies, parts)),
        strip,
    )
