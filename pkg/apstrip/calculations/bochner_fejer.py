"""
Bochner-Fejer kernels over a rational frequency basis
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
import structlog
from numpy.polynomial import polynomial as P

from ..core.constants import (
    DEFAULT_MAX_DENOMINATOR,
    EVALUATION_CHUNK,
    FREQUENCY_MATCH_TOLERANCE,
    KERNEL_SYMMETRY_TOLERANCE,
    MAX_KERNEL_TUPLES,
    PROFILE_FIT_TOLERANCE,
    ProfileKind,
)
from ..core.exceptions import (
    InvalidParameterError,
    KernelConsistencyError,
    KernelSizeError,
    ProfileFitError,
)
from ..core.function import EvaluableFunction
from ..core.parallel import ordered_map
from ..core.quadrature import QuadratureSpec, TLadder, WindowLattice
from ..core.strip import Strip
from .exp_sums import (
    CoefficientProfile,
    ConstantProfile,
    ExponentialProfile,
    ExpSum,
    PolynomialProfile,
)

logger = structlog.get_logger(__name__)

# A ratio counts as rational when its best approximation is this close (relative)
_RATIONAL_MATCH = 1e-12


@dataclass(frozen=True)
class RationalBasis:
    """Positive reals with no small-denominator rational ratios between them"""

    betas: Tuple[float, ...]
    max_denominator: int = DEFAULT_MAX_DENOMINATOR

    def __post_init__(self):
        betas = tuple(float(b) for b in self.betas)
        object.__setattr__(self, "betas", betas)
        if not betas:
            raise InvalidParameterError("A basis needs at least one element")
        if any(not math.isfinite(b) or b <= 0 for b in betas):
            raise InvalidParameterError(f"Basis elements must be positive and finite, got {betas}")
        if self.max_denominator < 1:
            raise InvalidParameterError("max_denominator must be at least 1")
        for i in range(len(betas)):
            for j in range(i + 1, len(betas)):
                ratio = betas[i] / betas[j]
                approx = Fraction(ratio).limit_denominator(self.max_denominator)
                if abs(ratio - float(approx)) <= _RATIONAL_MATCH * ratio:
                    raise InvalidParameterError(
                        f"Basis elements {betas[i]} and {betas[j]} have rational ratio "
                        f"{approx.numerator}/{approx.denominator}"
                    )

    def __len__(self) -> int:
        return len(self.betas)


@dataclass(frozen=True, eq=False)
class BochnerFejerKernel:
    """
    Product Fejer kernel: tuple r with |r_j| <= N_j has weight
    prod_j (1 - |r_j| / (N_j + 1)) at frequency sum_j r_j * beta_j.

    Tuples, weights and frequencies are stored sorted by frequency.
    """

    basis: RationalBasis
    degrees: Tuple[int, ...]
    tuples: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    frequencies: np.ndarray = field(repr=False)

    CSV_COLUMNS = ("r", "lambda", "weight")

    @property
    def size(self) -> int:
        return int(self.weights.size)

    def weight(self, r: Sequence[int]) -> float:
        """Weight of an integer tuple (0 outside the support)"""
        return float(self.weight_fraction(r))

    def weight_fraction(self, r: Sequence[int]) -> Fraction:
        if len(r) != len(self.degrees):
            raise InvalidParameterError(f"Tuple {tuple(r)} does not match {len(self.degrees)} degrees")
        value = Fraction(1)
        for rj, n in zip(r, self.degrees):
            if abs(rj) > n:
                return Fraction(0)
            value *= Fraction(n + 1 - abs(rj), n + 1)
        return value

    def coefficient_at(self, lam: float) -> float:
        """Weight at frequency lam, matched with a relative tolerance; 0 if absent"""
        tolerance = FREQUENCY_MATCH_TOLERANCE * max(1.0, abs(lam))
        index = int(np.searchsorted(self.frequencies, lam - tolerance, side="left"))
        if index < self.size and abs(self.frequencies[index] - lam) <= tolerance:
            return float(self.weights[index])
        return 0.0

    def csv_rows(self) -> List[Tuple]:
        return [
            (" ".join(str(int(v)) for v in r), float(lam), float(w))
            for r, lam, w in zip(self.tuples, self.frequencies, self.weights)
        ]


def build_kernel(basis: RationalBasis, degrees: Sequence[int]) -> BochnerFejerKernel:
    """
    Build the product Fejer kernel of the given degrees over a basis.

    Args:
        basis: Rational basis, one element per degree
        degrees: Positive integers N_j

    Returns:
        BochnerFejerKernel
    """
    degrees = tuple(int(n) for n in degrees)
    if len(degrees) != len(basis):
        raise InvalidParameterError(
            f"Got {len(degrees)} degrees for a basis of {len(basis)} elements"
        )
    if any(n < 1 for n in degrees):
        raise InvalidParameterError(f"Degrees must be positive, got {degrees}")
    count = math.prod(2 * n + 1 for n in degrees)
    if count > MAX_KERNEL_TUPLES:
        raise KernelSizeError(
            f"Kernel would have {count} coefficient tuples (limit {MAX_KERNEL_TUPLES})", count
        )

    axes = [np.arange(-n, n + 1, dtype=np.int64) for n in degrees]
    grids = np.meshgrid(*axes, indexing="ij")
    tuples = np.stack([g.ravel() for g in grids], axis=1)

    # Exact integer numerators over one common denominator, rounded once
    numerators = np.ones(count, dtype=np.int64)
    for j, n in enumerate(degrees):
        numerators *= n + 1 - np.abs(tuples[:, j])
    denominator = math.prod(n + 1 for n in degrees)
    weights = numerators / denominator

    frequencies = np.zeros(count)
    for j, beta in enumerate(basis.betas):
        frequencies += tuples[:, j] * beta

    order = np.argsort(frequencies, kind="stable")
    logger.debug("bochner_fejer.build", degrees=degrees, tuples=count)
    return BochnerFejerKernel(
        basis=basis,
        degrees=degrees,
        tuples=tuples[order],
        weights=weights[order],
        frequencies=frequencies[order],
    )


def kernel_eval(k: BochnerFejerKernel, t):
    """
    Evaluate K(t) = sum_r k(r) exp(-i lambda(r) t).

    The sine part cancels by symmetry and is checked, then discarded.

    Args:
        k: Kernel
        t: Float or array of floats

    Returns:
        Real value(s) of the kernel
    """
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(ts.shape)
    step = max(1, EVALUATION_CHUNK // max(1, k.size))
    for start in range(0, ts.size, step):
        phase = np.outer(ts[start:start + step], k.frequencies)
        real = np.cos(phase) @ k.weights
        imag = -(np.sin(phase) @ k.weights)
        residue = float(np.max(np.abs(imag)))
        if residue > KERNEL_SYMMETRY_TOLERANCE:
            raise KernelConsistencyError(
                f"Kernel evaluation has imaginary residue {residue:.3e}", residue
            )
        out[start:start + step] = real
    return float(out[0]) if scalar else out


def fejer_factor(n: int, s):
    """F_N(s) = (1/(N+1)) * (sin((N+1)s/2) / sin(s/2))^2, equal to N+1 where sin(s/2) = 0"""
    s = np.asarray(s, dtype=float)
    half = np.sin(s / 2.0)
    safe = np.where(half == 0.0, 1.0, half)
    value = (np.sin((n + 1) * s / 2.0) / safe) ** 2 / (n + 1)
    return np.where(half == 0.0, float(n + 1), value)


def kernel_closed_form(k: BochnerFejerKernel, t):
    """Product form prod_j F_{N_j}(beta_j t) of the kernel"""
    scalar = np.ndim(t) == 0
    ts = np.asarray(t, dtype=float)
    value = np.ones(np.shape(ts))
    for n, beta in zip(k.degrees, k.basis.betas):
        value = value * fejer_factor(n, beta * ts)
    return float(value) if scalar else value


def convolve_exact(s: ExpSum, k: BochnerFejerKernel) -> ExpSum:
    """
    Convolution of an exponential sum with a kernel: each c_n becomes k(lambda_n) * c_n.

    Terms whose frequency is not a kernel frequency are dropped.
    """
    terms = []
    for lam, coeff in s.terms:
        weight = k.coefficient_at(lam)
        if weight != 0.0:
            terms.append((lam, coeff.scaled(weight)))
    return ExpSum(terms, s.strip)


def fit_profile(
    ys: np.ndarray,
    samples: np.ndarray,
    family: ProfileKind,
    lam: float,
    degree: int = 2,
) -> Tuple[CoefficientProfile, float]:
    """
    Least-squares fit of coefficient samples within one profile family.

    Args:
        ys: Sample lines
        samples: Complex coefficient estimates at ys
        family: Profile family
        lam: Frequency (sets the exponential rate -lam)
        degree: Polynomial degree cap

    Returns:
        Tuple of (profile, max absolute residual)
    """
    if family is ProfileKind.CONSTANT:
        profile = ConstantProfile(complex(np.mean(samples)))
    elif family is ProfileKind.POLYNOMIAL:
        deg = max(0, min(degree, ys.size - 1))
        real = P.polyfit(ys, samples.real, deg)
        imag = P.polyfit(ys, samples.imag, deg)
        profile = PolynomialProfile(tuple(complex(a, b) for a, b in zip(real, imag)))
    else:
        rate = -lam
        basis = np.exp(rate * ys)
        amplitude = complex(np.vdot(basis, samples) / np.vdot(basis, basis))
        profile = ExponentialProfile(amplitude, rate)
    residual = float(np.max(np.abs(profile(ys) - samples)))
    return profile, residual


def bf_approximate(
    f: EvaluableFunction,
    k: BochnerFejerKernel,
    y_samples: Sequence[float],
    ladder: TLadder = TLadder(),
    quad: QuadratureSpec = QuadratureSpec(),
    family: ProfileKind = ProfileKind.CONSTANT,
    degree: int = 2,
    tolerance: float = PROFILE_FIT_TOLERANCE,
) -> ExpSum:
    """
    Bochner-Fejer approximant sum_lambda k(lambda) * a_lambda(y) * exp(i*lambda*x).

    a_lambda(y) is the window mean of f(t + iy) * exp(-i*lambda*t) over the last
    rung, fitted across the y samples with the chosen profile family. The fit
    residual is measured against the largest coefficient sample.

    Args:
        f: Function to approximate
        k: Kernel
        y_samples: Lines Im z = y to sample
        ladder: Window ladder; only the last rung is used
        quad: Quadrature rule
        family: Profile family for the coefficients
        degree: Polynomial degree cap
        tolerance: Relative residual tolerance

    Returns:
        ExpSum approximant on the closed strip spanned by the samples
    """
    ys = np.asarray(sorted(float(y) for y in y_samples))
    if ys.size == 0:
        raise InvalidParameterError("bf_approximate needs at least one y sample")
    if not isinstance(family, ProfileKind):
        family = ProfileKind(family)
    T = ladder.last
    lattice = WindowLattice.build([0.0], [(-T, T)], quad)
    nodes = lattice.nodes
    lines = [f.sample(nodes, float(y)) for y in ys]

    def coefficient_samples(index: int) -> np.ndarray:
        phase = np.exp(-1j * k.frequencies[index] * nodes)
        out = np.empty(ys.size, dtype=complex)
        for row, (y, values) in enumerate(zip(ys, lines)):
            product = values * phase
            out[row] = complex(
                lattice.means(product.real, y)[0, 0], lattice.means(product.imag, y)[0, 0]
            )
        return out

    active = [i for i in range(k.size) if k.weights[i] != 0.0]
    samples = ordered_map(coefficient_samples, active)
    scale = max((float(np.max(np.abs(s))) for s in samples), default=0.0)

    terms = []
    for index, values in zip(active, samples):
        lam = float(k.frequencies[index])
        profile, residual = fit_profile(ys, values, family, lam, degree)
        if residual > tolerance * scale:
            raise ProfileFitError(
                f"Coefficient samples at frequency {lam} do not fit a {family.value} profile "
                f"(residual {residual:.3e}, scale {scale:.3e})",
                residual,
                lam,
            )
        terms.append((lam, profile.scaled(float(k.weights[index]))))

    logger.debug("bochner_fejer.approximate", terms=len(terms), T=T, family=family.value)
    return ExpSum(terms, Strip(float(ys[0]), float(ys[-1])))
