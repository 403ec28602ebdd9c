"""
Constants and enumerations for almost-periodic strip analysis
"""
import math
from enum import Enum


class QuadratureRule(Enum):
    """Composite rules used for window integrals"""
    MIDPOINT = "midpoint"
    TRAPEZOID = "trapezoid"
    SIMPSON = "simpson"


class MetricTag(Enum):
    """Distances between functions on a strip"""
    UNIFORM = "uniform"
    STEPANOV = "stepanov"
    WEYL = "weyl"
    BESICOVITCH = "besicovitch"


class ProfileKind(Enum):
    """Closed-form families for y-dependent coefficients"""
    CONSTANT = "constant"
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


class SeparatorVariant(Enum):
    """Lacunary Gaussian-bump functions separating the metric spaces"""
    T2 = "T2"  # sum over the ternary set I
    T3 = "T3"  # level l weighted by l
    T4 = "T4"  # level l weighted by 3^(l/p0)


class BoundVariant(Enum):
    """Closed-form bounds attached to the separators"""
    T2 = "T2"
    T3_TAIL = "T3tail"
    T3_WINDOW = "T3window"
    T4_WINDOW = "T4window"
    T4_TAIL = "T4tail"


# Quadrature and ladders
DEFAULT_NODE_SPACING = 0.02
DEFAULT_LADDER_START = 3.0
DEFAULT_LADDER_GROWTH = 3.0
DEFAULT_LADDER_RUNGS = 6
DEFAULT_SHIFT_STEP = 0.1
DEFAULT_Y_DIVISIONS = 8
EVALUATION_CHUNK = 65536
PREFIX_BLOCK = 1024

# Gaussian bumps e^{-4(z-n)^2}
BUMP_RATE = 4.0
SQRT_PI = math.sqrt(math.pi)
BUMP_MASS = SQRT_PI / 2
NONMEMBER_CEILING = SQRT_PI / 2
MEMBER_GAP = 1.0 - SQRT_PI / 2
DEFAULT_BUMP_WINDOW = 8.0
MIN_BUMP_WINDOW = 6.0
DEFAULT_MAX_LEVEL = 12
LIPSCHITZ_GRID_STEP = 1e-5
LEMMA4_WINDOW = 4

# Kernels and fitting
DEFAULT_MAX_DENOMINATOR = 64
MAX_KERNEL_TUPLES = 10 ** 7
KERNEL_SYMMETRY_TOLERANCE = 1e-8
FREQUENCY_MATCH_TOLERANCE = 1e-9
PROFILE_FIT_TOLERANCE = 1e-6
