"""
Core module: strips, grids, quadrature and evaluable functions
"""

from .constants import (
    QuadratureRule, MetricTag, ProfileKind, SeparatorVariant, BoundVariant
)
from .exceptions import (
    ApstripError, InvalidParameterError, InvalidStripError, DomainError,
    EmptyGridError, QuadratureError, NonFiniteValueError, KernelSizeError,
    KernelConsistencyError, ProfileFitError, DiscrepancyNotFoundError, ConfigError
)
from .config import Settings, get_settings
from .strip import Strip, ComplexPoint, as_point
from .grid import GridSpec
from .quadrature import QuadratureSpec, TLadder, WindowLattice, CompensatedPrefix
from .function import EvaluableFunction, Constant, Holomorphic, exponential, gaussian
from .sampling import window_integral, grid_sup
from .parallel import ordered_map

__all__ = [
    'QuadratureRule', 'MetricTag', 'ProfileKind', 'SeparatorVariant', 'BoundVariant',
    'ApstripError', 'InvalidParameterError', 'InvalidStripError', 'DomainError',
    'EmptyGridError', 'QuadratureError', 'NonFiniteValueError', 'KernelSizeError',
    'KernelConsistencyError', 'ProfileFitError', 'DiscrepancyNotFoundError', 'ConfigError',
    'Settings', 'get_settings',
    'Strip', 'ComplexPoint', 'as_point',
    'GridSpec',
    'QuadratureSpec', 'TLadder', 'WindowLattice', 'CompensatedPrefix',
    'EvaluableFunction', 'Constant', 'Holomorphic', 'exponential', 'gaussian',
    'window_integral', 'grid_sup',
    'ordered_map',
]
