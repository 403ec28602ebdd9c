"""
apstrip - finite-window experiments on almost periodic functions in a strip
"""

__version__ = "0.1.0"

from .core import (
    Strip, GridSpec, QuadratureSpec, TLadder, EvaluableFunction, Constant, Holomorphic,
    ApstripError
)
from .calculations import (
    ExpSum, uniform_distance, stepanov_distance, weyl_distance, besicovitch_distance,
    mean_value, build_kernel, bf_approximate, convolve_exact, SeparatorSpec, theorem_bounds
)

__all__ = [
    '__version__',
    'Strip', 'GridSpec', 'QuadratureSpec', 'TLadder', 'EvaluableFunction', 'Constant',
    'Holomorphic', 'ApstripError',
    'ExpSum', 'uniform_distance', 'stepanov_distance', 'weyl_distance', 'besicovitch_distance',
    'mean_value', 'build_kernel', 'bf_approximate', 'convolve_exact', 'SeparatorSpec',
    'theorem_bounds',
]
