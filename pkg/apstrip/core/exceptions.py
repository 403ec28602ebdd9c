"""
Exceptions raised by apstrip
"""
from typing import Optional, Tuple


class ApstripError(Exception):
    """Base exception for apstrip errors"""
    pass


class InvalidParameterError(ApstripError, ValueError):
    """Raised when a numeric argument is outside its allowed range"""
    pass


class InvalidStripError(ApstripError, ValueError):
    """Raised when a strip or substrip is malformed or unsuitable"""
    pass


class DomainError(ApstripError, ValueError):
    """Raised when a point lies outside the strip a function is defined on"""

    def __init__(self, message: str, point: Optional[Tuple[float, float]] = None):
        super().__init__(message)
        self.point = point


class EmptyGridError(ApstripError, ValueError):
    """Raised when a sample grid has no nodes"""
    pass


class QuadratureError(ApstripError):
    """Raised when a window cannot be represented on the quadrature lattice"""
    pass


class NonFiniteValueError(ApstripError, ArithmeticError):
    """Raised when a function returns inf or nan at a quadrature or grid node"""

    def __init__(self, node: Tuple[float, float]):
        x, y = node
        super().__init__(f"Non-finite value at node x={x!r}, y={y!r}")
        self.node = node


class KernelSizeError(ApstripError, ValueError):
    """Raised when a kernel would have too many coefficient tuples"""

    def __init__(self, message: str, tuple_count: int):
        super().__init__(message)
        self.tuple_count = tuple_count


class KernelConsistencyError(ApstripError):
    """Raised when a kernel evaluation loses its symmetry"""

    def __init__(self, message: str, residue: float):
        super().__init__(message)
        self.residue = residue


class ProfileFitError(ApstripError):
    """Raised when coefficient samples do not fit the selected profile family"""

    def __init__(self, message: str, residual: float, frequency: float):
        super().__init__(message)
        self.residual = residual
        self.frequency = frequency


class DiscrepancyNotFoundError(ApstripError):
    """Raised when no point with a large shift discrepancy is found in the window"""

    def __init__(self, message: str, tau: float, window: Tuple[float, float]):
        super().__init__(message)
        self.tau = tau
        self.window = window


class ConfigError(ApstripError, ValueError):
    """Raised when an experiment config is invalid"""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key
