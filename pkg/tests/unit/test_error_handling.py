import pytest

from apstrip.core.exceptions import (
    ApstripError,
    ConfigError,
    DiscrepancyNotFoundError,
    DomainError,
    EmptyGridError,
    InvalidParameterError,
    InvalidStripError,
    KernelConsistencyError,
    KernelSizeError,
    NonFiniteValueError,
    ProfileFitError,
    QuadratureError,
)


class TestExceptionHierarchy:
    @pytest.mark.parametrize("error", [
        InvalidParameterError("x"),
        InvalidStripError("x"),
        DomainError("x"),
        EmptyGridError("x"),
        QuadratureError("x"),
        NonFiniteValueError((0.0, 0.0)),
        KernelSizeError("x", 1),
        KernelConsistencyError("x", 1.0),
        ProfileFitError("x", 1.0, 2.0),
        DiscrepancyNotFoundError("x", 1.0, (0.0, 1.0)),
        ConfigError("x"),
    ])
    def test_all_derive_from_base(self, error):
        assert isinstance(error, ApstripError)

    @pytest.mark.parametrize("cls", [InvalidParameterError, InvalidStripError, EmptyGridError, ConfigError])
    def test_argument_errors_are_value_errors(self, cls):
        with pytest.raises(ValueError):
            raise cls("bad")

    def test_non_finite_carries_node(self):
        error = NonFiniteValueError((1.5, -0.25))
        assert error.node == (1.5, -0.25)
        assert "x=1.5" in str(error)
        assert isinstance(error, ArithmeticError)

    def test_context_attributes(self):
        assert DomainError("x", point=(1.0, 2.0)).point == (1.0, 2.0)
        assert KernelSizeError("x", 99).tuple_count == 99
        assert KernelConsistencyError("x", 1e-6).residue == 1e-6
        fit = ProfileFitError("x", 0.5, 2.0)
        assert (fit.residual, fit.frequency) == (0.5, 2.0)
        missing = DiscrepancyNotFoundError("x", 1.5, (0.0, 9.0))
        assert (missing.tau, missing.window) == (1.5, (0.0, 9.0))
        assert ConfigError("x", key="h").key == "h"
        assert ConfigError("x").key is None
