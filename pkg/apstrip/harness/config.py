"""
Experiment configs: parameter models and the key = value parser
"""
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Type

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError, field_validator, model_validator
from typing_extensions import Annotated

from ..core.constants import (
    DEFAULT_BUMP_WINDOW,
    DEFAULT_MAX_LEVEL,
    DEFAULT_NODE_SPACING,
    DEFAULT_SHIFT_STEP,
    DEFAULT_Y_DIVISIONS,
    LEMMA4_WINDOW,
    QuadratureRule,
)
from ..core.exceptions import ConfigError
from ..core.quadrature import QuadratureSpec, TLadder
from .results import OutputFormat


class ExperimentId(str, Enum):
    """Experiments the runner knows"""
    METRICS_ORDERING = "metrics-ordering"
    KERNEL_PROPERTIES = "kernel-properties"
    THEOREM1_APPROX = "theorem1-approx"
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    LEMMA3 = "lemma3"
    LEMMA4 = "lemma4"
    THEOREM2_RATE = "theorem2-rate"
    THEOREM3_SEPARATION = "theorem3-separation"
    THEOREM4_SEPARATION = "theorem4-separation"
    MEAN_VALUE = "mean-value"


def _split_list(value: Any) -> Any:
    # "1, 2, 4" -> ["1", "2", "4"]; a scalar becomes a one-element list
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    if isinstance(value, (list, tuple)):
        return value
    return [value]


FloatList = Annotated[Tuple[float, ...], BeforeValidator(_split_list)]
IntList = Annotated[Tuple[int, ...], BeforeValidator(_split_list)]


class ExperimentParams(BaseModel):
    """Base for experiment parameters; unknown keys are rejected"""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class QuadratureParams(ExperimentParams):
    h: float = Field(default=DEFAULT_NODE_SPACING, gt=0, description="Quadrature node spacing")
    rule: QuadratureRule = Field(default=QuadratureRule.SIMPSON, description="Composite rule")

    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(h=self.h, rule=self.rule)


class LadderParams(QuadratureParams):
    t0: float = Field(default=3.0, gt=0, description="First window half width")
    growth: float = Field(default=3.0, gt=1, description="Ladder growth factor")
    rungs: int = Field(default=6, ge=1, description="Number of rungs")

    def ladder(self) -> TLadder:
        return TLadder(self.t0, self.growth, self.rungs)


class MetricsOrderingParams(LadderParams):
    h: float = Field(default=1.0 / 64.0, gt=0, description="Node spacing (exact in binary)")
    rungs: int = Field(default=3, ge=1, description="Number of rungs")
    pairs: int = Field(default=20, ge=1, description="Random (exp sum, Gaussian) pairs")
    alpha: float = Field(default=-0.5, description="Substrip lower bound")
    beta: float = Field(default=0.5, description="Substrip upper bound")
    p: FloatList = Field(default=(1.0, 2.0, 4.0), description="Exponents, ascending")
    shift_start: float = Field(default=0.0, description="First x shift")
    shift_stop: float = Field(default=3.0, description="Last x shift")
    shift_step: float = Field(default=0.5, gt=0, description="x shift step")
    y_divisions: int = Field(default=DEFAULT_Y_DIVISIONS, ge=1, description="y samples minus one")
    bridge_lengths: FloatList = Field(default=(1.5, 10.5), description="Window lengths L of the Stepanov bridge")
    bridge_step: float = Field(default=0.25, gt=0, description="Stepanov start-point step for the bridge")
    gaussian_T: float = Field(default=1000.0, gt=0, description="Last rung of the Weyl-null Gaussian ladder")

    @model_validator(mode="after")
    def check_ranges(self):
        if self.alpha > self.beta:
            raise ValueError("alpha must not exceed beta")
        if not self.p or list(self.p) != sorted(self.p) or any(p < 1 for p in self.p):
            raise ValueError("p must be ascending values >= 1")
        if not self.bridge_lengths or any(L < 1 for L in self.bridge_lengths):
            raise ValueError("bridge_lengths must be values >= 1")
        return self


class KernelPropertiesParams(ExperimentParams):
    max_degree: int = Field(default=8, ge=1, le=64, description="Degrees N = 1..max_degree")
    second_basis: float = Field(default=math.sqrt(2.0), gt=0, description="Second element of the 2-D basis {1, b}")
    t_max: float = Field(default=100.0, gt=0, description="Kernel evaluated on [-t_max, t_max]")
    t_step: float = Field(default=0.01, gt=0, description="Evaluation step")


class Theorem1Params(LadderParams):
    t0: float = Field(default=1.0, gt=0, description="First window half width")
    rungs: int = Field(default=7, ge=1, description="Number of rungs (last = 3^6)")
    sums: int = Field(default=100, ge=1, description="Random exponential sums")
    degree: int = Field(default=4, ge=1, description="Fejer degree over the basis {1}")
    max_frequency: int = Field(default=6, ge=1, description="Integer frequencies drawn from [-max, max]")
    terms: int = Field(default=5, ge=1, description="Terms per random sum")
    y_samples: FloatList = Field(default=(0.0,), description="Lines used for coefficient estimates")
    separator_degrees: IntList = Field(default=(2, 4, 8), description="Degrees over the basis {2 pi / 9}")
    separator_t0: float = Field(default=81.0, gt=0, description="First rung for the separator approximation")
    separator_rungs: int = Field(default=2, ge=1, description="Rungs for the separator approximation")
    separator_shift_stop: float = Field(default=9.0, gt=0, description="Shift grid [0, stop] for its Weyl distance")
    separator_shift_step: float = Field(default=0.5, gt=0, description="Shift step")

    @model_validator(mode="after")
    def check_terms(self):
        if self.terms > 2 * self.max_frequency + 1:
            raise ValueError("terms cannot exceed the number of available frequencies")
        return self


class Lemma1Params(ExperimentParams):
    R: int = Field(default=100, ge=10, description="Integers scanned in [-R, R]")
    dense_step: float = Field(default=0.01, gt=0, description="Step of the dense real scan")
    W: float = Field(default=DEFAULT_BUMP_WINDOW, ge=6, description="Bump window")


class Lemma2Params(ExperimentParams):
    q_max: int = Field(default=50, ge=1, description="Shifts q in [-q_max, q_max] without 0")
    j_range: int = Field(default=200, ge=1, description="Progression indices j in [-j_range, j_range]")


class Lemma3Params(ExperimentParams):
    tau: FloatList = Field(
        default=(1.0, math.sqrt(2.0), math.pi, 2.5), description="Shifts with |tau| >= 1"
    )
    a: float = Field(default=0.0, description="Left end of the search window")
    W: float = Field(default=DEFAULT_BUMP_WINDOW, ge=6, description="Bump window")

    @field_validator("tau")
    @classmethod
    def check_tau(cls, value):
        if any(abs(t) < 1 for t in value):
            raise ValueError("every tau must satisfy |tau| >= 1")
        return value


class Lemma4Params(ExperimentParams):
    x_start: float = Field(default=0.0, description="First point")
    x_stop: float = Field(default=3.0, description="Last point")
    x_step: float = Field(default=1e-3, gt=0, description="Step")
    p: FloatList = Field(default=(1.0, 1.5, 2.0, 3.0), description="Exponents >= 1")
    window: int = Field(default=LEMMA4_WINDOW, ge=1, description="Terms kept around round(x/3)")

    @field_validator("p")
    @classmethod
    def check_p(cls, value):
        if any(p < 1 for p in value):
            raise ValueError("p must be at least 1")
        return value


class Theorem2Params(LadderParams):
    m: IntList = Field(default=(1, 2, 3, 4), description="Partial sum levels")
    H: FloatList = Field(default=(0.0, 0.5), description="Half heights of the strips |y| <= H")
    shift_step: float = Field(default=DEFAULT_SHIFT_STEP, gt=0, description="x shift step over [0, 3^m]")
    y_divisions: int = Field(default=DEFAULT_Y_DIVISIONS, ge=1, description="y samples minus one")
    W: float = Field(default=DEFAULT_BUMP_WINDOW, ge=6, description="Bump window")

    @field_validator("m")
    @classmethod
    def check_m(cls, value):
        if any(not 1 <= m <= DEFAULT_MAX_LEVEL for m in value):
            raise ValueError(f"m must lie in [1, {DEFAULT_MAX_LEVEL}]")
        return value

    @field_validator("H")
    @classmethod
    def check_h(cls, value):
        if any(h < 0 for h in value):
            raise ValueError("H must be nonnegative")
        return value


class SeparationParams(LadderParams):
    levels: IntList = Field(default=(2, 3, 4, 5, 6), description="Levels l of the window centers")
    n: IntList = Field(default=(0, 1, 2, 3), description="Center indices n, x_n = 3^l n + 3^(l-1)")
    T0: float = Field(default=0.5, gt=0, description="Window half width at the centers")
    l_max: int = Field(default=DEFAULT_MAX_LEVEL, ge=1, description="Level truncation")
    W: float = Field(default=DEFAULT_BUMP_WINDOW, ge=6, description="Bump window")

    @model_validator(mode="after")
    def check_levels(self):
        if any(not 1 <= l <= self.l_max for l in self.levels):
            raise ValueError("levels must lie in [1, l_max]")
        if list(self.levels) != sorted(set(self.levels)):
            raise ValueError("levels must be strictly ascending")
        return self


class Theorem3Params(SeparationParams):
    p: float = Field(default=2.0, ge=1, description="Exponent")
    tail_m: int = Field(default=6, ge=1, description="Partial sum level for the tail bound")
    cap_factor: float = Field(default=10.0, gt=0, description="Besicovitch cap as a multiple of the tail bound")
    ratio_level: int = Field(default=5, ge=1, description="Levels from which the ratio check applies")
    ratio_threshold: float = Field(default=10.0, gt=0, description="Window / Besicovitch ratio floor")

    @model_validator(mode="after")
    def check_tail(self):
        if self.tail_m > self.l_max:
            raise ValueError("tail_m must not exceed l_max")
        return self


class Theorem4Params(SeparationParams):
    p: float = Field(default=1.0, ge=1, description="Exponent of the wider space")
    p_prime: float = Field(default=2.0, alias="p'", description="Exponent of the narrower space")
    p0: float = Field(default=1.5, description="Weight exponent, p < p0 < p'")
    n: IntList = Field(default=(0, 1), description="Center indices n")
    slope_tolerance: float = Field(default=0.1, gt=0, description="Relative tolerance of slopes and ratios")

    @field_validator("p_prime")
    @classmethod
    def check_p_prime(cls, value, info):
        p = info.data.get("p")
        if p is not None and not value > p:
            raise ValueError("p' must exceed p")
        return value

    @model_validator(mode="after")
    def check_exponents(self):
        # Defaults are not run through the field validators
        if not self.p_prime > self.p:
            raise ValueError("p' must exceed p")
        if not self.p < self.p0 < self.p_prime:
            raise ValueError("p0 must lie strictly between p and p'")
        return self


class MeanValueParams(LadderParams):
    rungs: int = Field(default=8, ge=1, description="Number of rungs (last = 3^8)")
    y: float = Field(default=0.0, description="Line Im z = y")
    tolerance: float = Field(default=2e-3, gt=0, description="Allowed distance of the surrogate from sqrt(pi)/4")
    shift_tolerance: float = Field(default=5e-3, gt=0, description="Allowed last-rung shift deviation")
    shift_start: float = Field(default=0.0, description="First x shift")
    shift_stop: float = Field(default=3.0, description="Last x shift")
    shift_step: float = Field(default=0.5, gt=0, description="x shift step")
    sums: int = Field(default=20, ge=0, description="Random exponential sums checked against the leakage rate")
    sum_rungs: int = Field(default=6, ge=1, description="Rungs used for the exponential sums")
    W: float = Field(default=DEFAULT_BUMP_WINDOW, ge=6, description="Bump window")


PARAMS: Dict[ExperimentId, Type[ExperimentParams]] = {
    ExperimentId.METRICS_ORDERING: MetricsOrderingParams,
    ExperimentId.KERNEL_PROPERTIES: KernelPropertiesParams,
    ExperimentId.THEOREM1_APPROX: Theorem1Params,
    ExperimentId.LEMMA1: Lemma1Params,
    ExperimentId.LEMMA2: Lemma2Params,
    ExperimentId.LEMMA3: Lemma3Params,
    ExperimentId.LEMMA4: Lemma4Params,
    ExperimentId.THEOREM2_RATE: Theorem2Params,
    ExperimentId.THEOREM3_SEPARATION: Theorem3Params,
    ExperimentId.THEOREM4_SEPARATION: Theorem4Params,
    ExperimentId.MEAN_VALUE: MeanValueParams,
}

RESERVED_KEYS = ("experiment", "output", "format")


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment id with its parameters and output options"""

    experiment: ExperimentId
    params: ExperimentParams
    output: Optional[Path] = None
    format: OutputFormat = OutputFormat.BOTH

    def echo(self) -> Dict[str, Any]:
        """Config as written back into result metadata"""
        return {
            "experiment": self.experiment.value,
            "params": self.params.model_dump(mode="json", by_alias=True),
        }


def parse_pairs(text: str) -> Dict[str, str]:
    """
    Parse "key = value" lines; blank lines and # comments are ignored.

    Args:
        text: Config document

    Returns:
        Mapping of keys to raw string values
    """
    pairs: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"Line {number}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"Line {number}: missing key")
        if key in pairs:
            raise ConfigError(f"Duplicate key '{key}' on line {number}", key=key)
        pairs[key] = value
    return pairs


def build_config(pairs: Dict[str, Any]) -> ExperimentConfig:
    """Validate a key/value mapping into an ExperimentConfig"""
    pairs = dict(pairs)
    if "experiment" not in pairs:
        raise ConfigError("Missing required key 'experiment'", key="experiment")
    name = str(pairs.pop("experiment")).strip()
    try:
        experiment = ExperimentId(name)
    except ValueError:
        known = ", ".join(e.value for e in ExperimentId)
        raise ConfigError(f"Unknown experiment '{name}' (known: {known})", key="experiment") from None

    output = pairs.pop("output", None)
    fmt = pairs.pop("format", OutputFormat.BOTH.value)
    try:
        fmt = OutputFormat(str(fmt).strip())
    except ValueError:
        raise ConfigError(f"Unknown format '{fmt}' (csv, json or both)", key="format") from None

    model = PARAMS[experiment]
    try:
        params = model.model_validate(pairs)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else None
        if error["type"] == "extra_forbidden":
            raise ConfigError(f"Unknown key '{key}' for experiment {experiment.value}", key=key) from None
        if key is None:
            raise ConfigError(f"Invalid parameters for {experiment.value}: {error['msg']}") from None
        raise ConfigError(f"Invalid value for '{key}': {error['msg']}", key=key) from None
    return ExperimentConfig(
        experiment=experiment,
        params=params,
        output=Path(output) if output else None,
        format=fmt,
    )


def parse_config(text: str) -> ExperimentConfig:
    """
    Parse and validate a key = value experiment config.

    Args:
        text: UTF-8 config document

    Returns:
        ExperimentConfig with defaults filled
    """
    return build_config(parse_pairs(text))
