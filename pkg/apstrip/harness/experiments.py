"""
Experiment registry and the eleven reproducible experiments
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
import structlog

from ..calculations.bochner_fejer import (
    RationalBasis,
    bf_approximate,
    build_kernel,
    convolve_exact,
    kernel_closed_form,
    kernel_eval,
)
from ..calculations.exp_sums import random_sum
from ..calculations.lemmas import discrepancy_search, lemma1_bounds, lemma4_scan
from ..calculations.metrics import (
    SupShiftGrid,
    besicovitch_distance,
    interior_sup_bound,
    mean_leakage_bound,
    mean_value,
    stepanov_distance,
    uniform_distance,
    weyl_distance,
    windowed_l1_bound,
)
from ..calculations.separators import (
    SeparatorSpec,
    holder_factor,
    partial_sum_f_m,
    separator_function,
    theorem_bounds,
    windowed_norm_at_centers,
)
from ..calculations.ternary import progression_for_shift, ternary_level
from ..core.constants import MEMBER_GAP, NONMEMBER_CEILING, SQRT_PI, BoundVariant, SeparatorVariant
from ..core.function import Constant, exponential, gaussian
from ..core.grid import GridSpec
from ..core.quadrature import TLadder
from ..core.sampling import window_integral
from ..core.strip import Strip
from .config import (
    PARAMS,
    ExperimentId,
    ExperimentParams,
    KernelPropertiesParams,
    Lemma1Params,
    Lemma2Params,
    Lemma3Params,
    Lemma4Params,
    MeanValueParams,
    MetricsOrderingParams,
    Theorem1Params,
    Theorem2Params,
    Theorem3Params,
    Theorem4Params,
)
from .results import CheckList, ResultTable

logger = structlog.get_logger(__name__)

# Slack for inequalities between quantities computed on shared quadrature nodes
ORDER_SLACK = 1e-9


@dataclass(frozen=True)
class Experiment:
    """Registered experiment: parameter model, implementation and a one-line summary"""

    id: ExperimentId
    params: type
    run: Callable[[ExperimentParams], ResultTable]
    description: str


EXPERIMENTS: Dict[ExperimentId, Experiment] = {}


def register(experiment_id: ExperimentId, description: str):
    """Decorator adding an experiment function to the registry"""

    def decorator(func: Callable[[ExperimentParams], ResultTable]):
        EXPERIMENTS[experiment_id] = Experiment(
            id=experiment_id,
            params=PARAMS[experiment_id],
            run=func,
            description=description,
        )
        return func

    return decorator


def _table(experiment_id: ExperimentId, columns: Sequence[str], rows: List[Sequence],
           checks: CheckList) -> ResultTable:
    return ResultTable(
        experiment=experiment_id.value,
        columns=list(columns),
        rows=[list(row) for row in rows],
        checks=checks.checks,
    )


def _descending(values: Sequence[float]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


@register(
    ExperimentId.METRICS_ORDERING,
    "Besicovitch <= Weyl <= uniform, p-monotonicity, the Stepanov bridge, the Weyl-null Gaussian "
    "and the interior sup bound",
)
def metrics_ordering(params: MetricsOrderingParams) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    substrip = Strip(params.alpha, params.beta)
    shifts = SupShiftGrid(
        GridSpec(params.shift_start, params.shift_stop, params.shift_step),
        GridSpec.over(params.alpha, params.beta, params.y_divisions),
    )
    covering = SupShiftGrid.covering(shifts, ladder, quad)
    reach = max(params.bridge_lengths) / 2.0
    starts = SupShiftGrid(
        GridSpec(shifts.x.start - reach, shifts.x.stop + reach, params.bridge_step), shifts.y
    )

    rows: List[Tuple] = []
    order_gaps: List[float] = []
    uniform_gaps: List[float] = []
    monotone_gaps: List[float] = []
    bridge_gaps: List[float] = []
    for pair in range(params.pairs):
        rng = np.random.default_rng(pair)
        f = random_sum(rng, rng.uniform(-3.0, 3.0, size=4))
        g = gaussian(rate=float(rng.uniform(0.5, 2.0)), center=float(rng.uniform(-1.0, 1.0)))
        source = f"pair-{pair}"

        uniform = uniform_distance(f, g, substrip, covering)
        rows.append((source, "uniform", 0.0, uniform))
        previous = None
        for p in params.p:
            weyl = weyl_distance(f, g, p, substrip, shifts, ladder, quad)
            besicovitch = besicovitch_distance(f, g, p, substrip, ladder, quad, shifts.y)
            for (T, w), (_, b) in zip(weyl.rungs, besicovitch.rungs):
                rows.append((source, weyl.kind.label, 2.0 * T, w))
                rows.append((source, besicovitch.kind.label, 2.0 * T, b))
                order_gaps.append(b - w)
                uniform_gaps.append(w - uniform)
            if previous is not None:
                monotone_gaps.extend(np.subtract(previous[0], weyl.values))
                monotone_gaps.extend(np.subtract(previous[1], besicovitch.values))
            previous = (weyl.values, besicovitch.values)

            stepanov = stepanov_distance(f, g, p, substrip, starts, quad)
            rows.append((source, f"stepanov-{p:g}", 1.0, stepanov))
            for L in params.bridge_lengths:
                long = weyl_distance(f, g, p, substrip, shifts, TLadder(L / 2.0, 3.0, 1), quad)
                factor = (math.floor(L) + 1) / L
                bridge_gaps.append(long.values[0] ** p - factor * stepanov ** p)
                rows.append((source, f"weyl-{p:g}", L, long.values[0]))
        logger.debug("experiment.metrics_pair", pair=pair, uniform=uniform)

    checks = CheckList()
    checks.bound("besicovitch<=weyl", order_gaps, 0.0, ORDER_SLACK)
    checks.bound("weyl<=uniform", uniform_gaps, 0.0, ORDER_SLACK)
    if monotone_gaps:
        checks.bound("p-monotone", monotone_gaps, 0.0, ORDER_SLACK)
    checks.bound("stepanov-bridge", bridge_gaps, 0.0, ORDER_SLACK)

    # e^{-z^2} is Weyl-null: the mean of |f| over [-T, T] is at most e^{y^2} sqrt(pi) / (2T)
    null_strip = Strip(-1.0, 1.0)
    null_grid = SupShiftGrid(shifts.x, GridSpec.over(-1.0, 1.0, params.y_divisions))
    null_ladder = TLadder(params.gaussian_T / 3.0 ** 5, 3.0, 6)
    null = weyl_distance(gaussian(), Constant(0.0), 1.0, null_strip, null_grid, null_ladder, quad)
    for T, value in null.rungs:
        rows.append(("gaussian", null.kind.label, 2.0 * T, value))
    limit = math.e * SQRT_PI / (2.0 * params.gaussian_T)
    checks.bound("gaussian-weyl-null", [null.values[-1]], limit, ORDER_SLACK)
    checks.add("gaussian-decreasing", _descending(null.values), f"rungs {null.values}")

    wave = exponential(1.0)
    C = windowed_l1_bound(wave, null_strip, 1.0, null_grid, quad)
    bound = interior_sup_bound(C, 1.0, 0.5)
    inner = uniform_distance(
        wave, Constant(0.0), Strip(-0.5, 0.5),
        SupShiftGrid(shifts.x, GridSpec.over(-0.5, 0.5, params.y_divisions)),
    )
    rows.append(("interior", "windowed-l1", 2.0, C))
    rows.append(("interior", "sup-bound", 0.0, bound))
    rows.append(("interior", "uniform", 0.0, inner))
    checks.bound("interior-sup", [inner], bound)

    return _table(ExperimentId.METRICS_ORDERING, ("source", "metric", "window", "value"), rows, checks)


@register(
    ExperimentId.KERNEL_PROPERTIES,
    "Fejer weights in [0, 1], symmetry, k(0) = 1, nonnegative evaluation, product form and "
    "monotonicity in the degree",
)
def kernel_properties(params: KernelPropertiesParams) -> ResultTable:
    ts = GridSpec(-params.t_max, params.t_max, params.t_step).nodes()
    rows: List[Tuple] = []
    checks = CheckList()
    for betas in ((1.0,), (1.0, params.second_basis)):
        basis = RationalBasis(betas)
        label = ",".join(repr(b) for b in betas)
        in_range = symmetric = unit_center = monotone = True
        lowest = math.inf
        mismatch = 0.0
        previous = None
        for N in range(1, params.max_degree + 1):
            k = build_kernel(basis, (N,) * len(betas))
            for r, lam, w in k.csv_rows():
                rows.append((label, N, r, lam, w))
            in_range &= bool(np.all((k.weights >= 0.0) & (k.weights <= 1.0)))
            symmetric &= bool(
                np.array_equal(k.frequencies[::-1], -k.frequencies)
                and np.array_equal(k.weights[::-1], k.weights)
            )
            unit_center &= k.coefficient_at(0.0) == 1.0

            values = kernel_eval(k, ts)
            lowest = min(lowest, float(values.min()))
            closed = kernel_closed_form(k, ts)
            scale = float(math.prod(n + 1 for n in k.degrees))
            mismatch = max(mismatch, float(np.max(np.abs(values - closed))) / scale)

            if previous is not None:
                monotone &= all(
                    k.weight_fraction(r) >= previous.weight_fraction(r)
                    for r in (tuple(int(v) for v in row) for row in previous.tuples)
                )
            previous = k
        logger.debug("experiment.kernel_basis", basis=label, lowest=lowest, mismatch=mismatch)
        checks.add(f"weights-in-unit-interval[{label}]", in_range)
        checks.add(f"symmetry[{label}]", symmetric)
        checks.add(f"unit-at-zero[{label}]", unit_center)
        checks.floor(f"nonnegative[{label}]", [lowest], 0.0, ORDER_SLACK)
        checks.bound(f"product-form[{label}]", [mismatch], 0.0, 1e-8)
        checks.add(f"monotone-in-degree[{label}]", monotone)
    return _table(ExperimentId.KERNEL_PROPERTIES, ("basis", "N", "r", "lambda", "weight"), rows, checks)


@register(
    ExperimentId.THEOREM1_APPROX,
    "Exact convolution of random exponential sums, the Bochner-Fejer approximant within the "
    "leakage bound, and approximants of the T2 series",
)
def theorem1_approx(params: Theorem1Params) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    kernel = build_kernel(RationalBasis((1.0,)), (params.degree,))
    frequencies = np.arange(-params.max_frequency, params.max_frequency + 1, dtype=float)
    rows: List[Tuple] = []
    exact_errors: List[float] = []
    excesses: List[float] = []
    for index in range(params.sums):
        rng = np.random.default_rng(index)
        s = random_sum(rng, rng.choice(frequencies, size=params.terms, replace=False))
        conv = convolve_exact(s, kernel)
        exact = max(
            abs(conv.coefficient(lam)(0.0) - float(kernel.weight_fraction((int(lam),))) * coeff(0.0))
            for lam, coeff in s.terms
        )
        approx = bf_approximate(s, kernel, params.y_samples, ladder, quad)
        worst_error = worst_excess = -math.inf
        for lam, coeff in approx.terms:
            weight = kernel.coefficient_at(lam)
            for y in params.y_samples:
                error = abs(coeff(y) - conv.coefficient(lam)(y))
                bound = weight * mean_leakage_bound(s, lam, y, ladder.last, quad)
                worst_error = max(worst_error, error)
                worst_excess = max(worst_excess, error - bound)
        exact_errors.append(exact)
        excesses.append(worst_excess)
        rows.append(("A", index, "exact_error", exact))
        rows.append(("A", index, "approx_error", worst_error))
        rows.append(("A", index, "approx_excess", worst_excess))

    checks = CheckList()
    checks.bound("convolution-exact", exact_errors, 0.0, 1e-12)
    checks.bound("approximant-within-leakage", excesses, 0.0, ORDER_SLACK)

    f = separator_function(SeparatorSpec(SeparatorVariant.T2))
    separator_basis = RationalBasis((2.0 * math.pi / 9.0,))
    separator_ladder = TLadder(params.separator_t0, params.growth, params.separator_rungs)
    line = Strip.line(0.0)
    grid = SupShiftGrid(GridSpec(0.0, params.separator_shift_stop, params.separator_shift_step),
                        GridSpec.single(0.0))
    last_rungs = []
    for N in params.separator_degrees:
        k = build_kernel(separator_basis, (N,))
        approximant = bf_approximate(f, k, (0.0,), separator_ladder, quad)
        distance = weyl_distance(f, approximant, 1.0, line, grid, separator_ladder, quad)
        for T, value in distance.rungs:
            rows.append(("B", N, f"weyl1_T{T:g}", value))
        last_rungs.append(distance.values[-1])
        logger.debug("experiment.separator_approximant", N=N, weyl=distance.values[-1])
    checks.add("separator-approximants-improve", _descending(last_rungs),
               f"last-rung Weyl-1 distances {last_rungs}")
    return _table(ExperimentId.THEOREM1_APPROX, ("part", "index", "quantity", "value"), rows, checks)


@register(ExperimentId.LEMMA1, "Sup of the T2 series on nonmembers of I and inf on members")
def lemma1(params: Lemma1Params) -> ResultTable:
    report = lemma1_bounds(params.R, params.dense_step, params.W)
    checks = CheckList()
    checks.bound("nonmember-sup", [report.sup_nonmembers], NONMEMBER_CEILING, 1e-6)
    checks.floor("member-inf", [report.inf_members], 1.0, 1e-9)
    checks.floor("nonmember-sup-attained", [report.sup_nonmembers], math.exp(-4.0))
    return _table(ExperimentId.LEMMA1, report.CSV_COLUMNS, [report.csv_row()], checks)


@register(ExperimentId.LEMMA2, "Progressions inside I whose q-shift avoids I")
def lemma2(params: Lemma2Params) -> ResultTable:
    rows: List[Tuple] = []
    all_hold = differences_ok = True
    for q in range(-params.q_max, params.q_max + 1):
        if q == 0:
            continue
        progression = progression_for_shift(q)
        holds = progression.holds(-params.j_range, params.j_range)
        r = ternary_level(q)
        all_hold &= holds
        differences_ok &= progression.difference in (3 ** r, 3 ** (r + 1))
        rows.append((q, progression.start, progression.difference, holds))
    checks = CheckList()
    checks.add("membership-invariants", all_hold, f"q in [-{params.q_max}, {params.q_max}]")
    checks.add("difference-is-power-of-3", differences_ok)
    return _table(ExperimentId.LEMMA2, ("q", "start", "difference", "holds"), rows, checks)


_DISCREPANCY_COLUMNS = ("tau", "N", "gamma", "M", "q", "x", "delta_f", "certificate", "stepanov")


@register(ExperimentId.LEMMA3, "Points x with |f(x + tau) - f(x)| > gamma and their Stepanov floor")
def lemma3(params: Lemma3Params) -> ResultTable:
    f = separator_function(SeparatorSpec(SeparatorVariant.T2, window=params.W))
    rows: List[Tuple] = []
    checks = CheckList()
    for tau in params.tau:
        report = discrepancy_search(tau, params.a, params.W)
        difference = f.shifted(tau) - f
        stepanov = window_integral(difference, report.x, report.delta, 1.0)
        rows.append(report.csv_row() + (report.certificate, stepanov))
        label = f"tau={tau:g}"
        checks.add(f"jump-above-gamma[{label}]", report.delta_f > report.gamma,
                   f"{report.delta_f!r} vs {report.gamma!r}")
        checks.bound(f"pigeonhole-certificate[{label}]", [report.certificate], 1.0 / report.N, 1e-12)
        checks.add(f"multiplier-range[{label}]", 1 <= report.M <= report.N)
        lo, hi = report.window
        checks.add(f"witness-in-window[{label}]", lo <= report.x <= hi, f"x={report.x!r} in [{lo}, {hi}]")
        checks.floor(f"stepanov-floor[{label}]", [stepanov], report.stepanov_floor)
        if float(tau).is_integer():
            checks.floor(f"integer-shift-gap[{label}]", [report.delta_f], MEMBER_GAP, 1e-6)
    return _table(ExperimentId.LEMMA3, _DISCREPANCY_COLUMNS, rows, checks)


@register(ExperimentId.LEMMA4, "(sum of bumps spaced by 3)^p <= 2^(p-1) * sum of bumps")
def lemma4(params: Lemma4Params) -> ResultTable:
    xs = GridSpec(params.x_start, params.x_stop, params.x_step).nodes()
    rows: List[Tuple] = []
    excesses = []
    for p in params.p:
        lhs, rhs = lemma4_scan(xs, p, params.window)
        excess = lhs - rhs
        worst = int(np.argmax(excess))
        excesses.append(float(excess[worst]))
        rows.append((p, int(xs.size), float(excess[worst]), float(xs[worst]), float(lhs.max())))
    checks = CheckList()
    checks.bound("power-sum-inequality", excesses, 0.0, 1e-12)
    return _table(ExperimentId.LEMMA4, ("p", "points", "max_excess", "worst_x", "max_lhs"), rows, checks)


@register(ExperimentId.THEOREM2_RATE, "Weyl-1 distance between the T2 series and its partial sums f_m")
def theorem2_rate(params: Theorem2Params) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    spec = SeparatorSpec(SeparatorVariant.T2, window=params.W)
    f = separator_function(spec)
    rows: List[Tuple] = []
    finite_gaps: List[float] = []
    limit_gaps: List[float] = []
    for m in params.m:
        f_m = partial_sum_f_m(spec, m)
        period = float(3 ** m)
        for H in params.H:
            grid = SupShiftGrid(GridSpec(0.0, period, params.shift_step),
                                GridSpec.over(-H, H, params.y_divisions))
            distance = weyl_distance(f, f_m, 1.0, Strip(-H, H), grid, ladder, quad)
            limit = theorem_bounds(BoundVariant.T2, m=m, H=H)
            for T, value in distance.rungs:
                finite = theorem_bounds(BoundVariant.T2, m=m, H=H, T=T)
                rows.append((m, H, T, value, finite, limit))
                finite_gaps.append(value - finite)
                # The limit bound only applies once the window spans a period of f_m
                if T >= period:
                    limit_gaps.append(value - limit)
            logger.debug("experiment.theorem2", m=m, H=H, rungs=distance.values)
    checks = CheckList()
    checks.bound("finite-window-bound", finite_gaps, 0.0, 1e-6)
    if limit_gaps:
        checks.bound("limit-bound", limit_gaps, 0.0, 1e-6)
    return _table(
        ExperimentId.THEOREM2_RATE, ("m", "H", "T", "value", "finite_bound", "limit_bound"), rows, checks
    )


_SEPARATION_COLUMNS = ("quantity", "l", "n", "p", "T", "value", "bound", "ratio")


def _separation_row(quantity: str, l: int, n: int, p: float, T: float, value: float, bound: float) -> Tuple:
    ratio = value / bound if bound else math.nan
    return (quantity, l, n, p, T, value, bound, ratio)


def _window_rows(spec: SeparatorSpec, params, p: float, quad) -> Dict[int, List]:
    return {
        l: windowed_norm_at_centers(spec, l, params.n, p, params.T0, quad) for l in params.levels
    }


def _strictly_increasing_by_level(norms: Dict[int, List]) -> bool:
    levels = sorted(norms)
    return all(
        max(w.value for w in norms[a]) < min(w.value for w in norms[b])
        for a, b in zip(levels, levels[1:])
    )


@register(
    ExperimentId.THEOREM3_SEPARATION,
    "T3 series: window integrals growing like l^p at level-l centers with bounded Besicovitch norm",
)
def theorem3_separation(params: Theorem3Params) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    p = params.p
    spec = SeparatorSpec(SeparatorVariant.T3, l_max=params.l_max, window=params.W)
    f = separator_function(spec)
    line = Strip.line(0.0)
    rows: List[Tuple] = []
    checks = CheckList()

    norms = _window_rows(spec, params, p, quad)
    window_gaps = []
    for l, entries in norms.items():
        for w in entries:
            rows.append(_separation_row("window", l, w.n, p, w.T0, w.value, w.bound))
            window_gaps.append(w.value - w.bound)
    checks.floor("window-lower-bound", window_gaps, 0.0, 1e-6)
    checks.add("window-increasing-in-level", _strictly_increasing_by_level(norms))

    tail = theorem_bounds(BoundVariant.T3_TAIL, m=params.tail_m, p=p)
    cap = params.cap_factor * tail ** (1.0 / p)
    besicovitch = besicovitch_distance(f, Constant(0.0), p, line, ladder, quad)
    for T, value in besicovitch.rungs:
        rows.append(_separation_row("besicovitch", 0, 0, p, T, value, cap))
    checks.bound("besicovitch-cap", besicovitch.values, cap)

    tail_bound = holder_factor(params.tail_m, p) * tail ** (1.0 / p)
    remainder = besicovitch_distance(f, partial_sum_f_m(spec, params.tail_m), p, line, ladder, quad)
    for T, value in remainder.rungs:
        rows.append(_separation_row("tail", params.tail_m, 0, p, T, value, tail_bound))
    checks.bound("tail-bound", remainder.values, tail_bound, 1e-9)

    ceiling = max(besicovitch.values) ** p
    ratios = [
        min(w.value for w in entries) / ceiling
        for l, entries in norms.items()
        if l >= params.ratio_level
    ]
    if ratios:
        checks.floor("window-to-besicovitch-ratio", ratios, params.ratio_threshold)
    return _table(ExperimentId.THEOREM3_SEPARATION, _SEPARATION_COLUMNS, rows, checks)


@register(
    ExperimentId.THEOREM4_SEPARATION,
    "T4 series: p'-window means growing like 3^(l p'/p0) with bounded p-Besicovitch norm",
)
def theorem4_separation(params: Theorem4Params) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    p, p_prime, p0 = params.p, params.p_prime, params.p0
    spec = SeparatorSpec(SeparatorVariant.T4, l_max=params.l_max, window=params.W, p0=p0)
    f = separator_function(spec)
    rows: List[Tuple] = []
    checks = CheckList()
    levels = sorted(params.levels)

    wide = _window_rows(spec, params, p_prime, quad)
    log_means = []
    lower_gaps = []
    for l in levels:
        for w in wide[l]:
            rows.append(_separation_row("window-p'", l, w.n, p_prime, w.T0, w.value, w.bound))
            lower_gaps.append(w.value - w.bound)
        log_means.append(float(np.mean([math.log(w.value / (2.0 * w.T0)) for w in wide[l]])))
    checks.floor("window-lower-bound", lower_gaps, 0.0, 1e-6)
    expected_slope = p_prime / p0 * math.log(3.0)
    if len(levels) > 1:
        slope = float(np.polyfit(levels, log_means, 1)[0])
        checks.bound("log-mean-slope", [abs(slope / expected_slope - 1.0)], params.slope_tolerance)
        rows.append(_separation_row("slope", 0, 0, p_prime, params.T0, slope, expected_slope))

    narrow = _window_rows(spec, params, p, quad)
    means = [float(np.mean([w.value for w in narrow[l]])) for l in levels]
    for l in levels:
        for w in narrow[l]:
            rows.append(_separation_row("window-p", l, w.n, p, w.T0, w.value, w.bound))
    expected_ratio = 3.0 ** (p / p0)
    ratio_errors = [abs(b / a / expected_ratio - 1.0) for a, b in zip(means, means[1:])]
    if ratio_errors:
        checks.bound("consecutive-ratio", ratio_errors, params.slope_tolerance)

    cap = theorem_bounds(BoundVariant.T4_TAIL, m=0, p=p, p0=p0)
    besicovitch = besicovitch_distance(f, Constant(0.0), p, Strip.line(0.0), ladder, quad)
    for T, value in besicovitch.rungs:
        rows.append(_separation_row("besicovitch", 0, 0, p, T, value, cap))
    checks.bound("besicovitch-cap", besicovitch.values, cap)
    return _table(ExperimentId.THEOREM4_SEPARATION, _SEPARATION_COLUMNS, rows, checks)


@register(
    ExperimentId.MEAN_VALUE,
    "Mean value sqrt(pi)/4 of the T2 series and the 1/T rate for exponential sums",
)
def mean_value_experiment(params: MeanValueParams) -> ResultTable:
    quad = params.quadrature()
    ladder = params.ladder()
    shifts = GridSpec(params.shift_start, params.shift_stop, params.shift_step)
    target = SQRT_PI / 4.0
    f = separator_function(SeparatorSpec(SeparatorVariant.T2, window=params.W))
    estimate = mean_value(f, params.y, ladder, quad, shifts)
    rows: List[Tuple] = []
    for (T, value), deviation in zip(estimate.rungs, estimate.shift_deviation):
        rows.append(("separator", 0, T, value.real, value.imag, deviation, target))
    checks = CheckList()
    checks.bound("density-one-half", [abs(estimate.surrogate - target)], params.tolerance)
    checks.bound("shift-uniformity", [estimate.shift_deviation[-1]], params.shift_tolerance)

    sum_ladder = TLadder(params.t0, params.growth, params.sum_rungs)
    excesses = []
    for index in range(params.sums):
        rng = np.random.default_rng(index)
        magnitudes = rng.uniform(0.25, 3.0, size=3)
        signs = rng.choice([-1.0, 1.0], size=3)
        s = random_sum(rng, np.concatenate(([0.0], magnitudes * signs)))
        c0 = s.coefficient(0.0)(params.y)
        sums = mean_value(s, params.y, sum_ladder, quad, shifts)
        for T, value in sums.rungs:
            error = abs(value - c0)
            bound = mean_leakage_bound(s, 0.0, params.y, T, quad)
            excesses.append(error - bound)
            rows.append(("exp-sum", index, T, value.real, value.imag, error, bound))
    if excesses:
        checks.bound("exp-sum-rate", excesses, 0.0, ORDER_SLACK)
    return _table(
        ExperimentId.MEAN_VALUE, ("source", "index", "T", "re", "im", "deviation", "bound"), rows, checks
    )
