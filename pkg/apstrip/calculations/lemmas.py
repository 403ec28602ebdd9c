"""
Extremal values of the T2 series on integers, shift discrepancies and the
sum-of-powers inequality for bumps spaced by 3
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
import structlog

from ..core.constants import (
    BUMP_RATE,
    DEFAULT_BUMP_WINDOW,
    LEMMA4_WINDOW,
    LIPSCHITZ_GRID_STEP,
    MEMBER_GAP,
)
from ..core.exceptions import DiscrepancyNotFoundError, InvalidParameterError
from ..core.grid import GridSpec
from ..core.sampling import check_exponent
from .separators import SeparatorSpec, separator_function
from .ternary import levels_and_membership, progression_for_shift

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Lemma1Report:
    """Extremes of the T2 series over the integers of [-R, R]"""

    R: int
    sup_nonmembers: float
    inf_members: float
    nonmember_witness: int
    member_witness: int
    dense_sup: float

    CSV_COLUMNS = ("R", "sup_nonmembers", "inf_members", "nonmember_witness",
                   "member_witness", "dense_sup")

    def csv_row(self) -> Tuple:
        return (self.R, self.sup_nonmembers, self.inf_members, self.nonmember_witness,
                self.member_witness, self.dense_sup)


def lemma1_bounds(R: int = 100, dense_step: float = 0.01,
                  W: float = DEFAULT_BUMP_WINDOW) -> Lemma1Report:
    """
    Sup of the T2 series over nonmembers and inf over members of I in [-R, R].

    Args:
        R: Half range, at least 10
        dense_step: Step of the dense scan over the real segment
        W: Bump window

    Returns:
        Lemma1Report
    """
    R = int(R)
    if R < 10:
        raise InvalidParameterError(f"R must be at least 10, got {R}")
    f = separator_function(SeparatorSpec(window=W))
    ns = np.arange(-R, R + 1, dtype=np.int64)
    values = f.sample(ns.astype(float), 0.0).real
    _, members = levels_and_membership(ns)
    outside = ~members

    i_out = int(np.argmax(np.where(outside, values, -np.inf)))
    i_in = int(np.argmin(np.where(members, values, np.inf)))
    dense = f.sample(GridSpec(-R, R, dense_step).nodes(), 0.0)
    report = Lemma1Report(
        R=R,
        sup_nonmembers=float(values[i_out]),
        inf_members=float(values[i_in]),
        nonmember_witness=int(ns[i_out]),
        member_witness=int(ns[i_in]),
        dense_sup=float(np.max(np.abs(dense))),
    )
    logger.debug("lemmas.lemma1", R=R, sup=report.sup_nonmembers, inf=report.inf_members)
    return report


@lru_cache(maxsize=None)
def bump_lipschitz(W: float = DEFAULT_BUMP_WINDOW, step: float = LIPSCHITZ_GRID_STEP) -> float:
    """
    Max over x in [0, 1] of sum_n 8|x - n| exp(-4 (x - n)^2), a Lipschitz constant
    for every sub-sum of unit bumps on the real line (the majorant has period 1).
    """
    xs = GridSpec(0.0, 1.0, step).nodes()
    reach = int(math.ceil(W)) + 1
    d = xs[:, None] - np.arange(-reach, reach + 1, dtype=float)[None, :]
    slope = (2.0 * BUMP_RATE * np.abs(d) * np.exp(-BUMP_RATE * d * d)).sum(axis=1)
    return float(slope.max())


@dataclass(frozen=True)
class DiscrepancyReport:
    """Point x with |f(x + tau) - f(x)| > gamma, with its pigeonhole certificate"""

    tau: float
    N: int
    gamma: float
    M: int
    q: int
    x: float
    delta_f: float
    lipschitz: float
    delta: float
    stepanov_floor: float
    window: Tuple[float, float]

    CSV_COLUMNS = ("tau", "N", "gamma", "M", "q", "x", "delta_f")

    def csv_row(self) -> Tuple:
        return (self.tau, self.N, self.gamma, self.M, self.q, self.x, self.delta_f)

    @property
    def certificate(self) -> float:
        """|M tau - q|, at most 1/N"""
        return abs(self.M * self.tau - self.q)


def pigeonhole_pair(tau: float, N: int) -> Tuple[int, int]:
    """
    M in [1, N] and integer q with |M tau - q| <= 1/N.

    Fractional parts of k tau, k = 0..N, are sorted; the closest adjacent pair
    (first in sorted order on ties) gives M and q.
    """
    ks = np.arange(N + 1)
    products = ks * tau
    fractions = products - np.floor(products)
    order = np.lexsort((ks, fractions))
    gaps = np.diff(fractions[order])
    i = int(np.argmin(gaps))
    k1, k2 = sorted((int(order[i]), int(order[i + 1])))
    q = int(math.floor(k2 * tau)) - int(math.floor(k1 * tau))
    return k2 - k1, q


def discrepancy_search(tau: float, a: float = 0.0, W: float = DEFAULT_BUMP_WINDOW) -> DiscrepancyReport:
    """
    Find x near a with |f(x + tau) - f(x)| > gamma for the T2 series f.

    N is the least integer with Lip / N below (1 - sqrt(pi)/2) / 2 and
    gamma = (1 - sqrt(pi)/2) / (2N). The pigeonhole pair (M, q) gives a progression
    of members n whose q-shift leaves I; along n, n + tau, ..., n + M tau one
    step must jump by more than gamma.

    Args:
        tau: Shift with |tau| >= 1
        a: Left end of the search window
        W: Bump window

    Returns:
        DiscrepancyReport
    """
    tau = float(tau)
    if not math.isfinite(tau) or abs(tau) < 1:
        raise InvalidParameterError(f"|tau| must be at least 1, got {tau}")
    lipschitz = bump_lipschitz(W)
    half_gap = MEMBER_GAP / 2.0
    N = int(math.floor(lipschitz / half_gap)) + 1
    gamma = MEMBER_GAP / (2.0 * N)
    M, q = pigeonhole_pair(tau, N)

    progression = progression_for_shift(q)
    n = progression.first_at_least(a)
    lo = min(a, a + N * tau)
    hi = max(a, a + N * tau) + progression.difference
    window = (lo, hi)

    f = separator_function(SeparatorSpec(window=W))
    xs = n + tau * np.arange(M + 1, dtype=float)
    values = f.sample(np.append(xs, xs[-1] + tau), 0.0).real
    jumps = np.abs(np.diff(values))
    above = np.flatnonzero(jumps > gamma)
    if above.size == 0:
        raise DiscrepancyNotFoundError(
            f"No jump above gamma={gamma:.6g} for tau={tau} in [{lo}, {hi}]", tau, window
        )
    k = int(above[0])
    delta = gamma / (5.0 * lipschitz)
    report = DiscrepancyReport(
        tau=tau,
        N=N,
        gamma=gamma,
        M=M,
        q=q,
        x=float(xs[k]),
        delta_f=float(jumps[k]),
        lipschitz=lipschitz,
        delta=delta,
        stepanov_floor=gamma * delta / 10.0,
        window=window,
    )
    logger.debug("lemmas.discrepancy", tau=tau, N=N, M=M, q=q, x=report.x, delta_f=report.delta_f)
    return report


def bump_triple_sum(x, window: int = LEMMA4_WINDOW):
    """sum over |n - round(x/3)| <= window of exp(-4 (x - 3n)^2)"""
    x = np.asarray(x, dtype=float)
    center = np.rint(x / 3.0)
    offsets = np.arange(-window, window + 1, dtype=float)
    d = x[..., None] - 3.0 * (center[..., None] + offsets)
    return np.exp(-BUMP_RATE * d * d).sum(axis=-1)


def lemma4_check(x: float, p: float, window: int = LEMMA4_WINDOW) -> Tuple[float, float, bool]:
    """
    (sum kappa_n(x))^p against 2^(p-1) * sum kappa_n(x), kappa_n(x) = exp(-4 (x - 3n)^2).

    Args:
        x: Point
        p: Exponent (>= 1)
        window: Terms kept around round(x/3)

    Returns:
        Tuple of (lhs, rhs, ok)
    """
    p = check_exponent(p)
    total = float(bump_triple_sum(x, window))
    lhs = total ** p
    rhs = 2.0 ** (p - 1.0) * total
    return lhs, rhs, lhs <= rhs + 1e-12


def lemma4_scan(xs: np.ndarray, p: float, window: int = LEMMA4_WINDOW) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised lhs and rhs of lemma4_check over an array of points"""
    p = check_exponent(p)
    total = bump_triple_sum(xs, window)
    return total ** p, 2.0 ** (p - 1.0) * total
