"""
The ternary set I and shift progressions avoiding it
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.exceptions import InvalidParameterError


def ternary_level(n: int) -> int:
    """
    Level l of a nonzero integer n = 3^(l-1) * m with m not divisible by 3.

    Args:
        n: Nonzero integer

    Returns:
        Level l >= 1
    """
    n = int(n)
    if n == 0:
        raise InvalidParameterError("0 has no ternary level")
    level = 1
    while n % 3 == 0:
        n //= 3
        level += 1
    return level


def is_in_I(n: int) -> bool:
    """True iff n = 3^(l-1) * (3k + 1) for some l >= 1 and integer k"""
    n = int(n)
    if n == 0:
        return False
    while n % 3 == 0:
        n //= 3
    return n % 3 == 1


def levels_and_membership(ns: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised levels and I-membership of an integer array.

    Zero gets level 0 and is not a member.

    Args:
        ns: Integer array

    Returns:
        Tuple of (levels, membership mask), shaped like ns
    """
    m = np.asarray(ns, dtype=np.int64).copy()
    levels = np.where(m == 0, 0, 1).astype(np.int64)
    divisible = (m % 3 == 0) & (m != 0)
    while divisible.any():
        m[divisible] //= 3
        levels[divisible] += 1
        divisible = (m % 3 == 0) & (m != 0)
    return levels, (m != 0) & (m % 3 == 1)


@dataclass(frozen=True)
class ProgressionIq:
    """Arithmetic progression start + j*difference inside I whose q-shift avoids I"""

    q: int
    start: int
    difference: int

    def __post_init__(self):
        if self.q == 0:
            raise InvalidParameterError("The shift q must be nonzero")
        if self.difference <= 0:
            raise InvalidParameterError("The difference must be positive")

    def element(self, j: int) -> int:
        return self.start + j * self.difference

    def elements(self, j_lo: int, j_hi: int) -> np.ndarray:
        """Elements for j_lo <= j <= j_hi"""
        return self.start + self.difference * np.arange(j_lo, j_hi + 1, dtype=np.int64)

    def first_at_least(self, a: float) -> int:
        """Smallest element >= a"""
        j = -((self.start - a) // self.difference)
        return self.element(int(j))

    def holds(self, j_lo: int, j_hi: int) -> bool:
        """Check that every element is in I and every element + q is not"""
        elements = self.elements(j_lo, j_hi)
        _, inside = levels_and_membership(elements)
        _, shifted = levels_and_membership(elements + self.q)
        return bool(inside.all() and not shifted.any())


def progression_for_shift(q: int) -> ProgressionIq:
    """
    Progression n_j in I with n_j + q outside I.

    Writing q = 3^(r-1) * m with 3 not dividing m: if m = 3m' + 1 then
    n_j = 3^(r-1) * (3j + 1) with difference 3^r; if m = 3m'' - 1 then
    n_j = 3^(r-1) * (3(3j - m'' - 1) + 1) with difference 3^(r+1).

    Args:
        q: Nonzero integer shift

    Returns:
        ProgressionIq
    """
    q = int(q)
    if q == 0:
        raise InvalidParameterError("The shift q must be nonzero")
    r = ternary_level(q)
    scale = 3 ** (r - 1)
    m = q // scale
    if m % 3 == 1:
        return ProgressionIq(q=q, start=scale, difference=3 * scale)
    m2 = (m + 1) // 3
    return ProgressionIq(q=q, start=scale * (3 * (-m2 - 1) + 1), difference=9 * scale)
