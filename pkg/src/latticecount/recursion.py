"""Inductive lattice-point counter for facet-dilated simplices.

The count is computed by slicing along the first coordinate after the
normalization in `reduction`: facet 1 pins the lowest slice, the vertex
opposite facet 1 pins the highest, and each slice is a facet-dilated
simplex one dimension down whose offsets shift linearly with the slice
index.  The base case is a rational interval, counted by two floor
divisions.

Sums over slice indices use the signed finite-sum convention

    sum_{k=a}^{b} f(k)  =  the usual sum            if a <= b,
                           0                        if a == b + 1,
                           -sum_{k=b+1}^{a-1} f(k)  if a >= b + 2,

which extends both counters to every integer dilation vector, empty or
not.  On that extension the reciprocity law

    interior_count(-t) == (-1)^n * closure_count(t)

holds identically; for dilations that cut out a genuine full-dimensional
simplex the counters agree with brute-force enumeration.  For negative or
infeasible t the values are formal (no geometric meaning is claimed), and
for nonempty but collapsed regions the closure count is still the true
one while the interior count is the formal continuation, not 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence, TypeVar

from .core import (
    DilationVector,
    SimplexSystem,
    check_dilation,
    floor_div,
)
from .reduction import ReductionStep, unimodular_reduce

_T = TypeVar("_T")


def signed_range_sum(a: int, b: int, f: Callable[[int], _T]):
    """Finite sum of f(k) for k = a..b under the signed convention above."""
    if a <= b:
        return sum(f(k) for k in range(a, b + 1))
    if a == b + 1:
        return 0
    return -sum(f(k) for k in range(b + 1, a))


@lru_cache(maxsize=None)
def _level(system: SimplexSystem) -> tuple[ReductionStep, SimplexSystem | None]:
    """Reduction data for one recursion level, plus the sliced subsystem."""
    step = unimodular_reduce(system)
    if system.n == 1:
        return step, None
    child = SimplexSystem(step.trailing_block, system.b[1:])
    return step, child


def _count(system: SimplexSystem, t: DilationVector, strict: bool) -> int:
    step, child = _level(system)
    a1 = step.leading_coeff
    if child is None:
        a2 = step.first_column_tail[0]
        if strict:
            return floor_div(t[1] - 1, a2) - floor_div(-t[0], a1)
        return floor_div(t[1], a2) - floor_div(-t[0] - 1, a1)

    cdot = sum(c * ti for c, ti in zip(step.vertex_coeffs, t[1:]))
    d = step.vertex_denom
    if strict:
        lo = floor_div(-t[0], a1) + 1
        hi = floor_div(cdot - 1, d)
    else:
        lo = floor_div(-t[0] - 1, a1) + 1
        hi = floor_div(cdot, d)
    tail = step.first_column_tail

    def slice_count(m: int) -> int:
        shifted = tuple(ti - ai * m for ti, ai in zip(t[1:], tail))
        return _count(child, shifted, strict)

    return signed_range_sum(lo, hi, slice_count)


def count_interior(system: SimplexSystem, t: Sequence[int]) -> int:
    """Number of lattice points with A m < t, extended formally to all t."""
    return _count(system, check_dilation(system, t), strict=True)


def count_closure(system: SimplexSystem, t: Sequence[int]) -> int:
    """Number of lattice points with A m <= t, extended formally to all t."""
    return _count(system, check_dilation(system, t), strict=False)


def reciprocity_check(system: SimplexSystem, t: Sequence[int]) -> bool:
    """Whether interior_count(-t) equals (-1)^n * closure_count(t)."""
    vec = check_dilation(system, t)
    negated = tuple(-x for x in vec)
    sign = -1 if system.n % 2 else 1
    return count_interior(system, negated) == sign * count_closure(system, vec)
