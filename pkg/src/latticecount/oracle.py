"""Brute-force lattice-point enumeration, the ground truth for everything else.

Counts are obtained by walking the integer bounding box of the vertex set and
testing each point against all facet inequalities in exact integer
arithmetic.  This is deliberately naive: it exists so the closed forms and
the inductive counter have an independent, obviously-correct reference at
desk scale.  A cell budget guards against accidentally huge boxes.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

from .core import (
    InvalidDilationError,
    LatticeCountError,
    SimplexSystem,
    check_dilation,
    validate_dilation,
)

DEFAULT_CELL_BUDGET = 10**8


class CellBudgetExceededError(LatticeCountError):
    """The bounding box has more cells than the enumeration budget allows."""


def _box_ranges(
    system: SimplexSystem, t: Sequence[int], cell_budget: int
) -> list[range]:
    report = validate_dilation(system, t)
    if not report.nonempty:
        raise InvalidDilationError("region is empty; nothing to enumerate")
    assert report.vertices is not None
    cells = 1
    ranges = []
    for axis in range(system.n):
        coords = [v[axis] for v in report.vertices]
        lo = math.ceil(min(coords))
        hi = math.floor(max(coords))
        ranges.append(range(lo, hi + 1))
        cells *= max(0, hi - lo + 1)
    if cells > cell_budget:
        raise CellBudgetExceededError(
            f"bounding box has {cells} cells, budget is {cell_budget}"
        )
    return ranges


def _count(
    system: SimplexSystem, t: Sequence[int], strict: bool, cell_budget: int | None
) -> int:
    vec = check_dilation(system, t)
    budget = DEFAULT_CELL_BUDGET if cell_budget is None else cell_budget
    ranges = _box_ranges(system, vec, budget)
    rows = system.a_matrix
    count = 0
    for point in itertools.product(*ranges):
        ok = True
        for row, ti in zip(rows, vec):
            s = 0
            for a, x in zip(row, point):
                s += a * x
            if (s >= ti) if strict else (s > ti):
                ok = False
                break
        if ok:
            count += 1
    return count


def count_closure_bruteforce(
    system: SimplexSystem, t: Sequence[int], cell_budget: int | None = None
) -> int:
    """Exact cardinality of {m in Z^n : A m <= t} by box enumeration."""
    return _count(system, t, strict=False, cell_budget=cell_budget)


def count_interior_bruteforce(
    system: SimplexSystem, t: Sequence[int], cell_budget: int | None = None
) -> int:
    """Exact cardinality of {m in Z^n : A m < t} (all inequalities strict)."""
    return _count(system, t, strict=True, cell_budget=cell_budget)
