import random

import pytest

from latticecount import (
    CellBudgetExceededError,
    InvalidDilationError,
    SimplexSystem,
    count_closure_bruteforce,
    count_interior_bruteforce,
)

STD_TRIANGLE = SimplexSystem([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
MIXED = SimplexSystem([[-1, 0], [0, -1], [2, 3]], [0, 0, 1])


def test_closure_examples():
    # hand enumeration: (0,0),(0,1),(0,2),(1,0),(1,1),(2,0),(3,0)
    assert count_closure_bruteforce(MIXED, (0, 0, 6)) == 7
    assert count_closure_bruteforce(STD_TRIANGLE, (0, 0, 3)) == 10
    assert count_closure_bruteforce(SimplexSystem([[-1], [3]], [0, 1]), (0, 7)) == 3


def test_interior_examples():
    assert count_interior_bruteforce(MIXED, (0, 0, 6)) == 1  # only (1,1)
    assert count_interior_bruteforce(STD_TRIANGLE, (0, 0, 3)) == 1
    # 1/2 < x < 7/3 leaves x in {1, 2}
    assert count_interior_bruteforce(SimplexSystem([[-2], [3]], [0, 1]), (-1, 7)) == 2


def test_empty_region_rejected():
    with pytest.raises(InvalidDilationError):
        count_closure_bruteforce(STD_TRIANGLE, (0, 0, -1))


def test_cell_budget_guard():
    with pytest.raises(CellBudgetExceededError):
        count_closure_bruteforce(STD_TRIANGLE, (0, 0, 100), cell_budget=10)


def test_interior_at_most_closure_and_monotone():
    rng = random.Random(3)
    from conftest import box_cells, random_simplex

    checked = 0
    while checked < 25:
        n = rng.choice((1, 2))
        system = random_simplex(rng, n)
        t = tuple(rng.randint(-6, 6) for _ in range(n + 1))
        if box_cells(system, t) is None:
            continue
        checked += 1
        closure = count_closure_bruteforce(system, t)
        interior = count_interior_bruteforce(system, t)
        assert interior <= closure
        for axis in range(n + 1):
            bumped = tuple(
                ti + (1 if i == axis else 0) for i, ti in enumerate(t)
            )
            assert count_closure_bruteforce(system, bumped) >= closure
            assert count_interior_bruteforce(system, bumped) >= interior


def test_classical_specialization():
    for s in range(1, 12):
        t = tuple(s * bi for bi in STD_TRIANGLE.b)
        assert count_closure_bruteforce(STD_TRIANGLE, t) == (s + 1) * (s + 2) // 2
        assert count_interior_bruteforce(STD_TRIANGLE, t) == (s - 1) * (s - 2) // 2


def test_degenerate_point_counts():
    assert count_closure_bruteforce(STD_TRIANGLE, (0, 0, 0)) == 1
    assert count_interior_bruteforce(STD_TRIANGLE, (0, 0, 0)) == 0
