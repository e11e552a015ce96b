import random
from fractions import Fraction

from latticecount import (
    SimplexSystem,
    count_closure_bruteforce,
    count_interior_bruteforce,
    first_coordinate_functional,
    reduced_system,
    unimodular_reduce,
    validate_dilation,
    vertices,
)
from latticecount._linalg import det_int, mat_mul_int

from conftest import box_cells, random_simplex

STD_TRIANGLE = SimplexSystem([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])


def test_already_reduced_triangle():
    step = unimodular_reduce(STD_TRIANGLE)
    assert step.basis_change == ((1, 0), (0, 1))
    assert step.leading_coeff == 1
    assert step.first_column_tail == (0, 1)
    assert step.trailing_block == ((-1,), (1,))


def test_gcd_column_reduction():
    system = SimplexSystem([[2, 3], [-1, 0], [0, -1]], [1, 0, 0])
    step = unimodular_reduce(system)
    reduced = mat_mul_int(system.a_matrix, step.basis_change)
    assert reduced[0] == (-step.leading_coeff, 0)
    assert step.leading_coeff == 1  # gcd(2, 3)
    assert abs(det_int(step.basis_change)) == 1


def test_one_dimensional_reduction():
    step = unimodular_reduce(SimplexSystem([[-2], [3]], [0, 1]))
    assert step.basis_change == ((1,),)
    assert step.leading_coeff == 2
    flipped = unimodular_reduce(SimplexSystem([[3], [-2]], [1, 0]))
    assert flipped.basis_change == ((-1,),)
    assert flipped.leading_coeff == 3
    assert flipped.first_column_tail == (2,)


def test_functional_examples():
    assert unimodular_reduce(STD_TRIANGLE).vertex_coeffs == (1, 1)
    assert unimodular_reduce(STD_TRIANGLE).vertex_denom == 1
    mixed = SimplexSystem([[-1, 0], [0, -1], [2, 3]], [0, 0, 1])
    step = unimodular_reduce(mixed)
    assert (step.vertex_coeffs, step.vertex_denom) == ((3, 1), 2)
    one_d = unimodular_reduce(SimplexSystem([[-2], [3]], [0, 1]))
    assert (one_d.vertex_coeffs, one_d.vertex_denom) == ((1,), 3)


def test_functional_matches_accessor():
    step = unimodular_reduce(SimplexSystem([[2, 3], [-1, 0], [0, -1]], [1, 0, 0]))
    assert first_coordinate_functional(step) == (
        step.vertex_coeffs,
        step.vertex_denom,
    )


def test_functional_reproduces_opposite_vertex():
    rng = random.Random(23)
    for _ in range(12):
        n = rng.choice((2, 3))
        system = random_simplex(rng, n)
        step = unimodular_reduce(system)
        reduced = reduced_system(system)
        for _ in range(20):
            t = tuple(rng.randint(-9, 9) for _ in range(n + 1))
            # candidate 0 of the reduced system solves rows 2..n+1 tight
            point, _ = vertices(reduced, t)[0]
            predicted = Fraction(
                sum(c * ti for c, ti in zip(step.vertex_coeffs, t[1:])),
                step.vertex_denom,
            )
            assert point[0] == predicted


def test_counts_preserved_by_basis_change():
    rng = random.Random(41)
    checked = 0
    while checked < 20:
        n = rng.choice((1, 2, 3))
        system = random_simplex(rng, n)
        reduced = reduced_system(system)
        t = tuple(rng.randint(-7, 7) for _ in range(n + 1))
        cells = box_cells(system, t)
        if cells is None or cells > 50_000:
            continue
        checked += 1
        assert count_closure_bruteforce(system, t) == count_closure_bruteforce(
            reduced, t
        )
        assert count_interior_bruteforce(system, t) == count_interior_bruteforce(
            reduced, t
        )


def test_lower_bound_sits_below_opposite_vertex():
    rng = random.Random(59)
    checked = 0
    while checked < 30:
        n = rng.choice((1, 2, 3))
        system = random_simplex(rng, n)
        t = tuple(rng.randint(-9, 9) for _ in range(n + 1))
        if not validate_dilation(system, t).full_dimensional:
            continue
        checked += 1
        step = unimodular_reduce(system)
        facet_bound = Fraction(-t[0], step.leading_coeff)
        opposite = Fraction(
            sum(c * ti for c, ti in zip(step.vertex_coeffs, t[1:])),
            step.vertex_denom,
        )
        assert facet_bound < opposite
