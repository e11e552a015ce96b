import itertools
import random
from fractions import Fraction

import pytest

from latticecount import (
    NotQuasipolynomialError,
    Quasipolynomial,
    SimplexSystem,
    count_closure,
    faulhaber,
    floor_div,
    interpolate,
    lemma1_sum,
    signed_range_sum,
)

HALF = Fraction(1, 2)

FLOOR_HALF_PLUS_ONE = Quasipolynomial(
    1,
    (2,),
    1,
    {(0,): {(0,): 1, (1,): HALF}, (1,): {(0,): HALF, (1,): HALF}},
)


def test_evaluate_examples():
    assert FLOOR_HALF_PLUS_ONE.evaluate((5,)) == 3
    assert FLOOR_HALF_PLUS_ONE.evaluate((4,)) == 3
    zero = Quasipolynomial(1, (1,), 0, {(0,): {}})
    assert zero.evaluate((12345,)) == 0


def test_evaluate_arity_mismatch():
    with pytest.raises(ValueError):
        FLOOR_HALF_PLUS_ONE.evaluate((1, 2))


def test_interpolate_floor_family():
    q = interpolate(lambda t: floor_div(t[0], 2) + 1, 1, (2,), 1)
    assert q == FLOOR_HALF_PLUS_ONE


def test_interpolate_triangle_family():
    tri = SimplexSystem([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
    q = interpolate(lambda s: count_closure(tri, (0, 0, s[0])), 1, (1,), 2)
    assert dict(q.table[(0,)]) == {(0,): 1, (1,): Fraction(3, 2), (2,): HALF}


def test_interpolate_plain_polynomial():
    q = interpolate(lambda t: t[0] ** 2, 1, (1,), 2)
    assert dict(q.table[(0,)]) == {(2,): 1}


def test_interpolate_reports_wrong_structure():
    with pytest.raises(NotQuasipolynomialError):
        interpolate(lambda t: t[0] ** 2, 1, (1,), 1)
    with pytest.raises(NotQuasipolynomialError):
        interpolate(lambda t: floor_div(t[0], 3), 1, (2,), 4)


def test_interpolate_inverts_evaluate():
    rng = random.Random(77)
    for _ in range(6):
        period = (rng.choice((1, 2, 3)), rng.choice((1, 2)))
        degree = rng.choice((1, 2))
        table = {}
        for residue in itertools.product(range(period[0]), range(period[1])):
            table[residue] = {
                exps: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                for exps in itertools.product(range(degree + 1), repeat=2)
            }
        q = Quasipolynomial(2, period, degree, table)
        again = interpolate(q.evaluate, 2, period, degree)
        assert again == q


def test_lemma1_constant_summand():
    q = lemma1_sum(Quasipolynomial.constant(1), (), (1,), 2, "Q2")
    assert q == FLOOR_HALF_PLUS_ONE


def test_lemma1_identity_summand_closed_forms():
    ident = Quasipolynomial(1, (1,), 1, {(0,): {(1,): 1}})
    q2 = lemma1_sum(ident, (1,), (1,), 1, "Q2")
    # sum_{k=0}^{t0} (t1 + k) = (t0+1)*t1 + t0(t0+1)/2
    assert dict(q2.table[(0, 0)]) == {
        (0, 1): 1,
        (1, 1): 1,
        (2, 0): HALF,
        (1, 0): HALF,
    }
    q1 = lemma1_sum(ident, (1,), (1,), 1, "Q1")
    # sum_{k=1}^{t0-1} (t1 + k) = (t0-1)*t1 + t0(t0-1)/2
    assert dict(q1.table[(0, 0)]) == {
        (0, 1): -1,
        (1, 1): 1,
        (2, 0): HALF,
        (1, 0): -HALF,
    }


def _direct_sum(q, a, c, d, variant, t):
    cdot = sum(ci * ti for ci, ti in zip(c, t))
    k0, offset = (1, -1) if variant == "Q1" else (0, 0)
    hi = floor_div(cdot + offset, d)
    return signed_range_sum(
        k0, hi, lambda k: q.evaluate(tuple(ti + ai * k for ti, ai in zip(t[1:], a)))
    )


def test_lemma1_agrees_with_direct_signed_sums():
    periodic = Quasipolynomial(
        1,
        (2,),
        1,
        {(0,): {(0,): 2, (1,): 1}, (1,): {(0,): -HALF, (1,): HALF}},
    )
    for variant in ("Q1", "Q2"):
        for a, c, d in (((1,), (1, 0), 2), ((3,), (2, -1), 3), ((0,), (1, 1), -2)):
            q = lemma1_sum(periodic, a, c, d, variant)
            full_c = c + (0,) * (2 - len(c))
            for t0 in range(-7, 8):
                for t1 in range(-4, 5):
                    assert q.evaluate((t0, t1)) == _direct_sum(
                        periodic, a, full_c, d, variant, (t0, t1)
                    )


def test_faulhaber_examples():
    assert faulhaber(1, 4) == 10
    assert faulhaber(0) == (1, 1)  # N + 1
    assert faulhaber(2, 3) == 14


def test_faulhaber_matches_direct_sums():
    for j in range(5):
        for n in range(12):
            assert faulhaber(j, n) == sum(k**j for k in range(n + 1))


def test_faulhaber_signed_extension():
    # the closed form is the signed-sum continuation to negative N
    for j in range(4):
        for n in range(-8, 0):
            assert faulhaber(j, n) == signed_range_sum(0, n, lambda k: k**j)
