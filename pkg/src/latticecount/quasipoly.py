"""Multivariate quasipolynomials: evaluation, exact interpolation, summation.

A quasipolynomial in m integer variables is a polynomial whose coefficients
are periodic; here it is stored as one ordinary polynomial (rational
coefficients, monomial dict) per residue class of t modulo a period vector.
Evaluation picks the class of t and evaluates its polynomial at t itself.

`interpolate` reconstructs such an object from a black-box counting
function by exact tensor-grid fits, one per residue class, and then checks
extra holdout samples so a wrong (period, degree) guess is reported rather
than silently fitted.  `lemma1_sum` closes a signed sum of a
quasipolynomial along an arithmetic progression with a floor-bounded upper
limit into a new quasipolynomial in one extra variable; it works by
interpolation with provable period/degree bounds instead of expanding the
textbook Faulhaber construction symbolically (same object, far less
algebra to get wrong).  `faulhaber` keeps the univariate power-sum closed
forms available for the cases where the symbolic route is trivial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from ._linalg import solve_rational
from .core import LatticeCountError, Rational, floor_div
from .recursion import signed_range_sum

Counter = Callable[[tuple[int, ...]], "Rational | int"]


class NotQuasipolynomialError(LatticeCountError):
    """Holdout samples contradict the requested (period, degree) structure."""


def _poly_eval(coeffs: Mapping[tuple[int, ...], Fraction], point: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for exps, coeff in coeffs.items():
        term = coeff
        for x, e in zip(point, exps):
            if e:
                term *= Fraction(x) ** e
        total += term
    return total


@dataclass(frozen=True, eq=True)
class Quasipolynomial:
    """Residue-class table of polynomials with a per-variable period.

    num_vars  number of integer variables (0 is allowed: a constant).
    period    one positive integer per variable.
    degree    per-variable degree bound of every class polynomial.
    table     maps each residue tuple (t mod period) to a polynomial given
              as {exponent tuple: coefficient}; zero coefficients are
              dropped on construction so equality is structural.
    """

    num_vars: int
    period: tuple[int, ...]
    degree: int
    table: Mapping[tuple[int, ...], Mapping[tuple[int, ...], Fraction]]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        period = tuple(int(p) for p in self.period)
        if len(period) != self.num_vars or any(p < 1 for p in period):
            raise ValueError("period must hold one positive integer per variable")
        classes = set(itertools.product(*(range(p) for p in period)))
        normalized: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        for residue, poly in self.table.items():
            key = tuple(residue)
            if key not in classes:
                raise ValueError(f"unexpected residue class {key}")
            clean: dict[tuple[int, ...], Fraction] = {}
            for exps, coeff in poly.items():
                e = tuple(exps)
                if len(e) != self.num_vars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent tuple {e}")
                if any(x > self.degree for x in e):
                    raise ValueError(f"exponent {e} exceeds degree bound {self.degree}")
                c = Fraction(coeff)
                if c != 0:
                    clean[e] = c
            normalized[key] = clean
        if set(normalized) != classes:
            raise ValueError("table must cover every residue class exactly once")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "table", normalized)

    def evaluate(self, t: Sequence[int]) -> Fraction:
        """Value at an integer point (exact)."""
        point = tuple(t)
        if len(point) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} variables, got {len(point)}")
        residue = tuple(x % p for x, p in zip(point, self.period))
        return _poly_eval(self.table[residue], point)

    @staticmethod
    def constant(value: Rational | int) -> "Quasipolynomial":
        """The zero-variable quasipolynomial with the given value."""
        return Quasipolynomial(0, (), 0, {(): {(): Fraction(value)}})


def _fit_univariate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    """Ascending coefficients of the unique degree<len(xs) polynomial through the data."""
    rows = [[Fraction(x) ** j for j in range(len(xs))] for x in xs]
    return list(solve_rational(rows, ys))


def _fit_tensor(
    values: Mapping[tuple[int, ...], Fraction], nodes: Sequence[Sequence[int]]
) -> dict[tuple[int, ...], Fraction]:
    """Exact tensor-product interpolation on a grid indexed by node positions."""
    if not nodes:
        return {(): values[()]}
    head, tail = nodes[0], nodes[1:]
    # Interpolate along the first variable for every fixed tail index, then
    # recurse on the coefficient arrays.
    tail_indices = list(itertools.product(*(range(len(n)) for n in tail)))
    layers: list[dict[tuple[int, ...], Fraction]] = [dict() for _ in range(len(head))]
    for t_idx in tail_indices:
        ys = [values[(k,) + t_idx] for k in range(len(head))]
        coeffs = _fit_univariate(head, ys)
        for j, c in enumerate(coeffs):
            layers[j][t_idx] = c
    result: dict[tuple[int, ...], Fraction] = {}
    for j, layer in enumerate(layers):
        sub = _fit_tensor(layer, tail)
        for exps, coeff in sub.items():
            if coeff != 0:
                result[(j,) + exps] = coeff
    return result


def interpolate(
    counter: Counter,
    num_vars: int,
    period: Sequence[int],
    degree: int,
    holdout: bool = True,
) -> Quasipolynomial:
    """Reconstruct a quasipolynomial from a black-box integer-point function.

    For each residue class r modulo the period vector, the counter is
    sampled on the tensor grid r_i + period_i * k (k = 0..degree) and the
    unique polynomial with per-variable degree <= degree through those
    samples is solved for exactly.  When `holdout` is set, the fit is then
    checked at shifted grid points; a mismatch raises
    NotQuasipolynomialError, meaning the counter is not quasipolynomial
    with the requested period/degree on the sampled region.
    """
    period = tuple(int(p) for p in period)
    if len(period) != num_vars or any(p < 1 for p in period):
        raise ValueError("period must hold one positive integer per variable")
    if degree < 0:
        raise ValueError("degree must be >= 0")

    table: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    for residue in itertools.product(*(range(p) for p in period)):
        nodes = [
            [residue[i] + period[i] * k for k in range(degree + 1)]
            for i in range(num_vars)
        ]
        values = {
            idx: Fraction(counter(tuple(nodes[i][k] for i, k in enumerate(idx))))
            for idx in itertools.product(*(range(degree + 1) for _ in range(num_vars)))
        }
        table[residue] = _fit_tensor(values, nodes)

    q = Quasipolynomial(num_vars, period, degree, table)
    if holdout and num_vars > 0:
        shift = degree + 1
        for residue in itertools.product(*(range(p) for p in period)):
            probes = [tuple(residue[i] + period[i] * shift for i in range(num_vars))]
            for axis in range(num_vars):
                probes.append(
                    tuple(
                        residue[i] + period[i] * (shift if i == axis else 0)
                        for i in range(num_vars)
                    )
                )
            for t in probes:
                if q.evaluate(t) != Fraction(counter(t)):
                    raise NotQuasipolynomialError(
                        f"not quasipolynomial with period {period} and degree "
                        f"{degree}: holdout sample at t={t} disagrees"
                    )
    return q


def lemma1_sum(
    q: Quasipolynomial,
    a: Sequence[int],
    c: Sequence[int],
    d: int,
    variant: str,
) -> Quasipolynomial:
    """Close a floor-bounded signed sum of q into a quasipolynomial.

    With t = (t0, t1, ..., tm) and K = floor((c . t - 1)/d) for variant
    "Q1" or floor((c . t)/d) for variant "Q2", the returned object equals

        sum_{k = k0}^{K} q(t1 + a1*k, ..., tm + am*k)

    (k0 = 1 for Q1, k0 = 0 for Q2) for every integer t under the signed
    finite-sum convention.  `c` may be shorter than m+1; it is padded with
    zeros on the right.  The construction samples the sum directly and
    interpolates with conservative period and degree bounds: shifting k by
    p' = lcm_i(period_i / gcd(period_i, a_i)) fixes all arguments of q, so
    the sum is quasipolynomial with period |d|*p' in t0, lcm(period_i,
    |d|*p') in t_i, and per-variable degree deg(q) + 1.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    if variant not in ("Q1", "Q2"):
        raise ValueError("variant must be 'Q1' or 'Q2'")
    shifts = tuple(int(x) for x in a)
    if len(shifts) != q.num_vars:
        raise ValueError(f"expected {q.num_vars} shift entries, got {len(shifts)}")
    limit_coeffs = tuple(int(x) for x in c)
    if len(limit_coeffs) > q.num_vars + 1:
        raise ValueError("too many upper-limit coefficients")
    limit_coeffs = limit_coeffs + (0,) * (q.num_vars + 1 - len(limit_coeffs))
    k0 = 1 if variant == "Q1" else 0
    offset = -1 if variant == "Q1" else 0

    def counter(t: tuple[int, ...]) -> Fraction:
        cdot = sum(ci * ti for ci, ti in zip(limit_coeffs, t))
        hi = floor_div(cdot + offset, d)
        args = t[1:]

        def term(k: int) -> Fraction:
            return q.evaluate(tuple(ti + ai * k for ti, ai in zip(args, shifts)))

        return Fraction(signed_range_sum(k0, hi, term))

    common = abs(d) * math.lcm(
        *(p // math.gcd(p, s) for p, s in zip(q.period, shifts)), 1
    )
    period = (common,) + tuple(math.lcm(p, common) for p in q.period)
    return interpolate(counter, q.num_vars + 1, period, q.degree + 1)


@lru_cache(maxsize=None)
def _faulhaber_coeffs(j: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{N} k^j as ascending coefficients in N, via the classical
    # recurrence (N+1)^(j+1) = sum_{i<=j} binom(j+1, i) S_i(N).
    binom_row = [math.comb(j + 1, i) for i in range(j + 2)]
    coeffs = [Fraction(binom_row[i]) for i in range(j + 2)]  # (N+1)^(j+1)
    for i in range(j):
        lower = _faulhaber_coeffs(i)
        for e, coeff in enumerate(lower):
            coeffs[e] -= math.comb(j + 1, i) * coeff
    return tuple(x / (j + 1) for x in coeffs)


def faulhaber(j: int, n: int | None = None):
    """Closed form of sum_{k=0}^{N} k^j (0^0 = 1).

    Returns the exact value when `n` is given, otherwise the ascending
    coefficient tuple of the degree-(j+1) polynomial in N.
    """
    if j < 0:
        raise ValueError("power must be nonnegative")
    coeffs = _faulhaber_coeffs(j)
    if n is None:
        return coeffs
    return sum((c * Fraction(n) ** e for e, c in enumerate(coeffs)), Fraction(0))
