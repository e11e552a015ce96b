"""Reciprocity and the quasipolynomial shape of the counting functions.

Evaluating the counters at negated offsets has no direct geometric
meaning; the recursion extends them there through a signed summation
convention.  On that extension interior(-t) == (-1)^n closure(t) holds for
every integer offset vector, and the counting functions become honest
quasipolynomials that can be reconstructed from finitely many samples.
"""

import random

from latticecount import (
    SimplexSystem,
    count_closure,
    count_interior,
    interpolate,
    lemma1_sum,
    reciprocity_check,
    Quasipolynomial,
)

triangle = SimplexSystem([[-1, 0], [0, -1], [2, 3]], [0, 0, 6])

print("reciprocity on the triangle x,y >= 0, 2x + 3y <= t3:")
for t in [(0, 0, 6), (0, -1, 5), (-2, 0, 9), (1, 1, 8)]:
    neg = tuple(-x for x in t)
    print(f"  t={t}: interior(-t) = {count_interior(triangle, neg):4d}, "
          f"closure(t) = {count_closure(triangle, t):4d}, "
          f"check {reciprocity_check(triangle, t)}")

rng = random.Random(0)
ok = all(
    reciprocity_check(triangle, tuple(rng.randint(-9, 9) for _ in range(3)))
    for _ in range(200)
)
print("200 random offset vectors, including empty regions:", ok)

# the classical family s -> closure(s * b) is a polynomial here; recover it
# from three samples and predict ahead
family = interpolate(
    lambda v: count_closure(triangle, tuple(v[0] * b for b in triangle.b)),
    num_vars=1, period=(1,), degree=2,
)
print("\nfitted classical-family polynomial:", dict(family.table[(0,)]))
print("prediction at s=10:", family.evaluate((10,)),
      "direct:", count_closure(triangle, (0, 0, 60)))

# floor-bounded sums of quasipolynomials close up again; summing the
# identity up to floor(t0/2) gives a period-2 table
identity = Quasipolynomial(1, (1,), 1, {(0,): {(1,): 1}})
summed = lemma1_sum(identity, a=(1,), c=(1, 0), d=2, variant="Q2")
print("\nsum_{k=0}^{floor(t0/2)} (t1 + k) has period", summed.period)
for residue, poly in sorted(summed.table.items()):
    print(f"  class {residue}: {dict(poly)}")
