"""Counting lattice points in rational intervals, one floor at a time.

A 1-dimensional "simplex" is an interval with rational endpoints.  Writing
it as two inequalities a1*x <= t1, a2*x <= t2 and letting each side move
independently already shows everything this library is about: counts are
floor expressions, and evaluating them at negated offsets flips interior
and closure.
"""

from latticecount import (
    SimplexSystem,
    count_closure,
    count_closure_bruteforce,
    count_interior,
    count_interior_bruteforce,
    floor_div,
    validate_dilation,
)

# the interval 1/2 <= x <= 7/3, i.e. -2x <= -1 and 3x <= 7
interval = SimplexSystem([[-2], [3]], [-1, 7])
t = (-1, 7)

report = validate_dilation(interval, t)
print("endpoints:", [v[0] for v in report.vertices])
print("closure count:", count_closure(interval, t))
print("interior count:", count_interior(interval, t))
print("brute force agrees:",
      count_closure(interval, t) == count_closure_bruteforce(interval, t),
      count_interior(interval, t) == count_interior_bruteforce(interval, t))

# the counts are floor expressions; for 0 <= x <= s/3 the closure holds
# floor(s/3) + 1 points
stretch = SimplexSystem([[-1], [3]], [0, 1])
print("\nclosure of 0 <= x <= s/3 for s = 0..8:")
print([count_closure(stretch, (0, s)) for s in range(9)])
print("floor(s/3) + 1 for s = 0..8:   ")
print([floor_div(s, 3) + 1 for s in range(9)])

# negate both offsets and the interior counter returns minus the closure
# count: the 1-dimensional reciprocity law
neg = tuple(-x for x in t)
print("\ninterior at -t:", count_interior(interval, neg))
print("-closure at t: ", -count_closure(interval, t))
