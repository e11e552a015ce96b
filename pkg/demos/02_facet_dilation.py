"""Sliding the facets of a triangle independently.

The standard triangle x >= 0, y >= 0, x + y <= 1 is the system
A = [[-1,0],[0,-1],[1,1]] with reference offsets (0, 0, 1).  Scaling all
offsets together is the classical dilation; here every facet gets its own
integer offset and the counts stay exactly computable.
"""

from latticecount import (
    SimplexSystem,
    count_closure,
    count_closure_bruteforce,
    count_interior,
    validate_dilation,
    vertices,
)

triangle = SimplexSystem([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])

print("classical dilation t = (0, 0, s):")
for s in range(1, 6):
    print(f"  s={s}: closure {count_closure(triangle, (0, 0, s)):3d}"
          f"  interior {count_interior(triangle, (0, 0, s)):3d}")

print("\nnow slide the facets separately:")
for t in [(0, 0, 3), (-1, 0, 3), (-1, -2, 3), (1, 1, 7), (2, 2, 3)]:
    report = validate_dilation(triangle, t)
    if not report.nonempty:
        print(f"  t={t}: empty")
        continue
    closure = count_closure(triangle, t)
    check = count_closure_bruteforce(triangle, t)
    corners = ", ".join(f"({v[0]},{v[1]})" for v in report.vertices)
    print(f"  t={t}: closure {closure} (enumeration {check}) vertices {corners}")

print("\ncandidate vertices carry an actual-vertex flag; an infeasible")
print("offset vector leaves every candidate outside its deleted facet:")
for point, actual in vertices(triangle, (0, 0, -1)):
    print(f"  candidate ({point[0]}, {point[1]}) actual={actual}")
