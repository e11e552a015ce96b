"""The closed form for rectangular rational triangles.

For the family a1*x >= t1, a2*y >= t2, c1*x + c2*y <= t3 the closure count
is a quadratic in the offsets plus periodic corrections built from
sawtooth values and Dedekind-Rademacher sums.  The same number also falls
out of residue bookkeeping for a rational generating function, which makes
a satisfying cross-check: count == -Res(z=1) - both root-of-unity totals.
"""

from latticecount import (
    TriangleDilation,
    TriangleSpec,
    count_closure_bruteforce,
    count_closure_triangle,
    count_interior_triangle,
    dedekind_rademacher_sum,
    dilation_vector,
    fourier_dedekind_numeric,
    nu_coefficients,
    residue_z1,
    to_simplex_system,
    unity_residue_sums,
)

spec = TriangleSpec(a1=2, a2=3, c1=3, c2=4)
print("triangle family: 2x >= t1, 3y >= t2, 3x + 4y <= t3")
for t in [(1, 1, 9), (2, -3, 12), (-4, 5, 11)]:
    dil = TriangleDilation(*t)
    count = count_closure_triangle(spec, dil)
    check = count_closure_bruteforce(to_simplex_system(spec), dilation_vector(dil))
    print(f"  t={t}: closed form {count}, enumeration {check}, "
          f"interior {count_interior_triangle(spec, dil)}")

dil = TriangleDilation(1, 1, 9)
nu0, nu1, nu2, nu3 = nu_coefficients(spec, dil)
print("\nperiodic coefficients at t=(1,1,9):")
print(f"  nu1={nu1}  nu2={nu2}  nu3={nu3}  nu0={nu0}")

r1 = residue_z1(spec, dil)
u1, u2 = unity_residue_sums(spec, dil)
print("\nresidue bookkeeping:")
print(f"  residue at z=1:            {r1}")
print(f"  total at c1-th roots:      {u1}")
print(f"  total at c2-th roots:      {u2}")
print(f"  -sum of the three:         {-r1 - u1 - u2}")
print(f"  closure count:             {count_closure_triangle(spec, dil)}")

print("\nthe root-of-unity totals are sawtooth sums in disguise;")
print("numerically, for c1=5, c2=3, exponent 7:")
from fractions import Fraction

exact = dedekind_rademacher_sum(5, 3, -7) - Fraction(1, 4 * 5)
print(f"  exact sawtooth side:  {float(exact):.12f}")
print(f"  complex-roots side:   {fourier_dedekind_numeric(5, 3, 7):.12f}")
