"""The independent numeric oracle: Aberth-Ehrlich iteration with clustering.

Every radical answer in this library is cross-checked by a root finder that
knows nothing about radicals.  Multiplicities come from clustering, so a
multiplicity-6 root is detected as six iterates agreeing to 1e-6 -- which is
why the oracle works far above double precision.
"""

from fractions import Fraction as F

import centersolve as cs

# a polynomial with a multiplicity-6 root at 1/2 and a simple root at -1/3
eq = cs.from_plain_coeffs(
    [F(1), F(-8, 3), F(11, 4), F(-5, 4), F(5, 48), F(1, 8), F(-3, 64), F(1, 192)]
)
result = cs.numeric_roots(eq)
print("converged:", result.converged, "after", result.iterations, "iterations")
for root in result.roots:
    print(f"  {complex(root.value):.15g}   multiplicity {root.multiplicity}")
print(f"max scaled residual: {result.max_residual:.3g}")

# comparison reports locate the worst pair
radical = cs.solve_by_radicals(eq)
report = cs.compare_root_sets(radical, result, tol=1e-9)
print("\nradical vs oracle:", "pass" if report.passed else "FAIL",
      f"(max distance {report.max_distance:.3g})")

# and exact rational roots can be reconstructed from numeric seeds
coeffs = [F(1), F(-5), F(6), F(4), F(-8)]  # (x-2)^3 (x+1)
print("\nrational roots of x^4 - 5x^3 + 6x^2 + 4x - 8:")
for root, mult in cs.rational_roots(coeffs):
    print(f"  {root} with multiplicity {mult}")
