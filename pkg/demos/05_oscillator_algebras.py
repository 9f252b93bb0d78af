"""Deformed su(2)-type algebras behind the dual Hahn matrices.

Splitting a two-diagonal matrix into raising/lowering halves J+ and J-
and adding an equidistant J0 and a parity diagonal P yields a two-parameter
deformation of su(2); at gamma = delta = -1/2 the deformation disappears.
The commutator [J+, J-] is diagonal and rational, so every relation is
checked exactly.
"""

from fractions import Fraction as F

from twodiag import DoubleCase, DualHahnParams, structure_constants, verify_algebra
from twodiag.oscillator import ALGEBRA_CASES, build_generators, verify_normal_form

print(f"{'case':12s} {'nu':>10s} {'sigma':>10s} {'rho':>8s}  all relations")
for gd in (F(1, 2), F(-1, 2)):
    p = DualHahnParams(gd, gd, 4)
    print(f"-- gamma = delta = {gd}")
    for case in ALGEBRA_CASES:
        sc = structure_constants(case, p)
        res = verify_algebra(case, p)
        flat = [r for v in res.values() for r in v] + verify_normal_form(case, p)
        ok = "exact" if all(r == 0 for r in flat) else "BROKEN"
        print(f"{case.value:12s} {str(sc.nu):>10s} {str(sc.sigma):>10s} "
              f"{str(sc.rho):>8s}  {ok}")

p = DualHahnParams(F(-1, 2), F(-1, 2), 3)
alg = build_generators(DoubleCase.DUAL_HAHN_I, p)
print("\nat gamma = delta = -1/2 the commutator diagonal is exactly 2 J0:")
print("  [J+,J-] =", [str(v) for v in alg.commutator_diagonal()])
print("     2 J0 =", [str(2 * j) for j in alg.j0])

g = F(-1, 4)
p1 = DualHahnParams(g, -g - 1, 4)
sc = structure_constants(DoubleCase.DUAL_HAHN_I, p1)
print(f"\ndelta = -gamma-1 keeps one parameter and no quadratic term: "
      f"nu={sc.nu}, sigma={sc.sigma}, rho={sc.rho}")
