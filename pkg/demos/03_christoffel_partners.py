"""Kernel partners that stay inside the family.

Dividing y_{n+1} - a_n y_n by Lam(x) - Lam(nu) generally leaves the family;
for exactly one nu per doubling case the quotient is again a member with
shifted parameters.  The inverse (Geronimus) combination reconstructs the
original polynomials exactly.
"""

from fractions import Fraction as F

from twodiag import (
    DoubleCase,
    DualHahnParams,
    christoffel_kernel,
    christoffel_nu,
    dual_hahn_eval,
    geronimus_reconstruct,
)

g, d, N = F(1, 2), F(1, 3), 5
p = DualHahnParams(g, d, N)

for case in (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III):
    print(f"{case.value}: transform parameter nu = {christoffel_nu(case, p)}")

# at nu = 0 the kernel partner is the shifted-parameter family on a shifted
# grid, rescaled by -1/(N(gamma+1))
hat = DualHahnParams(g + 1, d + 1, N - 1)
print("\nkernel partner at nu = 0 vs -1/(N(g+1)) * shifted family:")
for n in range(3):
    row = []
    for x in range(1, 5):
        lhs = christoffel_kernel(p, 0, n, x)
        rhs = F(-1) / (N * (g + 1)) * dual_hahn_eval(n, x - 1, hat)
        row.append("ok" if lhs == rhs else f"{lhs}!={rhs}")
    print(f"  n={n}:", " ".join(row))

print("\nGeronimus reconstruction (A(n) P_n - b_n P_{n-1} == y_n):")
for n in range(4):
    vals = [geronimus_reconstruct(p, 0, n, x) == dual_hahn_eval(n, x, p)
            for x in range(1, N + 1)]
    print(f"  n={n}: {'exact' if all(vals) else 'MISMATCH'}")
