"""Tour of the two-diagonal test-matrix gallery.

The classic Sylvester-Kac matrix has integer eigenvalues -N, -N+2, ..., N.
Its odd and even two-parameter extensions keep closed-form spectra, and
every spectrum here is certified exactly by factoring the characteristic
polynomial in rational arithmetic.
"""

from fractions import Fraction as F

from twodiag import (
    charpoly,
    extended_kac_even,
    extended_kac_odd,
    sylvester_kac,
    verify_spectrum_exact,
)


def show(bundle):
    m = bundle.matrix
    print(f"\n{bundle.label}  (dimension {m.dim})")
    print("  superdiagonal:", [str(v) for v in m.sup])
    print("  subdiagonal:  ", [str(v) for v in m.sub])
    print("  eigenvalues:  ", ", ".join(f"{float(e):+.4g}" for e in bundle.spectrum.entries))
    print("  charpoly certificate:", verify_spectrum_exact(m, bundle.spectrum))


show(sylvester_kac(6))

# general parameters: eigenvalues 0, +-2 sqrt(k(gamma+delta+k+1))
show(extended_kac_odd(3, F(1, 2), F(1, 3)))

# delta = -gamma - 1 brings back an integer spectrum with one parameter free
show(extended_kac_odd(3, F(3, 4), F(-7, 4)))

# even dimensions: eigenvalues +-2 sqrt((gamma+k)(delta+k))
show(extended_kac_even(3, F(1, 2), F(1, 3)))

# gamma = delta = -1/2 collapses both extensions back to the classic matrix
assert extended_kac_odd(4, F(-1, 2), F(-1, 2)).matrix == sylvester_kac(8).matrix
assert extended_kac_even(4, F(-1, 2), F(-1, 2)).matrix == sylvester_kac(7).matrix
print("\nboth extensions reduce to the classic matrix at gamma = delta = -1/2")

poly = charpoly(sylvester_kac(3).matrix)
print("\ncharpoly of the 4x4 classic matrix (ascending):", [str(c) for c in poly])
print("factored: (l^2 - 1)(l^2 - 9)")
