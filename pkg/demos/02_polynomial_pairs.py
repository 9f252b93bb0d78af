"""The eleven ways a discrete family pairs with a shifted copy of itself.

Each case couples y_n and a parameter-shifted partner yhat_n through two
relations whose coefficients depend on one index only.  Both relations,
and the requirement system that classifies them, vanish to exact rational
zeros on the full grid.
"""

from fractions import Fraction as F

from twodiag import DoubleCase, DualHahnParams, HahnParams, RacahParams, coefficients
from twodiag.doubles import pair_grid_max_residue, requirements_grid_max_residue

params = {
    DualHahnParams: DualHahnParams(F(1, 2), F(1, 3), 5),
    HahnParams: HahnParams(F(2, 3), F(1, 5), 5),
    RacahParams: RacahParams(F(-6), F(15, 2), F(1, 3), F(1, 5), "alpha"),
}

print(f"{'case':12s} {'hatted parameter map':42s} {'pair':>6s} {'reqs':>6s}")
for case in DoubleCase:
    p = params[case.family]
    cs = coefficients(case, p)
    if isinstance(p, DualHahnParams):
        hat = f"(g,d,N) -> ({cs.hatted.gamma},{cs.hatted.delta},{cs.hatted.N})"
    elif isinstance(p, HahnParams):
        hat = f"(a,b,N) -> ({cs.hatted.alpha},{cs.hatted.beta},{cs.hatted.N})"
    else:
        h = cs.hatted
        hat = f"(a,b,g,d) -> ({h.alpha},{h.beta},{h.gamma},{h.delta})"
    rp = pair_grid_max_residue(cs)
    rq = requirements_grid_max_residue(cs)
    print(f"{case.value:12s} {hat:42s} {str(rp):>6s} {str(rq):>6s}")

print("\nzero residues everywhere: the classification data is exact")

# a flipped sign anywhere breaks at least one residue -- the checks bite
cs = coefficients(DoubleCase.DUAL_HAHN_I, params[DualHahnParams])
bad = cs.flipped("d_hat")
print("after flipping one coefficient sign:",
      "caught" if pair_grid_max_residue(bad) != 0 else "missed")
