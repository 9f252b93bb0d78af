"""Deformed su(2)-type algebra realizations behind the dual Hahn matrices.

J_plus is twice the lower two-diagonal half of the case's matrix, J_minus
its transpose, J_0 an equidistant diagonal and P the alternating parity
diagonal.  Because J_plus J_minus and J_minus J_plus are diagonal with
rational entries 4 M_k^2, every commutator identity is verified over exact
rationals even though the matrix entries themselves contain square roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .doubles import DoubleCase, FamilyMismatch
from .exact import SqrtRational
from .families import DualHahnParams
from .matrices import InadmissibleParams, UnsupportedCase, double_matrix_squares

ALGEBRA_CASES = (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III)


@dataclass(frozen=True)
class StructureConstants:
    nu: Fraction
    sigma: Fraction
    rho: Fraction


@dataclass(frozen=True)
class AlgebraRealization:
    """Generators of one dual Hahn case in matrix form.

    j_plus_halves[k] is the k-th subdiagonal entry of J_plus / 2 (that is,
    M_k); J_minus is the transpose of J_plus; j0 is the diagonal of J_0 and
    parity the diagonal of P.
    """

    case: DoubleCase
    params: DualHahnParams
    j_plus_halves: tuple
    j0: tuple
    parity: tuple

    @property
    def dim(self) -> int:
        return len(self.j0)

    def commutator_diagonal(self) -> List[Fraction]:
        """Diagonal of [J_plus, J_minus], exactly: 4 (M_{i-1}^2 - M_i^2)
        with vanishing boundary terms."""
        sq = [m.square for m in self.j_plus_halves]
        out = []
        for i in range(self.dim):
            left = sq[i - 1] if i >= 1 else Fraction(0)
            right = sq[i] if i < len(sq) else Fraction(0)
            out.append(4 * (left - right))
        return out


def build_generators(case: DoubleCase, params: DualHahnParams) -> AlgebraRealization:
    if case not in ALGEBRA_CASES:
        raise UnsupportedCase(f"{case.value}: algebra realizations cover the dual Hahn cases")
    if not isinstance(params, DualHahnParams):
        raise FamilyMismatch("dual Hahn parameters required")
    dim, squares, _ = double_matrix_squares(case, params)
    halves = []
    for i, q in enumerate(squares):
        if q < 0:
            raise InadmissibleParams(f"M_{i}^2 = {q} < 0")
        halves.append(SqrtRational.sqrt(q))
    N = params.N
    if case is DoubleCase.DUAL_HAHN_III:
        j0 = tuple(Fraction(2 * k - 2 * N - 1, 2) for k in range(dim))
    else:
        j0 = tuple(Fraction(k - N) for k in range(dim))
    parity = tuple(Fraction((-1) ** k) for k in range(dim))
    return AlgebraRealization(case, params, tuple(halves), j0, parity)


def commutator_rhs(case: DoubleCase, params: DualHahnParams, j0: Fraction, p: Fraction) -> Fraction:
    """Case-specific closed form of the [J_plus, J_minus] diagonal at a
    basis index with J_0 entry j0 and parity p."""
    g, d, N = params.gamma, params.delta, params.N
    if case is DoubleCase.DUAL_HAHN_I:
        return 2 * j0 + 2 * (g + d + 1) * j0 * p - (2 * N + 1) * (g - d) * p + (g - d)
    if case is DoubleCase.DUAL_HAHN_II:
        return -2 * j0 + 2 * (g + d + 2 * N + 1) * j0 * p + (2 * N + 1) * (g - d) * p - (g - d)
    return (2 * j0 + 2 * (g - d) * j0 * p
            - ((2 * N + 2) * (g + d + 1) + (2 * g + 1) * (2 * d + 1)) * p + (g - d))


def verify_algebra(case: DoubleCase, params: DualHahnParams) -> Dict[str, List[Fraction]]:
    """Exact residues of all defining relations; every list must be zero.

    Relations with square-root entries (the ladder relations) reduce to
    rational coefficient identities because each matrix slot carries a
    single radicand.
    """
    alg = build_generators(case, params)
    res: Dict[str, List[Fraction]] = {}
    res["parity_squares"] = [p * p - 1 for p in alg.parity]
    res["parity_j0"] = [alg.parity[i] * alg.j0[i] - alg.j0[i] * alg.parity[i]
                        for i in range(alg.dim)]
    # (P J+ + J+ P)_{i,i-1} = 2 M_{i-1} (p_i + p_{i-1})
    res["parity_ladder"] = [alg.parity[i] + alg.parity[i - 1] for i in range(1, alg.dim)]
    # [J0, J+]_{i,i-1} = 2 M_{i-1} (j0_i - j0_{i-1}); must equal (J+)_{i,i-1}
    res["j0_ladder"] = [alg.j0[i] - alg.j0[i - 1] - 1 for i in range(1, alg.dim)]
    comm = alg.commutator_diagonal()
    res["commutator"] = [comm[i] - commutator_rhs(case, params, alg.j0[i], alg.parity[i])
                         for i in range(alg.dim)]
    return res


def commutator_sign(case: DoubleCase) -> int:
    """Sign relating [J_plus, J_minus] to the normal form
    2 J_0 + 2 nu J_0 P + (sigma/2) P + (rho/2) I.

    The second dual Hahn case realizes the negated normal form (its ladder
    operators match after the rescaling J_pm -> i J_pm, which flips the
    commutator); the other two realize it directly.
    """
    return -1 if case is DoubleCase.DUAL_HAHN_II else 1


def structure_constants(case: DoubleCase, params: DualHahnParams) -> StructureConstants:
    """(nu, sigma, rho) of the normal form, with the sign convention of
    commutator_sign."""
    if case not in ALGEBRA_CASES:
        raise UnsupportedCase(f"{case.value}: algebra realizations cover the dual Hahn cases")
    g, d, N = params.gamma, params.delta, params.N
    if case is DoubleCase.DUAL_HAHN_I:
        return StructureConstants(g + d + 1, -2 * (2 * N + 1) * (g - d), 2 * (g - d))
    if case is DoubleCase.DUAL_HAHN_II:
        return StructureConstants(-(g + d + 2 * N + 1), -2 * (2 * N + 1) * (g - d), 2 * (g - d))
    return StructureConstants(
        g - d,
        -2 * ((2 * N + 2) * (g + d + 1) + (2 * g + 1) * (2 * d + 1)),
        2 * (g - d),
    )


def verify_normal_form(case: DoubleCase, params: DualHahnParams) -> List[Fraction]:
    """Residues of [J+, J-] against sign * (2 J0 + 2 nu J0 P + sigma/2 P +
    rho/2 I) with the extracted structure constants; exact round trip."""
    alg = build_generators(case, params)
    sc = structure_constants(case, params)
    sgn = commutator_sign(case)
    comm = alg.commutator_diagonal()
    out = []
    for i in range(alg.dim):
        j0, p = alg.j0[i], alg.parity[i]
        nf = 2 * j0 + 2 * sc.nu * j0 * p + sc.sigma / 2 * p + sc.rho / 2
        out.append(comm[i] - sgn * nf)
    return out
