"""Doubled orthogonal polynomial systems: two same-family polynomial sets
with shifted parameters merged into one sequence P_0, P_1, ... carrying a
common discrete weight on a square-root support.

Three systems are written out in closed form (the first dual Hahn case and
the first two Hahn cases); for the rest only the matrix spectra exist in
closed form.  Even-index members are polynomials in q^2, odd-index members
are q times a polynomial in q^2; the support is symmetric about 0 and
coincides exactly with the spectrum of the corresponding two-diagonal
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .doubles import DoubleCase
from .exact import ScaledRoot, SqrtRational
from .families import (
    DualHahnParams,
    FamilyParams,
    HahnParams,
    dual_hahn_eval,
    dual_hahn_norm,
    dual_hahn_weight,
    hahn_eval,
    hahn_norm,
    hahn_weight,
)
from .matrices import InadmissibleParams, UnsupportedCase, double_matrix


class UnsupportedPoint(ValueError):
    """The evaluation point is not in the system's support set."""


SYSTEM_CASES = (DoubleCase.DUAL_HAHN_I, DoubleCase.HAHN_I, DoubleCase.HAHN_II)


@dataclass(frozen=True)
class EvenOddValue:
    """Value even + odd_coefficient * q of a doubled polynomial at a support
    point q; exactly one part is nonzero, depending on the index parity."""

    even: ScaledRoot
    odd_coefficient: ScaledRoot


@dataclass(frozen=True)
class DoubledSystem:
    case: DoubleCase
    params: FamilyParams

    def __post_init__(self):
        if self.case not in SYSTEM_CASES:
            raise UnsupportedCase(
                f"{self.case.value}: no closed doubled system; use its matrix spectrum"
            )
        if self.case is DoubleCase.DUAL_HAHN_I:
            if not isinstance(self.params, DualHahnParams):
                raise TypeError("dual Hahn parameters required")
            if not (self.params.gamma > -1 and self.params.delta > -1):
                raise InadmissibleParams("need gamma > -1 and delta > -1")
        else:
            if not isinstance(self.params, HahnParams):
                raise TypeError("Hahn parameters required")
            if not (self.params.alpha > -1 and self.params.beta > -1):
                raise InadmissibleParams("need alpha > -1 and beta > -1")

    @property
    def dim(self) -> int:
        N = self.params.N
        return 2 * N + 2 if self.case is DoubleCase.HAHN_I else 2 * N + 1

    def point_square(self, k: int) -> Fraction:
        """q^2 of the k-th nonnegative support point."""
        p = self.params
        if self.case is DoubleCase.DUAL_HAHN_I:
            return k * (k + p.gamma + p.delta + 1)
        if self.case is DoubleCase.HAHN_I:
            return k + p.alpha + 1
        return Fraction(k)

    def support(self) -> Tuple[SqrtRational, ...]:
        N = self.params.N
        pts: List[SqrtRational] = []
        for k in range(N + 1):
            s = self.point_square(k)
            if s == 0:
                pts.append(SqrtRational(0, Fraction(0)))
            else:
                pts.append(SqrtRational.sqrt(s))
                pts.append(-SqrtRational.sqrt(s))
        return tuple(sorted(pts))

    def point_index(self, q: SqrtRational) -> int:
        for k in range(self.params.N + 1):
            if self.point_square(k) == q.radicand:
                return k
        raise UnsupportedPoint(f"{q} is not in the support")

    def weight_at(self, k: int, q_is_zero: bool) -> Fraction:
        p = self.params
        if self.case is DoubleCase.DUAL_HAHN_I:
            w = dual_hahn_weight(k, p)
        else:
            w = hahn_weight(k, p)
        return 2 * w if q_is_zero else w

    def norm(self, n: int) -> Fraction:
        m = n // 2
        if self.case is DoubleCase.DUAL_HAHN_I:
            return dual_hahn_norm(m, self.params)
        return hahn_norm(m, self.params)

    def even_core(self, n: int, k: int) -> Fraction:
        """Base-family polynomial value entering P_{2n} at support index k."""
        p = self.params
        if self.case is DoubleCase.DUAL_HAHN_I:
            return dual_hahn_eval(n, k, p)
        return hahn_eval(n, k, p)

    def odd_core(self, n: int, k: int) -> Fraction:
        """Shifted-family polynomial value entering P_{2n+1}."""
        p = self.params
        if self.case is DoubleCase.DUAL_HAHN_I:
            hat = DualHahnParams(p.gamma + 1, p.delta + 1, p.N - 1)
            return dual_hahn_eval(n, Fraction(k - 1), hat)
        if self.case is DoubleCase.HAHN_I:
            hat = HahnParams(p.alpha + 1, p.beta, p.N)
            return hahn_eval(n, k, hat)
        hat = HahnParams(p.alpha + 1, p.beta, p.N - 1)
        return hahn_eval(n, Fraction(k - 1), hat)

    def odd_prefactor(self, n: int) -> ScaledRoot:
        """The constant multiplying q * (shifted polynomial) in P_{2n+1},
        including the overall 1/sqrt(2); its square is rational."""
        p = self.params
        if self.case is DoubleCase.DUAL_HAHN_I:
            g, d, N = p.gamma, p.delta, p.N
            return ScaledRoot(Fraction(-1, 1) / ((g + 1) * N),
                              (n + g + 1) * (N - n) / 2)
        a, b, N = p.alpha, p.beta, p.N
        s = a + b
        if self.case is DoubleCase.HAHN_I:
            rad = ((n + a + 1) * (n + s + 1) * (2 * n + 2 + s)
                   / (2 * (n + N + s + 2) * (2 * n + s + 1)))
            return ScaledRoot(Fraction(-1, 1) / (a + 1), rad)
        rad = ((N - n) * (n + a + 1) * (n + s + 1) * (2 * n + s + 2)
               / (2 * (2 * n + s + 1)))
        return ScaledRoot(Fraction(-1, 1) / ((a + 1) * N), rad)


def doubled_system(case: DoubleCase, params: FamilyParams) -> DoubledSystem:
    return DoubledSystem(case, params)


def doubled_eval(system: DoubledSystem, n: int, q: SqrtRational) -> EvenOddValue:
    """Exact even/odd decomposition of P_n(q) at a support point."""
    if not 0 <= n < system.dim:
        raise ValueError(f"index n={n} outside 0..{system.dim - 1}")
    k = system.point_index(q)
    sgn = Fraction((-1) ** (n // 2))
    if n % 2 == 0:
        core = system.even_core(n // 2, k)
        return EvenOddValue(ScaledRoot(sgn * core, Fraction(1, 2)), ScaledRoot.zero())
    pref = system.odd_prefactor(n // 2)
    core = system.odd_core(n // 2, k)
    return EvenOddValue(ScaledRoot.zero(), ScaledRoot(sgn * pref.coef * core, pref.radicand))


def verify_discrete_orthogonality(system: DoubledSystem) -> List[Fraction]:
    """Residues of sum_{q in S} w(q) P_n(q) P_m(q) = norm(n) delta_{nm},
    computed exactly through parity pairing.

    Mixed-parity sums vanish identically because the integrand is odd over
    the negation-closed support; they contribute exact zeros here.
    """
    N = system.params.N
    dim = system.dim
    even_top = dim - 1 - dim % 2  # largest even index
    res: List[Fraction] = []

    # grouping by k: the two points +-q_k each carry weight w(k), and the
    # lone q = 0 point carries the doubled weight 2 w(k); either way each k
    # contributes 2 w(k) times the (even in q) product value
    ks = range(N + 1)
    w = {k: system.weight_at(k, q_is_zero=False) for k in ks}
    q2 = {k: system.point_square(k) for k in ks}

    for n in range(dim):
        for m in range(n, dim):
            if (n - m) % 2 == 1:
                res.append(Fraction(0))
                continue
            expected = system.norm(n) if n == m else Fraction(0)
            if n % 2 == 0:
                i, j = n // 2, m // 2
                sgn = Fraction((-1) ** (i + j)) / 2
                total = sum(2 * w[k] * sgn * system.even_core(i, k) * system.even_core(j, k)
                            for k in ks)
                res.append(total - expected)
            else:
                i, j = n // 2, m // 2
                pi, pj = system.odd_prefactor(i), system.odd_prefactor(j)
                sgn = Fraction((-1) ** (i + j)) * pi.coef * pj.coef
                core = sum(2 * w[k] * q2[k] * system.odd_core(i, k) * system.odd_core(j, k)
                           for k in ks)
                if n == m:
                    res.append(sgn * pi.radicand * core - expected)
                else:
                    # prefactor sqrt(r_i r_j) is a common nonzero factor;
                    # orthogonality is equivalent to the rational core sum
                    res.append(sgn * core)
    return res


def support_matches_spectrum(system: DoubledSystem) -> bool:
    """Support set == closed-form spectrum of the case's matrix, exactly."""
    spec = double_matrix(system.case, system.params).spectrum
    return tuple(sorted(system.support())) == spec.entries


def degree_check(system: DoubledSystem, n: int) -> bool:
    """P_n has exact degree n in q: the polynomial-in-q^2 factor must have
    exact degree floor(n/2), checked by rational divided differences."""
    half = n // 2
    core = system.even_core if n % 2 == 0 else system.odd_core
    # nodes in the rational variable t = q^2; index k may exceed the grid,
    # where the evaluation is formal but still exact
    nodes = [system.point_square(k) for k in range(half + 2)]
    vals = [core(half, k) for k in range(half + 2)]
    top = _divided_difference(nodes[: half + 1], vals[: half + 1])
    beyond = _divided_difference(nodes, vals)
    return top != 0 and beyond == 0


def _divided_difference(nodes: List[Fraction], vals: List[Fraction]) -> Fraction:
    table = list(vals)
    k = len(nodes)
    for order in range(1, k):
        for i in range(k - order):
            table[i] = (table[i + 1] - table[i]) / (nodes[i + order] - nodes[i])
    return table[0]
