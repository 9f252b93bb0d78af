"""The eleven ways a Hahn, dual Hahn or Racah family pairs with a
parameter-shifted copy of itself through a two-term relation couple

    a(n) y_n(x)     + b(n) y_{n+1}(x)     = dhat(x) yhat_n(xhat),
    ahat(n) yhat_n(xhat) + bhat(n) yhat_{n+1}(xhat) = d(x) y_{n+1}(x),

with xhat = x + xshift.  Each case fixes the six coefficient functions, the
hatted parameter map and the shift; all identities verify to exact rational
zero on the full (n, x) grid.

Eliminating yhat reproduces the base family's three-term recurrence, which
pins the coefficient products to the recurrence data (the requirement
system checked by verify_requirements).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Callable

from .exact import RationalLike
from .families import (
    DualHahnParams,
    FamilyParams,
    HahnParams,
    RacahParams,
    family_eval,
    recurrence_data,
)


class FamilyMismatch(TypeError):
    """Parameters do not belong to the case's polynomial family."""


class DoubleCase(Enum):
    DUAL_HAHN_I = "DualHahnI"
    DUAL_HAHN_II = "DualHahnII"
    DUAL_HAHN_III = "DualHahnIII"
    HAHN_I = "HahnI"
    HAHN_II = "HahnII"
    HAHN_III = "HahnIII"
    HAHN_IV = "HahnIV"
    RACAH_I = "RacahI"
    RACAH_II = "RacahII"
    RACAH_III = "RacahIII"
    RACAH_IV = "RacahIV"

    @property
    def family(self) -> type:
        if self.name.startswith("DUAL"):
            return DualHahnParams
        if self.name.startswith("HAHN"):
            return HahnParams
        return RacahParams


DUAL_HAHN_CASES = (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III)
HAHN_CASES = (DoubleCase.HAHN_I, DoubleCase.HAHN_II, DoubleCase.HAHN_III, DoubleCase.HAHN_IV)
RACAH_CASES = (DoubleCase.RACAH_I, DoubleCase.RACAH_II, DoubleCase.RACAH_III, DoubleCase.RACAH_IV)


@dataclass(frozen=True)
class CoefficientSextet:
    """Coefficient data of one doubling case at fixed parameters.

    The overall gauge is fixed so that the requirement system holds with
    unit proportionality (a*ahat shifted = C-hat, b*bhat = A-hat, ...);
    rescaling relation 1 or relation 2 by a constant is the only freedom.
    """

    case: DoubleCase
    base: FamilyParams
    hatted: FamilyParams
    xshift: Fraction
    a: Callable[[int], Fraction]
    b: Callable[[int], Fraction]
    a_hat: Callable[[int], Fraction]
    b_hat: Callable[[int], Fraction]
    d: Callable[[Fraction], Fraction]
    d_hat: Callable[[Fraction], Fraction]

    def flipped(self, which: str) -> "CoefficientSextet":
        """Copy with one coefficient function sign-flipped (for mutation
        sensitivity checks)."""
        if which not in ("a", "b", "a_hat", "b_hat", "d", "d_hat"):
            raise ValueError(f"unknown coefficient {which!r}")
        old = getattr(self, which)
        return replace(self, **{which: lambda t, old=old: -old(t)})


def _require(params: FamilyParams, cls: type, case: DoubleCase) -> None:
    if not isinstance(params, cls):
        raise FamilyMismatch(f"{case.value} needs {cls.__name__}, got {type(params).__name__}")


def coefficients(case: DoubleCase, params: FamilyParams) -> CoefficientSextet:
    """The exact coefficient sextet of a doubling case."""
    F = Fraction
    if case in DUAL_HAHN_CASES:
        _require(params, DualHahnParams, case)
        g, d_, N = params.gamma, params.delta, params.N
        if case is DoubleCase.DUAL_HAHN_I:
            return CoefficientSextet(
                case, params,
                hatted=DualHahnParams(g + 1, d_ + 1, N - 1), xshift=F(-1),
                a=lambda n: F(1),
                b=lambda n: F(-1),
                a_hat=lambda n: -(n + 1) * (N - n + d_),
                b_hat=lambda n: (N - n - 1) * (n + g + 2),
                d=lambda x: N * (g + 1),
                d_hat=lambda x: x * (x + g + d_ + 1) / (N * (g + 1)),
            )
        if case is DoubleCase.DUAL_HAHN_II:
            return CoefficientSextet(
                case, params,
                hatted=DualHahnParams(g, d_, N - 1), xshift=F(0),
                a=lambda n: n - d_ - N,
                b=lambda n: -(n + g + 1),
                a_hat=lambda n: F(n + 1),
                b_hat=lambda n: F(-(n - N + 1)),
                d=lambda x: F(N),
                d_hat=lambda x: -(N - x) * (x + g + d_ + N + 1) / N,
            )
        return CoefficientSextet(
            case, params,
            hatted=DualHahnParams(g + 1, d_ - 1, N), xshift=F(0),
            a=lambda n: -(n - d_ - N),
            b=lambda n: F(n - N),
            a_hat=lambda n: F(-(n + 1)),
            b_hat=lambda n: n + g + 2,
            d=lambda x: g + 1,
            d_hat=lambda x: (x + g + 1) * (x + d_) / (g + 1),
        )

    if case in HAHN_CASES:
        _require(params, HahnParams, case)
        al, be, N = params.alpha, params.beta, params.N
        s = al + be
        if case is DoubleCase.HAHN_I:
            # relation 2 carries the opposite overall sign from relation 1's
            # natural gauge; d absorbs it so the requirement system closes.
            return CoefficientSextet(
                case, params,
                hatted=HahnParams(al + 1, be, N), xshift=F(0),
                a=lambda n: (n + s + N + 2) / (2 * n + s + 2),
                b=lambda n: -(N - n) / (2 * n + s + 2),
                a_hat=lambda n: (n + 1) * (n + be + 1) / (2 * n + s + 3),
                b_hat=lambda n: -(n + s + 2) * (n + al + 2) / (2 * n + s + 3),
                d=lambda x: -(al + 1),
                d_hat=lambda x: (al + x + 1) / (al + 1),
            )
        if case is DoubleCase.HAHN_II:
            return CoefficientSextet(
                case, params,
                hatted=HahnParams(al + 1, be, N - 1), xshift=F(-1),
                a=lambda n: 1 / (2 * n + s + 2),
                b=lambda n: -1 / (2 * n + s + 2),
                a_hat=lambda n: (n + 1) * (n + be + 1) * (n + s + N + 2) / (2 * n + s + 3),
                b_hat=lambda n: -(n + s + 2) * (N - n - 1) * (n + al + 2) / (2 * n + s + 3),
                d=lambda x: -N * (al + 1),
                d_hat=lambda x: x / (N * (al + 1)),
            )
        if case is DoubleCase.HAHN_III:
            return CoefficientSextet(
                case, params,
                hatted=HahnParams(al, be + 1, N), xshift=F(0),
                a=lambda n: (n + be + 1) * (n + N + 2 + s) / (2 * n + s + 2),
                b=lambda n: (N - n) * (n + al + 1) / (2 * n + s + 2),
                a_hat=lambda n: (n + 1) / (2 * n + s + 3),
                b_hat=lambda n: (n + s + 2) / (2 * n + s + 3),
                d=lambda x: F(1),
                d_hat=lambda x: be + 1 + N - x,
            )
        return CoefficientSextet(
            case, params,
            hatted=HahnParams(al, be + 1, N - 1), xshift=F(0),
            a=lambda n: (n + be + 1) / (2 * n + s + 2),
            b=lambda n: (n + al + 1) / (2 * n + s + 2),
            a_hat=lambda n: (n + 1) * (n + s + N + 2) / (2 * n + s + 3),
            b_hat=lambda n: (N - n - 1) * (n + s + 2) / (2 * n + s + 3),
            d=lambda x: F(N),
            d_hat=lambda x: (N - x) / N,
        )

    _require(params, RacahParams, case)
    al, be, ga, de = params.alpha, params.beta, params.gamma, params.delta
    s = al + be
    if case is DoubleCase.RACAH_I:
        return CoefficientSextet(
            case, params,
            hatted=RacahParams(al, be + 1, ga + 1, de - 1, params.minus_n), xshift=F(0),
            a=lambda n: -(n - de + al + 1) * (n + be + 1) / (2 * n + s + 2),
            b=lambda n: (n + be + de + 1) * (n + al + 1) / (2 * n + s + 2),
            a_hat=lambda n: -(n + 1) * (n - ga + s + 1) / (2 * n + s + 3),
            b_hat=lambda n: (n + s + 2) * (n + ga + 2) / (2 * n + s + 3),
            d=lambda x: ga + 1,
            d_hat=lambda x: (x + de) * (x + ga + 1) / (ga + 1),
        )
    if case is DoubleCase.RACAH_II:
        return CoefficientSextet(
            case, params,
            hatted=RacahParams(al, be + 1, ga, de, params.minus_n), xshift=F(0),
            a=lambda n: -(n - ga + s + 1) * (n + be + 1) / (2 * n + s + 2),
            b=lambda n: (n + ga + 1) * (n + al + 1) / (2 * n + s + 2),
            a_hat=lambda n: -(n + 1) * (n - de + al + 1) / (2 * n + s + 3),
            b_hat=lambda n: (n + be + de + 2) * (n + s + 2) / (2 * n + s + 3),
            d=lambda x: be + de + 1,
            d_hat=lambda x: (x + be + de + 1) * (x + ga - be) / (be + de + 1),
        )
    if case is DoubleCase.RACAH_III:
        return CoefficientSextet(
            case, params,
            hatted=RacahParams(al + 1, be, ga + 1, de + 1, params.minus_n), xshift=F(-1),
            a=lambda n: -1 / (2 * n + s + 2),
            b=lambda n: 1 / (2 * n + s + 2),
            a_hat=lambda n: -(n + 1) * (n - ga + s + 1) * (n - de + al + 1) * (n + be + 1) / (2 * n + s + 3),
            b_hat=lambda n: (n + ga + 2) * (n + be + de + 2) * (n + al + 2) * (n + s + 2) / (2 * n + s + 3),
            d=lambda x: (ga + 1) * (be + de + 1) * (al + 1),
            d_hat=lambda x: x * (x + ga + de + 1) / ((ga + 1) * (be + de + 1) * (al + 1)),
        )
    return CoefficientSextet(
        case, params,
        hatted=RacahParams(al + 1, be, ga, de, params.minus_n), xshift=F(0),
        a=lambda n: -(n - ga + s + 1) * (n - de + al + 1) / (2 * n + s + 2),
        b=lambda n: (n + ga + 1) * (n + be + de + 1) / (2 * n + s + 2),
        a_hat=lambda n: -(n + 1) * (n + be + 1) / (2 * n + s + 3),
        b_hat=lambda n: (n + al + 2) * (n + s + 2) / (2 * n + s + 3),
        d=lambda x: al + 1,
        d_hat=lambda x: (x + ga + de - al) * (x + al + 1) / (al + 1),
    )


def _lazy_sum(*terms) -> Fraction:
    """Sum coef*value(), never evaluating a polynomial whose coefficient is
    exactly zero (degree-edge terms)."""
    total = Fraction(0)
    for coef, value in terms:
        if coef != 0:
            total += coef * value()
    return total


def pair_residue_forward(cs: CoefficientSextet, n: int, x: RationalLike) -> Fraction:
    """Residue of relation 1; defined for n <= N-1 (and n <= Nhat)."""
    xf = Fraction(x)
    y = lambda k: family_eval(cs.base, k, xf)
    yh = lambda k: family_eval(cs.hatted, k, xf + cs.xshift)
    return _lazy_sum(
        (cs.a(n), lambda: y(n)),
        (cs.b(n), lambda: y(n + 1)),
        (-cs.d_hat(xf), lambda: yh(n)),
    )


def pair_residue_backward(cs: CoefficientSextet, n: int, x: RationalLike) -> Fraction:
    """Residue of relation 2; defined for n+1 <= Nhat (and n+1 <= N)."""
    xf = Fraction(x)
    y = lambda k: family_eval(cs.base, k, xf)
    yh = lambda k: family_eval(cs.hatted, k, xf + cs.xshift)
    return _lazy_sum(
        (cs.a_hat(n), lambda: yh(n)),
        (cs.b_hat(n), lambda: yh(n + 1)),
        (-cs.d(xf), lambda: y(n + 1)),
    )


def verify_pair(
    case: DoubleCase | CoefficientSextet,
    params: FamilyParams | None = None,
    n: int = 0,
    x: RationalLike = 0,
) -> tuple[Fraction, Fraction]:
    """Residues of the two coupling relations at one (n, x); both are zero
    exactly when the sextet is correct.

    Requires n+1 within both degree ranges.  Cases whose hatted family has
    Nhat = N-1 therefore stop at n = N-2 here; relation 1 alone extends to
    n = N-1 (see pair_residue_forward).
    """
    cs = case if isinstance(case, CoefficientSextet) else coefficients(case, params)
    if n + 1 > cs.hatted.N or n + 1 > cs.base.N:
        raise ValueError(f"n={n}: n+1 exceeds a degree range (N={cs.base.N}, Nhat={cs.hatted.N})")
    return pair_residue_forward(cs, n, x), pair_residue_backward(cs, n, x)


def verify_requirements(
    case: DoubleCase | CoefficientSextet,
    params: FamilyParams | None = None,
    n: int = 0,
    x: RationalLike = 0,
) -> list[Fraction]:
    """Residues of the requirement system that forces the pair relations to
    be compatible with both three-term recurrences.

    Order: [a*ahat - Chat, a*ahat(shift) - C, b*bhat - Ahat, b*bhat(shift) - A,
    both rearranged mixed conditions, and the Lam difference identity].
    """
    cs = case if isinstance(case, CoefficientSextet) else coefficients(case, params)
    rec = recurrence_data(cs.base)
    rech = recurrence_data(cs.hatted)
    xf = Fraction(x)
    xh = xf + cs.xshift
    a, b, ah, bh = cs.a, cs.b, cs.a_hat, cs.b_hat
    dd = cs.d(xf) * cs.d_hat(xf)
    res = [
        a(n) * ah(n - 1) - rech.C(n),
        a(n - 1) * ah(n - 1) - rec.C(n),
        b(n) * bh(n) - rech.A(n),
        b(n) * bh(n - 1) - rec.A(n),
        (a(n) * bh(n - 1) + ah(n) * b(n) + rech.A(n) + rech.C(n)) - (dd - rech.Lam(xh)),
        (a(n) * bh(n - 1) + ah(n - 1) * b(n - 1) + rec.A(n) + rec.C(n)) - (dd - rec.Lam(xf)),
        (rec.Lam(xf) - rech.Lam(xh))
        - (ah(n - 1) * (a(n) - a(n - 1) - b(n - 1)) + b(n) * (ah(n) + bh(n) - bh(n - 1))),
    ]
    return res


def pair_grid_max_residue(cs: CoefficientSextet, x_range=None) -> Fraction:
    """Largest |residue| of both relations over the full verification grid:
    relation 1 for n = 0..N-1, relation 2 for n+1 up to the hatted degree cap."""
    N = cs.base.N
    xs = range(N + 1) if x_range is None else x_range
    worst = Fraction(0)
    for x in xs:
        for n in range(N):
            worst = max(worst, abs(pair_residue_forward(cs, n, x)))
        for n in range(min(N, cs.hatted.N)):
            worst = max(worst, abs(pair_residue_backward(cs, n, x)))
    return worst


def requirements_grid_max_residue(cs: CoefficientSextet, n_range=None, x_range=None) -> Fraction:
    N = cs.base.N
    ns = range(N) if n_range is None else n_range
    xs = range(N + 1) if x_range is None else x_range
    worst = Fraction(0)
    for n in ns:
        for x in xs:
            worst = max(worst, *[abs(r) for r in verify_requirements(cs, n=n, x=x)])
    return worst


def locate_failure(cs: CoefficientSextet) -> str | None:
    """Human-readable location of the first nonzero pair or requirement
    residue on the verification grid, or None when everything is zero."""
    N = cs.base.N
    for x in range(N + 1):
        for n in range(N):
            r = pair_residue_forward(cs, n, x)
            if r != 0:
                return f"relation 1 at n={n}, x={x}: residue {r}"
        for n in range(min(N, cs.hatted.N)):
            r = pair_residue_backward(cs, n, x)
            if r != 0:
                return f"relation 2 at n={n}, x={x}: residue {r}"
        for n in range(N):
            res = verify_requirements(cs, n=n, x=x)
            for i, r in enumerate(res):
                if r != 0:
                    return f"requirement {i} at n={n}, x={x}: residue {r}"
    return None


def christoffel_nu(case: DoubleCase, params: FamilyParams) -> Fraction:
    """The kernel-transform parameter at which the case's base family maps
    onto its hatted partner."""
    _require(params, case.family, case)
    if case is DoubleCase.DUAL_HAHN_I:
        return Fraction(0)
    if case is DoubleCase.DUAL_HAHN_II:
        return Fraction(params.N)
    if case is DoubleCase.DUAL_HAHN_III:
        return -params.delta
    if case is DoubleCase.HAHN_I:
        return -params.alpha - 1
    if case is DoubleCase.HAHN_II:
        return Fraction(0)
    if case is DoubleCase.HAHN_III:
        return params.N + params.beta + 1
    if case is DoubleCase.HAHN_IV:
        return Fraction(params.N)
    if case is DoubleCase.RACAH_I:
        return -params.delta
    if case is DoubleCase.RACAH_II:
        return params.beta - params.gamma
    if case is DoubleCase.RACAH_III:
        return Fraction(0)
    return -params.alpha - 1
