"""Two-diagonal test matrices with closed-form spectra.

Covers the classic Sylvester-Kac (Clement) matrix, its odd and even
two-parameter extensions, the symmetric tridiagonal matrix of every
implemented doubling case together with its orthogonal eigenvector matrix,
and the integer-friendly non-symmetric forms.  Spectra are certified
exactly through the characteristic polynomial, which for a zero-diagonal
tridiagonal matrix depends only on the superdiagonal-subdiagonal products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .doubles import DoubleCase, FamilyMismatch
from .exact import RationalLike, ScaledRoot, SqrtRational
from .families import (
    DualHahnParams,
    FamilyParams,
    HahnParams,
    RacahParams,
    family_eval,
    family_norm,
    family_weight,
)


class NegativeProduct(ValueError):
    """A superdiagonal-subdiagonal product is negative; the symmetrized
    matrix would need imaginary entries."""


class InadmissibleParams(ValueError):
    """Parameters put a weight, norm or matrix radicand outside the range
    where real square roots exist."""


class UnsupportedCase(ValueError):
    """No closed matrix construction is implemented for this case."""


# ---------------------------------------------------------------------------
# matrix containers

@dataclass(frozen=True)
class TwoDiagonal:
    """Tridiagonal matrix with zero diagonal, stored by its superdiagonal
    and subdiagonal."""

    sup: Tuple[Fraction, ...]
    sub: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.sup) != len(self.sub):
            raise ValueError("superdiagonal and subdiagonal lengths differ")
        object.__setattr__(self, "sup", tuple(Fraction(v) for v in self.sup))
        object.__setattr__(self, "sub", tuple(Fraction(v) for v in self.sub))

    @property
    def dim(self) -> int:
        return len(self.sup) + 1

    def products(self) -> List[Fraction]:
        return [b * c for b, c in zip(self.sup, self.sub)]

    def to_dense(self) -> np.ndarray:
        d = self.dim
        out = np.zeros((d, d))
        for i, (b, c) in enumerate(zip(self.sup, self.sub)):
            out[i, i + 1] = float(b)
            out[i + 1, i] = float(c)
        return out


@dataclass(frozen=True)
class SymTridiag:
    """Symmetric zero-diagonal tridiagonal matrix with offdiagonal entries
    sqrt(square_i) >= 0."""

    offdiagonal: Tuple[SqrtRational, ...]

    @property
    def dim(self) -> int:
        return len(self.offdiagonal) + 1

    def products(self) -> List[Fraction]:
        return [m.square for m in self.offdiagonal]

    def offdiag_floats(self) -> List[float]:
        return [float(m) for m in self.offdiagonal]

    def to_dense(self) -> np.ndarray:
        d = self.dim
        out = np.zeros((d, d))
        for i, m in enumerate(self.offdiagonal):
            out[i, i + 1] = out[i + 1, i] = float(m)
        return out


@dataclass(frozen=True)
class Spectrum:
    """Closed-form eigenvalue list, sorted ascending, closed under negation."""

    entries: Tuple[SqrtRational, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.entries))
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def symmetric(cls, positive_squares: Iterable[RationalLike], zeros: int = 0) -> "Spectrum":
        """Spectrum {+-sqrt(s)} for each listed square plus a number of zeros."""
        entries: List[SqrtRational] = [SqrtRational(0, Fraction(0))] * zeros
        for s in positive_squares:
            s = Fraction(s)
            if s <= 0:
                raise InadmissibleParams(f"eigenvalue square {s} is not positive")
            entries.append(SqrtRational(1, s))
            entries.append(SqrtRational(-1, s))
        return cls(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def zero_count(self) -> int:
        return sum(1 for e in self.entries if e.sign == 0)

    def positive_squares(self) -> List[Fraction]:
        return [e.radicand for e in self.entries if e.sign > 0]

    def scaled(self, factor: RationalLike) -> "Spectrum":
        f = Fraction(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        return Spectrum(tuple(SqrtRational(e.sign, e.radicand * f * f) for e in self.entries))

    def floats(self) -> List[float]:
        return [float(e) for e in self.entries]

    def is_negation_closed(self) -> bool:
        pos = sorted(self.positive_squares())
        neg = sorted(e.radicand for e in self.entries if e.sign < 0)
        return pos == neg


@dataclass(frozen=True)
class MatrixWithSpectrum:
    label: str
    matrix: TwoDiagonal | SymTridiag
    spectrum: Spectrum


# ---------------------------------------------------------------------------
# characteristic polynomial machinery

def charpoly_from_products(products: Sequence[RationalLike]) -> List[Fraction]:
    """Coefficients (ascending powers) of det(lambda I - A) for a
    zero-diagonal tridiagonal A with the given offdiagonal products, via the
    principal-minor recurrence p_k = lambda p_{k-1} - q_{k-1} p_{k-2}."""
    prev = [Fraction(1)]          # p_0
    cur = [Fraction(0), Fraction(1)]  # p_1 = lambda
    for q in products:
        q = Fraction(q)
        nxt = [Fraction(0)] + cur            # lambda * p_k
        for i, coef in enumerate(prev):
            nxt[i] -= q * coef
        prev, cur = cur, nxt
    return cur


def charpoly(m: TwoDiagonal | SymTridiag) -> List[Fraction]:
    return charpoly_from_products(m.products())


def _poly_mul_lam2_minus(poly: List[Fraction], s: Fraction) -> List[Fraction]:
    """Multiply an ascending-coefficient polynomial by (lambda^2 - s)."""
    out = [Fraction(0)] * (len(poly) + 2)
    for i, c in enumerate(poly):
        out[i + 2] += c
        out[i] -= s * c
    return out


def spectrum_poly(zeros: int, squares: Sequence[RationalLike]) -> List[Fraction]:
    poly = [Fraction(1)]
    for s in squares:
        poly = _poly_mul_lam2_minus(poly, Fraction(s))
    return [Fraction(0)] * zeros + poly


def verify_spectrum_exact(m: TwoDiagonal | SymTridiag, s: Spectrum) -> bool:
    """True iff charpoly(m) equals lambda^z prod(lambda^2 - eps_k^2) exactly."""
    if m.dim != s.dim or not s.is_negation_closed():
        return False
    return charpoly(m) == spectrum_poly(s.zero_count(), s.positive_squares())


def verify_squares_exact(products: Sequence[RationalLike], zeros: int,
                         squares: Sequence[RationalLike]) -> bool:
    """Charpoly certificate from raw data; works even when squares are
    negative rationals (imaginary-eigenvalue parameter ranges)."""
    return charpoly_from_products(products) == spectrum_poly(zeros, squares)


def symmetrize(m: TwoDiagonal) -> SymTridiag:
    """Offdiagonal sqrt(b_i c_i); the spectrum is unchanged.  Raises
    NegativeProduct when some b_i c_i < 0."""
    off = []
    for i, q in enumerate(m.products()):
        if q < 0:
            raise NegativeProduct(f"product b_{i} c_{i} = {q} < 0")
        off.append(SqrtRational.sqrt(q))
    return SymTridiag(tuple(off))


def similarity_scale_squares(m: TwoDiagonal) -> List[Fraction]:
    """Squares d_i^2 of the diagonal similarity D with D^-1 A D symmetric:
    d_0 = 1, d_{i+1}/d_i = sqrt(c_i/b_i)."""
    out = [Fraction(1)]
    for b, c in zip(m.sup, m.sub):
        if b == 0:
            raise ZeroDivisionError("superdiagonal entry is zero; no diagonal similarity")
        out.append(out[-1] * c / b)
    return out


# ---------------------------------------------------------------------------
# the classic gallery

def sylvester_kac(N: int) -> MatrixWithSpectrum:
    """Superdiagonal 1..N, subdiagonal N..1, eigenvalues -N, -N+2, ..., N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    mat = TwoDiagonal(tuple(Fraction(k) for k in range(1, N + 1)),
                      tuple(Fraction(k) for k in range(N, 0, -1)))
    entries = tuple(SqrtRational.of(-N + 2 * k) for k in range(N + 1))
    return MatrixWithSpectrum(f"kac(N={N})", mat, Spectrum(entries))


def extended_kac_odd(N: int, gamma: RationalLike, delta: RationalLike) -> MatrixWithSpectrum:
    """(2N+1)-dimensional two-parameter extension; eigenvalues
    0, +-2 sqrt(k(gamma+delta+k+1)), k = 1..N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    g, d = Fraction(gamma), Fraction(delta)
    sup: List[Fraction] = []
    sub: List[Fraction] = []
    for j in range(N):
        sup.extend([2 * g + 2 * j + 2, Fraction(2 * j + 2)])
        sub.extend([Fraction(2 * N - 2 * j), 2 * d + 2 * N - 2 * j])
    mat = TwoDiagonal(tuple(sup), tuple(sub))
    spec = Spectrum.symmetric([4 * k * (g + d + k + 1) for k in range(1, N + 1)], zeros=1)
    return MatrixWithSpectrum(f"kac-odd(N={N})", mat, spec)


def extended_kac_even(N: int, gamma: RationalLike, delta: RationalLike) -> MatrixWithSpectrum:
    """(2N)-dimensional extension; eigenvalues +-2 sqrt((gamma+k)(delta+k)),
    k = 1..N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    g, d = Fraction(gamma), Fraction(delta)
    sup: List[Fraction] = []
    sub: List[Fraction] = []
    for j in range(N):
        sup.append(2 * g + 2 * j + 2)
        sub.append(2 * d + 2 * N - 2 * j)
        if j < N - 1:
            sup.append(Fraction(2 * j + 2))
            sub.append(Fraction(2 * N - 2 * j - 2))
    mat = TwoDiagonal(tuple(sup), tuple(sub))
    spec = Spectrum.symmetric([4 * (g + k) * (d + k) for k in range(1, N + 1)])
    return MatrixWithSpectrum(f"kac-even(N={N})", mat, spec)


# ---------------------------------------------------------------------------
# doubling-case matrices

def _racah_alpha_cap(params: FamilyParams, case: DoubleCase) -> RacahParams:
    if not isinstance(params, RacahParams):
        raise FamilyMismatch(f"{case.value} needs RacahParams")
    if params.minus_n != "alpha":
        raise UnsupportedCase(
            f"{case.value}: closed matrix form implemented for the alpha degree cap only"
        )
    return params


def double_matrix_squares(case: DoubleCase, params: FamilyParams) -> Tuple[int, List[Fraction], List[Fraction]]:
    """(dimension, offdiagonal squares M_k^2, eigenvalue squares with zeros
    omitted) for a doubling case; purely rational, no realness requirement."""
    if not isinstance(params, case.family):
        raise FamilyMismatch(
            f"{case.value} needs {case.family.__name__}, got {type(params).__name__}")
    if case is DoubleCase.DUAL_HAHN_I:
        g, d, N = params.gamma, params.delta, params.N
        sq = []
        for k in range(N):
            sq.extend([(k + g + 1) * (N - k), (k + 1) * (N + d - k)])
        return 2 * N + 1, sq, [k * (k + g + d + 1) for k in range(1, N + 1)]
    if case is DoubleCase.DUAL_HAHN_II:
        g, d, N = params.gamma, params.delta, params.N
        sq = []
        for k in range(N):
            sq.extend([(N + d - k) * (N - k), (k + 1) * (k + g + 1)])
        return 2 * N + 1, sq, [k * (g + d + 1 + 2 * N - k) for k in range(1, N + 1)]
    if case is DoubleCase.DUAL_HAHN_III:
        g, d, N = params.gamma, params.delta, params.N
        sq = []
        for k in range(N + 1):
            sq.append((k + g + 1) * (N + d + 1 - k))
            if k < N:
                sq.append(Fraction((k + 1) * (N - k)))
        return 2 * N + 2, sq, [(k + g + 1) * (k + d + 1) for k in range(N + 1)]
    if case in (DoubleCase.HAHN_I, DoubleCase.HAHN_III):
        a, b, N = params.alpha, params.beta, params.N
        if case is DoubleCase.HAHN_III:
            a, b = b, a
        s = a + b
        sq = []
        for k in range(N + 1):
            sq.append((k + a + 1) * (k + s + 1) * (k + s + 2 + N)
                      / ((2 * k + s + 1) * (2 * k + s + 2)))
            if k < N:
                sq.append((k + b + 1) * (k + 1) * (N - k)
                          / ((2 * k + s + 2) * (2 * k + s + 3)))
        return 2 * N + 2, sq, [k + a + 1 for k in range(N + 1)]
    if case in (DoubleCase.HAHN_II, DoubleCase.HAHN_IV):
        a, b, N = params.alpha, params.beta, params.N
        if case is DoubleCase.HAHN_IV:
            a, b = b, a
        s = a + b
        sq = []
        for k in range(N):
            sq.append((k + a + 1) * (k + s + 1) * (N - k)
                      / ((2 * k + s + 1) * (2 * k + s + 2)))
            sq.append((k + b + 1) * (k + s + 2 + N) * (k + 1)
                      / ((2 * k + s + 2) * (2 * k + s + 3)))
        return 2 * N + 1, sq, [Fraction(k) for k in range(1, N + 1)]
    if case is DoubleCase.RACAH_I:
        p = _racah_alpha_cap(params, case)
        b, g, d, N = p.beta, p.gamma, p.delta, p.N
        sq = []
        for k in range(N + 1):
            sq.append((N - b - k) * (g + 1 + k) * (N + d + 1 - k) * (k + b + 1)
                      / ((N - b - 2 * k) * (2 * k - N + 1 + b)))
            if k < N:
                sq.append((g + N - b - k) * (k + 1) * (N - k) * (k + b + d + 2)
                          / ((N - b - 2 * k - 2) * (2 * k - N + 1 + b)))
        return 2 * N + 2, sq, [(k + g + 1) * (k + d + 1) for k in range(N + 1)]
    if case is DoubleCase.RACAH_III:
        p = _racah_alpha_cap(params, case)
        b, g, d, N = p.beta, p.gamma, p.delta, p.N
        sq = []
        for k in range(N):
            sq.append((k + g + 1) * (-N + b + k) * (N - k) * (k + b + d + 1)
                      / ((N - b - 2 * k) * (N - b - 2 * k - 1)))
            sq.append((g + N - b - k) * (k + 1) * (k + b + 1) * (k - d - N)
                      / ((N - b - 2 * k - 2) * (N - b - 2 * k - 1)))
        return 2 * N + 1, sq, [k * (k + g + d + 1) for k in range(1, N + 1)]
    raise UnsupportedCase(f"{case.value}: no closed matrix form in the classification")


def double_matrix(case: DoubleCase, params: FamilyParams) -> MatrixWithSpectrum:
    """The symmetric two-diagonal matrix of a doubling case with its
    closed-form spectrum.  Raises InadmissibleParams when a radicand is
    negative (real entries impossible)."""
    dim, squares, eig_squares = double_matrix_squares(case, params)
    off = []
    for i, q in enumerate(squares):
        if q < 0:
            raise InadmissibleParams(f"offdiagonal square M_{i}^2 = {q} < 0")
        off.append(SqrtRational.sqrt(q))
    zeros = dim - 2 * len(eig_squares)
    spec = Spectrum.symmetric(eig_squares, zeros=zeros)
    return MatrixWithSpectrum(f"double:{case.value}", SymTridiag(tuple(off)), spec)


def nonsymmetric_entries(case: DoubleCase, params: DualHahnParams) -> TwoDiagonal:
    """The integer-friendly two-diagonal form alone, with no realness
    requirement on the spectrum (entries are always rational)."""
    if case not in (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III):
        raise UnsupportedCase(f"{case.value}: non-symmetric form given for dual Hahn cases only")
    if not isinstance(params, DualHahnParams):
        raise FamilyMismatch("nonsymmetric forms are defined for dual Hahn parameters")
    g, d, N = params.gamma, params.delta, params.N
    sup: List[Fraction] = []
    sub: List[Fraction] = []
    if case is DoubleCase.DUAL_HAHN_I:
        for k in range(N):
            sup.extend([g + k + 1, Fraction(k + 1)])
            sub.extend([Fraction(N - k), N + d - k])
    elif case is DoubleCase.DUAL_HAHN_II:
        for k in range(N):
            sup.extend([g + N - k, Fraction(k + 1)])
            sub.extend([Fraction(N - k), d + k + 1])
    else:
        for k in range(N + 1):
            sup.append(g + k + 1)
            sub.append(d + N + 1 - k)
            if k < N:
                sup.append(Fraction(k + 1))
                sub.append(Fraction(N - k))
    return TwoDiagonal(tuple(sup), tuple(sub))


def nonsymmetric_form(case: DoubleCase, params: DualHahnParams) -> MatrixWithSpectrum:
    """Integer-friendly two-diagonal forms for the dual Hahn cases; the
    offdiagonal products reproduce the symmetric matrix's squares (for the
    second case after reversal) and hence the same spectrum."""
    mat = nonsymmetric_entries(case, params)
    _, _, eig_squares = double_matrix_squares(case, params)
    zeros = mat.dim - 2 * len(eig_squares)
    spec = Spectrum.symmetric(eig_squares, zeros=zeros)
    return MatrixWithSpectrum(f"nonsym:{case.value}", mat, spec)


# ---------------------------------------------------------------------------
# eigenvector matrices

@dataclass(frozen=True)
class EigvecMatrix:
    """Dense orthogonal eigenvector matrix of a doubling case, exact entries.

    Entries are coef * sqrt(radicand); rows are orthonormal and columns are
    eigenvectors of the case's matrix: M U = U D with D = diag(eigencolumn).
    """

    case: DoubleCase
    dim: int
    entries: Tuple[Tuple[ScaledRoot, ...], ...]
    eigencolumn: Tuple[SqrtRational, ...]

    def to_float(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries])

    def d_floats(self) -> np.ndarray:
        return np.array([float(e) for e in self.eigencolumn])


def _norm_rad(fam: FamilyParams, x: int, n: int, halved: bool) -> Fraction:
    w = family_weight(fam, x)
    h = family_norm(fam, n)
    if w <= 0 or h <= 0:
        raise InadmissibleParams(f"weight/norm not positive at x={x}, n={n} for {fam}")
    return w / ((2 if halved else 1) * h)


def _u_paired(N: int, fam_even: FamilyParams, fam_odd: FamilyParams,
              eps_square) -> Tuple[list, list]:
    """Rows for the (2N+2)-dimensional pattern without a middle column."""
    dim = 2 * N + 2
    rows = [[ScaledRoot.zero()] * dim for _ in range(dim)]
    for n in range(N + 1):
        sgn = Fraction((-1) ** n)
        for x in range(N + 1):
            ve = sgn * family_eval(fam_even, n, x)
            re = _norm_rad(fam_even, x, n, halved=True)
            rows[2 * n][N - x] = ScaledRoot(ve, re)
            rows[2 * n][N + 1 + x] = ScaledRoot(ve, re)
            vo = sgn * family_eval(fam_odd, n, x)
            ro = _norm_rad(fam_odd, x, n, halved=True)
            rows[2 * n + 1][N - x] = ScaledRoot(-vo, ro)
            rows[2 * n + 1][N + 1 + x] = ScaledRoot(vo, ro)
    dcol = [SqrtRational(0, Fraction(0))] * dim
    for x in range(N + 1):
        s = Fraction(eps_square(x))
        dcol[N - x] = -SqrtRational.sqrt(s)
        dcol[N + 1 + x] = SqrtRational.sqrt(s)
    return rows, dcol


def _u_middle(N: int, fam_even: FamilyParams, fam_odd: FamilyParams,
              eps_square) -> Tuple[list, list]:
    """Rows for the (2N+1)-dimensional pattern with a zero middle column in
    odd rows; odd-row polynomials are evaluated at the shifted point x-1."""
    dim = 2 * N + 1
    rows = [[ScaledRoot.zero()] * dim for _ in range(dim)]
    for n in range(N + 1):
        sgn = Fraction((-1) ** n)
        rows[2 * n][N] = ScaledRoot(sgn * family_eval(fam_even, n, 0),
                                    _norm_rad(fam_even, 0, n, halved=False))
        for x in range(1, N + 1):
            ve = sgn * family_eval(fam_even, n, x)
            re = _norm_rad(fam_even, x, n, halved=True)
            rows[2 * n][N - x] = ScaledRoot(ve, re)
            rows[2 * n][N + x] = ScaledRoot(ve, re)
        if n <= N - 1:
            for x in range(1, N + 1):
                vo = sgn * family_eval(fam_odd, n, x - 1)
                ro = _norm_rad(fam_odd, x - 1, n, halved=True)
                rows[2 * n + 1][N - x] = ScaledRoot(-vo, ro)
                rows[2 * n + 1][N + x] = ScaledRoot(vo, ro)
    dcol = [SqrtRational(0, Fraction(0))] * dim
    for x in range(1, N + 1):
        s = Fraction(eps_square(x))
        dcol[N - x] = -SqrtRational.sqrt(s)
        dcol[N + x] = SqrtRational.sqrt(s)
    return rows, dcol


def _u_edge(N: int, fam_even: FamilyParams, fam_odd: FamilyParams,
            eps_square) -> Tuple[list, list]:
    """Rows for the (2N+1)-dimensional pattern with the distinguished column
    at the right edge of the half-range (second dual Hahn case)."""
    dim = 2 * N + 1
    rows = [[ScaledRoot.zero()] * dim for _ in range(dim)]
    for n in range(N + 1):
        rows[2 * n][N] = ScaledRoot(family_eval(fam_even, n, N),
                                    _norm_rad(fam_even, N, n, halved=False))
        for x in range(N):
            ve = family_eval(fam_even, n, x)
            re = _norm_rad(fam_even, x, n, halved=True)
            rows[2 * n][x] = ScaledRoot(ve, re)
            rows[2 * n][2 * N - x] = ScaledRoot(ve, re)
        if n <= N - 1:
            for x in range(N):
                vo = family_eval(fam_odd, n, x)
                ro = _norm_rad(fam_odd, x, n, halved=True)
                rows[2 * n + 1][x] = ScaledRoot(-vo, ro)
                rows[2 * n + 1][2 * N - x] = ScaledRoot(vo, ro)
    dcol = [SqrtRational(0, Fraction(0))] * dim
    for x in range(N):
        s = Fraction(eps_square(N - x))
        dcol[x] = -SqrtRational.sqrt(s)
        dcol[2 * N - x] = SqrtRational.sqrt(s)
    return rows, dcol


def eigvec_matrix(case: DoubleCase, params: FamilyParams) -> EigvecMatrix:
    """The orthogonal eigenvector matrix U of a doubling case, as displayed
    in the corresponding matrix construction."""
    if case is DoubleCase.DUAL_HAHN_I:
        g, d, N = params.gamma, params.delta, params.N
        rows, dcol = _u_middle(
            N, DualHahnParams(g, d, N), DualHahnParams(g + 1, d + 1, N - 1),
            lambda k: k * (k + g + d + 1))
    elif case is DoubleCase.DUAL_HAHN_II:
        g, d, N = params.gamma, params.delta, params.N
        rows, dcol = _u_edge(
            N, DualHahnParams(g, d, N), DualHahnParams(g, d, N - 1),
            lambda k: k * (g + d + 1 + 2 * N - k))
    elif case is DoubleCase.DUAL_HAHN_III:
        g, d, N = params.gamma, params.delta, params.N
        rows, dcol = _u_paired(
            N, DualHahnParams(g, d + 1, N), DualHahnParams(g + 1, d, N),
            lambda k: (k + g + 1) * (k + d + 1))
    elif case is DoubleCase.HAHN_I:
        a, b, N = params.alpha, params.beta, params.N
        rows, dcol = _u_paired(
            N, HahnParams(a, b, N), HahnParams(a + 1, b, N),
            lambda k: k + a + 1)
    elif case is DoubleCase.HAHN_II:
        a, b, N = params.alpha, params.beta, params.N
        rows, dcol = _u_middle(
            N, HahnParams(a, b, N), HahnParams(a + 1, b, N - 1),
            lambda k: Fraction(k))
    elif case is DoubleCase.RACAH_I:
        p = _racah_alpha_cap(params, case)
        a, b, g, d, N = p.alpha, p.beta, p.gamma, p.delta, p.N
        rows, dcol = _u_paired(
            N,
            RacahParams(a, b, g, d + 1, "alpha"),
            RacahParams(a, b + 1, g + 1, d, "alpha"),
            lambda k: (k + g + 1) * (k + d + 1))
    elif case is DoubleCase.RACAH_III:
        p = _racah_alpha_cap(params, case)
        a, b, g, d, N = p.alpha, p.beta, p.gamma, p.delta, p.N
        rows, dcol = _u_middle(
            N,
            RacahParams(a, b, g, d, "alpha"),
            RacahParams(a + 1, b, g + 1, d + 1, "alpha"),
            lambda k: k * (k + g + d + 1))
    else:
        raise UnsupportedCase(f"{case.value}: no displayed eigenvector matrix")
    return EigvecMatrix(case, len(rows),
                        tuple(tuple(r) for r in rows), tuple(dcol))


def orthogonality_residual(u: EigvecMatrix) -> float:
    """max |U^T U - I| in floating point (rows and columns both orthonormal)."""
    m = u.to_float()
    eye = np.eye(u.dim)
    return float(max(np.abs(m.T @ m - eye).max(), np.abs(m @ m.T - eye).max()))


def eigen_residual(case: DoubleCase, params: FamilyParams) -> float:
    """max |M U - U D| in floating point, scaled by max |M| entry."""
    u = eigvec_matrix(case, params)
    m = double_matrix(case, params).matrix.to_dense()
    res = np.abs(m @ u.to_float() - u.to_float() * u.d_floats()[None, :]).max()
    scale = max(np.abs(m).max(), 1.0)
    return float(res / scale)
