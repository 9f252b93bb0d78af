"""Exact rational kernel: Pochhammer symbols, terminating hypergeometric
series, and signed square roots of rationals.

Everything here is pure and exact; no floats enter until a caller asks for
a float rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]


class NonTerminatingSeries(ValueError):
    """No numerator parameter is a nonpositive integer."""


class DenominatorPole(ZeroDivisionError):
    """A denominator Pochhammer vanishes at or before the termination index."""


def is_nonpositive_int(a: RationalLike) -> bool:
    a = Fraction(a)
    return a.denominator == 1 and a.numerator <= 0


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def rbinom(a: RationalLike, k: int) -> Fraction:
    """Binomial coefficient binom(a, k) for rational a and integer k >= 0,
    defined through Pochhammer symbols: (a-k+1)_k / k!."""
    if k < 0:
        raise ValueError("rbinom needs k >= 0")
    return pochhammer(Fraction(a) - k + 1, k) / pochhammer(1, k)


def hyper_terminating(
    numerators: Sequence[RationalLike],
    denominators: Sequence[RationalLike],
    z: RationalLike,
) -> Fraction:
    """Terminating generalized hypergeometric series, exactly.

    Returns sum_{k=0}^{n} [prod (num)_k / prod (den)_k] z^k / k!, where n is
    the smallest value -a over nonpositive-integer numerator parameters a.
    Raises NonTerminatingSeries if no numerator terminates the sum, and
    DenominatorPole if a denominator Pochhammer vanishes at k <= n.
    """
    nums = [Fraction(a) for a in numerators]
    dens = [Fraction(d) for d in denominators]
    z = Fraction(z)

    stops = [-a.numerator for a in nums if is_nonpositive_int(a)]
    if not stops:
        raise NonTerminatingSeries(f"no nonpositive integer among numerators {nums}")
    n = min(stops)
    for d in dens:
        if is_nonpositive_int(d) and -d.numerator < n:
            raise DenominatorPole(
                f"denominator parameter {d} vanishes before termination index {n}"
            )

    total = Fraction(1)
    term = Fraction(1)
    for k in range(n):
        for a in nums:
            term *= a + k
        for d in dens:
            term /= d + k
        term *= z
        term /= k + 1
        total += term
    return total


def _sqrt_exact(r: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if r < 0:
        return None
    pn = _isqrt_exact(r.numerator)
    pd = _isqrt_exact(r.denominator)
    if pn is None or pd is None:
        return None
    return Fraction(pn, pd)


def _isqrt_exact(m: int) -> int | None:
    import math

    s = math.isqrt(m)
    return s if s * s == m else None


@dataclass(frozen=True, order=False)
class SqrtRational:
    """The number sign * sqrt(radicand), with radicand a rational >= 0.

    sign is 0 exactly when the radicand is 0, so the representation is
    canonical and equality is structural.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.radicand < 0:
            raise ValueError("radicand must be >= 0")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign is 0 iff radicand is 0")

    @classmethod
    def sqrt(cls, radicand: RationalLike) -> "SqrtRational":
        r = Fraction(radicand)
        return cls(1 if r > 0 else 0, r)

    @classmethod
    def of(cls, value: RationalLike) -> "SqrtRational":
        """Embed an exact rational (e.g. an integer eigenvalue)."""
        v = Fraction(value)
        if v == 0:
            return cls(0, Fraction(0))
        return cls(1 if v > 0 else -1, v * v)

    @property
    def square(self) -> Fraction:
        return self.radicand

    def exact_rational(self) -> Fraction | None:
        """The value as a rational when the radicand is a perfect square."""
        root = _sqrt_exact(self.radicand)
        return None if root is None else self.sign * root

    def __neg__(self) -> "SqrtRational":
        return SqrtRational(-self.sign, self.radicand)

    def __float__(self) -> float:
        import math

        return self.sign * math.sqrt(float(self.radicand))

    def _key(self):
        return (self.sign, self.sign * self.radicand)

    def __lt__(self, other: "SqrtRational") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "SqrtRational") -> bool:
        return self._key() <= other._key()

    def __repr__(self) -> str:
        if self.sign == 0:
            return "0"
        pre = "-" if self.sign < 0 else ""
        return f"{pre}sqrt({self.radicand})"


@dataclass(frozen=True)
class ScaledRoot:
    """The number coef * sqrt(radicand) with both parts rational, radicand >= 0.

    Not a closed arithmetic type; just an exact carrier for matrix entries
    and prefactors whose square is rational.
    """

    coef: Fraction
    radicand: Fraction

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be >= 0")

    @classmethod
    def zero(cls) -> "ScaledRoot":
        return cls(Fraction(0), Fraction(0))

    @property
    def square(self) -> Fraction:
        return self.coef * self.coef * self.radicand

    def __float__(self) -> float:
        import math

        return float(self.coef) * math.sqrt(float(self.radicand))

    def __repr__(self) -> str:
        return f"{self.coef}*sqrt({self.radicand})"
