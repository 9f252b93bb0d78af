from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twodiag.exact import (
    DenominatorPole,
    NonTerminatingSeries,
    ScaledRoot,
    SqrtRational,
    hyper_terminating,
    is_nonpositive_int,
    pochhammer,
    rbinom,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=0, max_value=8)


def test_pochhammer_base_cases():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0  # factor (-2+2)
    assert pochhammer(F(1, 2), 3) == F(1, 2) * F(3, 2) * F(5, 2)


@given(fractions, small_ints, small_ints)
def test_pochhammer_splits_multiplicatively(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


def test_rbinom_matches_integer_binomials():
    import math

    for a in range(8):
        for k in range(a + 1):
            assert rbinom(a, k) == math.comb(a, k)
    # rational upper argument through the Pochhammer form
    assert rbinom(F(1, 2), 2) == F(1, 2) * F(-1, 2) / 2


def test_is_nonpositive_int():
    assert is_nonpositive_int(0)
    assert is_nonpositive_int(-3)
    assert not is_nonpositive_int(2)
    assert not is_nonpositive_int(F(-1, 2))


def test_hyper_zero_numerator_gives_one():
    assert hyper_terminating([0, F(5, 2), -7], [F(1, 3), -9], 1) == 1
    # an upper parameter 0 kills every k >= 1 term even when -n is deeper
    assert hyper_terminating([-1, 1, 0], [1, -5], 1) == 1


def test_hyper_one_term_expansion():
    # 3F2(-1, b, c; d, e; 1) = 1 - b c / (d e), expanded by hand
    b, c, d, e = F(2, 3), F(5, 7), F(3, 2), F(-9, 4)
    assert hyper_terminating([-1, b, c], [d, e], 1) == 1 - b * c / (d * e)


def test_hyper_two_term_expansion():
    # 2F1(-2, b; d; z) = 1 - 2bz/d + b(b+1)z^2/(d(d+1)), by hand
    b, d, z = F(1, 3), F(5, 4), F(2, 5)
    expected = 1 - 2 * b / d * z + (b * (b + 1)) / (d * (d + 1)) * z * z
    assert hyper_terminating([-2, b], [d], z) == expected


@given(st.permutations([F(-2), F(1, 2), F(3)]), st.permutations([F(5, 3), F(-7, 2)]))
def test_hyper_parameter_permutation_symmetry(nums, dens):
    base = hyper_terminating([F(-2), F(1, 2), F(3)], [F(5, 3), F(-7, 2)], F(1))
    assert hyper_terminating(list(nums), list(dens), F(1)) == base


def test_hyper_common_denominator_rescaling_is_bit_identical():
    nums = [F(-3), F(5, 6), F(-7, 4)]
    dens = [F(11, 12), F(-9, 2)]
    base = hyper_terminating(nums, dens, F(2, 3))
    scaled = hyper_terminating(
        [F(n.numerator * (12 // n.denominator), 12) for n in nums],
        [F(d.numerator * (12 // d.denominator), 12) for d in dens],
        F(2, 3),
    )
    assert base == scaled
    assert (base.numerator, base.denominator) == (scaled.numerator, scaled.denominator)


def test_hyper_nonterminating_is_rejected():
    with pytest.raises(NonTerminatingSeries):
        hyper_terminating([F(1, 2), 3], [F(5, 2)], 1)


def test_hyper_denominator_pole_detection():
    # termination at n=3 but denominator -2 vanishes at k=3 <= n
    with pytest.raises(DenominatorPole):
        hyper_terminating([-3, F(1, 2)], [-2], 1)
    # pole beyond the termination index is harmless
    assert hyper_terminating([-2, F(1, 2)], [-2], 1) is not None


def test_sqrt_rational_invariants():
    with pytest.raises(ValueError):
        SqrtRational(1, F(-1))
    with pytest.raises(ValueError):
        SqrtRational(0, F(2))
    with pytest.raises(ValueError):
        SqrtRational(2, F(1))
    assert SqrtRational.sqrt(0) == SqrtRational(0, F(0))
    assert SqrtRational.of(-3) == SqrtRational(-1, F(9))
    assert float(SqrtRational.of(-3)) == -3.0


def test_sqrt_rational_ordering_matches_values():
    vals = [SqrtRational.of(v) for v in (-4, 3, 0, -1, 2)]
    assert [float(e) for e in sorted(vals)] == [-4.0, -1.0, 0.0, 2.0, 3.0]
    assert SqrtRational(1, F(2)) < SqrtRational(1, F(3))
    assert SqrtRational(-1, F(3)) < SqrtRational(-1, F(2))


def test_sqrt_rational_exact_root():
    assert SqrtRational(1, F(9, 4)).exact_rational() == F(3, 2)
    assert SqrtRational(-1, F(9, 4)).exact_rational() == F(-3, 2)
    assert SqrtRational(1, F(2)).exact_rational() is None


def test_scaled_root():
    r = ScaledRoot(F(-3, 2), F(2))
    assert r.square == F(9, 2)
    assert abs(float(r) + 1.5 * 2 ** 0.5) < 1e-15
    with pytest.raises(ValueError):
        ScaledRoot(F(1), F(-1))
