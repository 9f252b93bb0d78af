import random
from fractions import Fraction as F

import pytest

from twodiag.doubles import DoubleCase
from twodiag.exact import SqrtRational
from twodiag.families import DualHahnParams, HahnParams, dual_hahn_eval
from twodiag.matrices import UnsupportedCase
from twodiag.orthosystems import (
    SYSTEM_CASES,
    UnsupportedPoint,
    degree_check,
    doubled_eval,
    doubled_system,
    support_matches_spectrum,
    verify_discrete_orthogonality,
)
from twodiag.sampling import rand_dual_hahn, rand_hahn


def make_system(case, seed=0, max_n=5):
    rng = random.Random(seed)
    if case is DoubleCase.DUAL_HAHN_I:
        return doubled_system(case, rand_dual_hahn(rng, max_n))
    return doubled_system(case, rand_hahn(rng, max_n))


def test_dimensions_and_support_shapes():
    s1 = doubled_system(DoubleCase.DUAL_HAHN_I, DualHahnParams(F(1, 2), F(1, 3), 4))
    assert s1.dim == 9 and len(s1.support()) == 9
    s2 = doubled_system(DoubleCase.HAHN_I, HahnParams(F(1, 2), F(1, 3), 4))
    assert s2.dim == 10 and len(s2.support()) == 10
    s3 = doubled_system(DoubleCase.HAHN_II, HahnParams(F(1, 2), F(1, 3), 4))
    assert s3.dim == 9


def test_hahn_ii_support_is_sqrt_integers():
    s = doubled_system(DoubleCase.HAHN_II, HahnParams(F(1, 2), F(1, 3), 4))
    assert [e.radicand for e in s.support()] == [4, 3, 2, 1, 0, 1, 2, 3, 4]


def test_support_symmetric_about_zero():
    for case in SYSTEM_CASES:
        s = make_system(case, 3)
        pts = s.support()
        assert sorted(-p for p in pts) == sorted(pts)


def test_p0_is_constant():
    s = make_system(DoubleCase.DUAL_HAHN_I, 1)
    for q in s.support():
        v = doubled_eval(s, 0, q)
        assert v.even.coef == 1 and v.even.radicand == F(1, 2)
        assert v.odd_coefficient.coef == 0


def test_odd_members_vanish_at_zero():
    s = make_system(DoubleCase.DUAL_HAHN_I, 2)
    zero = SqrtRational(0, F(0))
    for n in range(1, s.dim, 2):
        v = doubled_eval(s, n, zero)
        assert v.even.coef == 0  # value is odd_coefficient * q = 0


def test_even_member_reduces_to_family_value():
    p = DualHahnParams(F(1, 2), F(1, 3), 4)
    s = doubled_system(DoubleCase.DUAL_HAHN_I, p)
    for k in range(5):
        q = SqrtRational.sqrt(k * (k + p.gamma + p.delta + 1))
        v = doubled_eval(s, 4, q)  # P_{2n} with n = 2
        assert v.even.coef == dual_hahn_eval(2, k, p)


@pytest.mark.parametrize("case", SYSTEM_CASES, ids=lambda c: c.value)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_orthogonality_exact(case, seed):
    s = make_system(case, seed)
    assert all(r == 0 for r in verify_discrete_orthogonality(s))


@pytest.mark.parametrize("case", SYSTEM_CASES, ids=lambda c: c.value)
def test_support_equals_matrix_spectrum(case):
    assert support_matches_spectrum(make_system(case, 4))


@pytest.mark.parametrize("case", SYSTEM_CASES, ids=lambda c: c.value)
def test_degrees_are_exact(case):
    s = make_system(case, 5)
    for n in range(s.dim):
        assert degree_check(s, n)


def test_unsupported_point_and_case():
    s = make_system(DoubleCase.DUAL_HAHN_I, 6)
    with pytest.raises(UnsupportedPoint):
        doubled_eval(s, 0, SqrtRational.sqrt(F(1, 7)))
    with pytest.raises(UnsupportedCase):
        doubled_system(DoubleCase.DUAL_HAHN_II, DualHahnParams(F(1, 2), F(1, 3), 4))
    with pytest.raises(ValueError):
        doubled_eval(s, s.dim, SqrtRational(0, F(0)))
