import random
from fractions import Fraction as F

import pytest

from twodiag.doubles import (
    DoubleCase,
    FamilyMismatch,
    christoffel_nu,
    coefficients,
    pair_grid_max_residue,
    pair_residue_forward,
    requirements_grid_max_residue,
    verify_pair,
    verify_requirements,
)
from twodiag.families import (
    DualHahnParams,
    HahnParams,
    RacahParams,
    family_eval,
    hahn_eval,
    recurrence_data,
)
from twodiag.sampling import rand_params_for_case

ALL_CASES = list(DoubleCase)


def draw(case, seed, max_n=6):
    return rand_params_for_case(case, random.Random(seed), max_n, seed)


def test_coefficient_spot_values_dual_hahn():
    g, d, N = F(1, 2), F(1, 3), 5
    p = DualHahnParams(g, d, N)
    cs3 = coefficients(DoubleCase.DUAL_HAHN_III, p)
    assert cs3.d(F(2)) == g + 1
    assert cs3.d_hat(F(2)) == (2 + g + 1) * (2 + d) / (g + 1)
    assert (cs3.hatted.gamma, cs3.hatted.delta, cs3.hatted.N) == (g + 1, d - 1, N)
    cs1 = coefficients(DoubleCase.DUAL_HAHN_I, p)
    assert cs1.d_hat(F(3)) == 3 * (3 + g + d + 1) / (N * (g + 1))
    assert (cs1.hatted.gamma, cs1.hatted.delta, cs1.hatted.N) == (g + 1, d + 1, N - 1)
    assert cs1.xshift == -1
    cs2 = coefficients(DoubleCase.DUAL_HAHN_II, p)
    assert (cs2.hatted.gamma, cs2.hatted.delta, cs2.hatted.N) == (g, d, N - 1)
    assert cs2.xshift == 0


def test_coefficient_spot_values_hahn():
    a, b, N = F(2, 3), F(1, 5), 4
    p = HahnParams(a, b, N)
    cs = coefficients(DoubleCase.HAHN_I, p)
    assert cs.d_hat(F(2)) == (a + 2 + 1) / (a + 1)
    assert (cs.hatted.alpha, cs.hatted.beta, cs.hatted.N) == (a + 1, b, N)


def test_hatted_parameter_shift_identity():
    # the dual Hahn shift rule: gamma+delta-(hatted sum) = 2*xshift
    for case in (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III):
        p = draw(case, 3)
        cs = coefficients(case, p)
        lhs = p.gamma + p.delta - (cs.hatted.gamma + cs.hatted.delta)
        assert lhs == 2 * cs.xshift


@pytest.mark.parametrize("case", ALL_CASES, ids=lambda c: c.value)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_pair_relations_exact_on_grid(case, seed):
    params = draw(case, seed)
    assert pair_grid_max_residue(coefficients(case, params)) == 0


@pytest.mark.parametrize("case", ALL_CASES, ids=lambda c: c.value)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_requirements_exact_on_grid(case, seed):
    params = draw(case, seed)
    assert requirements_grid_max_residue(coefficients(case, params)) == 0


def test_requirement_boundary_n0_is_trivial():
    p = draw(DoubleCase.DUAL_HAHN_II, 4)
    res = verify_requirements(DoubleCase.DUAL_HAHN_II, p, n=0, x=1)
    assert res[1] == 0  # the C(0) = 0 side


def test_dual_hahn_one_requirement_is_shift_invariant():
    # a(n) ahat(n-1) equals n(n - dhat - Nhat - 1) with dhat+Nhat = d+N
    g, d, N = F(2, 7), F(3, 5), 5
    p = DualHahnParams(g, d, N)
    cs = coefficients(DoubleCase.DUAL_HAHN_I, p)
    assert cs.hatted.delta + cs.hatted.N == d + N
    for n in range(1, N):
        assert cs.a(n) * cs.a_hat(n - 1) == n * (n - d - N - 1)


def test_hahn_ii_n0_forward_relation_shape():
    # at n = 0 the first relation reads (Q_0 - Q_1)/(a+b+2) = x Qhat_0 /(N(a+1))
    a, b, N = F(1, 3), F(2, 5), 4
    p = HahnParams(a, b, N)
    cs = coefficients(DoubleCase.HAHN_II, p)
    for x in range(N + 1):
        lhs = (hahn_eval(0, x, p) - hahn_eval(1, x, p)) / (a + b + 2)
        assert lhs == F(x) / (N * (a + 1))  # Qhat_0 = 1
        assert pair_residue_forward(cs, 0, x) == 0


def test_racah_iii_n0_forward_relation_shape():
    p = RacahParams(-5, F(19, 2), F(1, 3), F(2, 5), "alpha")
    a, b, g, d = p.alpha, p.beta, p.gamma, p.delta
    from twodiag.families import racah_eval

    for x in range(p.N + 1):
        lhs = (racah_eval(1, x, p) - racah_eval(0, x, p)) / (a + b + 2)
        lam = x * (x + g + d + 1)
        assert lhs == lam / ((g + 1) * (b + d + 1) * (a + 1))


def test_eliminating_hatted_family_reproduces_recurrence():
    # substituting relation 2 into relation 1 must reproduce the base
    # family's three-term recurrence, coefficient by coefficient
    for case in (DoubleCase.DUAL_HAHN_III, DoubleCase.HAHN_I, DoubleCase.RACAH_II):
        params = draw(case, 7)
        cs = coefficients(case, params)
        rec = recurrence_data(params)
        N = params.N
        for n in range(1, min(N, cs.hatted.N)):
            for x in range(N + 1):
                y = lambda k: family_eval(params, k, x)
                lhs = (cs.a_hat(n - 1) * (cs.a(n - 1) * y(n - 1) + cs.b(n - 1) * y(n))
                       + cs.b_hat(n - 1) * (cs.a(n) * y(n) + cs.b(n) * y(n + 1)))
                assert lhs == cs.d(F(x)) * cs.d_hat(F(x)) * y(n)
                # and the requirement residues tie those coefficients to A, C
                assert cs.a_hat(n - 1) * cs.a(n - 1) == rec.C(n)
                assert cs.b_hat(n - 1) * cs.b(n) == rec.A(n)


def test_dual_hahn_one_swap_gives_hahn_shift_pair():
    # swapping the roles of degree and variable turns the first case's pair
    # into the forward/backward shift relations for Hahn polynomials
    a, b, N = F(1, 2), F(1, 3), 5
    base = HahnParams(a, b, N)
    hat = HahnParams(a + 1, b + 1, N - 1)
    for n in range(1, N + 1):
        for x in range(N):
            lhs = hahn_eval(n, x, base) - hahn_eval(n, x + 1, base)
            rhs = (n * (n + a + b + 1) / (N * (a + 1))) * hahn_eval(n - 1, x, hat)
            assert lhs == rhs
    for n in range(1, N + 1):
        for x in range(N):
            lhs = (-(x + 1) * (N - x + b) * hahn_eval(n - 1, x, hat)
                   + (N - x - 1) * (x + a + 2) * hahn_eval(n - 1, x + 1, hat))
            assert lhs == N * (a + 1) * hahn_eval(n, x + 1, base)


def test_verify_pair_point_api():
    p = DualHahnParams(F(1, 2), F(1, 3), 4)
    r1, r2 = verify_pair(DoubleCase.DUAL_HAHN_III, p, n=2, x=3)
    assert (r1, r2) == (0, 0)
    with pytest.raises(ValueError):
        verify_pair(DoubleCase.DUAL_HAHN_II, p, n=3, x=0)  # n+1 beyond hatted cap


def test_christoffel_nu_table():
    pd = DualHahnParams(F(1, 2), F(1, 3), 5)
    ph = HahnParams(F(2, 3), F(1, 5), 5)
    pr = RacahParams(-6, F(15, 2), F(1, 3), F(1, 5), "alpha")
    assert christoffel_nu(DoubleCase.DUAL_HAHN_I, pd) == 0
    assert christoffel_nu(DoubleCase.DUAL_HAHN_II, pd) == 5
    assert christoffel_nu(DoubleCase.DUAL_HAHN_III, pd) == -pd.delta
    assert christoffel_nu(DoubleCase.HAHN_I, ph) == -ph.alpha - 1
    assert christoffel_nu(DoubleCase.HAHN_II, ph) == 0
    assert christoffel_nu(DoubleCase.HAHN_III, ph) == 5 + ph.beta + 1
    assert christoffel_nu(DoubleCase.HAHN_IV, ph) == 5
    assert christoffel_nu(DoubleCase.RACAH_I, pr) == -pr.delta
    assert christoffel_nu(DoubleCase.RACAH_II, pr) == pr.beta - pr.gamma
    assert christoffel_nu(DoubleCase.RACAH_III, pr) == 0
    assert christoffel_nu(DoubleCase.RACAH_IV, pr) == -pr.alpha - 1


@pytest.mark.parametrize("case", ALL_CASES, ids=lambda c: c.value)
def test_mutation_sensitivity_single_sign_flip(case):
    params = draw(case, 11, max_n=4)
    cs = coefficients(case, params)
    for which in ("a", "b", "a_hat", "b_hat", "d", "d_hat"):
        bad = cs.flipped(which)
        assert (pair_grid_max_residue(bad) != 0
                or requirements_grid_max_residue(bad) != 0), which


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        coefficients(DoubleCase.HAHN_I, DualHahnParams(F(1, 2), F(1, 3), 4))
    with pytest.raises(FamilyMismatch):
        christoffel_nu(DoubleCase.DUAL_HAHN_I, HahnParams(F(1, 2), F(1, 3), 4))
    with pytest.raises(FamilyMismatch):
        coefficients(DoubleCase.DUAL_HAHN_I, None)
