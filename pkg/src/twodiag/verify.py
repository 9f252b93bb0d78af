"""Deterministic verification suites over randomized rational parameters.

Each suite returns a list of check outcomes; a seed fixes every draw, so a
run is bit-reproducible.  These are the same checks the acceptance tests
pin down, packaged for the command line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from . import orthosystems, oscillator, transforms
from .doubles import (
    DoubleCase,
    coefficients,
    locate_failure,
    pair_grid_max_residue,
    requirements_grid_max_residue,
)
from .families import (
    DualHahnParams,
    HahnParams,
    dual_hahn_eval,
    dual_hahn_norm,
    dual_hahn_weight,
    hahn_eval,
    hahn_norm,
    hahn_weight,
    racah_eval,
    racah_norm,
    racah_weight,
)
from .matrices import (
    double_matrix,
    eigen_residual,
    eigvec_matrix,
    extended_kac_even,
    extended_kac_odd,
    nonsymmetric_form,
    orthogonality_residual,
    sylvester_kac,
    verify_spectrum_exact,
)
from .sampling import rand_dual_hahn, rand_hahn, rand_params_for_case, rand_racah

SUITES = ("pairs", "requirements", "christoffel", "orthogonality", "spectra", "algebra")

MATRIX_CASES = tuple(c for c in DoubleCase
                     if c not in (DoubleCase.RACAH_II, DoubleCase.RACAH_IV))
NONSYM_CASES = (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III)
EIGVEC_CASES = (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III,
                DoubleCase.HAHN_I, DoubleCase.HAHN_II, DoubleCase.RACAH_I, DoubleCase.RACAH_III)


@dataclass
class CheckOutcome:
    label: str
    ok: bool
    detail: str = ""


def _params_label(params) -> str:
    if isinstance(params, DualHahnParams):
        return f"g={params.gamma},d={params.delta},N={params.N}"
    if isinstance(params, HahnParams):
        return f"a={params.alpha},b={params.beta},N={params.N}"
    return (f"a={params.alpha},b={params.beta},g={params.gamma},"
            f"d={params.delta},cap={params.minus_n}")


def suite_pairs(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    for case in DoubleCase:
        for i in range(draws):
            params = rand_params_for_case(case, rng, max_n, i)
            cs = coefficients(case, params)
            worst = pair_grid_max_residue(cs)
            detail = f"max residue {worst}" if worst == 0 else locate_failure(cs)
            out.append(CheckOutcome(f"pairs {case.value} [{_params_label(params)}]",
                                    worst == 0, detail))
    return out


def suite_requirements(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    for case in DoubleCase:
        for i in range(draws):
            params = rand_params_for_case(case, rng, max_n, i)
            cs = coefficients(case, params)
            worst = requirements_grid_max_residue(cs)
            detail = f"max residue {worst}" if worst == 0 else locate_failure(cs)
            out.append(CheckOutcome(f"requirements {case.value} [{_params_label(params)}]",
                                    worst == 0, detail))
    return out


def suite_christoffel(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    for case in DoubleCase:
        for i in range(draws):
            params = rand_params_for_case(case, rng, max_n, i)
            from .doubles import christoffel_nu

            nu = christoffel_nu(case, params)
            res = transforms.verify_same_family(case, params)
            res += transforms.verify_recurrence_link(params, nu, params.N - 1)
            res += transforms.verify_roundtrip(params, nu, params.N - 1, range(params.N + 1))
            worst = max((abs(r) for r in res), default=Fraction(0))
            out.append(CheckOutcome(
                f"christoffel {case.value} nu={nu} [{_params_label(params)}]",
                worst == 0, f"{len(res)} residues, max {worst}"))
    return out


def _orthogonality_sum_check(weight, evalf, norm, params) -> bool:
    N = params.N
    for n in range(N + 1):
        for m in range(n, N + 1):
            s = sum(weight(x, params) * evalf(n, x, params) * evalf(m, x, params)
                    for x in range(N + 1))
            if s != (norm(n, params) if n == m else 0):
                return False
    return True


def suite_orthogonality(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    for i in range(draws):
        ph = rand_hahn(rng, max_n)
        ok = _orthogonality_sum_check(hahn_weight, hahn_eval, hahn_norm, ph)
        out.append(CheckOutcome(f"orthogonality hahn [{_params_label(ph)}]", ok))
        pd = rand_dual_hahn(rng, max_n)
        ok = _orthogonality_sum_check(dual_hahn_weight, dual_hahn_eval, dual_hahn_norm, pd)
        out.append(CheckOutcome(f"orthogonality dual-hahn [{_params_label(pd)}]", ok))
        pr = rand_racah(rng, max_n, ("alpha", "beta_delta", "gamma")[i % 3])
        ok = _orthogonality_sum_check(racah_weight, racah_eval, racah_norm, pr)
        out.append(CheckOutcome(f"orthogonality racah [{_params_label(pr)}]", ok))

    for i in range(draws):
        for case in orthosystems.SYSTEM_CASES:
            params = (rand_dual_hahn(rng, max_n) if case is DoubleCase.DUAL_HAHN_I
                      else rand_hahn(rng, max_n))
            system = orthosystems.doubled_system(case, params)
            res = orthosystems.verify_discrete_orthogonality(system)
            ok = all(r == 0 for r in res) and orthosystems.support_matches_spectrum(system)
            out.append(CheckOutcome(
                f"orthogonality doubled {case.value} [{_params_label(params)}]", ok,
                f"{len(res)} residues"))

    for case in EIGVEC_CASES:
        params = rand_params_for_case(case, rng, max_n, 0)
        u = eigvec_matrix(case, params)
        r1 = orthogonality_residual(u)
        r2 = eigen_residual(case, params)
        ok = r1 <= 1e-12 and r2 <= 1e-12
        out.append(CheckOutcome(f"orthogonality U {case.value} [{_params_label(params)}]",
                                ok, f"UtU-I {r1:.2e}, MU-UD {r2:.2e}"))
    return out


def suite_spectra(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    kac_ok = all(verify_spectrum_exact(sylvester_kac(n).matrix, sylvester_kac(n).spectrum)
                 for n in range(1, 21))
    out.append(CheckOutcome("spectra kac N=1..20", kac_ok))

    ext_n = min(max_n, 12)
    for i in range(draws):
        g = Fraction(rng.randint(-3, 20), rng.randint(1, 6))
        d = Fraction(rng.randint(-3, 20), rng.randint(1, 6))
        for n in range(1, ext_n + 1):
            mo = extended_kac_odd(n, g, d)
            if not verify_spectrum_exact(mo.matrix, mo.spectrum):
                out.append(CheckOutcome(f"spectra kac-odd N={n} g={g} d={d}", False))
                break
        else:
            out.append(CheckOutcome(f"spectra kac-odd N<={ext_n} g={g} d={d}", True))
        if g > -1 and d > -1:
            ok = all(verify_spectrum_exact(extended_kac_even(n, g, d).matrix,
                                           extended_kac_even(n, g, d).spectrum)
                     for n in range(1, ext_n + 1))
            out.append(CheckOutcome(f"spectra kac-even N<={ext_n} g={g} d={d}", ok))

    half = Fraction(-1, 2)
    ok = all(extended_kac_odd(n, half, half).matrix == sylvester_kac(2 * n).matrix
             and extended_kac_even(n, half, half).matrix == sylvester_kac(2 * n - 1).matrix
             for n in range(1, ext_n + 1))
    out.append(CheckOutcome("spectra reduction at gamma=delta=-1/2", ok))
    g = Fraction(-1, 4)
    ok = True
    for n in range(1, ext_n + 1):
        mo = extended_kac_odd(n, g, -g - 1)
        ok &= verify_spectrum_exact(mo.matrix, mo.spectrum)
        ok &= [float(e) for e in mo.spectrum.entries] == [float(v) for v in range(-2 * n, 2 * n + 1, 2)]
    out.append(CheckOutcome("spectra integer line delta=-gamma-1", ok))

    for case in MATRIX_CASES:
        for i in range(draws):
            params = rand_params_for_case(case, rng, min(max_n, 12), 0)
            m = double_matrix(case, params)
            ok = verify_spectrum_exact(m.matrix, m.spectrum)
            out.append(CheckOutcome(f"spectra double:{case.value} [{_params_label(params)}]", ok))
    for case in NONSYM_CASES:
        for i in range(draws):
            params = rand_dual_hahn(rng, min(max_n, 12))
            m = nonsymmetric_form(case, params)
            ok = verify_spectrum_exact(m.matrix, m.spectrum)
            out.append(CheckOutcome(f"spectra nonsym:{case.value} [{_params_label(params)}]", ok))
    return out


def suite_algebra(rng: random.Random, max_n: int, draws: int) -> List[CheckOutcome]:
    out = []
    for case in oscillator.ALGEBRA_CASES:
        for i in range(draws):
            params = rand_dual_hahn(rng, min(max_n, 10))
            res = oscillator.verify_algebra(case, params)
            flat = [r for v in res.values() for r in v]
            flat += oscillator.verify_normal_form(case, params)
            ok = all(r == 0 for r in flat)
            out.append(CheckOutcome(f"algebra {case.value} [{_params_label(params)}]",
                                    ok, f"{len(flat)} residues"))
    half = Fraction(-1, 2)
    p = DualHahnParams(half, half, 4)
    sc = oscillator.structure_constants(DoubleCase.DUAL_HAHN_I, p)
    out.append(CheckOutcome("algebra su(2) coincidence at gamma=delta=-1/2",
                            (sc.nu, sc.sigma, sc.rho) == (0, 0, 0)))
    return out


SUITE_RUNNERS: Dict[str, Callable[[random.Random, int, int], List[CheckOutcome]]] = {
    "pairs": suite_pairs,
    "requirements": suite_requirements,
    "christoffel": suite_christoffel,
    "orthogonality": suite_orthogonality,
    "spectra": suite_spectra,
    "algebra": suite_algebra,
}


def run_suites(names, max_n: int, seed: int, draws: int) -> List[CheckOutcome]:
    """Run the named suites with a fresh seeded RNG per suite, so each
    suite's draws are independent of the others' order."""
    out: List[CheckOutcome] = []
    for name in names:
        if name not in SUITE_RUNNERS:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")
        rng = random.Random(f"{seed}:{name}")
        out.extend(SUITE_RUNNERS[name](rng, max_n, draws))
    return out
