"""Floating-point symmetric tridiagonal eigensolver and the benchmark
harness that pits it against the closed-form spectra of the test-matrix
gallery.

The solver is the classic implicit QL iteration with Wilkinson shifts and
deflation; eigenvalue-only runs cost O(dim^2), accumulating eigenvectors
raises that to O(dim^3) with the rotation applied across numpy columns.
"""

from __future__ import annotations

import json
import math
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .doubles import DoubleCase
from .families import DualHahnParams, HahnParams, RacahParams
from .matrices import (
    MatrixWithSpectrum,
    double_matrix,
    extended_kac_even,
    extended_kac_odd,
    nonsymmetric_form,
    sylvester_kac,
    symmetrize,
)


class NoConvergence(RuntimeError):
    """An eigenvalue failed to deflate within the sweep budget."""

    def __init__(self, index: int, matrix: "FloatTridiag"):
        super().__init__(f"eigenvalue {index} did not converge")
        self.index = index
        self.matrix = matrix

    def matrix_json(self) -> str:
        """The offending matrix, serialized for reproduction."""
        return json.dumps({"diagonal": list(self.matrix.diagonal),
                           "offdiagonal": list(self.matrix.offdiagonal)})


@dataclass(frozen=True)
class FloatTridiag:
    diagonal: Tuple[float, ...]
    offdiagonal: Tuple[float, ...]

    def __post_init__(self):
        if len(self.offdiagonal) != len(self.diagonal) - 1:
            raise ValueError("offdiagonal must be one shorter than diagonal")
        vals = list(self.diagonal) + list(self.offdiagonal)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("entries must be finite")

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def max_abs_entry(self) -> float:
        return max(map(abs, list(self.diagonal) + list(self.offdiagonal)), default=0.0)

    def to_dense(self) -> np.ndarray:
        out = np.diag(np.asarray(self.diagonal, dtype=float))
        off = np.asarray(self.offdiagonal, dtype=float)
        out += np.diag(off, 1) + np.diag(off, -1)
        return out


@dataclass
class EigenResult:
    values: np.ndarray
    vectors: Optional[np.ndarray]
    sweeps: int


def sym_tridiag_eigen(
    m: FloatTridiag, want_vectors: bool = False, max_sweeps: int = 30
) -> EigenResult:
    """Eigenvalues (sorted ascending) and optionally the orthogonal
    eigenvector matrix of a symmetric tridiagonal matrix.

    Implicitly shifted QL with Wilkinson shifts; raises NoConvergence if an
    eigenvalue needs more than max_sweeps sweeps.
    """
    n = m.dim
    d = [float(v) for v in m.diagonal]
    e = [float(v) for v in m.offdiagonal] + [0.0]
    z = np.eye(n) if want_vectors else None
    eps = np.finfo(float).eps
    sweeps = 0

    for l in range(n):
        iterations = 0
        while True:
            mm = l
            while mm < n - 1:
                dd = abs(d[mm]) + abs(d[mm + 1])
                if abs(e[mm]) <= eps * dd:
                    break
                mm += 1
            if mm == l:
                break
            iterations += 1
            if iterations > max_sweeps:
                raise NoConvergence(l, m)
            sweeps += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[mm] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(mm - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[mm] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    col = z[:, i + 1].copy()
                    z[:, i + 1] = s * z[:, i] + c * col
                    z[:, i] = c * z[:, i] - s * col
            if not underflow:
                d[l] -= p
                e[l] = g
                e[mm] = 0.0

    values = np.array(d)
    order = np.argsort(values, kind="stable")
    values = values[order]
    if z is not None:
        z = z[:, order]
    return EigenResult(values, z, sweeps)


# ---------------------------------------------------------------------------
# benchmark harness

@dataclass
class BenchReport:
    family: str
    params: Dict[str, str]
    dim: int
    max_abs_eig_error: float
    residual_norm: Optional[float]
    wall_ns: int
    sweeps: int

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "params": self.params,
                "dim": self.dim,
                "maxAbsEigError": self.max_abs_eig_error,
                "residualNorm": self.residual_norm,
                "nanoseconds": self.wall_ns,
                "sweeps": self.sweeps,
            }
        )


FAMILY_CHOICES = (
    ["kac", "kac-odd", "kac-even"]
    + [f"double:{c.value}" for c in DoubleCase]
    + [f"nonsym:{c.value}" for c in (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II,
                                     DoubleCase.DUAL_HAHN_III)]
)


def _case_by_value(name: str) -> DoubleCase:
    for c in DoubleCase:
        if c.value == name:
            return c
    raise ValueError(f"unknown case {name!r}; choose from {[c.value for c in DoubleCase]}")


def _dim_to_n(selector: str, dim: int) -> int:
    """Map a requested matrix dimension to the family's size parameter."""
    if dim < 2:
        raise ValueError("dimension must be >= 2")
    if selector == "kac":
        return dim - 1
    odd_like = selector in ("kac-odd",) or selector.endswith(
        ("DualHahnI", "DualHahnII", "HahnII", "HahnIV", "RacahIII"))
    if odd_like:
        if dim % 2 == 0:
            raise ValueError(f"{selector} needs an odd dimension, got {dim}")
        return (dim - 1) // 2
    if selector == "kac-even":
        if dim % 2 == 1:
            raise ValueError(f"{selector} needs an even dimension, got {dim}")
        return dim // 2
    if dim % 2 == 1:
        raise ValueError(f"{selector} needs an even dimension, got {dim}")
    return dim // 2 - 1


def _default_params(selector: str) -> Dict[str, Fraction]:
    if selector in ("kac",):
        return {}
    if selector.startswith("kac"):
        return {"gamma": Fraction(1, 2), "delta": Fraction(1, 3)}
    case = _case_by_value(selector.split(":", 1)[1])
    if case in (DoubleCase.DUAL_HAHN_I, DoubleCase.DUAL_HAHN_II, DoubleCase.DUAL_HAHN_III):
        return {"gamma": Fraction(1, 2), "delta": Fraction(1, 3)}
    if case in (DoubleCase.RACAH_I, DoubleCase.RACAH_III):
        return {"beta": None, "gamma": Fraction(1, 3), "delta": Fraction(1, 5)}
    return {"alpha": Fraction(1, 2), "beta": Fraction(1, 3)}


def build_gallery_matrix(selector: str, n: int,
                         params: Optional[Dict[str, Fraction]] = None) -> MatrixWithSpectrum:
    """Construct the (matrix, spectrum) bundle for a family selector at size
    parameter n, filling in default parameters where none are given."""
    given = dict(params or {})
    defaults = _default_params(selector)
    merged = {**defaults, **given}
    if selector == "kac":
        return sylvester_kac(n)
    if selector == "kac-odd":
        return extended_kac_odd(n, merged["gamma"], merged["delta"])
    if selector == "kac-even":
        return extended_kac_even(n, merged["gamma"], merged["delta"])
    kind, case_name = selector.split(":", 1)
    case = _case_by_value(case_name)
    if case.family is DualHahnParams:
        fam = DualHahnParams(merged["gamma"], merged["delta"], n)
    elif case.family is HahnParams:
        fam = HahnParams(merged["alpha"], merged["beta"], n)
    else:
        beta = merged.get("beta") or (n + merged["gamma"] + 2)
        fam = RacahParams(Fraction(-n - 1), beta, merged["gamma"], merged["delta"], "alpha")
    if kind == "nonsym":
        return nonsymmetric_form(case, fam)
    return double_matrix(case, fam)


def to_float_tridiag(m: MatrixWithSpectrum) -> FloatTridiag:
    sym = m.matrix if hasattr(m.matrix, "offdiagonal") else symmetrize(m.matrix)
    off = tuple(float(v) for v in sym.offdiagonal)
    return FloatTridiag((0.0,) * sym.dim, off)


def _match_error(computed: np.ndarray, closed: np.ndarray) -> float:
    """Max |computed - closed| after sorting; falls back to greedy nearest
    matching (with a warning) when the closed spectrum has near-clusters."""
    err = float(np.max(np.abs(computed - closed)))
    gaps = np.diff(closed)
    scale = max(float(np.max(np.abs(closed))), 1.0)
    if len(gaps) and float(np.min(gaps)) < 1e-9 * scale:
        warnings.warn("clustered eigenvalues; using greedy nearest matching")
        greedy = float(max(np.min(np.abs(closed - c)) for c in computed))
        err = min(err, greedy)
    return err


def benchmark(
    selector: str,
    dims: Sequence[int],
    repetitions: int = 1,
    params: Optional[Dict[str, Fraction]] = None,
    want_vectors: bool = False,
) -> List[BenchReport]:
    """Solve each family instance and report errors against the closed-form
    spectrum.  One report per (dimension, repetition)."""
    reports: List[BenchReport] = []
    if repetitions <= 0:
        return reports
    for dim in dims:
        n = _dim_to_n(selector, dim)
        bundle = build_gallery_matrix(selector, n, params)
        tri = to_float_tridiag(bundle)
        closed = np.sort(np.array(bundle.spectrum.floats()))
        shown_params = {k: str(v) for k, v in (params or _default_params(selector)).items()
                        if v is not None}
        for _ in range(repetitions):
            t0 = time.perf_counter_ns()
            result = sym_tridiag_eigen(tri, want_vectors=want_vectors)
            wall = time.perf_counter_ns() - t0
            err = _match_error(result.values, closed)
            residual = None
            if want_vectors:
                a = tri.to_dense()
                residual = float(np.abs(a @ result.vectors
                                        - result.vectors * result.values[None, :]).max())
            reports.append(BenchReport(selector, shown_params, tri.dim, err,
                                       residual, wall, result.sweeps))
    return reports
