"""Interchange formats for two-diagonal matrices.

Three encodings: Matrix Market coordinate (real general, 1-based, floats at
17 significant digits), an exact-rational text format that round-trips
bit-identically, and a JSON rendering.  Zero-diagonal entries are never
emitted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Tuple

from .eigsolve import FloatTridiag
from .matrices import SymTridiag, TwoDiagonal

MM_HEADER = "%%MatrixMarket matrix coordinate real general"


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def matrix_market_text(m: TwoDiagonal | SymTridiag) -> str:
    """Matrix Market coordinate text; only nonzero off-diagonal entries."""
    dim = m.dim
    entries: List[Tuple[int, int, float]] = []
    if isinstance(m, TwoDiagonal):
        for i, (b, c) in enumerate(zip(m.sup, m.sub), start=1):
            if b != 0:
                entries.append((i, i + 1, float(b)))
            if c != 0:
                entries.append((i + 1, i, float(c)))
    else:
        for i, off in enumerate(m.offdiagonal, start=1):
            v = float(off)
            if v != 0.0:
                entries.append((i, i + 1, v))
                entries.append((i + 1, i, v))
    lines = [MM_HEADER, f"{dim} {dim} {len(entries)}"]
    lines += [f"{i} {j} {v:.17g}" for i, j, v in entries]
    return "\n".join(lines) + "\n"


def parse_matrix_market(text: str) -> Tuple[int, List[Tuple[int, int, float]]]:
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ParseError("missing MatrixMarket header", 1)
    body = [(k + 1, ln) for k, ln in enumerate(lines)
            if ln.strip() and not ln.startswith("%")]
    lineno, size = body[0]
    try:
        rows, cols, nnz = (int(t) for t in size.split())
    except ValueError:
        raise ParseError(f"bad size line {size!r}", lineno) from None
    if rows != cols:
        raise ParseError("matrix must be square", lineno)
    entries = []
    for lineno, ln in body[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise ParseError(f"expected 'i j value', got {ln!r}", lineno)
        try:
            entries.append((int(toks[0]), int(toks[1]), float(toks[2])))
        except ValueError:
            raise ParseError(f"bad entry {ln!r}", lineno) from None
    if len(entries) != nnz:
        raise ParseError(f"declared {nnz} entries, found {len(entries)}", body[0][0])
    return rows, entries


def mm_to_float_tridiag(dim: int, entries: List[Tuple[int, int, float]]) -> FloatTridiag:
    """Rebuild a symmetric tridiagonal from coordinate entries; a
    non-symmetric two-diagonal input is symmetrized through the products
    of paired entries."""
    sup = [0.0] * (dim - 1)
    sub = [0.0] * (dim - 1)
    diag = [0.0] * dim
    for i, j, v in entries:
        if i == j:
            diag[i - 1] = v
        elif j == i + 1:
            sup[i - 1] = v
        elif i == j + 1:
            sub[j - 1] = v
        else:
            raise ParseError(f"entry ({i},{j}) outside the tridiagonal band", 0)
    off = []
    for b, c in zip(sup, sub):
        prod = b * c
        if prod < 0:
            raise ValueError("negative offdiagonal product; cannot symmetrize")
        off.append(prod ** 0.5)
    return FloatTridiag(tuple(diag), tuple(off))


def exact_text(m: TwoDiagonal) -> str:
    """Exact-rational structured text: 'dim m n' then 1-based 'i j p/q'
    triples covering both off-diagonals (zeros included, for losslessness)."""
    lines = [f"dim {m.dim} {m.dim}"]
    for i, (b, c) in enumerate(zip(m.sup, m.sub), start=1):
        lines.append(f"{i} {i + 1} {b}")
        lines.append(f"{i + 1} {i} {c}")
    return "\n".join(lines) + "\n"


def parse_exact_text(text: str) -> TwoDiagonal:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "dim":
        raise ParseError(f"expected 'dim m n', got {lines[0]!r}", 1)
    try:
        rows, cols = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError(f"bad dimensions in {lines[0]!r}", 1) from None
    if rows != cols or rows < 2:
        raise ParseError("need a square matrix of dimension >= 2", 1)
    sup = [Fraction(0)] * (rows - 1)
    sub = [Fraction(0)] * (rows - 1)
    for k, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 3:
            raise ParseError(f"expected 'i j p/q', got {ln!r}", k)
        try:
            i, j, v = int(toks[0]), int(toks[1]), Fraction(toks[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad entry {ln!r}", k) from None
        if j == i + 1 and 1 <= i <= rows - 1:
            sup[i - 1] = v
        elif i == j + 1 and 1 <= j <= rows - 1:
            sub[j - 1] = v
        else:
            raise ParseError(f"entry ({i},{j}) outside the off-diagonal band", k)
    return TwoDiagonal(tuple(sup), tuple(sub))


def json_text(label: str, params: Dict[str, str], m: TwoDiagonal | SymTridiag) -> str:
    doc: Dict[str, object] = {"family": label, "params": params, "dim": m.dim}
    if isinstance(m, TwoDiagonal):
        doc["superdiagonal"] = [str(v) for v in m.sup]
        doc["subdiagonal"] = [str(v) for v in m.sub]
    else:
        doc["offdiagonal_squares"] = [str(v.square) for v in m.offdiagonal]
        doc["offdiagonal"] = [float(v) for v in m.offdiagonal]
    return json.dumps(doc, indent=2) + "\n"
