from fractions import Fraction as F

import numpy as np
import pytest

from twodiag.doubles import DoubleCase
from twodiag.eigsolve import sym_tridiag_eigen
from twodiag.families import DualHahnParams
from twodiag.matio import (
    ParseError,
    exact_text,
    json_text,
    matrix_market_text,
    mm_to_float_tridiag,
    parse_exact_text,
    parse_matrix_market,
)
from twodiag.matrices import TwoDiagonal, double_matrix, nonsymmetric_form, sylvester_kac


def test_matrix_market_kac2():
    text = matrix_market_text(sylvester_kac(2).matrix)
    lines = text.strip().splitlines()
    assert lines[0] == "%%MatrixMarket matrix coordinate real general"
    assert lines[1] == "3 3 4"
    assert lines[2:] == ["1 2 1", "2 1 2", "2 3 2", "3 2 1"]


def test_matrix_market_roundtrip_and_solver():
    bundle = nonsymmetric_form(DoubleCase.DUAL_HAHN_I, DualHahnParams(F(1, 2), F(1, 3), 6))
    dim, entries = parse_matrix_market(matrix_market_text(bundle.matrix))
    assert dim == bundle.matrix.dim
    tri = mm_to_float_tridiag(dim, entries)
    vals = sym_tridiag_eigen(tri).values
    closed = np.sort(bundle.spectrum.floats())
    assert np.abs(vals - closed).max() <= 1e-10 * max(map(abs, closed))


def test_matrix_market_symmetric_entries_are_floats():
    bundle = double_matrix(DoubleCase.DUAL_HAHN_I, DualHahnParams(F(1, 2), F(1, 3), 3))
    text = matrix_market_text(bundle.matrix)
    dim, entries = parse_matrix_market(text)
    assert dim == 7
    # entries come in symmetric pairs
    assert len(entries) == 2 * (dim - 1)


def test_matrix_market_skips_exact_zeros():
    m = TwoDiagonal((F(0), F(2)), (F(3), F(0)))
    dim, entries = parse_matrix_market(matrix_market_text(m))
    assert len(entries) == 2


def test_exact_text_roundtrip_bit_identical():
    mat = nonsymmetric_form(DoubleCase.DUAL_HAHN_III,
                            DualHahnParams(F(5, 7), F(-9, 11), 5)).matrix
    text = exact_text(mat)
    back = parse_exact_text(text)
    assert back == mat
    assert exact_text(back) == text


def test_exact_text_format_shape():
    text = exact_text(sylvester_kac(2).matrix)
    lines = text.strip().splitlines()
    assert lines[0] == "dim 3 3"
    assert "1 2 1" in lines and "2 1 2" in lines


def test_exact_text_preserves_zero_entries():
    m = TwoDiagonal((F(0), F(1, 3)), (F(2), F(0)))
    assert parse_exact_text(exact_text(m)) == m


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_exact_text("dim 3 3\n1 2 bogus\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_exact_text("3 3\n")
    with pytest.raises(ParseError):
        parse_matrix_market("not a header\n1 1 1\n")
    with pytest.raises(ParseError) as err:
        parse_exact_text("dim 3 3\n1 3 1/2\n")  # outside the band
    assert "band" in str(err.value)


def test_json_rendering():
    import json

    m = sylvester_kac(2).matrix
    doc = json.loads(json_text("kac", {}, m))
    assert doc["dim"] == 3
    assert doc["superdiagonal"] == ["1", "2"]
    assert doc["subdiagonal"] == ["2", "1"]
    sym = double_matrix(DoubleCase.DUAL_HAHN_I, DualHahnParams(F(1, 2), F(1, 3), 2)).matrix
    doc = json.loads(json_text("double:DualHahnI", {"gamma": "1/2"}, sym))
    assert doc["offdiagonal_squares"] == [str(v.square) for v in sym.offdiagonal]
