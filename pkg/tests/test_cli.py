import json

import numpy as np
import pytest

from twodiag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_kac_mm(capsys):
    code, out, _ = run(capsys, "gen", "kac", "-N", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "3 3 4"
    assert lines[2:] == ["1 2 1", "2 1 2", "2 3 2", "3 2 1"]


def test_gen_rejects_n_zero(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "kac", "-N", "0"])


def test_gen_exact_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "m.txt"
    code, _, _ = run(capsys, "gen", "nonsym:DualHahnI", "--gamma", "1", "--delta", "-2",
                     "-N", "3", "--format", "exact", "-o", str(out_file))
    assert code == 0
    from twodiag.matio import parse_exact_text

    m = parse_exact_text(out_file.read_text())
    assert m.dim == 7
    # the delta = -gamma-1 line keeps every entry an integer
    assert all(v.denominator == 1 for v in m.sup + m.sub)


def test_gen_exact_refuses_irrational(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "double:DualHahnI", "--gamma", "1/2", "--delta", "1/3",
              "-N", "3", "--format", "exact"])


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "kac-odd", "--gamma", "1/2", "--delta", "1/3",
                       "-N", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 5
    assert doc["superdiagonal"][0] == "3"


def test_rational_argument_validation(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "kac-odd", "--gamma", "0.5", "--delta", "1", "-N", "2"])
    with pytest.raises(SystemExit):
        main(["gen", "kac-odd", "--gamma", "1/0", "--delta", "1", "-N", "2"])


def test_spectrum_kac(capsys):
    code, out, _ = run(capsys, "spectrum", "kac", "-N", "4")
    assert code == 0
    floats = [float(line.split()[2]) for line in out.strip().splitlines()]
    assert floats == [-4.0, -2.0, 0.0, 2.0, 4.0]


def test_spectrum_hahn_ii(capsys):
    code, out, _ = run(capsys, "spectrum", "double:HahnII",
                       "--alpha", "1/2", "--beta", "1/3", "-N", "3")
    assert code == 0
    rads = [line.split()[1] for line in out.strip().splitlines()]
    assert rads == ["3", "2", "1", "0", "1", "2", "3"]


def test_spectrum_dual_hahn_iii_integers(capsys):
    code, out, _ = run(capsys, "spectrum", "double:DualHahnIII",
                       "--gamma", "2", "--delta", "2", "-N", "2")
    floats = [float(line.split()[2]) for line in out.strip().splitlines()]
    assert floats == [-5.0, -4.0, -3.0, 3.0, 4.0, 5.0]


def test_verify_pairs_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "pairs", "--max-N", "4",
                         "--seed", "42", "--draws", "2")
    code2, out2, _ = run(capsys, "verify", "--suite", "pairs", "--max-N", "4",
                         "--seed", "42", "--draws", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "PASS: 22/22" in out1


def test_verify_seed_changes_draws(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "pairs", "--max-N", "4",
                     "--seed", "1", "--draws", "1", "-q")
    _, out2, _ = run(capsys, "verify", "--suite", "pairs", "--max-N", "4",
                     "--seed", "2", "--draws", "1", "-q")
    assert "seed 1" in out1 and "seed 2" in out2


def test_bench_empty_dims(capsys):
    code, out, _ = run(capsys, "bench", "kac", "--dims", "")
    assert code == 0 and out == ""


def test_bench_records(capsys):
    code, out, _ = run(capsys, "bench", "kac", "--dims", "21,41")
    assert code == 0
    docs = [json.loads(line) for line in out.strip().splitlines()]
    assert [d["dim"] for d in docs] == [21, 41]
    for d in docs:
        assert d["maxAbsEigError"] <= 1e-10 * (d["dim"] - 1)


def test_bench_parity_error(capsys):
    code, _, err = run(capsys, "bench", "kac-odd", "--dims", "10")
    assert code == 2
    assert "odd dimension" in err


def test_bench_mm_roundtrip_matches_spectrum(tmp_path, capsys):
    # gen -> parse -> solve must agree with the printed spectrum
    out_file = tmp_path / "m.mtx"
    run(capsys, "gen", "nonsym:DualHahnII", "--gamma", "1/2", "--delta", "1/3",
        "-N", "4", "-o", str(out_file))
    from twodiag.eigsolve import sym_tridiag_eigen
    from twodiag.matio import mm_to_float_tridiag, parse_matrix_market

    dim, entries = parse_matrix_market(out_file.read_text())
    vals = sym_tridiag_eigen(mm_to_float_tridiag(dim, entries)).values
    code, out, _ = run(capsys, "spectrum", "nonsym:DualHahnII",
                       "--gamma", "1/2", "--delta", "1/3", "-N", "4")
    closed = np.sort([float(line.split()[2]) for line in out.strip().splitlines()])
    assert np.abs(vals - closed).max() <= 1e-10 * max(map(abs, closed))


def test_poly_dual_hahn_table(capsys):
    code, out, _ = run(capsys, "poly", "dual-hahn", "--gamma", "0", "--delta", "0",
                       "-N", "2", "-n", "1")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert [r[1] for r in rows] == ["1", "0", "-2"]  # 1 - x(x+1)/2


def test_poly_degree_zero_all_ones(capsys):
    code, out, _ = run(capsys, "poly", "hahn", "--alpha", "1/2", "--beta", "1/3",
                       "-N", "3", "-n", "0")
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert all(r[1] == "1" for r in rows)


def test_poly_pole_is_clean_error(capsys):
    code, _, err = run(capsys, "poly", "hahn", "--alpha", "-1", "--beta", "0",
                       "-N", "2", "-n", "1")
    assert code == 2
    assert "evaluation impossible" in err


def test_poly_weights_column(capsys):
    code, out, _ = run(capsys, "poly", "dual-hahn", "--gamma", "1/2", "--delta", "1/3",
                       "-N", "2", "-n", "1", "--weights")
    assert code == 0
    assert "norm h_1" in out


def test_poly_racah(capsys):
    code, out, _ = run(capsys, "poly", "racah", "--alpha", "-3", "--beta", "1/2",
                       "--gamma", "1/2", "--delta", "1/2", "-n", "1")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert rows[1][1] == "5/4"


def test_poly_missing_params(capsys):
    with pytest.raises(SystemExit):
        main(["poly", "hahn", "-n", "1", "-N", "3"])
