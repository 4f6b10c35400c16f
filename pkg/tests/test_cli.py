"""Command-line interface: output shapes, exit codes, adapter fidelity."""

import math

import pytest

from specgap import cli, eigen, graph6
from specgap.graphs import complete


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_command(capsys):
    code, out, err = run(capsys, "spectrum", "Bw")
    assert code == 0
    assert "order 3 edges 3" in out
    assert "spectrum 2.000000 -1.000000 -1.000000" in out
    assert "nullity 0" in out


def test_indices_command(capsys):
    code, out, _ = run(capsys, "indices", "C~")
    assert code == 0
    assert "lambda_max 3.000000" in out
    assert "gap 4.000000" in out
    assert "ind 3.000000" in out
    assert "pow 6.000000" in out


def test_multipartite_command(capsys):
    code, out, _ = run(capsys, "multipartite", "--parts", "1,2,3")
    assert code == 0
    assert "dispersion_root" in out
    assert "3.766435" in out
    assert "max_deviation" in out
    code, out, _ = run(capsys, "multipartite", "--parts", "2,2", "--analytic")
    assert code == 0
    assert "numeric" not in out


def test_perturbed_command(capsys):
    code, out, _ = run(capsys, "perturbed", "--family", "kmm-minus-e",
                       "--m", "3")
    assert code == 0
    assert "gap 1.464102" in out
    assert "gap_limit_residual" in out
    code, out, _ = run(capsys, "perturbed", "--family", "kmm_plus_e",
                       "--m", "3")
    assert code == 0
    assert "ind_limit_residual" in out
    assert "-1.000000\t1\tclosed_form" in out


def test_census_command(capsys, tmp_path):
    code, out, _ = run(capsys, "census", "--order", "4",
                       "--out", str(tmp_path), "--threads", "1")
    assert code == 0
    assert "order 4 count 6" in out
    stats = (tmp_path / "stats.csv").read_text()
    assert stats.startswith("index,count,mean,")
    assert (tmp_path / "hist_gap.csv").exists()


def test_census_from_file(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Bw\nBo\n")
    code, out, _ = run(capsys, "census", "--file", str(f),
                       "--out", str(tmp_path))
    assert code == 0
    assert "count 2" in out


def test_census_output_is_stable(capsys, tmp_path):
    run(capsys, "census", "--order", "5", "--out", str(tmp_path / "a"))
    run(capsys, "census", "--order", "5", "--out", str(tmp_path / "b"),
        "--threads", "3", "--chunk-size", "4")
    a = (tmp_path / "a" / "stats.csv").read_bytes()
    b = (tmp_path / "b" / "stats.csv").read_bytes()
    # thread count must not affect output; chunking only via float rounding
    assert a == b


def test_extremal_command(capsys):
    code, out, _ = run(capsys, "extremal", "--order", "4", "--index", "gap",
                       "--dir", "min")
    assert code == 0
    assert f"min gap {math.sqrt(5.0) - 1.0:.6f}" in out
    assert "witness" in out


def test_extremal_alias(capsys):
    code, out, _ = run(capsys, "extremal", "--order", "4", "--index", "lmax",
                       "--dir", "max")
    assert code == 0
    assert "max lambda_max 3.000000" in out
    assert graph6.encode(complete(4)) in out


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--check", "prop1", "--order", "5")
    assert code == 0
    assert "prop1 PASS" in out


def test_verify_failure_exits_one(capsys, tmp_path):
    f = tmp_path / "partial.g6"
    f.write_text("C~\nCr\n")
    code, out, _ = run(capsys, "verify", "--check", "classical",
                       "--order", "4", "--file", str(f))
    assert code == 1
    assert "FAIL" in out
    assert "first_counterexample" in out


def test_density_command(capsys):
    code, out, _ = run(capsys, "density", "--delta", "0.25",
                       "--gamma", "0.36")
    assert code == 0
    assert "m1 16 m2 21 order 37" in out


def test_approx_count_command(capsys):
    code, out, _ = run(capsys, "approx-count", "--order", "9")
    assert code == 0
    assert "approx 261080.0" in out
    assert "true 261080" in out
    assert "rel_error 0.0000" in out


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "spectrum", "B@@")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "multipartite", "--parts", "7")
    assert code == 2
    code, _, err = run(capsys, "census", "--file", "/does/not/exist.g6",
                       "--out", "/tmp")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["census"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["extremal", "--order", "4", "--file", "x.g6",
                  "--index", "gap", "--dir", "min"])
    with pytest.raises(SystemExit):
        cli.main(["no-such-command"])


def test_adapter_matches_library(capsys):
    code, out, _ = run(capsys, "spectrum", "DQc")
    assert code == 0
    vals = eigen.spectrum(graph6.decode("DQc"))
    printed = [float(tok) for tok in out.splitlines()[1].split()[1:]]
    assert printed == pytest.approx(vals, abs=1e-6)
