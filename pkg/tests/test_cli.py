import subprocess
import sys

import pytest

from sigchrom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chrom_text(capsys):
    code, out, _ = run(capsys, "chrom", "K3.2")
    assert code == 0 and out.strip() == "8*k^3"


def test_chrom_coeffs(capsys):
    code, out, _ = run(capsys, "chrom", "K3.1", "--format", "coeffs")
    assert out.strip() == "0,-2,0,8"


def test_chrom_zero_free(capsys):
    _, out, _ = run(capsys, "chrom", "K3.1", "--zero-free")
    assert out.strip() == "8*k^3 - 12*k^2 + 4*k"


def test_eval(capsys):
    assert run(capsys, "eval", "P1", "1")[1].strip() == "120"
    assert run(capsys, "eval", "P1", "1", "--zero-free")[1].strip() == "0"


def test_edgelist_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("vertices 2\nedge 0 1 -\nnegloop 0\n")
    code, out, _ = run(capsys, "chrom", str(f))
    assert code == 0 and out.strip() == "4*k^2"


def test_matrix_file(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("1 1\n-1 1\n")
    _, out, _ = run(capsys, "chrom", str(f))
    assert out.strip() == "4*k^2"


def test_convert_round_trip(capsys, tmp_path):
    _, matrix, _ = run(capsys, "convert", "K4.3", "--to", "incidence")
    f = tmp_path / "k4.txt"
    f.write_text(matrix)
    _, listed, _ = run(capsys, "convert", str(f), "--to", "edgelist")
    assert "edge 0 1 -" in listed and "edge 2 3 -" in listed
    assert listed.count("edge") == 6


def test_convert_improper_graph_is_usage_error(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("vertices 1\nposloop 0\n")
    code, _, err = run(capsys, "convert", str(f), "--to", "incidence")
    assert code == 2 and "error" in err


def test_distinguish_k3_passes(capsys):
    code, out, _ = run(capsys, "distinguish", "k3")
    assert code == 0
    assert "K3.1 - K3.2: -2*k" in out and out.strip().endswith("PASS")


def test_distinguish_k4_reports_root(capsys):
    code, out, _ = run(capsys, "distinguish", "k4")
    assert code == 1 and out.strip().endswith("FAIL")


def test_sweep_k3(capsys):
    code, out, _ = run(capsys, "sweep", "k3")
    assert code == 0
    assert "8 signatures, 2 switching classes on fixed labels, 2 distinct chromatic polynomials" in out
    assert "[K3.1] orbit 4" in out and "[K3.2] orbit 4" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "K4.2", "--kmax", "4")
    assert code == 0 and "interpolation: match" in out


def test_missing_input_is_usage_error(capsys):
    code, _, err = run(capsys, "chrom", "nope.txt")
    assert code == 2 and "neither a catalog graph" in err


def test_bad_file_is_usage_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("vertices 2\nedge 0 5 +\n")
    code, _, err = run(capsys, "chrom", str(f))
    assert code == 2 and "line 2" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "k9"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sigchrom", "eval", "K3.2", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "64"
