import io
import subprocess
import sys

import pytest

from etaforms import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_coeff_examples():
    assert run("coeff", "--level", "47", "--n", "49")[:2] == (0, "-1\n")
    assert run("coeff", "--level", "47", "--n", "2")[:2] == (0, "1\n")
    code, out, _ = run("coeff", "--level", "1024", "--n", "5", "--check")
    assert code == 0 and out.strip().endswith("PASS")


def test_coeff_check_reports_fault(monkeypatch):
    monkeypatch.setattr(cli, "coefficient", lambda level, n: 99)
    code, out, _ = run("coeff", "--level", "71", "--n", "3", "--check")
    assert code == 1 and "FAIL" in out


def test_classgroup_output():
    code, out, _ = run("classgroup", "--disc", "-1872")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "CL(-1872) = C4 x C4, h = 16"
    assert len(lines) == 17
    code, out, _ = run("classgroup", "--disc", "-47", "--format", "records")
    assert out.splitlines()[0].startswith("disc=-47 form=")


def test_classify_output():
    code, out, _ = run("--format", "records", "classify", "--disc", "-47", "--p", "53")
    assert code == 0
    assert "verdict=CLASS_PAIR" in out and "s_index=2" in out
    code, out, _ = run("classify", "--disc", "-47", "--p", "5")
    assert "INERT" in out


def test_expand_and_format_position():
    a = run("expand", "--target", "47", "--order", "20", "--format", "records")
    b = run("--format", "records", "expand", "--target", "47", "--order", "20")
    assert a == b and a[0] == 0
    # records list the nonzero coefficients only
    assert a[1].splitlines()[:2] == ["n=2 coeff=1", "n=3 coeff=-1"]
    code, out, _ = run("expand", "--eta", "2:1,47", "--order", "20", "--format", "records")
    assert out == a[1]


def test_hecke_command():
    code, out, _ = run("hecke", "--disc", "-47", "--p", "2", "--completion", "47a1", "--order", "400")
    assert code == 0 and out.splitlines()[-1] == "eigenvalue: -1 + lambda"  # -mu
    code, out, _ = run("hecke", "--disc", "-47", "--p", "2", "--form", "1,1,18")
    assert code == 2


def test_order_from_environment(monkeypatch):
    monkeypatch.setenv("ETAFORMS_ORDER", "10")
    code, out, _ = run("expand", "--form", "1,1,12", "--format", "records")
    assert out.splitlines()[-1] == "n=9 coeff=2"
    monkeypatch.setenv("ETAFORMS_ORDER", "12")
    assert run("expand", "--form", "1,1,12", "--format", "records")[1].splitlines()[-1] == "n=12 coeff=4"
    monkeypatch.setenv("ETAFORMS_ORDER", "x")
    assert run("expand", "--form", "1,1,12")[0] == 2


def test_out_file(tmp_path):
    path = tmp_path / "o.txt"
    code, out, _ = run("coeff", "--level", "47", "--n", "49", "--out", str(path))
    assert code == 0 and out == "" and path.read_text() == "-1\n"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["coeff", "--level", "50", "--n", "1"],
        ["coeff", "--level", "47", "--n", "0"],
        ["expand", "--form", "1,2,1"],
        ["expand", "--eta", "x"],
        ["classgroup", "--disc", "-5"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_verify_command_is_deterministic():
    a = run("verify", "--suite", "thm4", "--order", "100")
    b = run("verify", "--suite", "thm4", "--order", "100", "--jobs", "2")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[-1] == "64 checks, 0 failed"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "etaforms", "coeff", "--level", "47", "--n", "49"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-1\n"
