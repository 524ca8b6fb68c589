import io
import json
import subprocess
import sys

import pytest

from weightedtorsion.cli import EXIT_CERT, EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, run_command

TRIANGLE = """wsc v1
vertex v0 f=1 g=1
vertex v1 f=1 g=1
vertex v2 f=1 g=1
simplex v0 v1 v2
"""

HOLLOW = """wsc v1
vertex v0 f=1 g=1
vertex v1 f=1 g=1
vertex v2 f=1 g=1
simplex v0 v1
simplex v1 v2
simplex v0 v2
"""

EXAMPLE_K = """wsc v1
vertex v0 f=1 g=2
vertex v1 f=2 g=-1
vertex v2 f=3 g=1/3
vertex v3 f=4 g=0
simplex v0 v1 v2
simplex v0 v3
simplex v1 v3
simplex v2 v3
"""


@pytest.fixture
def wsc_file(tmp_path):
    def write(text, name="in.wsc"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_torsion_triangle(wsc_file):
    code, out, _ = run(["torsion", "--mode", "both", "--input", wsc_file(TRIANGLE)])
    assert code == EXIT_OK
    assert "T = 1.73205080757" in out and "T^2 = 3" in out


def test_torsion_json(wsc_file):
    code, out, _ = run(["--json", "torsion", "--input", wsc_file(TRIANGLE)])
    report = json.loads(out)
    assert report["torsion"]["torsion_squared_exact"] == "3/1"
    assert report["torsion"]["s_exponent"] == -1


def test_homology_hollow(wsc_file):
    code, out, _ = run(["homology", "--json", "--input", wsc_file(HOLLOW)])
    assert code == EXIT_OK
    assert json.loads(out)["betti"] == [1, 1]


def test_spectrum(wsc_file):
    code, out, _ = run(["--json", "spectrum", "--input", wsc_file(TRIANGLE)])
    degrees = json.loads(out)["degrees"]
    assert [d["pseudo_det"] for d in degrees] == ["9/1", "27/1", "3/1"]
    code, out, _ = run(["spectrum", "--degree", "2", "--input", wsc_file(TRIANGLE)])
    assert out.startswith("degree 2: [3]")


def test_validate(wsc_file):
    code, out, _ = run(["validate", "--json", "--input", wsc_file(EXAMPLE_K)])
    report = json.loads(out)
    assert code == EXIT_OK and all(report["audit"].values())
    assert report["restriction"]["f_vector"] == [3, 3, 1]


def test_check_rtorsion(wsc_file):
    code, out, _ = run(["check", "--law", "rtorsion", "--trials", "50", "--seed", "7",
                        "--input", wsc_file(EXAMPLE_K)])
    assert code == EXIT_OK
    assert "rtorsion: 50/50 certificates" in out


def test_check_all_deterministic(wsc_file):
    path = wsc_file(EXAMPLE_K)
    argv = ["--json", "check", "--trials", "5", "--seed", "3", "--input", path]
    first = run(argv)
    assert first[0] == EXIT_OK
    assert first == run(argv)
    assert json.loads(first[1])["ok"] is True


def test_input_errors(wsc_file):
    code, _, err = run(["torsion", "--input", wsc_file("wsc v1\nsimplex a\n")])
    assert code == EXIT_INPUT and "line 2" in err
    code, _, err = run(["torsion", "--input", "/nonexistent/file.wsc"])
    assert code == EXIT_INPUT
    assert run(["bogus"])[0] == EXIT_INPUT
    assert run(["torsion", "--mode", "nope"])[0] == EXIT_INPUT


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_CERT) == (0, 1, 2, 3)


def test_console_script_stdin():
    proc = subprocess.run([sys.executable, "-m", "weightedtorsion.cli", "torsion", "--mode",
                           "exact"], input=TRIANGLE.encode(), capture_output=True)
    assert proc.returncode == 0
    assert b"T^2 = 3" in proc.stdout
