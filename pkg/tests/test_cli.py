import json
import subprocess
import sys

import pytest

from posbasis.cli import main
from posbasis.generators import gen_binomial
from posbasis.io import serialize_vecset


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_binomial_pli(capsys, write):
    path = write("b4.txt", serialize_vecset(gen_binomial(4)))
    code, out, _ = run(capsys, "check", path, "--predicate", "pli")
    assert code == 0
    assert json.loads(out)["verdicts"]["pli"] is True


def test_check_five_vectors_in_r2(capsys, write):
    path = write("five.txt", "dim 2\n1 0\n0 1\n-1 0\n0 -1\n3/5 4/5\n")
    code, out, _ = run(capsys, "check", path, "--predicate", "pli", "--cross-check")
    assert code == 1
    assert json.loads(out)["cross_check"]["agree"] is True


def test_check_malformed(capsys, write):
    path = write("bad.txt", "dim 2\n1 zero\n")
    code, _, err = run(capsys, "check", path, "--predicate", "basis")
    assert code == 2 and "line 2" in err


def test_check_missing_file(capsys):
    assert run(capsys, "check", "/nonexistent/file")[0] == 2


def test_cross_check_beyond_guard_is_usage_error(capsys, write):
    path = write("b6.txt", serialize_vecset(gen_binomial(6)))
    code, _, err = run(capsys, "check", path, "--predicate", "pli", "--cross-check")
    assert code == 2 and "guard" in err


def test_generate_families(capsys):
    code, out, _ = run(capsys, "generate", "--family", "maximal", "-n", "2")
    assert code == 0
    assert out.splitlines()[2:] == ["1 0", "0 1", "-1 0", "0 -1"]
    _, out, _ = run(capsys, "generate", "--family", "binomial", "-n", "4")
    assert len(out.splitlines()[2:]) == 6
    _, out, _ = run(capsys, "generate", "--family", "circle-lift", "-n", "3", "-m", "3")
    assert "-3/5 4/5 1" in out.splitlines()
    _, out, _ = run(capsys, "generate", "--family", "circle-lift", "--params", "0,1/2,3")
    assert out.splitlines()[3] == "3/5 4/5 1"


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--family", "binomial"],
        ["generate", "--family", "binomial", "-n", "1"],
        ["generate", "--family", "circle-lift", "-n", "2", "-m", "3"],
        ["generate", "--family", "circle-lift", "--params", "1,1"],
        ["generate", "--family", "circle-lift", "--params", "-1"],
        ["generate", "--family", "nope", "-n", "2"],
        [],
        ["check"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_certify_round_trip(capsys, write):
    _, out, _ = run(capsys, "generate", "--family", "minimal", "-n", "3")
    vs = write("min3.txt", out)
    code, report, _ = run(capsys, "check", vs, "--predicate", "basis")
    assert code == 0
    rep = write("rep.json", report)
    code, out, _ = run(capsys, "certify", rep, "--cross-check")
    assert code == 0
    assert "10 witnesses" in out  # 4 per-vector + 2*3 spanning


def test_certify_rejects_tampered(capsys, write):
    vs = write("v.txt", "dim 2\n1 0\n0 1\n")
    _, report, _ = run(capsys, "check", vs, "--predicate", "spanning")
    doc = json.loads(report)
    doc["verdicts"]["spanning"] = True
    rep = write("rep.json", json.dumps(doc))
    code, out, _ = run(capsys, "certify", rep)
    assert code == 1 and "FAIL" in out
    assert run(capsys, "certify", write("junk.json", "{not json"))[0] == 2


def test_poll_sphere(capsys, write):
    _, out, _ = run(capsys, "generate", "--family", "maximal", "-n", "2")
    pat = write("max2.txt", out)
    code, out, _ = run(capsys, "poll", "--objective", "sphere", "--x0", "1,1",
                       "--pattern", pat, "--step0", "1", "--shrink", "0.5",
                       "--step-min", "1e-6", "--budget", "500")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("round 1 ")
    final = lines[-1]
    assert final.startswith("final ")
    fval = float(final.split("f=")[1].split()[0])
    assert fval < 1e-6


def test_poll_constant_never_moves(capsys):
    code, out, _ = run(capsys, "poll", "--objective", "constant", "--x0", "2,3",
                       "--step-min", "0.01")
    assert code == 0
    assert all("x=(2, 3)" in line for line in out.splitlines())


def test_poll_warns_on_non_spanning_pattern(capsys, write):
    pat = write("e.txt", "dim 2\n1 0\n0 1\n")
    code, out, err = run(capsys, "poll", "--pattern", pat, "--x0", "1,1", "--budget", "20")
    assert code == 0
    assert "not positively spanning" in err
    assert out.splitlines()[-1].startswith("final")


@pytest.mark.parametrize(
    "argv",
    [
        ["poll", "--objective", "rosenbrock"],
        ["poll", "--x0", "a,b"],
        ["poll", "--shrink", "1.5"],
        ["poll", "--step-min", "5"],
        ["poll", "--x0", "1,1,1", "--pattern", "/nonexistent"],
    ],
)
def test_poll_bad_flags(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "posbasis", "generate", "--family", "minimal", "-n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "dim 1\n# count 2\n1\n-1\n"
