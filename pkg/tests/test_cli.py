import re

import pytest

from dmflip.cli import EXIT_BUDGET, EXIT_FALSE, EXIT_OK, EXIT_USAGE, main
from dmflip.textio import parse_matrix, parse_setsystem


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def _drop_timings(text):
    return re.sub(r"\d+\.\d+s", "", text)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ppt(capsys, files):
    a = files("a.mat", "matrix GF4 2\na b\n0 w\nw2 0\n")
    code, out, _ = run(capsys, "ppt", a, "a,b")
    assert code == EXIT_OK
    assert parse_matrix(out) == parse_matrix("matrix GF4 2\na b\n0 w\nw2 0\n").ppt(("a", "b"))


def test_ppt_undefined(capsys, files):
    a = files("a.mat", "matrix GF2 2\na b\n0 1\n1 0\n")
    code, out, _ = run(capsys, "ppt", a, "a")
    assert code == EXIT_FALSE and "undefined" in out


def test_flip_and_output_file(capsys, files, tmp_path):
    m = files("m.ss", "setsystem 2\na b\n-\na,b\n")
    target = tmp_path / "out.ss"
    code, out, _ = run(capsys, "flip", m, "*a", "-o", str(target))
    assert code == EXIT_OK
    assert parse_setsystem(out).members() == [("a",), ("b",)]
    assert target.read_text() == out


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "*u +u")
    assert code == EXIT_OK and out.strip() == "Z1=- Z2=u Z3=u"


def test_dm_check(capsys, files):
    good = files("g.ss", "setsystem 2\na b\n-\na,b\n")
    bad = files("b.ss", "setsystem 3\na b c\n-\na,b,c\n")
    assert run(capsys, "dm-check", good)[0] == EXIT_OK
    code, out, _ = run(capsys, "dm-check", bad)
    assert code == EXIT_FALSE and "X=- Y=a,b,c u=a" in out


def test_vfsafe(capsys, files, tmp_path):
    lines = ["setsystem 6", "a b c d e f"] + [f"{x},{y}" for i, x in enumerate("abcdef") for y in "abcdef"[i + 1:]]
    u26 = files("u26.ss", "\n".join(lines) + "\n")
    wfile = tmp_path / "w.txt"
    code, out, _ = run(capsys, "vfsafe", u26, "-o", str(wfile))
    assert code == EXIT_FALSE and "unsafe" in out
    assert wfile.read_text().strip() in out
    u24 = files("u24.ss", "setsystem 4\na b c d\na,b\na,c\na,d\nb,c\nb,d\nc,d\n")
    assert run(capsys, "vfsafe", u24)[0] == EXIT_OK
    assert run(capsys, "vfsafe", u24, "--budget", "3")[0] == EXIT_BUDGET


def test_represent(capsys, files):
    b = files("b.mat", "rmatrix GF2 1 2\nr\na b\n1 1\n")
    code, out, _ = run(capsys, "represent", b, "--alpha", "id")
    assert code == EXIT_OK
    assert "matrix GF2 2\na b\n0 1\n1 0\n" in out
    assert "offset: a" in out


def test_transport(capsys, files):
    a = files("a.mat", "matrix GF4 2\na b\n0 w\nw2 0\n")
    code, out, _ = run(capsys, "transport", a, "-", "+a *b")
    assert code == EXIT_OK and "offset:" in out
    code, _, err = run(capsys, "transport", a, "-", "+a", "--alpha", "id")
    assert code == EXIT_USAGE and "error" in err


def test_bicycle_and_parity(capsys, files):
    b = files("b.mat", "rmatrix GF2 1 2\nr\na b\n1 1\n")
    code, out, _ = run(capsys, "bicycle", b)
    assert code == EXIT_OK and "dimension: 1" in out and "EQUAL" in out
    code, out, _ = run(capsys, "parity", b)
    assert code == EXIT_OK and out.strip() == "bases=2 (even), bd=1, consistent"


def test_usage_errors(capsys, files, tmp_path):
    assert run(capsys, "dm-check", str(tmp_path / "missing.ss"))[0] == EXIT_USAGE
    garbage = files("x.ss", "not a set system\n")
    assert run(capsys, "dm-check", garbage)[0] == EXIT_USAGE
    assert run(capsys, "normalize", "*")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == EXIT_USAGE
    b3 = files("g3.mat", "rmatrix GF3 1 2\nr\na b\n1 1\n")
    assert run(capsys, "bicycle", b3)[0] == EXIT_USAGE


def test_verify_is_deterministic(capsys):
    args = ("verify", "--seed", "7", "--suite", "flip_axioms", "--suite", "ppt_laws")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert _drop_timings(out1) == _drop_timings(out2)
    assert "2/2 suites passed" in out1
