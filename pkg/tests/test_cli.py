import subprocess
import sys
from pathlib import Path

import pytest

from clasplink.cli import main, render_curve_svg
from clasplink.curves import build_curve
from clasplink.words import parse_word

DATA = Path(__file__).resolve().parents[1] / "data"
BORROMEAN = str(DATA / "borromean.cc")
THREE_CLASPS = str(DATA / "two_component_three_clasps.cc")

MU_BORROMEAN = """\
mu = 1
e_12(w3) = 0
e_23(w1) = 1
e_31(w2) = 0
WELL-DEFINED
"""

BOUNDS_BORROMEAN = """\
C = 4 (exact)
lower_C = 4 # triple linking lower bound
upper_C = 4 # clasp count of this complex
exact_C = 4 # lower and upper bounds coincide
lower_B = 0 # sum of |lk| over pairs
upper_B = 4 # crossing change at each clasp
"""

BOUNDS_THREE_CLASPS = """\
C = 1 (exact); this complex has 3 clasps
lower_C = 1 # pairwise linking number
upper_C = 3 # clasp count of this complex
exact_C = 1 # linking number determines the clasp number
lower_B = 1 # sum of |lk| over pairs
upper_B = 3 # crossing change at each clasp
"""

WORDS_BORROMEAN = """\
w1 = x3^-1 x2 x3 x2^-1
w2 = x1^-1 x1
w3 = x1^-1 x1
"""

GEN_BRN_1 = """\
components 3
clasp p1 1 2 +
clasp q1 1 2 -
clasp r1 1 3 +
clasp s1 1 3 -
order 1 s1 p1 r1 q1
order 2 p1 q1
order 3 r1 s1
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eij(capsys):
    code, out, _ = run(capsys, "eij", "x1 x2 x1^-1 x2^-1", "1", "2")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "eij", "", "1", "2")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "eij", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2")
    assert (code, out) == (0, "3\n")


def test_eij_methods_agree(capsys):
    word = "x1 x2 x1 x2 x1^-2 x2^-2"
    outputs = set()
    for method in ("sum", "integral", "both"):
        code, out, _ = run(capsys, "eij", word, "1", "2", "--method", method)
        assert code == 0
        outputs.add(out)
    assert outputs == {"3\n"}


def test_eij_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO("x1 x2\nx1^-1 x2^-1\n"))
    code, out, _ = run(capsys, "eij", "-", "1", "2")
    assert (code, out) == (0, "1\n")


def test_eij_error_paths(capsys):
    code, _, err = run(capsys, "eij", "x1 xx", "1", "2")
    assert code == 2
    assert "column 4" in err
    code, _, err = run(capsys, "eij", "x1", "2", "2")
    assert code == 2
    assert "distinct" in err


def test_mu_golden(capsys):
    code, out, _ = run(capsys, "mu", BORROMEAN, "1", "2", "3")
    assert code == 0
    assert out == MU_BORROMEAN


def test_mu_rejects_invalid_complex(capsys, tmp_path):
    bad = tmp_path / "bad.cc"
    bad.write_text("components 2\nclasp a 1 1 +\norder 1 a\norder 2\n")
    code, _, err = run(capsys, "mu", str(bad), "1", "2", "3")
    assert code == 2
    assert "self-clasp" in err


def test_lk(capsys):
    code, out, _ = run(capsys, "lk", THREE_CLASPS, "1", "2")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "lk", BORROMEAN, "1", "3")
    assert (code, out) == (0, "0\n")


def test_words_golden(capsys):
    code, out, _ = run(capsys, "words", BORROMEAN)
    assert code == 0
    assert out == WORDS_BORROMEAN


def test_bounds_golden(capsys):
    code, out, _ = run(capsys, "bounds", BORROMEAN)
    assert (code, out) == (0, BOUNDS_BORROMEAN)
    code, out, _ = run(capsys, "bounds", THREE_CLASPS)
    assert (code, out) == (0, BOUNDS_THREE_CLASPS)


def test_validate(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", BORROMEAN)
    assert (code, out) == (0, "OK\n")
    bad = tmp_path / "bad.cc"
    bad.write_text("components 2\nclasp a 1 2 +\norder 1 a\norder 2\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 2
    assert "incomplete" in out


def test_gen_brn_golden(capsys):
    code, out, _ = run(capsys, "gen-brn", "1")
    assert (code, out) == (0, GEN_BRN_1)


def test_gen_brn_rejects_zero(capsys):
    code, _, err = run(capsys, "gen-brn", "0")
    assert code == 2
    assert "at least 1" in err


def test_curve_svg(capsys, tmp_path):
    out_path = tmp_path / "stair.svg"
    code, out, _ = run(
        capsys, "curve", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--out", str(out_path)
    )
    assert code == 0
    assert out == "length=8 closed simple area=3\n"
    svg = out_path.read_text()
    assert svg.startswith('<?xml version="1.0"')
    assert svg.count("<polyline") == 1
    points = svg.split('points="')[1].split('"')[0]
    assert len(points.split()) == 9  # one pair per vertex
    assert "<circle" in svg


def test_curve_open_word(capsys, tmp_path):
    out_path = tmp_path / "open.svg"
    code, out, _ = run(capsys, "curve", "x1 x2", "1", "2", "--out", str(out_path))
    assert code == 0
    assert out == "length=2 open area=1\n"
    assert out_path.exists()


def test_curve_empty_word(capsys, tmp_path):
    out_path = tmp_path / "point.svg"
    code, out, _ = run(capsys, "curve", "", "1", "2", "--out", str(out_path))
    assert code == 0
    assert out == "length=0 closed simple area=0\n"
    svg = out_path.read_text()
    assert "<polyline" not in svg
    assert "<circle" in svg


def test_curve_unwritable_path(capsys, tmp_path):
    code, _, err = run(
        capsys, "curve", "x1", "1", "2", "--out", str(tmp_path / "no" / "dir" / "x.svg")
    )
    assert code == 3
    assert "error" in err


def test_missing_input_file(capsys):
    code, _, err = run(capsys, "mu", "/no/such/file.cc", "1", "2", "3")
    assert code == 3


def test_oracle_polyomino(capsys):
    code, out, _ = run(capsys, "oracle", "polyomino", "--max-area", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["parameter", "observed", "predicted", "agree"]
    assert len(lines) == 7
    assert all(line.split()[-1] == "yes" for line in lines[1:])


def test_oracle_words(capsys):
    code, out, _ = run(capsys, "oracle", "words", "--max-len", "8")
    assert code == 0
    assert all(line.split()[-1] == "yes" for line in out.splitlines()[1:])


def test_oracle_disagreement_exit_code(capsys, monkeypatch):
    from clasplink import cli
    from clasplink.oracles import OracleReport

    monkeypatch.setattr(
        cli, "verify_min_perimeter", lambda max_area, cap: [OracleReport(1, 4, 6)]
    )
    code, out, _ = run(capsys, "oracle", "polyomino", "--max-area", "1")
    assert code == 1
    assert "no" in out


def test_oracle_cap_errors(capsys):
    code, _, err = run(capsys, "oracle", "polyomino", "--max-area", "0")
    assert code == 2
    code, _, err = run(capsys, "oracle", "polyomino", "--max-area", "12")
    assert code == 2
    assert "cap" in err


def test_cli_outputs_are_deterministic(capsys, tmp_path):
    invocations = [
        ("mu", BORROMEAN, "1", "2", "3"),
        ("bounds", BORROMEAN),
        ("bounds", THREE_CLASPS),
        ("words", BORROMEAN),
        ("lk", BORROMEAN, "2", "3"),
        ("validate", BORROMEAN),
        ("gen-brn", "3"),
        ("eij", "x1 x2 x1^-1 x2^-1", "1", "2"),
        ("oracle", "polyomino", "--max-area", "4"),
        ("oracle", "words", "--max-len", "6"),
    ]
    for argv in invocations:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second

    svg_a = tmp_path / "a.svg"
    svg_b = tmp_path / "b.svg"
    run(capsys, "curve", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--out", str(svg_a), "--grid")
    run(capsys, "curve", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--out", str(svg_b), "--grid")
    assert svg_a.read_bytes() == svg_b.read_bytes()


def test_render_curve_svg_grid_lines():
    curve = build_curve(parse_word("x1 x2 x1^-1 x2^-1"), 1, 2)
    svg = render_curve_svg(curve, grid=True)
    assert svg.count("<line") == 8  # 4 vertical + 4 horizontal for a unit square
    assert render_curve_svg(curve, grid=False).count("<line") == 0


def test_pipe_gen_brn_into_mu_and_bounds():
    gen = subprocess.run(
        [sys.executable, "-m", "clasplink.cli", "gen-brn", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    mu = subprocess.run(
        [sys.executable, "-m", "clasplink.cli", "mu", "-", "1", "2", "3"],
        input=gen.stdout,
        capture_output=True,
        text=True,
    )
    assert mu.returncode == 0
    assert mu.stdout.splitlines()[0] == "mu = 9"

    bounds = subprocess.run(
        [sys.executable, "-m", "clasplink.cli", "bounds", "-"],
        input=subprocess.run(
            [sys.executable, "-m", "clasplink.cli", "gen-brn", "2"],
            capture_output=True,
            text=True,
            check=True,
        ).stdout,
        capture_output=True,
        text=True,
    )
    assert bounds.returncode == 0
    assert bounds.stdout.splitlines()[0] == "6 <= C <= 8"
