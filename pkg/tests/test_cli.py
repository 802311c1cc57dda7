import subprocess
import sys
from importlib import resources

import pytest

from arcrope.cli import main
from arcrope.curve import check_continuity, length
from arcrope.formats import parse_curve

TREFOIL = str(resources.files("arcrope").joinpath("catalog", "trefoil.arcs"))
MIRROR = str(resources.files("arcrope").joinpath("catalog", "trefoil_mirror.arcs"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_skip(capsys):
    assert run(capsys, "skip", TREFOIL) == (0, "12\n", "")


def test_bound_crossing(capsys):
    code, out, _ = run(capsys, "bound", "--crossing", "3")
    assert code == 0 and out == "44.57\n"
    code, out, _ = run(capsys, "bound", "--crossing", "3", "--exact")
    assert out == "44.53\n"
    code, out, _ = run(capsys, "bound", "--crossing", "3", "3")
    assert out == "89.14\n"


def test_bound_report(capsys):
    code, out, _ = run(capsys, "bound", "--crossing", "3", "--report")
    assert code == 0
    assert "alpha_used=5" in out and "thm1_decimal=44.57" in out


def test_bound_file(capsys):
    code, out, _ = run(capsys, "bound", "--file", TREFOIL)
    assert (code, out) == (0, "43.47\n")


def test_maxskip(capsys):
    assert run(capsys, "maxskip-oracle", "--alpha", "6")[:2] == (0, "18\n")


def test_maxskip_cap(capsys):
    code, _, err = run(capsys, "maxskip-oracle", "--alpha", "12")
    assert code == 1 and err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", TREFOIL)
    assert code == 0 and out.startswith("ok alpha=5")


def test_validation_failure(tmp_path, capsys):
    p = tmp_path / "dup.arcs"
    p.write_text("arcpres alpha=3\n1 2 0\n2 3 0\n3 1 1\n")
    code, out, err = run(capsys, "validate", str(p))
    assert code == 1 and out == "" and "line 3" in err


def test_parse_failure(tmp_path, capsys):
    p = tmp_path / "empty.arcs"
    p.write_text("")
    assert run(capsys, "skip", str(p))[0] == 2
    assert run(capsys, "skip", str(tmp_path / "missing.arcs"))[0] == 2


def test_bad_arguments(capsys):
    assert run(capsys, "extremal")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_extremal(tmp_path, capsys):
    out_file = tmp_path / "e7.arcs"
    assert run(capsys, "extremal", "--alpha", "7", "-o", str(out_file))[0] == 0
    assert run(capsys, "skip", str(out_file))[1] == "24\n"


def test_build_and_thickness(tmp_path, capsys):
    curve = tmp_path / "t.curve"
    obj = tmp_path / "t.obj"
    code, _, err = run(capsys, "build", TREFOIL, "-o", str(curve), "--mesh", str(obj), "--density", "5")
    assert code == 0 and "skip=12" in err
    c = parse_curve(curve.read_text())
    assert check_continuity(c) == []
    assert length(c) <= 43.47
    assert obj.read_text().startswith("v ")
    code, out, _ = run(capsys, "thickness", str(curve), "--density", "50")
    assert code == 0
    value = float(out.split()[0].split("=")[1])
    assert abs(value - 1) <= 1e-3


def test_thickness_of_presentation_is_parse_error(capsys):
    assert run(capsys, "thickness", TREFOIL)[0] == 2


@pytest.mark.slow
def test_connect_sum(tmp_path, capsys):
    a, b, ab = tmp_path / "a.curve", tmp_path / "b.curve", tmp_path / "ab.curve"
    run(capsys, "build", TREFOIL, "-o", str(a))
    run(capsys, "build", MIRROR, "-o", str(b))
    code, _, err = run(capsys, "connect-sum", str(a), str(b), "-o", str(ab), "--density", "40")
    assert code == 0 and "case=bitangent" in err
    c = parse_curve(ab.read_text())
    assert c.n_loops == 1 and check_continuity(c) == []


def test_console_module():
    r = subprocess.run(
        [sys.executable, "-m", "arcrope.cli", "skip", TREFOIL], capture_output=True, text=True, check=False
    )
    assert r.returncode == 0 and r.stdout == "12\n"
