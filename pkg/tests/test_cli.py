import io
import json

import pytest

from fanoqh.cli import run
from fanoqh.rings import bundled_path


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_build_then_analyze(tmp_path):
    path = tmp_path / "p4.qring"
    assert call("build", "--variety", "pn:4", "-o", str(path))[0] == 0
    code, out, _ = call("analyze", str(path))
    assert code == 0 and "semisimple: true" in out


def test_analyze_ig26():
    code, out, _ = call("analyze", str(bundled_path("IG(2,6)")))
    assert code == 0
    assert "radical dim: 1; semisimple: false; Q_Y positive definite: true" in out


def test_analyze_json_has_every_field():
    code, out, _ = call("analyze", str(bundled_path("F4/P4")), "--json")
    data = json.loads(out)
    assert code == 0 and data["radical_dim"] == 1 and data["positive_definite"] is True
    assert data["clause3"] is True


def test_analyze_stable_under_roundtrip(tmp_path):
    src = bundled_path("IG(2,6)")
    copy = tmp_path / "copy.qring"
    copy.write_text(src.read_text(encoding="utf-8"), encoding="utf-8")
    assert call("analyze", str(src))[1] == call("analyze", str(copy))[1]


@pytest.mark.parametrize("name", ["IG(2,6)", "F4/P4"])
def test_deform_point(name):
    code, out, _ = call("deform", str(bundled_path(name)), "--tau", "pt")
    assert code == 0
    assert out.strip().endswith("OBSTRUCTED: 4-point candidate 2/3 is not a nonnegative integer")


def test_deform_ig28():
    code, out, _ = call("deform", str(bundled_path("IG(2,8)")), "--tau", "s:a2+2a3+a4")
    assert code == 0 and "not divisible by 16" in out


def test_build_coadjoint_matches_bundled():
    code, out, _ = call("build", "--variety", "coadj:C3")
    assert code == 0 and out == bundled_path("IG(2,6)").read_text(encoding="utf-8")


def test_catalog():
    code, out, _ = call("catalog")
    assert code == 0 and "dim F = 2(c1 - dim Gamma2): PASS" in out


def test_verify_props():
    code, out, _ = call("verify", "--suite", "props")
    assert code == 0 and "fail=0" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        ((), 2),
        (("build",), 2),
        (("build", "--variety", "zz:3"), 2),
        (("build", "--variety", "pn:x"), 2),
        (("analyze", "/nonexistent.qring"), 3),
        (("verify", "--suite", "bogus"), 2),
    ],
)
def test_error_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code and err


def test_bad_table_is_data_error(tmp_path):
    path = tmp_path / "bad.qring"
    path.write_text("name x\nc1 oops\n", encoding="utf-8")
    assert call("analyze", str(path))[0] == 3


def test_unknown_tau_label():
    assert call("deform", str(bundled_path("IG(2,6)")), "--tau", "s:a9")[0] == 3


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "fanoqh", "build", "--variety", "pn:2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("name P2")
