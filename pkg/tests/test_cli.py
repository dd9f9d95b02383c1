import io
import subprocess
import sys

import pytest

from hibireg.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

EXAMPLE = "p1; p2; p3; p4; p5\np1<p4; p2<p4; p2<p5; p3<p5\n"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def example_file(tmp_path):
    p = tmp_path / "example.poset"
    p.write_text(EXAMPLE)
    return str(p)


# -- reg --------------------------------------------------------------------------

def test_reg_boolean():
    code, out = run("reg", "--builtin", "antichain 4")
    assert code == EXIT_OK
    assert "value: 3 (boolean-closed-form)" in out


def test_reg_example_file(example_file):
    code, out = run("reg", "-i", example_file)
    assert code == EXIT_OK
    assert "value: 3, bounds: [2, 4]" in out


def test_reg_chain():
    code, out = run("reg", "--builtin", "chain 3")
    assert code == EXIT_OK and out.startswith("value: 0")


def test_reg_records():
    code, out = run("reg", "--builtin", "grid 2x3", "--format", "records")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "value=1"
    assert lines[-1] == "linear_resolution=1"


def test_reg_bounds_only_banner(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("a; b; c; d; a<d")
    code, out = run("reg", "-i", str(p), "--budget", "3")
    assert code == EXIT_OK
    assert out.startswith("*** bounds-only")


def test_reg_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(EXAMPLE))
    code, out = run("reg", "-i", "-")
    assert code == EXIT_OK and "value: 3" in out


# -- errors and exit codes -----------------------------------------------------------

def test_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("a<b<c")
    code, _ = run("reg", "-i", str(p))
    assert code == EXIT_USAGE
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["reg"],
    ["reg", "--builtin", "chain 2", "-i", "x"],
    ["reg", "--builtin", "no-such-thing"],
    ["reg", "-i", "/nonexistent/file"],
    ["reg", "--builtin", "chain 2", "--budget", "0"],
    ["sweep", "--size", "9"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_cap_exceeded_is_usage():
    assert run("hvector", "--builtin", "antichain 4", "--budget", "5")[0] == EXIT_USAGE


def test_theorem_failure_exit(monkeypatch):
    import hibireg.cli as cli

    monkeypatch.setattr(cli, "max_cyclic_squares", lambda L, emb: (99, None))
    code, out = run("verify", "--builtin", "grid 2x3")
    assert code == EXIT_FAIL
    assert "FAIL squares = descents = deg h" in out


# -- hvector ------------------------------------------------------------------------

def test_hvector_boolean():
    code, out = run("hvector", "--builtin", "boolean 3")
    assert code == EXIT_OK
    assert out.startswith("h: 1 4 1 (both paths agree)")


def test_hvector_chain():
    assert run("hvector", "--builtin", "chain 4")[1].startswith("h: 1 (both")


def test_hvector_example(example_file):
    code, out = run("hvector", "-i", example_file)
    assert "deg h = 3" in out


def test_hvector_records():
    code, out = run("hvector", "--builtin", "antichain 2", "--format", "records")
    assert out.splitlines()[:4] == ["h_beta=1 1", "h_f=1 1", "agree=1", "degree=1"]


# -- verify -------------------------------------------------------------------------

def test_verify_grid():
    code, out = run("verify", "--builtin", "grid 2x3")
    assert code == EXIT_OK
    assert out.count("PASS") == 3 and "all checks pass" in out


def test_verify_boolean3():
    code, out = run("verify", "--builtin", "boolean 3")
    assert code == EXIT_OK
    assert out == "not planar; witness antichain {p1,p2,p3}; bounds (2,2)\n"


def test_verify_diamond():
    code, out = run("verify", "--builtin", "antichain 2")
    assert code == EXIT_OK and "max descents 1" in out


# -- export -------------------------------------------------------------------------

def test_export_diamond(tmp_path):
    code, out = run("export", "--builtin", "antichain 2", "--out", str(tmp_path))
    assert code == EXIT_OK
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 2
    assert any(f.endswith(".cas.txt") for f in files) and any(f.endswith(".dot") for f in files)
    assert len(out.splitlines()) == 2


def test_export_dialect(tmp_path):
    code, _ = run("export", "--builtin", "example-nonplanar", "--dialect", "singular", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert len(list(tmp_path.glob("*.sing"))) == 1
    assert run("export", "--builtin", "chain 2", "--dialect", "maple", "--out", str(tmp_path))[0] == EXIT_USAGE


def test_export_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run("export", "--builtin", "chain 2", "--out", str(blocker / "sub"))[0] == EXIT_USAGE


# -- sweep --------------------------------------------------------------------------

def test_sweep_size4():
    code, out = run("sweep", "--size", "4")
    assert code == EXIT_OK
    assert "total 24 posets, 0 failures" in out
    assert out.splitlines()[-2].split()[:2] == ["4", "16"]


def test_sweep_size1_records():
    code, out = run("sweep", "--size", "1", "--format", "records")
    assert out.splitlines()[0].startswith("size=1 posets=1 ")


def test_sweep_deterministic():
    assert run("sweep", "--size", "5", "--format", "records") == run("sweep", "--size", "5", "--format", "records")


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "hibireg.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("hibireg ")
