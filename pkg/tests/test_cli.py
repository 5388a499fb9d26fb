"""CLI behavior: golden outputs, determinism, round trips, exit codes."""

from __future__ import annotations

import subprocess
import sys

import pytest

from xmlift.cli import run
from xmlift.report import parse_machine, render_machine

from regen_goldens import GOLDEN_CASES


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
@pytest.mark.parametrize("fmt", ["machine", "human"])
def test_golden_outputs(name, argv, fmt, golden_dir):
    expected = (golden_dir / f"{name}.{fmt}.txt").read_text(encoding="utf-8")
    code1, out1 = run(argv + ["--format", fmt])
    code2, out2 = run(argv + ["--format", fmt])
    assert out1 == out2, "reports must be byte stable across runs"
    assert out1 == expected
    if name.endswith("_fail"):
        assert code1 != 0
    else:
        assert code1 == 0
    assert code1 == code2


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_machine_roundtrip(name, argv):
    code, out = run(argv + ["--format", "machine"])
    report = parse_machine(out)
    assert render_machine(report) == out


def test_unknown_command_exit_code():
    code, out = run(["--fixture", "fixtures/z4.xmf", "frobnicate"])
    assert code == 22
    assert "UnknownCommand" in out


def test_usage_error_missing_fixture():
    code, out = run(["liftings", "xm"])
    assert code == 2


def test_usage_error_wrong_arg_count():
    code, out = run(["--fixture", "fixtures/z4.xmf", "liftings"])
    assert code == 2


def test_missing_file():
    code, out = run(["--fixture", "no/such/file.xmf", "check"])
    assert code == 2


def test_unresolved_reference_exit_code():
    code, out = run(["--fixture", "fixtures/z4.xmf", "classify", "nope"])
    assert code == 4
    assert "UnresolvedReference" in out


def test_error_paths_have_distinct_categories(tmp_path):
    cases = {}
    # syntax error
    bad_syntax = tmp_path / "syntax.xmf"
    bad_syntax.write_text("what even is this\n", encoding="utf-8")
    cases["syntax"] = run(["--fixture", str(bad_syntax), "check"])[0]
    # group validation error
    bad_group = tmp_path / "group.xmf"
    bad_group.write_text("A : group = table 0 0 ; 1 1\n", encoding="utf-8")
    cases["group"] = run(["--fixture", str(bad_group), "check"])[0]
    # unknown command and unresolved reference
    cases["unknown"] = run(["--fixture", "fixtures/z4.xmf", "nope"])[0]
    cases["unresolved"] = run(["--fixture", "fixtures/z4.xmf", "classify", "zz"])[0]
    # kernel condition failure
    cases["morphlift"] = run(
        ["--fixture", "fixtures/z4.xmf", "lift-morphism", "idm", "L0"]
    )[0]
    # wiring mismatch between named objects
    cases["wiring"] = run(
        ["--fixture", "fixtures/v4.xmf", "lift-derivation", "dt", "L"]
    )[0]
    assert all(code != 0 for code in cases.values())
    assert len(set(cases.values())) == len(cases)


def test_size_bound_flag():
    code, out = run(
        ["--fixture", "fixtures/z4.xmf", "--size-bound", "1", "liftings", "xm"]
    )
    assert code == 21
    assert "SizeBound" in out


def test_console_entry_point(golden_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "xmlift.cli", "--seed-catalog", "--format", "machine"],
        capture_output=True,
        text=True,
        cwd=str(golden_dir.parent.parent),
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("command = seed-catalog")


def test_check_reports_every_declaration(golden_dir):
    code, out = run(["--fixture", "fixtures/z4.xmf", "--format", "machine", "check"])
    report = parse_machine(out)
    assert report.value("declarations") == "18"
    assert report.value("status") == "ok"
    assert report.value("decl.4.kind") == "xmod"
    assert report.value("decl.4.class") == "transitive"
