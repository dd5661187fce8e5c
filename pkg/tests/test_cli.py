import json

import pytest

from weakhopf.cli import run
from weakhopf.serialization import serialize_quantum_groupoid
from weakhopf import zoo


@pytest.fixture()
def emitted(tmp_path):
    out = tmp_path / "fx"
    assert run(["zoo", "diag2", "--out-dir", str(out)]) == 0
    return {
        "qg": str(out / "diag2.qg"),
        "qt": str(out / "diag2.qt"),
        "coc": str(out / "diag2.coc"),
    }


def test_zoo_list(capsys):
    assert run(["zoo"]) == 0
    captured = capsys.readouterr().out
    for name in zoo.fixture_names():
        assert name in captured


def test_check_passes_on_fixture_files(emitted, capsys):
    rc = run(["check", emitted["qg"], emitted["qt"], emitted["coc"]])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "[FAIL]" not in captured
    assert "[PASS] weak-bialgebra/associativity" in captured


def test_check_zoo_scheme(capsys):
    assert run(["check", "zoo:diag2"]) == 0


def test_check_missing_file():
    assert run(["check", "/nonexistent/path.qg"]) == 2


def test_check_malformed_file(tmp_path):
    bad = tmp_path / "bad.qg"
    bad.write_text("kind: quantum-groupoid\ndim: x\n")
    assert run(["check", str(bad)]) == 2


def test_structured_reports_are_byte_identical(emitted, tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    argv = ["check", emitted["qg"], emitted["qt"], emitted["coc"], "--format", "structured"]
    assert run(argv + ["--out", str(out1)]) == 0
    assert run(argv + ["--out", str(out2)]) == 0
    b1 = out1.read_bytes()
    assert b1 == out2.read_bytes()
    payload = json.loads(b1)
    assert payload["exit"] == 0
    assert all(c["passed"] for c in payload["checks"])


def test_corrupted_counit_exits_one(tmp_path, capsys):
    fx = zoo.fixture("diag2")
    text = serialize_quantum_groupoid(fx.algebra)
    text = text.replace("counit: 1 1", "counit: 0 0")
    path = tmp_path / "broken.qg"
    path.write_text(text)
    assert run(["check", str(path), "--format", "structured"]) == 1
    payload = json.loads(capsys.readouterr().out)
    failing = [c for c in payload["checks"] if not c["passed"]]
    assert any(c["name"] == "counit-axiom" and "witness" in c for c in failing)


def test_fail_fast_stops_after_first_failing_suite(tmp_path, capsys):
    fx = zoo.fixture("diag2")
    text = serialize_quantum_groupoid(fx.algebra)
    text = text.replace("counit: 1 1", "counit: 0 0")
    path = tmp_path / "broken.qg"
    path.write_text(text)
    assert run(["check", str(path), "--fail-fast", "--format", "structured"]) == 1
    payload = json.loads(capsys.readouterr().out)
    suites = {c["suite"] for c in payload["checks"]}
    assert suites == {"weak-bialgebra"}


def test_transmute_command(emitted, capsys):
    rc = run(["transmute", "--algebra", emitted["qg"], "--qt", emitted["qt"]])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "kind: presentation" in captured
    assert "[FAIL]" not in captured


def test_quantize_command(emitted, capsys):
    rc = run(["quantize", "--algebra", emitted["qg"], "--cocycle", emitted["coc"]])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "kind: presentation" in captured


def test_twist_command(emitted, capsys):
    rc = run([
        "twist",
        "--algebra", emitted["qg"],
        "--qt", emitted["qt"],
        "--cocycle", emitted["coc"],
    ])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "kind: quantum-groupoid" in captured
    assert "kind: qt-structure" in captured


def test_verify_iso_command(capsys):
    rc = run(["verify-iso", "--algebra", "zoo:diag2", "--cocycle", "zoo:diag2"])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "presentations: equal" in captured


def test_verify_iso_structured(capsys):
    rc = run([
        "verify-iso", "--algebra", "zoo:kd4", "--cocycle", "zoo:kd4",
        "--format", "structured",
    ])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["presentations_equal"] is False
    assert all(c["passed"] for c in payload["checks"])


def test_with_hexagons_flag(capsys):
    rc = run(["check", "zoo:diag2", "--with-hexagons"])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "coherence/hexagon-first" in captured


def test_exit_code_contract_over_corpus(tmp_path):
    # every fixture emits and checks clean through files
    for name in zoo.fixture_names():
        out = tmp_path / name
        assert run(["zoo", name, "--out-dir", str(out)]) == 0
        rc = run([
            "check",
            str(out / ("%s.qg" % name)),
            str(out / ("%s.qt" % name)),
            str(out / ("%s.coc" % name)),
            "--out", str(out / "report.txt"),
        ])
        assert rc == 0, name


def test_transmute_with_explicit_target_and_morphism(emitted, tmp_path, capsys):
    from weakhopf import identity_morphism
    from weakhopf.serialization import serialize_morphism

    fx = zoo.fixture("diag2")
    mor = tmp_path / "id.mor"
    mor.write_text(serialize_morphism(identity_morphism(fx.algebra)))
    rc = run([
        "transmute",
        "--algebra", emitted["qg"],
        "--qt", emitted["qt"],
        "--target", emitted["qg"],
        "--morphism", str(mor),
    ])
    assert rc == 0
    assert "kind: presentation" in capsys.readouterr().out


def test_check_module_document(emitted, tmp_path, capsys):
    from weakhopf import regular_module
    from weakhopf.serialization import serialize_module

    fx = zoo.fixture("diag2")
    mod = tmp_path / "reg.mod"
    mod.write_text(serialize_module(regular_module(fx.algebra)))
    rc = run(["check", emitted["qg"], str(mod)])
    assert rc == 0
    captured = capsys.readouterr().out
    assert "module/action-multiplicative" in captured


def test_console_entry_point():
    import subprocess

    proc = subprocess.run(
        ["weakhopf", "zoo"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "kd4_diag2" in proc.stdout


def test_singular_antipode_file_exits_one(tmp_path, capsys):
    fx = zoo.fixture("diag2")
    text = serialize_quantum_groupoid(fx.algebra)
    text = text.replace("antipode:\n1 0\n0 1", "antipode:\n1 0\n1 0")
    path = tmp_path / "singular.qg"
    path.write_text(text)
    assert run(["check", str(path)]) == 1
    assert "antipode-invertible" in capsys.readouterr().out
