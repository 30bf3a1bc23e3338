"""End-to-end command-line behaviour, including exit codes."""
import json

import pytest
from click.testing import CliRunner

from twistlab.catalog import dumps_catalog, load_default_catalog, mirror_catalog
from twistlab.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


# -- verify -----------------------------------------------------------------

def test_verify_named_entries(runner):
    result = invoke(runner, "verify", "REL-WH-L", "REL-LANTERN")
    assert result.exit_code == 0
    assert "PASS  REL-WH-L" in result.output
    assert "2 passed, 0 failed" in result.output


def test_verify_unknown_name_is_a_usage_error(runner):
    result = invoke(runner, "verify", "NO-SUCH")
    assert result.exit_code == 2
    assert "unknown relation" in result.stderr


def test_verify_all_json(runner):
    result = invoke(runner, "--format", "json", "verify")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["failed"] == 0
    assert data["convention"] == "standard"


def test_verify_report_dir(runner, tmp_path):
    out = tmp_path / "reports"
    result = invoke(runner, "verify", "REL-WH-L", "--report-dir", str(out))
    assert result.exit_code == 0
    for name in ("report.json", "report.csv", "report.png"):
        assert (out / name).exists()


def test_verify_failure_exits_one(runner, tmp_path):
    doc = {
        "curves": {
            "p": {"kind": "curve", "punctures": 3, "base": [1, 2], "prep": []},
            "q": {"kind": "curve", "punctures": 3, "base": [2, 3], "prep": []},
        },
        "relations": [
            {
                "name": "R-FALSE",
                "ambient": {"group": "braid", "strands": 3},
                "lhs": {"twist": "p"},
                "rhs": {"twist": "q"},
                "source": "",
                "tags": [],
                "constraints": [],
            }
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    result = invoke(runner, "--catalog", str(path), "verify")
    assert result.exit_code == 1
    assert "FAIL  R-FALSE" in result.output


def test_mirrored_catalog_via_env(runner, tmp_path):
    curves, entries = load_default_catalog()
    m_curves, m_entries = mirror_catalog(curves, entries)
    path = tmp_path / "mirrored.json"
    path.write_text(dumps_catalog(m_curves, m_entries))
    result = invoke(runner, "verify", env={"TWISTLAB_CATALOG": str(path)})
    assert result.exit_code == 0
    assert "convention: mirrored" in result.output


def test_missing_catalog_file(runner, tmp_path):
    result = invoke(runner, "--catalog", str(tmp_path / "nope.json"), "catalog")
    assert result.exit_code == 2


# -- apply ------------------------------------------------------------------

def test_apply_round_curve_invariance(runner):
    fixed = invoke(runner, "apply", "1 1", "round:1,2@3")
    echoed = invoke(runner, "apply", "", "round:1,2@3")
    assert fixed.exit_code == 0 and echoed.exit_code == 0
    assert fixed.output == echoed.output
    assert "norm: 1" in fixed.output


def test_apply_catalog_curve_json(runner):
    result = invoke(runner, "--format", "json", "apply", "2 3", "w")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["punctures"] == 7
    assert data["norm"] >= 1


def test_apply_errors(runner):
    assert invoke(runner, "apply", "1", "round:9@x").exit_code == 2
    assert invoke(runner, "apply", "1", "unknown-curve").exit_code == 2
    assert invoke(runner, "apply", "7", "round:1,2@3").exit_code == 2  # bad letter


# -- burau ------------------------------------------------------------------

def test_burau_symbolic(runner):
    result = invoke(runner, "burau", "1", "--strands", "2")
    assert result.exit_code == 0
    assert result.output.strip() == "[ -t ]"


def test_burau_at_value(runner):
    result = invoke(runner, "burau", "1 1", "--strands", "2", "--at", "-1")
    assert result.exit_code == 0
    assert result.output.strip() == "[ 1 ]"
    json_result = invoke(
        runner, "--format", "json", "burau", "1", "--strands", "2", "--at", "1/2"
    )
    assert json.loads(json_result.output)["matrix"] == [["-1/2"]]


def test_burau_errors(runner):
    assert invoke(runner, "burau", "1", "--strands", "2", "--at", "0").exit_code == 2
    assert (
        invoke(runner, "burau", "1", "--strands", "2", "--at", "-1", "--symbolic").exit_code
        == 2
    )
    assert invoke(runner, "burau", "9", "--strands", "2").exit_code == 2


# -- forget -----------------------------------------------------------------

def test_forget_pure_braid(runner):
    result = invoke(runner, "forget", "1 1", "--strands", "3", "--keep", "1,2")
    assert result.exit_code == 0
    assert "word: 1 1" in result.output


def test_forget_squared_boundary_twist(runner):
    compiled = invoke(runner, "compile", "b3.boundary")
    word = compiled.output.strip().splitlines()[-1]
    result = invoke(runner, "forget", word, "--strands", "3", "--keep", "1,2")
    assert result.exit_code == 0
    assert "word: 1 1 1 1" in result.output


def test_forget_errors(runner):
    assert invoke(runner, "forget", "1", "--strands", "3", "--keep", "1,2").exit_code == 2
    assert invoke(runner, "forget", "1 1", "--strands", "3", "--keep", "zz").exit_code == 2
    assert invoke(runner, "forget", "1 1", "--strands", "3", "--keep", "9").exit_code == 2


# -- compile ----------------------------------------------------------------

def test_compile_modes(runner):
    half = invoke(runner, "compile", "x")
    assert half.exit_code == 0 and "half-twist" in half.output
    squared = invoke(runner, "compile", "w")
    assert squared.exit_code == 0 and "squared-twist" in squared.output
    full = invoke(runner, "compile", "b3.a12")
    assert full.exit_code == 0 and "full-twist" in full.output
    assert full.output.strip().endswith("1 1")


def test_compile_json_and_errors(runner):
    result = invoke(runner, "--format", "json", "compile", "e")
    data = json.loads(result.output)
    assert data == {"mode": "half-twist", "name": "e", "strands": 7, "word": [6]}
    assert invoke(runner, "compile", "nothing").exit_code == 2


# -- catalog ----------------------------------------------------------------

def test_catalog_listing(runner):
    result = invoke(runner, "catalog")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert "relations" in lines[0]
    listed = [line.split()[0] for line in lines[1:] if line and not line.startswith(" ")]
    assert listed == sorted(listed)
    assert "REL-SSIP-B7" in listed


def test_catalog_json(runner):
    result = invoke(runner, "--format", "json", "catalog")
    data = json.loads(result.output)
    names = [entry["name"] for entry in data["relations"]]
    assert "REL-SZSIP-B7" in names and names == sorted(names)
    assert "w" in data["curves"]
