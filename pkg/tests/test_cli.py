"""Command-line behavior: subcommands, exit codes, determinism, schema."""

import json
import pathlib

import jsonschema
import pytest

from nomsub import relation_from_json
from nomsub.cli import main

ROOT = pathlib.Path(__file__).resolve().parents[1]
SAMPLE = str(ROOT / "tables" / "sample.table")
REDUCED = str(ROOT / "tables" / "reduced.table")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_ok(capsys):
    code, out, _ = run(capsys, "check", SAMPLE)
    assert code == 0
    assert out == "ok: 8 classes, root Object\n"


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "nope.table")
    assert code == 2
    assert "error" in err


def test_check_invalid_table(tmp_path, capsys):
    bad = tmp_path / "bad.table"
    bad.write_text("class A extends B\nclass B extends A")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "cycle" in err


def test_subtype_true_and_false_both_exit_zero(capsys):
    code, out, _ = run(capsys, "subtype", SAMPLE, "LinkedList<String>", "List<?>")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "subtype", SAMPLE, "List<?>", "List<String>")
    assert (code, out) == (0, "false\n")


def test_subtype_rebuilds_for_deeper_terms(capsys):
    code, out, err = run(capsys, "subtype", SAMPLE,
                         "List<List<String>>", "List<?>")
    assert (code, out) == (0, "true\n")
    assert "rebuilding at depth 2" in err


def test_subtype_unordered_interval_is_warned_and_rejected(capsys):
    code, _, err = run(capsys, "subtype", SAMPLE,
                       "List<[Object..String]>", "List<?>")
    assert code == 2
    assert "unordered endpoints" in err


def test_universe_listing_is_sorted_and_deterministic(capsys):
    code, first, _ = run(capsys, "universe", SAMPLE, "--depth", "1")
    assert code == 0
    lines = first.strip().split("\n")
    assert lines == sorted(lines)
    assert "List<?>" in lines and "List<!>" in lines
    code, second, _ = run(capsys, "universe", SAMPLE, "--depth", "1")
    assert second == first


def test_galois_text_output(capsys):
    code, out, _ = run(capsys, "galois", SAMPLE)
    assert code == 0
    assert out.startswith("0 violations / 688 pairs")


def test_galois_json_output(capsys):
    code, out, _ = run(capsys, "galois", SAMPLE, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["violations"] == []
    assert doc["checked_pairs"] == 688


def test_closures_exit_zero(capsys):
    code, out, _ = run(capsys, "closures", SAMPLE)
    assert code == 0
    assert "unit violations: 0" in out


def test_build_export_json_round_trips(capsys, sample_table, sample_rel1):
    code, out, _ = run(capsys, "build", SAMPLE, "--export", "json")
    assert code == 0
    assert relation_from_json(sample_table, out) == sample_rel1


def test_build_export_dot(capsys):
    code, out, _ = run(capsys, "build", SAMPLE, "--export", "dot", "--depth", "0")
    assert code == 0
    assert out.startswith("digraph subtyping {")
    assert '"Integer" -> "Number";' in out


def test_fixpoint_commands(capsys):
    code, out, _ = run(capsys, "fsub", SAMPLE, "Enum")
    assert code == 0 and "Weekday" in out
    code, out, _ = run(capsys, "fsup", SAMPLE, "List")
    assert code == 0 and "Object" in out
    code, out, _ = run(capsys, "maxima", SAMPLE, "Enum")
    assert code == 0 and "dominates all members: True" in out
    code, out, _ = run(capsys, "minima", SAMPLE, "List")
    assert code == 0 and "below all members: True" in out


def test_validity_modes(capsys):
    for mode in ("ind", "coind"):
        code, out, _ = run(capsys, "validity", SAMPLE, "--mode", mode)
        assert code == 0
        assert "invalid: Enum<Object>" in out


def test_validity_json(capsys):
    code, out, _ = run(capsys, "validity", SAMPLE, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert "Enum<Weekday>" in doc["valid"]
    assert "Enum<Object>" in doc["invalid"]


def test_report_validates_against_shipped_schema(capsys):
    code, out, _ = run(capsys, "report", SAMPLE)
    assert code == 0
    doc = json.loads(out)
    schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
    jsonschema.validate(doc, schema)
    assert doc["verification_ok"] is True
    assert doc["galois"]["violations"] == []
    assert doc["validity"]["agree"] is True


def test_report_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "report", SAMPLE)
    _, second, _ = run(capsys, "report", SAMPLE)
    assert first == second


def test_depth_guard(capsys, tmp_path):
    code, _, err = run(capsys, "universe", SAMPLE, "--depth", "4")
    assert code == 2
    assert "cost guard" in err
    tiny = tmp_path / "tiny.table"
    tiny.write_text("class Object\nclass String extends Object")
    code, out, _ = run(capsys, "universe", str(tiny), "--depth", "4",
                       "--no-depth-guard")
    assert code == 0


def test_bad_flag_values(capsys):
    code, _, err = run(capsys, "universe", SAMPLE, "--cap", "0")
    assert code == 2
    code, _, err = run(capsys, "universe", SAMPLE, "--depth", "-1")
    assert code == 2


def test_usage_error_exits_two(capsys):
    assert main(["unknown-command"]) == 2
    assert main([]) == 2


def test_no_cofree_flag(capsys):
    code, out, _ = run(capsys, "universe", SAMPLE, "--no-cofree")
    assert code == 0
    assert "List<!>" not in out


def test_report_without_cofree_extension(capsys):
    code, out, _ = run(capsys, "report", SAMPLE, "--no-cofree")
    assert code == 0
    doc = json.loads(out)
    assert doc["verification_ok"] is True
    assert doc["fixpoints"]["List"]["cofree"] == {"is_member": False,
                                                  "is_least": False}


def test_type_syntax_error_exits_two(capsys):
    code, _, err = run(capsys, "subtype", SAMPLE, "List<", "List<?>")
    assert code == 2
    assert "error" in err
