"""Command line behavior: selection, overrides, reports, exit codes."""

import csv
import io
import json

import pytest

from lacunary import cli


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_prints_every_case(capsys):
    code, out, err = _run(capsys, "list")
    assert code == 0 and not err
    lines = out.strip().splitlines()
    assert len(lines) == 25
    assert lines[0].startswith("EQ1.7 - Eq. 1.7 - ")


def test_verify_single_case_json_document(capsys):
    code, out, _ = _run(capsys, "verify", "--id", "EQ2.13", "--mode", "exact")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"run", "results"}
    (result,) = doc["results"]
    assert result["id"] == "EQ2.13"
    assert result["mode"] == "exact"
    assert result["max_rel_err"] == 0.0
    assert result["pass"] is True
    assert doc["run"]["config"]["ids"] == ["EQ2.13"]


def test_verify_all_passes(capsys):
    code, out, _ = _run(capsys, "verify", "--all", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["results"]) == 31
    assert all(r["pass"] for r in doc["results"])
    assert "timestamp" not in doc["run"]


def test_unknown_id_is_usage_error(capsys):
    code, _, err = _run(capsys, "verify", "--id", "EQ9.9")
    assert code == 2
    assert "EQ9.9" in err


def test_explicit_id_with_missing_mode_is_usage_error(capsys):
    code, _, err = _run(capsys, "verify", "--id", "EQ2.8", "--mode", "exact")
    assert code == 2
    assert "EQ2.8" in err


def test_all_with_mode_filter_skips_silently(capsys):
    code, out, _ = _run(capsys, "verify", "--all", "--mode", "quadrature")
    assert code == 0
    doc = json.loads(out)
    assert [r["id"] for r in doc["results"]] == ["EQ3.18"]


def test_tolerance_must_tighten(capsys):
    code, _, err = _run(capsys, "verify", "--id", "EQ1.7", "--tol", "2e-8")
    assert code == 2 and "tol" in err
    code, _, _ = _run(capsys, "verify", "--id", "EQ1.7", "--tol", "1e-9")
    assert code == 0


def test_grid_scale_must_shrink(capsys):
    code, _, err = _run(capsys, "verify", "--id", "EQ1.7", "--grid-scale", "1.5")
    assert code == 2 and "grid" in err.lower()
    code, _, _ = _run(capsys, "verify", "--id", "EQ1.7", "--grid-scale", "0.5")
    assert code == 0


def test_no_selection_is_usage_error(capsys):
    code, _, err = _run(capsys, "verify")
    assert code == 2
    assert "select" in err.lower() or "id" in err.lower()


def test_report_reruns_are_byte_identical(tmp_path, capsys):
    target = tmp_path / "report.json"
    argv = (
        "verify", "--id", "EQ1.7", "--id", "EQ3.18",
        "--seed", "7", "--no-timestamp", "--report", str(target),
    )
    assert cli.main(list(argv)) == 0
    first = target.read_bytes()
    summary = capsys.readouterr().out
    assert summary.strip().endswith("reports passed")
    assert cli.main(list(argv)) == 0
    capsys.readouterr()
    assert target.read_bytes() == first
    doc = json.loads(first)
    assert [r["id"] for r in doc["results"]] == ["EQ1.7", "EQ1.7", "EQ3.18", "EQ3.18"]


def test_csv_report_parses(capsys):
    code, out, _ = _run(
        capsys, "verify", "--id", "EQ2.13", "--format", "csv", "--no-timestamp"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == [
        "seed", "timestamp", "id", "paper_ref", "mode", "grid_size",
        "truncation", "max_abs_err", "max_rel_err", "pass", "notes",
    ]
    assert len(rows) == 3
    assert rows[1][2] == "EQ2.13"
    assert {row[9] for row in rows[1:]} == {"true"}


def test_nmax_override_reaches_reports(capsys):
    code, out, _ = _run(capsys, "verify", "--id", "EQ2.7", "--nmax", "45")
    assert code == 0
    doc = json.loads(out)
    assert {r["truncation"] for r in doc["results"]} == {45}


def test_under_truncated_series_fails_honestly(capsys):
    # Eight terms leave a visible tail, so the stability rule must fail
    # the numeric report and the exit code must say so.
    code, out, _ = _run(capsys, "verify", "--id", "EQ2.7", "--nmax", "8")
    assert code == 1
    by_mode = {r["mode"]: r for r in json.loads(out)["results"]}
    assert by_mode["exact"]["pass"] is True
    assert by_mode["numeric"]["pass"] is False
    assert any("tail" in note for note in by_mode["numeric"]["notes"])


def test_config_file_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ids": ["EQ2.13"], "mode": "numeric", "seed": 3}))
    code, out, _ = _run(capsys, "verify", "--config", str(cfg))
    assert code == 0
    doc = json.loads(out)
    (result,) = doc["results"]
    assert result["mode"] == "numeric"
    assert doc["run"]["seed"] == 3


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ids": ["EQ2.13"], "mode": "numeric"}))
    code, out, _ = _run(
        capsys, "verify", "--config", str(cfg), "--mode", "exact"
    )
    assert code == 0
    (result,) = json.loads(out)["results"]
    assert result["mode"] == "exact"


def test_unknown_config_key_is_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ids": ["EQ2.13"], "tolerance": 1e-9}))
    code, _, err = _run(capsys, "verify", "--config", str(cfg))
    assert code == 2
    assert "tolerance" in err


def test_non_dict_config_is_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(["EQ2.13"]))
    code, _, err = _run(capsys, "verify", "--config", str(cfg))
    assert code == 2


def test_derive_aux_reports_matches(capsys):
    code, out, _ = _run(capsys, "derive-aux", "--family", "p", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["matches_paper"] is True
    assert doc["verdict"] == "exact_match"
    assert doc["factorial_shift"] == 3
    assert any(
        c["r_power"] == 2 and c["t_power"] == 0 and c["value"] == "1"
        for c in doc["coefficients"]
    )


def test_derive_aux_q_family(capsys):
    code, out, _ = _run(capsys, "derive-aux", "--family", "q")
    assert code == 0
    doc = json.loads(out)
    assert doc["matches_paper"] is True
    assert doc["factorial_shift"] == 4


def test_derive_aux_reports_null_direction_mismatch(capsys):
    code, out, _ = _run(capsys, "derive-aux", "--family", "p", "--m", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["matches_paper"] is False
    assert doc["verdict"] == "same_weighted_sum"


def test_derive_aux_rejects_unsupported_order(capsys):
    code, _, err = _run(capsys, "derive-aux", "--family", "q", "--m", "2")
    assert code == 2
    assert "m" in err
