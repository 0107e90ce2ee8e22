"""CLI behaviour: exit codes, round trips, report schemas."""

import json
from importlib import resources

import pytest

jsonschema = pytest.importorskip("jsonschema")

from triplelines.cli import run


def _schema(name):
    text = resources.files("triplelines").joinpath("schemas", name).read_text()
    return json.loads(text)


def _validate(report, schema_name):
    schema = _schema(schema_name)
    if schema_name == "search_report.schema.json":
        # resolve the arrangement reference manually
        schema = json.loads(json.dumps(schema))
        schema["properties"]["witnesses"]["items"] = _schema("arrangement.schema.json")
    jsonschema.validate(report, schema)


def test_bounds_matches_published_row():
    res = run(["bounds", "--max", "12"])
    assert res.exit_code == 0
    values = [int(line.split()[2]) for line in res.text.splitlines()[1:]]
    assert values == [0, 0, 1, 1, 2, 4, 7, 8, 12, 13, 17, 20]
    _validate(res.report, "bounds_report.schema.json")


def test_bounds_csv(tmp_path):
    out = tmp_path / "bounds.csv"
    res = run(["bounds", "--max", "5", "--csv", str(out)])
    assert res.exit_code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "s,naive,u3,eps"
    assert lines[5] == "5,3,2,1"


def test_verify_exit_codes():
    assert run(["verify", "TEN_E2", "--field", "5"]).exit_code == 0
    assert run(["verify", "TEN_E1", "--field", "2^2"]).exit_code == 0
    # ineligible field is an input error, not a failed verification
    assert run(["verify", "TEN_E2", "--field", "7"]).exit_code == 2
    assert run(["verify", "NOPE", "--field", "5"]).exit_code == 2


def test_verify_report_schema(tmp_path):
    out = tmp_path / "verify.json"
    res = run(["verify", "ELEVEN_16", "--field", "11", "--param", "7",
               "--json", str(out)])
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    _validate(report, "verify_report.schema.json")
    assert report["ok"] and report["param"] == 7


def test_search_cli_target_miss_exits_one(tmp_path):
    out = tmp_path / "search.json"
    res = run(["search", "--field", "3", "--lines", "11", "--target", "17",
               "--no-frame", "--out", str(out)])
    assert res.exit_code == 1
    report = json.loads(out.read_text())
    _validate(report, "search_report.schema.json")
    assert report["exhaustive"] and not report["target_reached"]
    assert any("per-field" in n for n in report["notes"])


def test_search_cli_success():
    res = run(["search", "--field", "2", "--lines", "7", "--no-frame"])
    assert res.exit_code == 0
    assert res.report["best"] == 7
    _validate(res.report, "search_report.schema.json")


def test_search_cli_rejects_bad_field():
    assert run(["search", "--field", "4", "--lines", "5"]).exit_code == 2


def test_search_cli_gf5_seventeen_unreachable():
    res = run(["search", "--field", "5", "--lines", "11", "--target", "17"])
    assert res.exit_code == 1
    assert res.report["best"] <= 16
    assert res.report["exhaustive"] and not res.report["target_reached"]


def test_constraints_cli_single_field(tmp_path):
    out = tmp_path / "con.json"
    res = run(["constraints", "TEN_CASE_B", "--field", "5", "--list-solutions",
               "--consequences", "--json", str(out)])
    assert res.exit_code == 0
    assert "a=3, b=1, c=2" in res.text
    report = json.loads(out.read_text())
    _validate(report, "constraints_report.schema.json")
    assert report["fields"][0]["solutions"] == [{"a": 3, "b": 1, "c": 2}]
    assert report["consequences"]["ok"]


def test_constraints_cli_battery():
    res = run(["constraints", "ELEVEN_CASE_II", "--battery", "--consequences"])
    assert res.exit_code == 0
    _validate(res.report, "constraints_report.schema.json")
    assert all(entry["solution_count"] == 0 for entry in res.report["fields"])


def test_torsion_cli(tmp_path):
    out = tmp_path / "torsion.json"
    res = run(["torsion", "--p", "5", "--dual", "--json", str(out)])
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    _validate(report, "torsion_report.schema.json")
    assert report["dual"]["t3"] == 92 and report["dual"]["gap"] == 8
    # p = 3 dual is an input error per the degenerate formula
    assert run(["torsion", "--p", "3", "--dual"]).exit_code == 2
    assert run(["torsion", "--p", "3"]).exit_code == 0
    assert run(["torsion", "--p", "6"]).exit_code == 2


def test_profile_missing_file_names_it():
    res = run(["profile", "no_such_file.json"])
    assert res.exit_code == 2
    assert "no_such_file.json" in res.text


def test_export_profile_round_trip(tmp_path):
    out = tmp_path / "e16.json"
    assert run(["export", "ELEVEN_16", "--field", "11", "--param", "3",
                "--out", str(out)]).exit_code == 0
    data = json.loads(out.read_text())
    _validate(data, "arrangement.schema.json")

    prof1 = run(["profile", str(out), "--json", str(tmp_path / "p1.json")])
    assert prof1.exit_code == 0
    report = json.loads((tmp_path / "p1.json").read_text())
    _validate(report, "profile_report.schema.json")
    assert report["tvec"] == {"3": 16, "2": 7}
    assert report["identity_holds"] and report["parity_all_pass"]

    # byte-for-byte reproducibility of the t-vector line
    prof2 = run(["profile", str(out)])
    assert prof1.text == prof2.text


def test_profile_csv_table(tmp_path):
    arr = tmp_path / "fano.json"
    run(["export", "FANO", "--field", "2", "--out", str(arr)])
    csv_path = tmp_path / "table.csv"
    res = run(["profile", str(arr), "--csv", str(csv_path)])
    assert res.exit_code == 0
    rows = csv_path.read_text().strip().splitlines()
    assert len(rows) == 8                      # header + 7 lines
    assert all(row.count("+") == 3 for row in rows[1:])


def test_iso_cli(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(["export", "DUAL_HESSE", "--field", "3", "--out", str(a)])
    run(["export", "FANO", "--field", "2", "--out", str(b)])
    same = run(["iso", str(a), str(a)])
    assert same.exit_code == 0 and same.report["isomorphic"]
    _validate(same.report, "iso_report.schema.json")
    diff = run(["iso", str(a), str(b)])
    assert diff.exit_code == 1 and not diff.report["isomorphic"]


def test_dualize_cli(tmp_path):
    a = tmp_path / "dh.json"
    run(["export", "DUAL_HESSE", "--field", "3", "--out", str(a)])
    out = tmp_path / "dual.json"
    res = run(["dualize", str(a), "--out", str(out), "--min-mult", "3"])
    assert res.exit_code == 0
    prof = run(["profile", str(out)])
    assert "{3: 4, 4: 9}" in prof.text


def test_usage_errors_exit_two():
    assert run(["bogus"]).exit_code == 2
    assert run(["bounds"]).exit_code == 2
    assert run([]).exit_code == 2


def test_help_exits_zero():
    assert run(["--help"]).exit_code == 0
