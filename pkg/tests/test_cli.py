import importlib.resources
import json

import jsonschema
import pytest

from delpezzo import __version__
from delpezzo.cli import run

from helpers import LINE_COUNTS, ROOT_COUNTS


@pytest.fixture(scope="module")
def schema():
    text = (
        importlib.resources.files("delpezzo")
        .joinpath("report_schema.json")
        .read_text(encoding="utf-8")
    )
    return json.loads(text)


def run_json(capsys, *argv):
    code = run([*argv, "--format", "json"])
    out = capsys.readouterr()
    assert code == 0, out.err
    return json.loads(out.out)


def test_roots_report(capsys, schema):
    report = run_json(capsys, "roots", "--r", "6")
    jsonschema.validate(report, schema)
    assert report["tool"] == {"name": "delpezzo", "version": __version__}
    assert report["query"] == {"command": "roots", "r": 6, "positive": False}
    assert report["counts"]["items"] == 72
    assert len(report["items"]) == 72
    assert "timing_ms" not in report


def test_positive_roots_report(capsys, schema):
    report = run_json(capsys, "roots", "--r", "6", "--positive")
    jsonschema.validate(report, schema)
    assert report["counts"]["items"] == 36
    assert "2h-e1-e2-e3-e4-e5-e6" in report["items"]


@pytest.mark.parametrize("r", range(3, 9))
def test_lines_counts(capsys, schema, r):
    report = run_json(capsys, "lines", "--r", str(r))
    jsonschema.validate(report, schema)
    assert report["counts"]["items"] == LINE_COUNTS[r]


def test_classes_matches_lines(capsys):
    a = run_json(capsys, "classes", "--r", "6", "--self-int", "-1", "--degree", "1")
    b = run_json(capsys, "lines", "--r", "6")
    assert a["items"] == b["items"]


def test_classes_adjunction_violation_exits_2(capsys):
    assert run(["classes", "--r", "6", "--self-int", "0", "--degree", "1"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_triples(capsys, schema):
    report = run_json(capsys, "triples", "--r", "6")
    jsonschema.validate(report, schema)
    assert report["counts"]["items"] == 45
    assert all(len(t) == 3 for t in report["items"])
    assert run(["triples", "--r", "5"]) == 2


def test_sixes_and_double_sixes(capsys, schema):
    report = run_json(capsys, "sixes", "--r", "6")
    jsonschema.validate(report, schema)
    assert report["counts"]["items"] == 72
    double = run_json(capsys, "sixes", "--r", "6", "--double")
    assert double["counts"] == {"items": 36, "sixes": 72}
    first = double["items"][0]
    assert set(first) == {"six", "partner"}


def test_orbit(capsys, schema):
    report = run_json(capsys, "orbit", "--r", "6", "--weight", "e6")
    jsonschema.validate(report, schema)
    assert report["counts"]["items"] == 27
    assert report["query"]["weight"] == "e6"
    assert "e6" in report["items"]


def test_orbit_parse_error_exits_2(capsys):
    assert run(["orbit", "--r", "6", "--weight", "e1-e"]) == 2
    err = capsys.readouterr().err
    assert "position 4" in err


def test_orbit_cap_env_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("DELPEZZO_ORBIT_CAP", "5")
    assert run(["orbit", "--r", "6", "--weight", "e6"]) == 3
    assert "error:" in capsys.readouterr().err


def test_orbit_cap_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("DELPEZZO_ORBIT_CAP", "zero")
    assert run(["orbit", "--r", "6", "--weight", "e6"]) == 2
    monkeypatch.setenv("DELPEZZO_ORBIT_CAP", "-3")
    assert run(["orbit", "--r", "6", "--weight", "e6"]) == 2
    capsys.readouterr()


def test_weights_lift(capsys, schema):
    report = run_json(capsys, "weights", "--r", "6", "--fundamental", "1")
    jsonschema.validate(report, schema)
    item = report["items"][0]
    assert item["lift"] == "h-e1"
    assert item["evaluations"] == [1, 0, 0, 0, 0, 0]
    assert item["degree"] == 2
    assert item["central_character"] == 2


def test_weights_minuscule(capsys, schema):
    report = run_json(
        capsys, "weights", "--r", "6", "--fundamental", "1", "--minuscule"
    )
    jsonschema.validate(report, schema)
    item = report["items"][0]
    assert item["minuscule"] is True
    assert item["orbit_size"] == 27
    six = run_json(capsys, "weights", "--r", "6", "--fundamental", "6", "--minuscule")
    assert six["items"][0]["minuscule"] is False
    assert "orbit_size" not in six["items"][0]


def test_weights_dual(capsys, schema):
    report = run_json(capsys, "weights", "--r", "6", "--fundamental", "1", "--dual")
    jsonschema.validate(report, schema)
    item = report["items"][0]
    assert item["index"] == 1
    assert item["partner"] == 5
    assert item["kappa_multiple"] == 1


def test_weights_adjoint(capsys, schema):
    report = run_json(capsys, "weights", "--r", "6", "--adjoint")
    jsonschema.validate(report, schema)
    assert report["dimension"] == 78
    assert report["counts"]["total_multiplicity"] == 78
    assert report["counts"]["items"] == ROOT_COUNTS[6] + 1
    assert {"weight": "0", "multiplicity": 6} in report["items"]


def test_weights_argument_errors(capsys):
    assert run(["weights", "--r", "6"]) == 2
    assert run(["weights", "--r", "6", "--fundamental", "9"]) == 2
    capsys.readouterr()


def test_degenerate(capsys, schema):
    report = run_json(capsys, "degenerate", "--r", "6", "--curves", "e1-e2")
    jsonschema.validate(report, schema)
    assert report["gauge_type"] == "A1"
    assert report["counts"]["classes"] == 27
    assert report["counts"]["size_1"] == 15
    assert report["counts"]["size_2"] == 6
    assert report["counts"]["incident_lines"] == 12
    labels = {item["label"] for item in report["items"]}
    assert labels == {"singleton", "extension pair"}


def test_degenerate_a2(capsys):
    report = run_json(capsys, "degenerate", "--r", "6", "--curves", "e1-e2,e2-e3")
    assert report["gauge_type"] == "A2"
    assert report["counts"]["size_3"] == 6
    assert report["counts"]["size_1"] == 9
    assert report["counts"]["incident_lines"] == 18


def test_degenerate_rejects_bad_curves(capsys):
    assert run(["degenerate", "--r", "6", "--curves", "e1"]) == 2
    assert run(["degenerate", "--r", "6", "--curves", "e1-e2,e3-e2"]) == 2
    capsys.readouterr()


def test_period(capsys, schema):
    report = run_json(
        capsys,
        "period",
        "--r",
        "6",
        "--assign",
        "e1=1/2,0",
        "--assign",
        "e6=1/2,0",
    )
    jsonschema.validate(report, schema)
    assert report["coroot_values"] == ["1/2,0", "0,0", "0,0", "0,0", "1/2,0", "1/2,0"]
    assert {"basis": "e1", "value": "1/2,0"} in report["items"]
    assert "canonical" not in report


def test_period_canonical(capsys, schema):
    report = run_json(
        capsys,
        "period",
        "--r",
        "6",
        "--assign",
        "e1=1/2,0",
        "--assign",
        "e6=1/2,0",
        "--canonical",
    )
    jsonschema.validate(report, schema)
    assert "canonical" in report
    assert len(report["canonical"]) == 6
    assert report["canonical"] <= report["coroot_values"]


def test_period_constraint_violation_exits_2(capsys):
    assert run(["period", "--r", "6", "--assign", "e1=1/2,0"]) == 2
    err = capsys.readouterr().err
    assert "kappa image must vanish" in err


def test_period_bad_assignment_exits_2(capsys):
    assert run(["period", "--r", "6", "--assign", "x1=1/2,0"]) == 2
    assert run(["period", "--r", "6", "--assign", "e1"]) == 2
    assert run(["period", "--r", "6", "--assign", "e1=1/0,0"]) == 2
    capsys.readouterr()


def test_rank_out_of_range_exits_2(capsys):
    assert run(["lines", "--r", "9"]) == 2
    assert run(["lines", "--r", "2"]) == 2
    capsys.readouterr()


def test_version(capsys):
    assert run(["--version"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == f"delpezzo {__version__}"


def test_byte_identical_reruns(capsys):
    run(["lines", "--r", "6", "--format", "json"])
    first = capsys.readouterr().out
    run(["lines", "--r", "6", "--format", "json"])
    second = capsys.readouterr().out
    assert first == second
    run(["degenerate", "--r", "6", "--curves", "e1-e2"])
    third = capsys.readouterr().out
    run(["degenerate", "--r", "6", "--curves", "e1-e2"])
    assert capsys.readouterr().out == third


def test_timing_is_opt_in(capsys):
    report = run_json(capsys, "lines", "--r", "3")
    assert "timing_ms" not in report
    timed = run_json(capsys, "lines", "--r", "3", "--timing")
    assert isinstance(timed["timing_ms"], (int, float))


def test_table_format(capsys):
    assert run(["lines", "--r", "3"]) == 0
    out = capsys.readouterr().out
    lines_out = out.splitlines()
    assert lines_out[0] == "lines r=3"
    assert "counts: items=6" in out
    assert "e3" in out


def test_table_format_degenerate(capsys):
    assert run(["degenerate", "--r", "6", "--curves", "e1-e2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "degenerate r=6 curves=e1-e2"
    assert "gauge_type: A1" in out
    assert "label=extension pair" in out
