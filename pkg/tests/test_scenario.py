"""Scenario-file parsing and validation diagnostics."""

import json
import math

import pytest

from polamp import Branch, ScenarioError, load_scenario_file, parse_scenario

VALID = {
    "initial": {"theta_deg": 30.0, "alpha_deg": 10.0, "branch": "+"},
    "stages": [{"theta_deg": 45.0, "alpha_deg": 0.0}, {"theta_deg": 90.0}],
    "seed": 7,
    "trials": 5000,
    "tolerance": 1e-10,
}


def test_parse_valid_document():
    loaded = parse_scenario(VALID)
    scenario = loaded.scenario
    assert scenario.initial.branch is Branch.PLUS
    assert scenario.initial.theta == pytest.approx(math.radians(30.0))
    assert scenario.initial.alpha == pytest.approx(math.radians(10.0))
    assert scenario.n_stages == 2
    assert scenario.stages[0].theta == pytest.approx(math.radians(45.0))
    assert scenario.stages[1].alpha == 0.0
    assert loaded.seed == 7
    assert loaded.trials == 5000
    assert loaded.tolerance == 1e-10


def test_optional_keys_absent():
    doc = {"initial": {"theta_deg": 0, "branch": "-"}, "stages": [{"theta_deg": 1}]}
    loaded = parse_scenario(doc)
    assert loaded.seed is None and loaded.trials is None and loaded.tolerance is None
    assert loaded.scenario.initial.branch is Branch.MINUS


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda d: d.update(extra=1), "scenario.extra"),
        (lambda d: d["initial"].update(phi_deg=3), "initial.phi_deg"),
        (lambda d: d["stages"][1].update(branch="+"), "stages[1].branch"),
        (lambda d: d["initial"].pop("theta_deg"), "initial.theta_deg"),
        (lambda d: d["initial"].pop("branch"), "initial.branch"),
        (lambda d: d.pop("stages"), "scenario.stages"),
        (lambda d: d.update(stages=[]), "stages"),
        (lambda d: d["initial"].update(branch="x"), "initial.branch"),
        (lambda d: d["initial"].update(theta_deg="ten"), "initial.theta_deg"),
        (lambda d: d.update(seed=-3), "seed"),
        (lambda d: d.update(trials=0), "trials"),
        (lambda d: d.update(tolerance=0.0), "tolerance"),
    ],
)
def test_rejections_name_the_key(mutate, fragment):
    doc = json.loads(json.dumps(VALID))
    mutate(doc)
    with pytest.raises(ScenarioError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_scenario(doc)


def test_load_from_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(VALID))
    loaded = load_scenario_file(path)
    assert loaded.scenario.n_stages == 2


def test_missing_file_names_path(tmp_path):
    path = tmp_path / "nope.json"
    with pytest.raises(ScenarioError, match="nope.json"):
        load_scenario_file(path)


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"initial": {\n  "theta_deg": }\n}')
    with pytest.raises(ScenarioError, match="line 2"):
        load_scenario_file(path)


def test_file_errors_include_path(tmp_path):
    path = tmp_path / "bad.json"
    doc = json.loads(json.dumps(VALID))
    doc["stages"][0]["oops"] = 1
    path.write_text(json.dumps(doc))
    with pytest.raises(ScenarioError, match="bad.json"):
        load_scenario_file(path)
