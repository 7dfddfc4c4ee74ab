"""Scenario files: JSON documents describing an analyzer chain.

Schema (angles in degrees, as humans write them)::

    {
      "initial": {"theta_deg": 0, "alpha_deg": 0, "branch": "+"},
      "stages": [{"theta_deg": 45, "alpha_deg": 0}, {"theta_deg": 90}],
      "seed": 42,          // optional
      "trials": 1000000,   // optional
      "tolerance": 1e-12   // optional
    }

Unknown keys are rejected and every diagnostic names the offending key by
path, e.g. ``stages[1].phi_deg``. ``alpha_deg`` defaults to 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .directions import Branch, BranchLabel, Direction
from .simulate import MeasurementScenario


class ScenarioError(ValueError):
    """Invalid scenario file; the message names the file and key path."""


@dataclass(frozen=True)
class ScenarioFile:
    scenario: MeasurementScenario
    seed: int | None = None
    trials: int | None = None
    tolerance: float | None = None


def _require_mapping(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise ScenarioError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _reject_unknown(mapping: dict, allowed: set[str], where: str) -> None:
    for key in mapping:
        if key not in allowed:
            raise ScenarioError(f"{where}.{key}: unknown key")


def _number(mapping: dict, key: str, where: str, default=None) -> float:
    if key not in mapping:
        if default is not None:
            return default
        raise ScenarioError(f"{where}.{key}: missing required key")
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{where}.{key}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ScenarioError(f"{where}.{key}: must be finite, got {value!r}")
    return float(value)


def _direction(mapping: dict, where: str) -> Direction:
    _require_mapping(mapping, where)
    _reject_unknown(mapping, {"theta_deg", "alpha_deg"}, where)
    theta = _number(mapping, "theta_deg", where)
    alpha = _number(mapping, "alpha_deg", where, default=0.0)
    return Direction(math.radians(theta), math.radians(alpha))


def parse_scenario(document: dict, where: str = "scenario") -> ScenarioFile:
    """Validate a decoded scenario document."""
    _require_mapping(document, where)
    _reject_unknown(document, {"initial", "stages", "seed", "trials", "tolerance"}, where)

    if "initial" not in document:
        raise ScenarioError(f"{where}.initial: missing required key")
    initial_map = _require_mapping(document["initial"], f"{where}.initial")
    _reject_unknown(initial_map, {"theta_deg", "alpha_deg", "branch"}, f"{where}.initial")
    theta = _number(initial_map, "theta_deg", f"{where}.initial")
    alpha = _number(initial_map, "alpha_deg", f"{where}.initial", default=0.0)
    if "branch" not in initial_map:
        raise ScenarioError(f"{where}.initial.branch: missing required key")
    try:
        branch = Branch.from_token(str(initial_map["branch"]))
    except ValueError as exc:
        raise ScenarioError(f"{where}.initial.branch: {exc}") from None
    initial = BranchLabel(Direction(math.radians(theta), math.radians(alpha)), branch)

    if "stages" not in document:
        raise ScenarioError(f"{where}.stages: missing required key")
    stages_raw = document["stages"]
    if not isinstance(stages_raw, list) or not stages_raw:
        raise ScenarioError(f"{where}.stages: expected a non-empty list")
    stages = tuple(
        _direction(stage, f"{where}.stages[{k}]") for k, stage in enumerate(stages_raw)
    )

    seed = None
    if "seed" in document:
        value = document["seed"]
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < 2**64:
            raise ScenarioError(f"{where}.seed: expected an unsigned 64-bit integer, got {value!r}")
        seed = value

    trials = None
    if "trials" in document:
        value = document["trials"]
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ScenarioError(f"{where}.trials: expected a positive integer, got {value!r}")
        trials = value

    tolerance = None
    if "tolerance" in document:
        tolerance = _number(document, "tolerance", where)
        if tolerance <= 0:
            raise ScenarioError(f"{where}.tolerance: must be positive, got {tolerance!r}")

    return ScenarioFile(
        scenario=MeasurementScenario(initial=initial, stages=stages),
        seed=seed,
        trials=trials,
        tolerance=tolerance,
    )


def load_scenario_file(path: str | Path) -> ScenarioFile:
    """Read and validate a scenario file; diagnostics name the file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror or exc}") from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return parse_scenario(document)
    except ScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from None
