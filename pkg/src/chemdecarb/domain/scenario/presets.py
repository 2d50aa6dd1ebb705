"""SU/GA/GG presets and scenario files layered on top of them."""

from __future__ import annotations

import copy
from collections.abc import Mapping
from functools import lru_cache
from pathlib import Path
from typing import Any

from chemdecarb.config.file_ops import read_json_file, write_json_file
from chemdecarb.config.paths import default_data_file
from chemdecarb.core.errors import ScenarioError, UnknownScenarioKeyError
from chemdecarb.core.vocabulary import ScenarioId
from chemdecarb.domain.scenario.params import ScenarioParams, params_from_dict

PRESET_NAMES: tuple[ScenarioId, ...] = (ScenarioId.SU, ScenarioId.GA, ScenarioId.GG)


@lru_cache(maxsize=8)
def _preset_trees(scenarios_path: Path, learning_path: Path) -> dict[ScenarioId, dict[str, Any]]:
    scenarios = read_json_file(scenarios_path, what="Scenario presets")
    learning = read_json_file(learning_path, what="Learning")
    if not isinstance(scenarios, dict) or not isinstance(learning, dict):
        raise ScenarioError("Scenario presets and learning files must hold JSON objects")
    trees: dict[ScenarioId, dict[str, Any]] = {}
    for name in PRESET_NAMES:
        if name.value not in scenarios:
            raise ScenarioError(f"Preset '{name.value}' is missing from {scenarios_path}")
        if name.value not in learning:
            raise ScenarioError(f"Preset '{name.value}' has no learning parameters in {learning_path}")
        tree = {key: value for key, value in scenarios[name.value].items() if not key.startswith("_")}
        tree["learning"] = {key: value for key, value in learning[name.value].items() if not key.startswith("_")}
        tree["scenario_id"] = name.value
        trees[name] = tree
    return trees


def _resolve(scenarios_path: Path | None, learning_path: Path | None) -> tuple[Path, Path]:
    return (
        scenarios_path or default_data_file("scenarios.json"),
        learning_path or default_data_file("learning.json"),
    )


def preset_tree(
    name: str | ScenarioId,
    *,
    scenarios_path: Path | None = None,
    learning_path: Path | None = None,
) -> dict[str, Any]:
    """Dictionary form of a preset; a fresh copy on every call."""

    try:
        scenario_id = ScenarioId.from_user_input(str(name))
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    if scenario_id is ScenarioId.CUSTOM:
        raise ScenarioError("'custom' is not a preset; valid presets: SU, GA, GG")
    trees = _preset_trees(*_resolve(scenarios_path, learning_path))
    return copy.deepcopy(trees[scenario_id])


def preset(
    name: str | ScenarioId,
    *,
    scenarios_path: Path | None = None,
    learning_path: Path | None = None,
) -> ScenarioParams:
    """Parameters of the named preset (SU, GA or GG)."""

    return params_from_dict(preset_tree(name, scenarios_path=scenarios_path, learning_path=learning_path))


def _deep_merge(base: dict[str, Any], override: Mapping[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def scenario_from_dict(
    payload: Mapping[str, Any],
    *,
    label: str = "",
    scenarios_path: Path | None = None,
    learning_path: Path | None = None,
) -> ScenarioParams:
    """Merge a ``{"preset": ..., <overrides>}`` tree onto its preset and validate."""

    body = {key: value for key, value in payload.items() if not key.startswith("_")}
    if "preset" not in body:
        raise ScenarioError("Scenario file must name a 'preset' (SU, GA or GG)")
    base = preset_tree(body.pop("preset"), scenarios_path=scenarios_path, learning_path=learning_path)
    explicit_id = body.pop("scenario_id", None)
    for key in sorted(body):
        if key not in base and key != "label":
            raise UnknownScenarioKeyError(key)

    merged = _deep_merge(base, body)
    if explicit_id is not None:
        merged["scenario_id"] = explicit_id
    elif any(key != "label" for key in body):
        merged["scenario_id"] = ScenarioId.CUSTOM.value
    if "label" not in body and merged["scenario_id"] == ScenarioId.CUSTOM.value:
        merged["label"] = label
    return params_from_dict(merged)


def load_scenario(
    path: Path,
    *,
    scenarios_path: Path | None = None,
    learning_path: Path | None = None,
) -> ScenarioParams:
    """Load a scenario file: a preset name plus an override tree.

    Raises:
        UnknownScenarioKeyError: When the file carries an unrecognised key.
        ScenarioError: When the merged parameters violate an invariant.
    """

    payload = read_json_file(path, what="Scenario")
    if not isinstance(payload, dict):
        raise ScenarioError(f"Scenario file {path} must hold a JSON object")
    return scenario_from_dict(
        payload, label=path.stem, scenarios_path=scenarios_path, learning_path=learning_path
    )


def dump_scenario(params: ScenarioParams, path: Path) -> Path:
    """Write the complete effective parameter tree; ``load_scenario`` reads it back equal."""

    base = params.scenario_id if params.scenario_id is not ScenarioId.CUSTOM else ScenarioId.SU
    write_json_file(path, {"preset": base.value, **params.to_dict()})
    return path


def resolve_scenario(
    name_or_path: str,
    *,
    scenarios_path: Path | None = None,
    learning_path: Path | None = None,
) -> ScenarioParams:
    """A preset name or the path of a scenario file."""

    candidate = Path(name_or_path)
    if candidate.suffix.lower() == ".json" or candidate.exists():
        return load_scenario(candidate, scenarios_path=scenarios_path, learning_path=learning_path)
    return preset(name_or_path, scenarios_path=scenarios_path, learning_path=learning_path)


__all__ = [
    "PRESET_NAMES",
    "dump_scenario",
    "load_scenario",
    "preset",
    "preset_tree",
    "resolve_scenario",
    "scenario_from_dict",
]
