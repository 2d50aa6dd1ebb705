"""Scenario parameter sets: presets, files and overrides."""

from chemdecarb.domain.scenario.params import (
    CircularRamp,
    Deadlines,
    ScenarioParams,
    TrajectoryParams,
    params_from_dict,
)
from chemdecarb.domain.scenario.presets import (
    PRESET_NAMES,
    dump_scenario,
    load_scenario,
    preset,
    resolve_scenario,
)

__all__ = [
    "CircularRamp",
    "Deadlines",
    "PRESET_NAMES",
    "ScenarioParams",
    "TrajectoryParams",
    "dump_scenario",
    "load_scenario",
    "params_from_dict",
    "preset",
    "resolve_scenario",
]
