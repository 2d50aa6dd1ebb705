"""Grid and upstream intensity anchors with their scenario decline paths."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any

import numpy as np

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import EmissionsError
from chemdecarb.core.vocabulary import BASE_YEAR, COMBUSTION_FACTORS, HORIZON, YEARS, Region
from chemdecarb.domain.scenario.params import ScenarioParams, TrajectoryParams


def multiplier(year: int, floor: float, floor_year: int, start_year: int) -> float:
    """Fraction of the anchor value left in ``year``.

    1 through ``start_year``, geometric decline to ``floor`` at
    ``floor_year``, flat afterwards. A zero floor declines linearly.
    """

    if year <= start_year:
        return 1.0
    if year >= floor_year:
        return floor
    progress = (year - start_year) / (floor_year - start_year)
    if floor <= 0:
        return 1.0 - progress
    return float(floor**progress)


@dataclass(slots=True, frozen=True)
class IntensityInputs:
    """Anchor grid CI in tCO2/MWh per region and upstream factors in tCO2e/GJ per fuel or feedstock."""

    grid_intensity: Mapping[Region, float] = field(hash=False)
    upstream_factors: Mapping[str, float] = field(hash=False)
    combustion_factors: Mapping[str, float] = field(default_factory=lambda: dict(COMBUSTION_FACTORS), hash=False)

    def __post_init__(self) -> None:
        for name, table in (
            ("grid_intensity", self.grid_intensity),
            ("upstream_factors", self.upstream_factors),
            ("combustion_factors", self.combustion_factors),
        ):
            for key, value in table.items():
                if value < 0:
                    raise EmissionsError(f"{name} for '{key}' must be >= 0, got {value}")

    def grid_anchor(self, region: Region) -> float:
        try:
            return self.grid_intensity[region]
        except KeyError as exc:
            raise EmissionsError(f"No grid intensity for region '{region.value}'") from exc

    def upstream_anchor(self, token: str) -> float:
        try:
            return self.upstream_factors[token]
        except KeyError as exc:
            raise EmissionsError(f"No upstream factor for '{token}'") from exc


@dataclass(frozen=True)
class IntensityTrajectory:
    """Year-by-year grid CI and upstream factors under one scenario's decline parameters."""

    inputs: IntensityInputs
    params: TrajectoryParams

    def grid_multiplier(self, year: int) -> float:
        p = self.params
        return multiplier(year, p.grid_floor, p.grid_floor_year, p.decline_start_year)

    def upstream_multiplier(self, year: int) -> float:
        p = self.params
        return multiplier(year, p.upstream_floor, p.upstream_floor_year, p.decline_start_year)

    def grid_ci(self, region: Region, year: int) -> float:
        return self.inputs.grid_anchor(region) * self.grid_multiplier(year)

    def upstream_factor(self, token: str, year: int) -> float:
        return self.inputs.upstream_anchor(token) * self.upstream_multiplier(year)

    @cached_property
    def grid_multipliers(self) -> np.ndarray:
        """Multipliers indexed like ``YEARS``."""

        return np.array([self.grid_multiplier(year) for year in YEARS])

    @cached_property
    def upstream_multipliers(self) -> np.ndarray:
        return np.array([self.upstream_multiplier(year) for year in YEARS])


def trajectory_for(inputs: IntensityInputs, scenario: ScenarioParams) -> IntensityTrajectory:
    return IntensityTrajectory(inputs=inputs, params=scenario.trajectory)


def check_year(year: int) -> None:
    if not BASE_YEAR <= year <= HORIZON:
        raise EmissionsError(f"Year {year} is outside {BASE_YEAR}-{HORIZON}")


def trajectories_from_dict(payload: Mapping[str, Any]) -> IntensityInputs:
    try:
        grid = {Region.from_user_input(key): float(value) for key, value in payload["grid_intensity"].items()}
        upstream = {str(key): float(value) for key, value in payload["upstream_factors"].items()}
        combustion = {
            str(key): float(value)
            for key, value in payload.get("combustion_factors", COMBUSTION_FACTORS).items()
        }
    except KeyError as exc:
        raise EmissionsError(f"Trajectory file is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise EmissionsError(f"Malformed trajectory file: {exc}") from exc
    return IntensityInputs(grid_intensity=grid, upstream_factors=upstream, combustion_factors=combustion)


def load_trajectories(path: Path) -> IntensityInputs:
    """Load ``trajectories.json``."""

    payload = read_json_file(path, what="Trajectories")
    if not isinstance(payload, dict):
        raise EmissionsError(f"Trajectory file {path} must hold a JSON object")
    return trajectories_from_dict(payload)


__all__ = [
    "IntensityInputs",
    "IntensityTrajectory",
    "check_year",
    "load_trajectories",
    "multiplier",
    "trajectories_from_dict",
    "trajectory_for",
]
