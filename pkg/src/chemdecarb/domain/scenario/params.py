"""Scenario parameter bundle and its dictionary form."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Final

from chemdecarb.core.errors import ScenarioError, UnknownScenarioKeyError
from chemdecarb.core.vocabulary import (
    EARLIEST_START,
    HORIZON,
    SCHEDULED_GROUPS,
    ChemicalGroup,
    PlanningMode,
    Region,
    ScenarioId,
)
from chemdecarb.domain.costing.learning import LearningParams, LearningProfile, Pooling

_NA_EU: Final[frozenset[Region]] = frozenset({Region.NORTH_AMERICA, Region.EUROPE})


@dataclass(slots=True, frozen=True)
class Deadlines:
    """Completion years for North America/Europe and Middle East/China."""

    na_eu: int
    me_china: int

    def for_region(self, region: Region) -> int:
        return self.na_eu if region in _NA_EU else self.me_china

    def as_tuple(self) -> tuple[int, int]:
        return (self.na_eu, self.me_china)


@dataclass(slots=True, frozen=True)
class TrajectoryParams:
    """Geometric decline of grid and upstream intensities to floor fractions."""

    grid_floor: float
    grid_floor_year: int
    upstream_floor: float
    upstream_floor_year: int
    decline_start_year: int = EARLIEST_START


@dataclass(slots=True, frozen=True)
class CircularRamp:
    """Linear ramp of recycled and bio feedstock share in steam crackers."""

    target_share: float
    target_years: Mapping[Region, int] = field(hash=False)
    ramp_start: int = 2025

    def target_year(self, region: Region) -> int:
        try:
            return self.target_years[region]
        except KeyError as exc:
            raise ScenarioError(f"No circular target year for {region.value}") from exc

    def share(self, region: Region, year: int) -> float:
        span = self.target_year(region) - self.ramp_start
        progress = (year - self.ramp_start) / span if span > 0 else float(year >= self.ramp_start)
        return self.target_share * min(1.0, max(0.0, progress))


@dataclass(slots=True, frozen=True)
class ScenarioParams:
    """Every scenario-dependent knob of a run.

    Caps are USD per year by region and chemical group. ``label`` names
    custom scenarios in output files.
    """

    scenario_id: ScenarioId
    modes: Mapping[Region, PlanningMode] = field(hash=False)
    deadlines: Deadlines
    caps: Mapping[Region, Mapping[ChemicalGroup, float]] = field(hash=False)
    learning: LearningProfile
    trajectory: TrajectoryParams
    circular: CircularRamp
    first_online_year: int = 2030
    initial_wave: int = 3
    ecracker_year: int = 2040
    label: str = ""

    def __post_init__(self) -> None:
        missing = [region.value for region in Region if region not in self.modes]
        if missing:
            raise ScenarioError(f"No planning mode for region '{missing[0]}'")
        if not EARLIEST_START < self.first_online_year <= HORIZON:
            raise ScenarioError(f"first_online_year {self.first_online_year} is outside the horizon")
        for deadline in self.deadlines.as_tuple():
            if not self.first_online_year <= deadline <= HORIZON:
                raise ScenarioError(
                    f"Deadline {deadline} must lie between first_online_year {self.first_online_year} and {HORIZON}"
                )
        if self.initial_wave < 1:
            raise ScenarioError(f"initial_wave must be >= 1, got {self.initial_wave}")
        if self.ecracker_year > HORIZON:
            raise ScenarioError(f"ecracker_year {self.ecracker_year} is beyond {HORIZON}")
        for region, groups in self.caps.items():
            for group, cap in groups.items():
                if not cap > 0:
                    raise ScenarioError(f"Cap for {region.value}/{group.value} must be > 0, got {cap}")
        for region, mode in self.modes.items():
            if mode is PlanningMode.CAPITAL_CAP:
                absent = [group.value for group in SCHEDULED_GROUPS if group not in self.caps.get(region, {})]
                if absent:
                    raise ScenarioError(f"Capital-cap region {region.value} has no cap for '{absent[0]}'")
        if not 0 <= self.circular.target_share <= 1:
            raise ScenarioError(f"Circular target share must be in [0, 1], got {self.circular.target_share}")
        trajectory = self.trajectory
        for floor, year in (
            (trajectory.grid_floor, trajectory.grid_floor_year),
            (trajectory.upstream_floor, trajectory.upstream_floor_year),
        ):
            if not 0 <= floor <= 1:
                raise ScenarioError(f"Trajectory floor must be in [0, 1], got {floor}")
            if year <= trajectory.decline_start_year:
                raise ScenarioError(f"Trajectory floor year {year} must follow {trajectory.decline_start_year}")

    @property
    def name(self) -> str:
        return self.label or self.scenario_id.value

    def mode(self, region: Region) -> PlanningMode:
        return self.modes[region]

    def deadline(self, region: Region) -> int:
        return self.deadlines.for_region(region)

    def cap(self, region: Region, group: ChemicalGroup) -> float:
        try:
            return self.caps[region][group]
        except KeyError as exc:
            raise ScenarioError(f"No capital cap for {region.value}/{group.value}") from exc

    def circular_target(self, region: Region) -> float:
        self.circular.target_year(region)
        return self.circular.target_share

    def to_dict(self) -> dict[str, Any]:
        """Complete parameter tree, the inverse of ``params_from_dict``."""

        return {
            "scenario_id": self.scenario_id.value,
            "label": self.label,
            "modes": {region.value: mode.value for region, mode in self.modes.items()},
            "deadlines": {"na_eu": self.deadlines.na_eu, "me_china": self.deadlines.me_china},
            "caps": {
                region.value: {group.value: cap for group, cap in groups.items()}
                for region, groups in self.caps.items()
            },
            "learning": self.learning.to_dict(),
            "trajectory": {
                "grid_floor": self.trajectory.grid_floor,
                "grid_floor_year": self.trajectory.grid_floor_year,
                "upstream_floor": self.trajectory.upstream_floor,
                "upstream_floor_year": self.trajectory.upstream_floor_year,
                "decline_start_year": self.trajectory.decline_start_year,
            },
            "circular": {
                "target_share": self.circular.target_share,
                "target_years": {region.value: year for region, year in self.circular.target_years.items()},
                "ramp_start": self.circular.ramp_start,
            },
            "first_online_year": self.first_online_year,
            "initial_wave": self.initial_wave,
            "ecracker_year": self.ecracker_year,
        }


_TOP_KEYS: Final[frozenset[str]] = frozenset(
    {
        "scenario_id",
        "label",
        "modes",
        "deadlines",
        "caps",
        "learning",
        "trajectory",
        "circular",
        "first_online_year",
        "initial_wave",
        "ecracker_year",
    }
)
_LEARNING_KEYS: Final[frozenset[str]] = frozenset({"lr_early", "lr_mature", "early_phase_count", "pooling"})


def _check_keys(raw: Mapping[str, Any], allowed: frozenset[str], prefix: str) -> None:
    for key in sorted(raw):
        if key.startswith("_"):
            continue
        if key not in allowed:
            raise UnknownScenarioKeyError(f"{prefix}{key}")


def _object(raw: Any, where: str) -> Mapping[str, Any]:
    if not isinstance(raw, Mapping):
        raise ScenarioError(f"Scenario field '{where}' must be an object")
    return raw


def _region(raw: str, where: str) -> Region:
    try:
        return Region.from_user_input(raw)
    except ValueError as exc:
        raise UnknownScenarioKeyError(f"{where}.{raw}") from exc


def _group(raw: str, where: str) -> ChemicalGroup:
    try:
        return ChemicalGroup.from_user_input(raw)
    except ValueError as exc:
        raise UnknownScenarioKeyError(f"{where}.{raw}") from exc


def _learning_params(raw: Mapping[str, Any], where: str) -> LearningParams:
    _check_keys(raw, _LEARNING_KEYS, f"{where}.")
    try:
        return LearningParams(
            lr_early=float(raw["lr_early"]),
            lr_mature=float(raw["lr_mature"]),
            early_phase_count=int(raw.get("early_phase_count", 5)),
            pooling=Pooling.from_user_input(str(raw.get("pooling", Pooling.GLOBAL.value))),
        )
    except ValueError as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def _learning(raw: Mapping[str, Any]) -> LearningProfile:
    _check_keys(raw, _LEARNING_KEYS | {"overrides"}, "learning.")
    overrides = {
        str(tech): _learning_params(_object(entry, f"learning.overrides.{tech}"), f"learning.overrides.{tech}")
        for tech, entry in _object(raw.get("overrides", {}), "learning.overrides").items()
    }
    default = _learning_params({key: value for key, value in raw.items() if key != "overrides"}, "learning")
    return LearningProfile(default=default, overrides=overrides)


def params_from_dict(payload: Mapping[str, Any]) -> ScenarioParams:
    """Build and validate parameters from a complete tree.

    Raises:
        UnknownScenarioKeyError: For any key, at any depth, that is not recognised.
        ScenarioError: For missing fields or violated invariants.
    """

    _check_keys(payload, _TOP_KEYS, "")
    try:
        deadlines_raw = _object(payload["deadlines"], "deadlines")
        _check_keys(deadlines_raw, frozenset({"na_eu", "me_china"}), "deadlines.")
        trajectory_raw = _object(payload["trajectory"], "trajectory")
        _check_keys(
            trajectory_raw,
            frozenset({"grid_floor", "grid_floor_year", "upstream_floor", "upstream_floor_year", "decline_start_year"}),
            "trajectory.",
        )
        circular_raw = _object(payload["circular"], "circular")
        _check_keys(circular_raw, frozenset({"target_share", "target_years", "ramp_start"}), "circular.")

        return ScenarioParams(
            scenario_id=ScenarioId.from_user_input(str(payload["scenario_id"])),
            label=str(payload.get("label", "")),
            modes={
                _region(key, "modes"): PlanningMode.from_user_input(str(value))
                for key, value in _object(payload["modes"], "modes").items()
            },
            deadlines=Deadlines(na_eu=int(deadlines_raw["na_eu"]), me_china=int(deadlines_raw["me_china"])),
            caps={
                _region(region, "caps"): {
                    _group(group, f"caps.{region}"): float(cap)
                    for group, cap in _object(groups, f"caps.{region}").items()
                }
                for region, groups in _object(payload.get("caps", {}), "caps").items()
            },
            learning=_learning(_object(payload["learning"], "learning")),
            trajectory=TrajectoryParams(
                grid_floor=float(trajectory_raw["grid_floor"]),
                grid_floor_year=int(trajectory_raw["grid_floor_year"]),
                upstream_floor=float(trajectory_raw["upstream_floor"]),
                upstream_floor_year=int(trajectory_raw["upstream_floor_year"]),
                decline_start_year=int(trajectory_raw.get("decline_start_year", EARLIEST_START)),
            ),
            circular=CircularRamp(
                target_share=float(circular_raw["target_share"]),
                target_years={
                    _region(key, "circular.target_years"): int(value)
                    for key, value in _object(circular_raw["target_years"], "circular.target_years").items()
                },
                ramp_start=int(circular_raw.get("ramp_start", 2025)),
            ),
            first_online_year=int(payload.get("first_online_year", 2030)),
            initial_wave=int(payload.get("initial_wave", 3)),
            ecracker_year=int(payload.get("ecracker_year", 2040)),
        )
    except KeyError as exc:
        raise ScenarioError(f"Scenario is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"Malformed scenario: {exc}") from exc


__all__ = [
    "CircularRamp",
    "Deadlines",
    "ScenarioParams",
    "TrajectoryParams",
    "params_from_dict",
]
