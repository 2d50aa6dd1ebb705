"""Regional production trajectories and world-scale capacity additions."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Final

import numpy as np

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import ProjectionError
from chemdecarb.core.vocabulary import BASE_YEAR, HORIZON, Chemical, Region
from chemdecarb.infra.logger.logger import logger

RATE_BOUND: Final[float] = 0.10
RATE_BREAK_YEAR: Final[int] = 2050
COVERAGE_TOLERANCE: Final[float] = 1e-9


@dataclass(slots=True, frozen=True)
class GrowthSchedule:
    """Anchor production in 2023 (t/y) and annual growth rates before and after 2050.

    ``rate_after_2050`` defaults to half of ``rate_to_2050``.
    """

    region: Region
    chemical: Chemical
    anchor: float
    rate_to_2050: float
    rate_after_2050: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.anchor) and self.anchor >= 0):
            raise ProjectionError(f"Anchor for {self.region.value}/{self.chemical.value} must be >= 0")
        for rate in (self.rate_to_2050, self.late_rate):
            if not -RATE_BOUND <= rate <= RATE_BOUND:
                raise ProjectionError(
                    f"Growth rate {rate} for {self.region.value}/{self.chemical.value} is outside [-0.10, 0.10]"
                )

    @property
    def late_rate(self) -> float:
        return self.rate_to_2050 / 2 if self.rate_after_2050 is None else self.rate_after_2050

    def rate_in(self, year: int) -> float:
        """Rate compounding from ``year`` to ``year + 1``."""

        return self.rate_to_2050 if year < RATE_BREAK_YEAR else self.late_rate


@dataclass(slots=True, frozen=True)
class ProductionSeries:
    """Production in t/y for contiguous years starting at ``start_year``.

    ``region`` is None for world totals.
    """

    region: Region | None
    chemical: Chemical
    values: tuple[float, ...]
    start_year: int = BASE_YEAR

    def __post_init__(self) -> None:
        if any(value < 0 for value in self.values):
            raise ProjectionError("Production values must be >= 0")

    @property
    def years(self) -> range:
        return range(self.start_year, self.start_year + len(self.values))

    @property
    def end_year(self) -> int:
        return self.start_year + len(self.values) - 1

    def value(self, year: int) -> float:
        if year not in self.years:
            raise ProjectionError(f"Year {year} is outside {self.start_year}-{self.end_year}")
        return self.values[year - self.start_year]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def production_series(g: GrowthSchedule, horizon: int = HORIZON) -> ProductionSeries:
    """Compound ``g.anchor`` from 2023 through ``horizon``."""

    values = [g.anchor]
    for year in range(BASE_YEAR, horizon):
        values.append(values[-1] * (1.0 + g.rate_in(year)))
    return ProductionSeries(region=g.region, chemical=g.chemical, values=tuple(values))


def newbuild_requirements(
    p: ProductionSeries,
    existing_capacity: float,
    utilization: float,
    world_scale: float,
) -> list[tuple[int, float]]:
    """World-scale units needed so effective capacity covers production every year.

    Units are added in the first year of shortfall, as few as possible.
    """

    if world_scale <= 0:
        raise ProjectionError(f"world_scale must be > 0, got {world_scale}")
    if not 0 < utilization <= 1:
        raise ProjectionError(f"utilization must be in (0, 1], got {utilization}")

    builds: list[tuple[int, float]] = []
    capacity = existing_capacity
    for year, demand in zip(p.years, p.values, strict=True):
        threshold = demand - COVERAGE_TOLERANCE * max(1.0, demand)
        while capacity * utilization < threshold:
            builds.append((year, world_scale))
            capacity += world_scale
    return builds


def world_production(series: Iterable[ProductionSeries]) -> ProductionSeries:
    """Sum regional series of one chemical year by year."""

    members = list(series)
    if not members:
        raise ProjectionError("world_production needs at least one series")
    first = members[0]
    for member in members[1:]:
        if member.years != first.years:
            raise ProjectionError(
                f"Year ranges differ: {first.start_year}-{first.end_year} vs {member.start_year}-{member.end_year}"
            )
        if member.chemical is not first.chemical:
            raise ProjectionError(f"Cannot add {member.chemical.value} to {first.chemical.value}")
    total = np.sum(np.vstack([member.as_array() for member in members]), axis=0)
    return ProductionSeries(
        region=None,
        chemical=first.chemical,
        values=tuple(float(value) for value in total),
        start_year=first.start_year,
    )


@dataclass(slots=True, frozen=True)
class GrowthEntry:
    rate_to_2050: float
    rate_after_2050: float | None = None
    anchor: float | None = None


@dataclass(slots=True, frozen=True)
class GrowthTable:
    """Growth configuration: per (region, chemical) rates plus new-build sizing."""

    planning_utilization: float
    world_scale: Mapping[Chemical, float] = field(hash=False)
    entries: Mapping[tuple[Region, Chemical], GrowthEntry] = field(hash=False)

    def __post_init__(self) -> None:
        if not 0 < self.planning_utilization <= 1:
            raise ProjectionError(f"planning_utilization must be in (0, 1], got {self.planning_utilization}")
        for chemical, scale in self.world_scale.items():
            if scale <= 0:
                raise ProjectionError(f"world_scale for {chemical.value} must be > 0")

    def scale_for(self, chemical: Chemical) -> float:
        try:
            return self.world_scale[chemical]
        except KeyError as exc:
            raise ProjectionError(f"No world_scale configured for {chemical.value}") from exc

    def schedule_for(self, region: Region, chemical: Chemical, default_anchor: float) -> GrowthSchedule:
        """Schedule for a cell; unconfigured cells hold production flat."""

        entry = self.entries.get((region, chemical))
        if entry is None:
            logger.warning(
                "No growth entry for %s/%s; holding production constant", region.value, chemical.value
            )
            return GrowthSchedule(region, chemical, default_anchor, 0.0, 0.0)
        anchor = default_anchor if entry.anchor is None else entry.anchor
        return GrowthSchedule(region, chemical, anchor, entry.rate_to_2050, entry.rate_after_2050)


def _optional_float(raw: Mapping[str, Any], key: str) -> float | None:
    value = raw.get(key)
    return None if value is None else float(value)


def growth_from_dict(payload: Mapping[str, Any]) -> GrowthTable:
    try:
        world_scale = {Chemical.from_user_input(key): float(value) for key, value in payload["world_scale"].items()}
        entries: dict[tuple[Region, Chemical], GrowthEntry] = {}
        for raw_region, chemicals in payload.get("regions", {}).items():
            region = Region.from_user_input(raw_region)
            for raw_chemical, raw in chemicals.items():
                entries[(region, Chemical.from_user_input(raw_chemical))] = GrowthEntry(
                    rate_to_2050=float(raw["rate_to_2050"]),
                    rate_after_2050=_optional_float(raw, "rate_after_2050"),
                    anchor=_optional_float(raw, "anchor"),
                )
        return GrowthTable(
            planning_utilization=float(payload.get("planning_utilization", 0.92)),
            world_scale=world_scale,
            entries=entries,
        )
    except KeyError as exc:
        raise ProjectionError(f"Growth configuration is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ProjectionError(f"Malformed growth configuration: {exc}") from exc


def load_growth(path: Path) -> GrowthTable:
    """Load ``growth.json``."""

    payload = read_json_file(path, what="Growth")
    if not isinstance(payload, dict):
        raise ProjectionError(f"Growth file {path} must hold a JSON object")
    return growth_from_dict(payload)


__all__ = [
    "GrowthEntry",
    "GrowthSchedule",
    "GrowthTable",
    "ProductionSeries",
    "growth_from_dict",
    "load_growth",
    "newbuild_requirements",
    "production_series",
    "world_production",
]
