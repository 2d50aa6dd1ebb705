"""Allocation of regional production to existing assets and new-build units."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Final

import numpy as np

from chemdecarb.core.vocabulary import BASE_YEAR, YEARS, Chemical, Region
from chemdecarb.domain.catalog.storage import StorageSite
from chemdecarb.domain.costing.transport import cheapest_site
from chemdecarb.domain.dataset.records import INTENSITY_COLUMNS, AssetRecord, AssetTable
from chemdecarb.domain.projections.growth import (
    GrowthTable,
    ProductionSeries,
    newbuild_requirements,
    production_series,
)
from chemdecarb.infra.logger.logger import logger

NEWBUILD_OWNER: Final[str] = "new-build"


@dataclass(slots=True, frozen=True)
class NewBuild:
    """A world-scale unit built with abatement, needed from ``demand_year``."""

    asset: AssetRecord
    demand_year: int


@dataclass(slots=True, frozen=True)
class ProductionPlan:
    """Per-asset production in t/y for every modelled year.

    ``output[asset_id]`` is indexed like ``YEARS``. New builds produce
    nothing before their demand year.
    """

    existing: AssetTable
    newbuilds: tuple[NewBuild, ...]
    series: Mapping[tuple[Region, Chemical], ProductionSeries] = field(hash=False)
    output: Mapping[str, np.ndarray] = field(hash=False, compare=False)

    @property
    def assets(self) -> tuple[AssetRecord, ...]:
        return self.existing.records + tuple(build.asset for build in self.newbuilds)

    def __iter__(self) -> Iterator[AssetRecord]:
        return iter(self.assets)

    def production(self, asset_id: str, year: int) -> float:
        return float(self.output[asset_id][year - BASE_YEAR])

    def production_matrix(self, assets: Sequence[AssetRecord]) -> np.ndarray:
        """Stack outputs as an (asset, year) array."""

        return np.vstack([self.output[asset.asset_id] for asset in assets]) if assets else np.zeros((0, len(YEARS)))


def _template(
    region: Region,
    chemical: Chemical,
    assets: Sequence[AssetRecord],
    scale: float,
    utilization: float,
    location: tuple[float, float],
    index: int,
    demand_year: int,
) -> AssetRecord:
    """New-build record with the capacity-weighted intensities of the dominant process."""

    by_process: dict[str, float] = defaultdict(float)
    for asset in assets:
        by_process[asset.process] += asset.capacity
    process = max(sorted(by_process), key=lambda name: by_process[name])
    members = [asset for asset in assets if asset.process == process]
    weight = sum(asset.capacity for asset in members)

    by_feedstock: dict[str, float] = defaultdict(float)
    for asset in members:
        by_feedstock[asset.feedstock_type] += asset.capacity
    feedstock = max(sorted(by_feedstock), key=lambda name: by_feedstock[name])

    intensities = {
        column: round(sum(float(getattr(asset, column)) * asset.capacity for asset in members) / weight, 6)
        for column in INTENSITY_COLUMNS
    }
    asset_id = f"NB-{region.code}-{chemical.value}-{index:03d}"
    return AssetRecord(
        asset_id=asset_id,
        facility_id=asset_id,
        owner=NEWBUILD_OWNER,
        region=region,
        latitude=location[0],
        longitude=location[1],
        startup_year=demand_year,
        chemical=chemical,
        process=process,
        capacity=scale,
        utilization=utilization,
        feedstock_type=feedstock,
        **intensities,
    )


def _allocate(
    series: ProductionSeries,
    assets: Sequence[AssetRecord],
    builds: Sequence[NewBuild],
    utilization: float,
) -> dict[str, np.ndarray]:
    demand = series.as_array()
    capacity = np.array([asset.capacity for asset in assets])
    base_rate = np.array([asset.utilization for asset in assets])
    base = capacity * base_rate
    base_total = float(base.sum())
    ramp = capacity * np.clip(utilization - base_rate, 0.0, None)
    headroom = float(ramp.sum())

    existing = np.zeros((len(assets), len(demand)))
    newbuild = np.zeros((len(builds), len(demand)))
    for column, (year, wanted) in enumerate(zip(series.years, demand, strict=True)):
        if wanted <= base_total:
            existing[:, column] = base * (wanted / base_total) if base_total > 0 else 0.0
            continue
        theta = min(1.0, (wanted - base_total) / headroom) if headroom > 0 else 0.0
        existing[:, column] = base + theta * ramp
        remainder = wanted - float(existing[:, column].sum())
        active = [row for row, build in enumerate(builds) if build.demand_year <= year]
        if remainder > 0 and active:
            newbuild[active, column] = remainder / len(active)

    output = {asset.asset_id: existing[row] for row, asset in enumerate(assets)}
    output.update({build.asset.asset_id: newbuild[row] for row, build in enumerate(builds)})
    return output


def build_production_plan(
    table: AssetTable,
    growth: GrowthTable,
    sites: Mapping[Region, tuple[StorageSite, ...]],
) -> ProductionPlan:
    """Project each (region, chemical) and size the new builds that meet it.

    Existing assets follow demand down proportionally and ramp toward the
    planning utilization before new builds take the remainder in equal shares.
    New builds sit at their region's cheapest storage site.
    """

    cells: dict[tuple[Region, Chemical], list[AssetRecord]] = defaultdict(list)
    for asset in table:
        cells[(asset.region, asset.chemical)].append(asset)

    series: dict[tuple[Region, Chemical], ProductionSeries] = {}
    newbuilds: list[NewBuild] = []
    output: dict[str, np.ndarray] = {}
    for key in sorted(cells, key=lambda cell: (cell[0].value, cell[1].value)):
        region, chemical = key
        members = cells[key]
        schedule = growth.schedule_for(region, chemical, sum(asset.production for asset in members))
        projected = production_series(schedule)
        series[key] = projected

        scale = growth.scale_for(chemical)
        requirements = newbuild_requirements(
            projected, sum(asset.capacity for asset in members), growth.planning_utilization, scale
        )
        builds: list[NewBuild] = []
        if requirements:
            region_sites = sites.get(region, ())
            # Without storage data the unit shares the first member asset's location.
            location = (
                cheapest_site(region_sites).location
                if region_sites
                else (members[0].latitude, members[0].longitude)
            )
            for index, (year, capacity) in enumerate(requirements, start=1):
                record = _template(
                    region, chemical, members, capacity, growth.planning_utilization, location, index, year
                )
                builds.append(NewBuild(asset=record, demand_year=year))
            logger.debug("%s/%s needs %d new builds", region.value, chemical.value, len(builds))
        newbuilds.extend(builds)
        output.update(_allocate(projected, members, builds, growth.planning_utilization))

    return ProductionPlan(existing=table, newbuilds=tuple(newbuilds), series=series, output=output)


__all__ = ["NEWBUILD_OWNER", "NewBuild", "ProductionPlan", "build_production_plan"]
