"""Whole-scenario planning: every cell in lockstep, then capex and storage roll-ups."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import final

import numpy as np
import pandas as pd

from chemdecarb.core.vocabulary import (
    BASE_YEAR,
    CAPEX_YEARS,
    HORIZON,
    YEARS,
    BuildType,
    ChemicalGroup,
    PlanningMode,
    Region,
    SCHEDULED_GROUPS,
)
from chemdecarb.domain.catalog.options import Catalog, option_performance
from chemdecarb.domain.costing.quotes import QuoteBasis
from chemdecarb.domain.projections.allocation import ProductionPlan
from chemdecarb.domain.scenario.params import ScenarioParams
from chemdecarb.domain.scheduler.models import AbatementProject, AbatementState, DecisionRecord, DeploymentSchedule
from chemdecarb.domain.scheduler.planners import CapitalCapPlanner, Cell, CellPlanner, DeadlinePlanner
from chemdecarb.domain.scheduler.selection import (
    DECISION_LOG_LIMIT,
    PlanningContext,
    ProjectCandidate,
    facility_slices,
)
from chemdecarb.infra.logger.logger import PathwayEvent, logger

CAPEX_COLUMNS = ("scenario", "region", "group", "build_type", "year", "capex_usd")
STORAGE_COLUMNS = ("scenario", "region", "site_id", "year", "co2_stored_t")


@dataclass(slots=True, frozen=True)
class PathwayResult:
    """Schedules of one scenario with the per-asset states and yearly roll-ups they imply."""

    scenario: ScenarioParams
    schedules: tuple[DeploymentSchedule, ...]
    statuses: Mapping[str, AbatementState] = field(hash=False)
    decisions: tuple[DecisionRecord, ...] = field(default=(), hash=False)
    capex: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=list(CAPEX_COLUMNS)), compare=False)
    storage: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=list(STORAGE_COLUMNS)), compare=False)

    @property
    def projects(self) -> tuple[AbatementProject, ...]:
        return tuple(project for schedule in self.schedules for project in schedule.projects)

    def schedule_for(self, region: Region, group: ChemicalGroup) -> DeploymentSchedule | None:
        for schedule in self.schedules:
            if schedule.region is region and schedule.group is group:
                return schedule
        return None

    def capex_series(self, region: Region | None = None, build_type: BuildType | None = None) -> dict[int, float]:
        """USD per year for 2024-2080."""

        series = dict.fromkeys(CAPEX_YEARS, 0.0)
        for schedule in self.schedules:
            if region is not None and schedule.region is not region:
                continue
            for year, amount in schedule.annual_capex(build_type).items():
                series[year] += amount
        return series

    def total_capex(self, region: Region | None = None, build_type: BuildType | None = None) -> float:
        return float(sum(self.capex_series(region, build_type).values()))

    def storage_series(self, region: Region | None = None) -> dict[int, float]:
        """tCO2 stored per year across every site."""

        series = dict.fromkeys(YEARS, 0.0)
        frame = self.storage if region is None else self.storage[self.storage["region"] == region.value]
        for year, amount in frame.groupby("year")["co2_stored_t"].sum().items():
            series[int(year)] = float(amount)
        return series


def _abatement_states(
    schedules: Iterable[DeploymentSchedule],
    plan: ProductionPlan,
) -> dict[str, AbatementState]:
    by_id = {asset.asset_id: asset for asset in plan.assets}
    states: dict[str, AbatementState] = {}
    for schedule in schedules:
        for project in schedule.projects:
            for asset_id, record in zip(project.asset_ids, project.records, strict=True):
                states[asset_id] = AbatementState(
                    asset_id=asset_id,
                    facility_id=project.facility_id,
                    tech_id=project.tech_id,
                    online_year=project.online_year,
                    performance=option_performance(record, by_id[asset_id]),
                    site_id=project.site_id,
                )
    return states


def _capex_frame(scenario: str, schedules: Sequence[DeploymentSchedule]) -> pd.DataFrame:
    rows: list[tuple[object, ...]] = []
    for schedule in schedules:
        for build_type in BuildType:
            if not any(project.build_type is build_type for project in schedule.projects):
                continue
            for year, amount in schedule.annual_capex(build_type).items():
                rows.append(
                    (scenario, schedule.region.value, schedule.group.value, build_type.value, year, amount)
                )
    return pd.DataFrame(rows, columns=list(CAPEX_COLUMNS))


def _storage_frame(
    scenario: str,
    states: Mapping[str, AbatementState],
    plan: ProductionPlan,
) -> pd.DataFrame:
    """Stored CO2 per site and year from actual production of abated assets."""

    years = np.arange(BASE_YEAR, HORIZON + 1)
    by_id = {asset.asset_id: asset for asset in plan.assets}
    totals: dict[tuple[Region, str], np.ndarray] = defaultdict(lambda: np.zeros(len(years)))
    for state in states.values():
        per_tonne = state.performance.co2_stored
        if per_tonne <= 0 or state.site_id is None:
            continue
        region = by_id[state.asset_id].region
        totals[(region, state.site_id)] += plan.output[state.asset_id] * per_tonne * (years >= state.online_year)

    rows = [
        (scenario, region.value, site_id, int(year), float(amount))
        for (region, site_id), values in sorted(totals.items(), key=lambda item: (item[0][0].value, item[0][1]))
        for year, amount in zip(years, values, strict=True)
    ]
    return pd.DataFrame(rows, columns=list(STORAGE_COLUMNS))


def simulate_pathway(
    schedules: Sequence[DeploymentSchedule],
    plan: ProductionPlan,
    scenario: ScenarioParams,
    decisions: Sequence[DecisionRecord] = (),
) -> PathwayResult:
    """Roll schedules up into per-asset abatement states, annual capex and storage use.

    Abated assets run at their planned production from their online year.
    """

    states = _abatement_states(schedules, plan)
    return PathwayResult(
        scenario=scenario,
        schedules=tuple(schedules),
        statuses=states,
        decisions=tuple(decisions),
        capex=_capex_frame(scenario.name, schedules),
        storage=_storage_frame(scenario.name, states, plan),
    )


def build_cells(plan: ProductionPlan) -> list[Cell]:
    """Retrofit slices and new builds per (region, scheduled group), in region then group order."""

    retrofits: dict[tuple[Region, ChemicalGroup], list[ProjectCandidate]] = defaultdict(list)
    for candidate in facility_slices(plan.existing):
        if candidate.group in SCHEDULED_GROUPS:
            retrofits[(candidate.region, candidate.group)].append(candidate)

    newbuilds: dict[tuple[Region, ChemicalGroup], list[ProjectCandidate]] = defaultdict(list)
    for build in plan.newbuilds:
        asset = build.asset
        if asset.group not in SCHEDULED_GROUPS:
            continue
        newbuilds[(asset.region, asset.group)].append(
            ProjectCandidate(
                facility_id=asset.asset_id,
                region=asset.region,
                group=asset.group,
                build_type=BuildType.NEWBUILD,
                assets=(asset,),
                demand_year=build.demand_year,
            )
        )

    return [
        Cell(region, group, tuple(retrofits.get((region, group), ())), tuple(newbuilds.get((region, group), ())))
        for region in Region
        for group in SCHEDULED_GROUPS
        if (region, group) in retrofits or (region, group) in newbuilds
    ]


@final
class PathwayPlanner:
    """Plan every cell of a scenario over one shared learning and storage ledger.

    Cells advance one decision year at a time in region and group order, so
    a commitment in one cell teaches quotes made later in any other.
    """

    def __init__(
        self,
        plan: ProductionPlan,
        scenario: ScenarioParams,
        catalog: Catalog,
        basis: QuoteBasis,
        *,
        decision_log_limit: int = DECISION_LOG_LIMIT,
    ) -> None:
        self.plan: ProductionPlan = plan
        self.scenario: ScenarioParams = scenario
        self.context: PlanningContext = PlanningContext.create(
            scenario, catalog, basis, decision_log_limit=decision_log_limit
        )
        self.cells: list[Cell] = build_cells(plan)
        self.planners: list[CellPlanner] = [self._planner(cell) for cell in self.cells]

    def _planner(self, cell: Cell) -> CellPlanner:
        if self.scenario.mode(cell.region) is PlanningMode.DEADLINE:
            return DeadlinePlanner(
                cell, self.scenario.deadline(cell.region), self.scenario.initial_wave, self.context
            )
        return CapitalCapPlanner(cell, self.scenario.cap(cell.region, cell.group), self.context)

    def run(self, progress: Callable[[int], None] | None = None) -> PathwayResult:
        """Step all cells from 2023 to 2080 and simulate the resulting pathway.

        ``progress`` is called with each decision year once it completes.
        """

        logger.debug("Planning %s over %d cells", self.scenario.name, len(self.cells))
        for year in range(BASE_YEAR, HORIZON + 1):
            for planner in self.planners:
                planner.step(year)
            if progress is not None:
                progress(year)

        schedules = [planner.schedule() for planner in self.planners]
        for schedule in schedules:
            self._log_schedule(schedule)
        return simulate_pathway(schedules, self.plan, self.scenario, self.context.decisions)

    def _log_schedule(self, schedule: DeploymentSchedule) -> None:
        detail = {
            "scenario": schedule.scenario,
            "region": schedule.region.value,
            "group": schedule.group.value,
            "projects": len(schedule.projects),
            "completion": schedule.completion_label,
        }
        if schedule.blocked:
            logger.warning(
                "%d facilities cannot fit under the capital cap",
                len(schedule.blocked),
                extra={"pathway_event": PathwayEvent.SCHEDULE_BLOCKED, "blocked": len(schedule.blocked)} | detail,
            )
        if schedule.unabated:
            logger.warning(
                "%d facilities unabated at %d",
                len(schedule.unabated),
                HORIZON,
                extra={"pathway_event": PathwayEvent.SCHEDULE_UNFINISHED, "unabated": len(schedule.unabated)} | detail,
            )
            return
        logger.info(
            "Completes %s",
            schedule.completion_label,
            extra={"pathway_event": PathwayEvent.RUN_CELL_COMPLETE} | detail,
        )


__all__ = [
    "CAPEX_COLUMNS",
    "PathwayPlanner",
    "PathwayResult",
    "STORAGE_COLUMNS",
    "build_cells",
    "simulate_pathway",
]
