"""Well-to-gate emissions per asset-year by scope, abated or not."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, fields
from typing import Final

import numpy as np
import pandas as pd

from chemdecarb.core.vocabulary import BASE_YEAR, HORIZON, Chemical, Region, fuel_token
from chemdecarb.domain.catalog.options import combustion_streams
from chemdecarb.domain.dataset.records import AssetRecord
from chemdecarb.domain.emissions.trajectories import IntensityTrajectory, check_year
from chemdecarb.domain.projections.allocation import ProductionPlan
from chemdecarb.domain.scenario.params import ScenarioParams
from chemdecarb.domain.scheduler.models import AbatementState

SCOPES: Final[tuple[str, ...]] = ("scope1_combustion", "scope1_process", "scope2", "scope3_upstream")
EMISSIONS_COLUMNS: Final[tuple[str, ...]] = ("scenario", "region", "chemical", "scope", "year", "tco2")
REFERENCE_SCENARIO: Final[str] = "REF"
CIRCULAR_PROCESS: Final[str] = "steam_cracker"


@dataclass(slots=True, frozen=True)
class EmissionsBreakdown:
    """Annual emissions of one asset in tCO2/y; ``co2_stored`` is not an emission."""

    scope1_combustion: float = 0.0
    scope1_process: float = 0.0
    scope2: float = 0.0
    scope3_upstream: float = 0.0
    co2_stored: float = 0.0

    @property
    def scope1(self) -> float:
        return self.scope1_combustion + self.scope1_process

    @property
    def total(self) -> float:
        return self.scope1_combustion + self.scope1_process + self.scope2 + self.scope3_upstream

    def scaled(self, factor: float) -> EmissionsBreakdown:
        return EmissionsBreakdown(*(getattr(self, item.name) * factor for item in fields(self)))

    def __add__(self, other: EmissionsBreakdown) -> EmissionsBreakdown:
        return EmissionsBreakdown(*(getattr(self, item.name) + getattr(other, item.name) for item in fields(self)))


@dataclass(slots=True, frozen=True)
class _PerTonne:
    """Per-tonne terms before grid CI and upstream multipliers are applied."""

    combustion: float
    process: float
    electricity: float
    feedstock_upstream: float
    fuel_upstream: float
    stored: float
    ppa: bool


def _per_tonne(asset: AssetRecord, trajectory: IntensityTrajectory, state: AbatementState | None) -> _PerTonne:
    token = fuel_token(asset.feedstock_type)
    feed = asset.feedstock_intensity * trajectory.inputs.upstream_anchor(asset.feedstock_type)
    fuel_uf = trajectory.inputs.upstream_anchor(token)
    heat = asset.fuel_intensity + asset.steam_intensity
    if state is None:
        return _PerTonne(
            combustion=sum(combustion_streams(asset).values()),
            process=asset.process_co2_intensity,
            electricity=asset.electricity_intensity,
            feedstock_upstream=feed,
            fuel_upstream=heat * fuel_uf,
            stored=0.0,
            ppa=False,
        )
    performance = state.performance
    return _PerTonne(
        combustion=max(0.0, performance.residual_combustion),
        process=max(0.0, performance.residual_process),
        electricity=max(0.0, asset.electricity_intensity + performance.delta_electricity),
        feedstock_upstream=feed,
        fuel_upstream=max(0.0, heat + performance.delta_gas) * fuel_uf,
        stored=performance.co2_stored,
        ppa=performance.ppa_backed,
    )


def _circular_keep(asset: AssetRecord, scenario: ScenarioParams, years: np.ndarray) -> np.ndarray:
    if asset.process != CIRCULAR_PROCESS:
        return np.ones(len(years))
    return np.array([1.0 - scenario.circular.share(asset.region, int(year)) for year in years])


def asset_emissions(
    asset: AssetRecord,
    year: int,
    scenario: ScenarioParams,
    abatement_state: AbatementState | None,
    *,
    trajectory: IntensityTrajectory,
    production: float | None = None,
) -> EmissionsBreakdown:
    """Scope breakdown of ``asset`` in ``year``.

    ``production`` defaults to base-year output. The abatement state applies
    from its online year; PPA-backed options carry no scope 2.

    Raises:
        EmissionsError: When ``year`` is outside 2023-2080.
    """

    check_year(year)
    output = asset.production if production is None else production
    state = abatement_state if abatement_state is not None and abatement_state.active(year) else None
    terms = _per_tonne(asset, trajectory, state)
    keep = float(_circular_keep(asset, scenario, np.array([year]))[0])
    upstream = trajectory.upstream_multiplier(year)
    return EmissionsBreakdown(
        scope1_combustion=terms.combustion * keep * output,
        scope1_process=terms.process * keep * output,
        scope2=0.0 if terms.ppa else terms.electricity * trajectory.grid_ci(asset.region, year) * output,
        scope3_upstream=(terms.feedstock_upstream * keep + terms.fuel_upstream) * upstream * output,
        co2_stored=terms.stored * output,
    )


def _scope_arrays(
    asset: AssetRecord,
    output: np.ndarray,
    trajectory: IntensityTrajectory,
    scenario: ScenarioParams | None,
    state: AbatementState | None,
) -> dict[str, np.ndarray]:
    years = np.arange(BASE_YEAR, HORIZON + 1)
    base = _per_tonne(asset, trajectory, None)
    grid = trajectory.inputs.grid_anchor(asset.region) * trajectory.grid_multipliers
    upstream = trajectory.upstream_multipliers
    keep = np.ones(len(years)) if scenario is None else _circular_keep(asset, scenario, years)

    def series(terms: _PerTonne) -> dict[str, np.ndarray]:
        return {
            "scope1_combustion": terms.combustion * keep * output,
            "scope1_process": terms.process * keep * output,
            "scope2": np.zeros(len(years)) if terms.ppa else terms.electricity * grid * output,
            "scope3_upstream": (terms.feedstock_upstream * keep + terms.fuel_upstream) * upstream * output,
            "co2_stored": terms.stored * output,
        }

    unabated = series(base)
    if state is None:
        return unabated
    active = years >= state.online_year
    abated = series(_per_tonne(asset, trajectory, state))
    return {name: np.where(active, abated[name], unabated[name]) for name in unabated}


def compute_emissions(
    plan: ProductionPlan,
    statuses: Mapping[str, AbatementState],
    trajectory: IntensityTrajectory,
    scenario: ScenarioParams,
) -> pd.DataFrame:
    """Long table of emissions by scenario, region, chemical, scope and year.

    Per-tonne terms match ``asset_emissions``; production follows the plan.
    """

    totals: dict[tuple[Region, Chemical], dict[str, np.ndarray]] = defaultdict(dict)
    for asset in plan.assets:
        arrays = _scope_arrays(asset, plan.output[asset.asset_id], trajectory, scenario, statuses.get(asset.asset_id))
        cell = totals[(asset.region, asset.chemical)]
        for scope in SCOPES:
            cell[scope] = cell[scope] + arrays[scope] if scope in cell else arrays[scope].copy()
    return _long_frame(scenario.name, totals)


def stored_series(plan: ProductionPlan, statuses: Mapping[str, AbatementState]) -> np.ndarray:
    """World CO2 sent to storage per year, indexed like ``YEARS``."""

    years = np.arange(BASE_YEAR, HORIZON + 1)
    total = np.zeros(len(years))
    for asset_id, state in statuses.items():
        total += plan.output[asset_id] * state.performance.co2_stored * (years >= state.online_year)
    return total


def frozen_reference(plan: ProductionPlan, trajectory: IntensityTrajectory) -> pd.DataFrame:
    """Emissions with 2023 intensity per (region, chemical) held fixed against projected production."""

    base: dict[tuple[Region, Chemical], dict[str, float]] = defaultdict(lambda: dict.fromkeys(SCOPES, 0.0))
    for asset in plan.existing:
        output = float(plan.output[asset.asset_id][0])
        terms = _per_tonne(asset, trajectory, None)
        cell = base[(asset.region, asset.chemical)]
        cell["scope1_combustion"] += terms.combustion * output
        cell["scope1_process"] += terms.process * output
        cell["scope2"] += terms.electricity * trajectory.inputs.grid_anchor(asset.region) * output
        cell["scope3_upstream"] += (terms.feedstock_upstream + terms.fuel_upstream) * output

    totals: dict[tuple[Region, Chemical], dict[str, np.ndarray]] = {}
    for key, projected in plan.series.items():
        production = projected.as_array()
        anchor = production[0]
        scopes = base.get(key, dict.fromkeys(SCOPES, 0.0))
        totals[key] = {
            scope: (scopes[scope] / anchor) * production if anchor > 0 else np.zeros(len(production))
            for scope in SCOPES
        }
    return _long_frame(REFERENCE_SCENARIO, totals)


def _long_frame(scenario: str, totals: Mapping[tuple[Region, Chemical], Mapping[str, np.ndarray]]) -> pd.DataFrame:
    years = list(range(BASE_YEAR, HORIZON + 1))
    frames = [
        pd.DataFrame(
            {
                "scenario": scenario,
                "region": region.value,
                "chemical": chemical.value,
                "scope": scope,
                "year": years,
                "tco2": scopes[scope],
            }
        )
        for (region, chemical), scopes in sorted(totals.items(), key=lambda item: (item[0][0].value, item[0][1].value))
        for scope in SCOPES
    ]
    if not frames:
        return pd.DataFrame(columns=list(EMISSIONS_COLUMNS))
    return pd.concat(frames, ignore_index=True)[list(EMISSIONS_COLUMNS)]


__all__ = [
    "EMISSIONS_COLUMNS",
    "EmissionsBreakdown",
    "REFERENCE_SCENARIO",
    "SCOPES",
    "asset_emissions",
    "compute_emissions",
    "frozen_reference",
    "stored_series",
]
