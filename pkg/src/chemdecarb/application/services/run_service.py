"""Application service running scenarios end to end: assets to emissions tables."""

from __future__ import annotations

import time
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import final

import pandas as pd

from chemdecarb.application.services.manifest import build_manifest, write_manifest
from chemdecarb.application.services.outputs import write_run_outputs
from chemdecarb.config.config import Config
from chemdecarb.core.errors import InputError
from chemdecarb.core.filesystem import ensure_directory
from chemdecarb.core.vocabulary import Region
from chemdecarb.domain.catalog import Catalog, StorageSite, load_catalog, load_storage_sites
from chemdecarb.domain.costing import QuoteBasis, load_finance, load_prices
from chemdecarb.domain.dataset import (
    AssetTable,
    group_facilities,
    load_asset_table,
    load_synthesis_spec,
    synthesize_assets,
    validate_assets,
)
from chemdecarb.domain.emissions import (
    IntensityInputs,
    IntensityTrajectory,
    compute_emissions,
    frozen_reference,
    load_trajectories,
    trajectory_for,
)
from chemdecarb.domain.projections import ProductionPlan, build_production_plan, load_growth
from chemdecarb.domain.scenario import ScenarioParams, resolve_scenario
from chemdecarb.domain.scheduler import PathwayPlanner, PathwayResult
from chemdecarb.infra.logger.logger import PathwayEvent, logger

# Called with (scenario name, decision year) after each planning step.
ProgressCallback = Callable[[str, int], None]


@dataclass(slots=True)
class RunRequest:
    """Parameters describing a pathway run."""

    out_dir: Path
    assets_path: Path | None = None
    scenarios: list[str] = field(default_factory=lambda: ["SU"])
    catalog_path: Path | None = None
    finance_path: Path | None = None
    prices_path: Path | None = None
    growth_path: Path | None = None
    seed: int | None = None
    frozen_reference: bool = False


@dataclass(slots=True, frozen=True)
class RunInputs:
    """Everything a run reads, with the files it came from."""

    table: AssetTable
    catalog: Catalog
    basis: QuoteBasis
    plan: ProductionPlan
    intensities: IntensityInputs
    paths: Mapping[str, Path] = field(hash=False)
    seed: int | None = None


@dataclass(slots=True, frozen=True)
class ScenarioRun:
    params: ScenarioParams
    result: PathwayResult
    emissions: pd.DataFrame = field(compare=False)


@dataclass(slots=True, frozen=True)
class RunResult:
    out_dir: Path
    runs: tuple[ScenarioRun, ...]
    outputs: tuple[Path, ...]
    manifest_path: Path
    reference: pd.DataFrame | None = field(default=None, compare=False)


@final
class RunService:
    """Application layer façade over projections, scheduling and emissions."""

    def __init__(self, config: Config | None = None) -> None:
        self._config: Config = config or Config.load()

    def load_inputs(self, request: RunRequest) -> RunInputs:
        """Read, synthesize and validate every input of a run.

        Raises:
            InputError: When the asset table violates its invariants.
        """

        config = self._config
        paths = {
            "catalog": config.input_path("catalog_path", request.catalog_path),
            "finance": config.input_path("finance_path", request.finance_path),
            "prices": config.input_path("prices_path", request.prices_path),
            "growth": config.input_path("growth_path", request.growth_path),
            "storage_sites": config.input_path("storage_sites_path"),
            "trajectories": config.input_path("trajectories_path"),
            "learning": config.input_path("learning_path"),
            "scenarios": config.input_path("scenarios_path"),
        }

        seed: int | None = None
        if request.assets_path is not None:
            paths["assets"] = request.assets_path
            table = load_asset_table(request.assets_path)
        else:
            spec_path = config.input_path("synthesis_spec_path")
            paths["synthesis_spec"] = spec_path
            spec = load_synthesis_spec(spec_path, default_seed=self._config.default_seed)
            seed = spec.seed if request.seed is None else request.seed
            table = synthesize_assets(spec, seed)
            logger.info("Synthesized %d assets with seed %d", len(table), seed)

        report = validate_assets(table)
        for violation in report:
            logger.error(
                violation.message,
                extra={
                    "pathway_event": PathwayEvent.VALIDATION_VIOLATION,
                    "row": violation.row,
                    "field": violation.field,
                    "facility_id": violation.asset_id,
                },
            )
        if not report.is_clean:
            first = report.violations[0]
            raise InputError(
                f"Asset table has {len(report)} violation(s); first at row {first.row} ({first.field}): {first.message}"
            )
        _ = group_facilities(table)

        sites: dict[Region, tuple[StorageSite, ...]] = load_storage_sites(paths["storage_sites"])
        plan = build_production_plan(table, load_growth(paths["growth"]), sites)
        basis = QuoteBasis(
            finance=load_finance(paths["finance"]),
            prices=load_prices(paths["prices"]),
            sites=sites,
        )
        return RunInputs(
            table=table,
            catalog=load_catalog(paths["catalog"]),
            basis=basis,
            plan=plan,
            intensities=load_trajectories(paths["trajectories"]),
            paths=paths,
            seed=seed,
        )

    def resolve_scenarios(self, names: list[str], paths: Mapping[str, Path]) -> list[ScenarioParams]:
        scenarios = [
            resolve_scenario(name, scenarios_path=paths["scenarios"], learning_path=paths["learning"])
            for name in names or ["SU"]
        ]
        seen: set[str] = set()
        for params in scenarios:
            if params.name in seen:
                raise InputError(f"Scenario '{params.name}' is requested twice")
            seen.add(params.name)
        return scenarios

    def run_scenario(
        self,
        inputs: RunInputs,
        params: ScenarioParams,
        progress: ProgressCallback | None = None,
    ) -> ScenarioRun:
        started = time.perf_counter()
        logger.info(
            "Planning %s",
            params.name,
            extra={"pathway_event": PathwayEvent.RUN_SCENARIO_START, "scenario": params.name},
        )
        planner = PathwayPlanner(
            inputs.plan,
            params,
            inputs.catalog,
            inputs.basis,
            decision_log_limit=self._config.decision_log_limit,
        )
        result = planner.run(None if progress is None else lambda year: progress(params.name, year))
        emissions = compute_emissions(
            inputs.plan, result.statuses, trajectory_for(inputs.intensities, params), params
        )
        logger.info(
            "%s planned %d projects",
            params.name,
            len(result.projects),
            extra={
                "pathway_event": PathwayEvent.RUN_SCENARIO_COMPLETE,
                "scenario": params.name,
                "projects": len(result.projects),
                "duration_seconds": time.perf_counter() - started,
            },
        )
        return ScenarioRun(params=params, result=result, emissions=emissions)

    def run(self, request: RunRequest, progress: ProgressCallback | None = None) -> RunResult:
        """Run every requested scenario and write the output directory."""

        started = time.perf_counter()
        inputs = self.load_inputs(request)
        scenarios = self.resolve_scenarios(request.scenarios, inputs.paths)
        logger.info(
            "Running %d scenario(s) over %d assets",
            len(scenarios),
            len(inputs.table),
            extra={"pathway_event": PathwayEvent.RUN_START, "assets": len(inputs.table)},
        )

        runs = [self.run_scenario(inputs, params, progress) for params in scenarios]
        reference: pd.DataFrame | None = None
        if request.frozen_reference:
            reference = frozen_reference(
                inputs.plan, IntensityTrajectory(inputs.intensities, scenarios[0].trajectory)
            )

        out_dir = ensure_directory(request.out_dir)
        emissions = [run.emissions for run in runs]
        if reference is not None:
            emissions.append(reference)
        outputs = write_run_outputs(out_dir, [run.result for run in runs], emissions, scenarios)
        for path in outputs:
            logger.debug("Wrote %s", path, extra={"pathway_event": PathwayEvent.RUN_OUTPUT_WRITE, "path": str(path)})

        manifest = build_manifest(
            "run",
            out_dir,
            inputs=inputs.paths,
            outputs=outputs,
            scenarios=[params.name for params in scenarios],
            seed=inputs.seed,
        )
        manifest_path = write_manifest(out_dir, manifest)
        logger.info(
            "Run written to %s",
            out_dir,
            extra={
                "pathway_event": PathwayEvent.RUN_COMPLETE,
                "path": str(out_dir),
                "duration_seconds": time.perf_counter() - started,
            },
        )
        return RunResult(
            out_dir=out_dir,
            runs=tuple(runs),
            outputs=tuple(outputs),
            manifest_path=manifest_path,
            reference=reference,
        )


__all__ = ["ProgressCallback", "RunInputs", "RunRequest", "RunResult", "RunService", "ScenarioRun"]
