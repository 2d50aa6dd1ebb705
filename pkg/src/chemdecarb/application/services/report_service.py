"""Application service summarizing a finished run directory."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Final, final

import pandas as pd

from chemdecarb.application.services.manifest import load_manifest, verify_manifest
from chemdecarb.application.services.outputs import CAPEX_FILE, COMPLETION_FILE, EMISSIONS_FILE
from chemdecarb.core.errors import ReportInputError
from chemdecarb.core.vocabulary import HORIZON, SCHEDULED_GROUPS, BuildType, Region
from chemdecarb.domain.emissions import REFERENCE_SCENARIO, cumulative
from chemdecarb.domain.scheduler.models import UNFINISHED
from chemdecarb.infra.io.tables import read_table, write_table
from chemdecarb.infra.logger.logger import PathwayEvent, logger

TOTAL_ROW: Final[str] = "total"
COMPLETION_ROW: Final[str] = "completion"
CUMULATIVE_START: Final[int] = 2025
BILLION: Final[float] = 1e9
NO_PROJECTS: Final[str] = "-"


@dataclass(slots=True, frozen=True)
class ColumnKey:
    region: Region
    scenario: str

    @property
    def label(self) -> str:
        return f"{self.region.value}/{self.scenario}"


@dataclass(slots=True)
class CapitalMatrix:
    """Average annual retrofit capital per group, B$/y, with a completion row.

    Each group's average runs over its active window: the first through the
    last year with nonzero retrofit spend.
    """

    columns: list[ColumnKey] = field(default_factory=list)
    values: dict[ColumnKey, dict[str, float]] = field(default_factory=dict)
    completion: dict[ColumnKey, str] = field(default_factory=dict)

    @property
    def groups(self) -> list[str]:
        return [group.value for group in SCHEDULED_GROUPS]

    def total(self, column: ColumnKey) -> float:
        cell = self.values[column]
        return sum(cell[group] for group in self.groups)

    def to_frame(self) -> pd.DataFrame:
        data: dict[str, list[object]] = {"row": [*self.groups, TOTAL_ROW, COMPLETION_ROW]}
        for column in self.columns:
            cell = self.values[column]
            data[column.label] = [*(cell[group] for group in self.groups), self.total(column), self.completion[column]]
        return pd.DataFrame(data)


@dataclass(slots=True, frozen=True)
class RunReport:
    run_dir: Path
    scenarios: tuple[str, ...]
    matrix: CapitalMatrix
    cumulative_capex: pd.DataFrame = field(compare=False)
    cumulative_emissions: dict[str, float] = field(default_factory=dict)
    unabated: dict[ColumnKey, bool] = field(default_factory=dict)
    stale_outputs: tuple[str, ...] = ()

    @property
    def has_unabated(self) -> bool:
        return any(self.unabated.values())


def _read(run_dir: Path, name: str, **kwargs: object) -> pd.DataFrame:
    path = run_dir / name
    if not path.exists():
        raise ReportInputError(f"Run output {name} is missing from {run_dir}")
    return read_table(path, **kwargs)


def active_window_average(series: pd.Series) -> float:
    """Mean annual spend between the first and last year with nonzero spend."""

    spending = series[series != 0.0]
    if spending.empty:
        return 0.0
    years = spending.index.astype(int)
    return float(spending.sum()) / (int(years.max()) - int(years.min()) + 1)


def completion_label(labels: list[str]) -> str:
    """Latest group completion in a column; any unfinished group makes it unfinished."""

    if UNFINISHED in labels:
        return UNFINISHED
    years = [int(label) for label in labels if label != NO_PROJECTS]
    return str(max(years)) if years else NO_PROJECTS


@final
class ReportService:
    """Build capital, completion and cumulative summaries from run outputs."""

    def build(self, run_dir: Path) -> RunReport:
        """Read a run directory.

        Raises:
            ReportInputError: When the manifest or a required table is missing.
        """

        manifest = load_manifest(run_dir)
        stale = verify_manifest(run_dir)
        for name in stale:
            logger.warning("%s no longer matches its manifest digest", name, extra={"path": str(run_dir / name)})

        capex = _read(run_dir, CAPEX_FILE)
        completion = _read(run_dir, COMPLETION_FILE, dtype={"completion": str})
        emissions = _read(run_dir, EMISSIONS_FILE)

        scenarios = tuple(manifest.scenarios) or tuple(sorted(completion["scenario"].unique()))
        matrix = CapitalMatrix()
        unabated: dict[ColumnKey, bool] = {}
        retrofits = capex[capex["build_type"] == BuildType.RETROFIT.value]
        for region in Region:
            for scenario in scenarios:
                column = ColumnKey(region, scenario)
                rows = completion[(completion["scenario"] == scenario) & (completion["region"] == region.value)]
                if rows.empty:
                    continue
                matrix.columns.append(column)
                spend = retrofits[(retrofits["scenario"] == scenario) & (retrofits["region"] == region.value)]
                matrix.values[column] = {
                    group: active_window_average(
                        spend[spend["group"] == group].groupby("year")["capex_usd"].sum() / BILLION
                    )
                    for group in matrix.groups
                }
                matrix.completion[column] = completion_label(list(rows["completion"].astype(str)))
                unabated[column] = bool((rows["unabated"] > 0).any() or (rows["blocked"] > 0).any())

        window = capex[(capex["year"] >= CUMULATIVE_START) & (capex["year"] <= HORIZON)]
        cumulative_capex = (
            window.groupby(["scenario", "region", "group"], as_index=False, sort=True)["capex_usd"]
            .sum()
            .rename(columns={"capex_usd": "cumulative_capex_usd"})
        )
        totals = {
            str(scenario): cumulative(frame, CUMULATIVE_START, HORIZON)
            for scenario, frame in emissions.groupby("scenario", sort=False)
        }
        ordered = [*scenarios, REFERENCE_SCENARIO]
        cumulative_emissions = {name: totals[name] for name in ordered if name in totals}

        report = RunReport(
            run_dir=run_dir,
            scenarios=scenarios,
            matrix=matrix,
            cumulative_capex=cumulative_capex,
            cumulative_emissions=cumulative_emissions,
            unabated=unabated,
            stale_outputs=tuple(stale),
        )
        logger.info(
            "Report built for %s",
            run_dir,
            extra={"pathway_event": PathwayEvent.REPORT_COMPLETE, "path": str(run_dir)},
        )
        return report

    def write_csv(self, report: RunReport, path: Path) -> Path:
        frame = report.matrix.to_frame()
        units = {"row": "-"} | {column.label: "USD2024bn/y" for column in report.matrix.columns}
        return write_table(path, frame, units)


__all__ = [
    "COMPLETION_ROW",
    "CapitalMatrix",
    "ColumnKey",
    "ReportService",
    "RunReport",
    "TOTAL_ROW",
    "active_window_average",
    "completion_label",
]
