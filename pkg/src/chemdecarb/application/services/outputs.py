"""Run output files: names, units and the frames written into them."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Final

import pandas as pd

from chemdecarb.domain.emissions import EMISSIONS_COLUMNS
from chemdecarb.domain.scenario import ScenarioParams, dump_scenario
from chemdecarb.domain.scheduler import PathwayResult
from chemdecarb.domain.scheduler.pathway import CAPEX_COLUMNS, STORAGE_COLUMNS
from chemdecarb.infra.io.tables import write_json_lines, write_table

SCHEDULE_FILE: Final[str] = "schedule.csv"
CAPEX_FILE: Final[str] = "capex_annual.csv"
LCOA_FILE: Final[str] = "lcoa_projects.csv"
EMISSIONS_FILE: Final[str] = "emissions.csv"
STORAGE_FILE: Final[str] = "storage.csv"
COMPLETION_FILE: Final[str] = "completion.csv"
DECISIONS_FILE: Final[str] = "decisions.jsonl"

OUTLIER_RATIO: Final[float] = 1.5
_CELL: Final[list[str]] = ["scenario", "region", "group"]

SCHEDULE_UNITS: Final[dict[str, str]] = {
    "scenario": "-",
    "region": "-",
    "group": "-",
    "facility_id": "-",
    "build_type": "-",
    "tech_id": "-",
    "development_start": "year",
    "online_year": "year",
    "total_capex_usd": "USD2024",
    "abated_scope1_tco2": "tCO2/y",
    "co2_stored_tco2": "tCO2/y",
    "lcoa_usd_per_tco2": "USD2024/tCO2",
    "learning_index": "count",
    "runner_up": "-",
    "runner_up_lcoa_usd_per_tco2": "USD2024/tCO2",
    "site_id": "-",
    "outlier": "bool",
}
LCOA_UNITS: Final[dict[str, str]] = {
    "scenario": "-",
    "region": "-",
    "group": "-",
    "facility_id": "-",
    "tech_id": "-",
    "online_year": "year",
    "capex_before_learning_usd": "USD2024",
    "learning_multiplier": "-",
    "ppa_capex_usd": "USD2024",
    "annuity": "1/y",
    "annual_fixed_om_usd": "USD2024/y",
    "annual_energy_usd": "USD2024/y",
    "annual_ts_usd": "USD2024/y",
    "ts_unit_cost_usd_per_tco2": "USD2024/tCO2",
    "abated_scope1_tco2": "tCO2/y",
    "lcoa_usd_per_tco2": "USD2024/tCO2",
    "outlier": "bool",
}
CAPEX_UNITS: Final[dict[str, str]] = {column: "-" for column in CAPEX_COLUMNS} | {
    "year": "year",
    "capex_usd": "USD2024/y",
}
STORAGE_UNITS: Final[dict[str, str]] = {column: "-" for column in STORAGE_COLUMNS} | {
    "year": "year",
    "co2_stored_t": "tCO2/y",
}
EMISSIONS_UNITS: Final[dict[str, str]] = {column: "-" for column in EMISSIONS_COLUMNS} | {
    "year": "year",
    "tco2": "tCO2/y",
}
COMPLETION_UNITS: Final[dict[str, str]] = {
    "scenario": "-",
    "region": "-",
    "group": "-",
    "completion": "year",
    "retrofits": "count",
    "projects": "count",
    "unabated": "count",
    "blocked": "count",
    "unabated_newbuilds": "count",
}


def _flag_outliers(frame: pd.DataFrame) -> pd.DataFrame:
    """Flag projects whose LCOA exceeds 1.5 times their cell's median."""

    if frame.empty:
        return frame.assign(outlier=pd.Series(dtype=bool))
    median = frame.groupby(_CELL)["lcoa_usd_per_tco2"].transform("median")
    return frame.assign(outlier=frame["lcoa_usd_per_tco2"] > OUTLIER_RATIO * median)


def schedule_frame(results: Sequence[PathwayResult]) -> pd.DataFrame:
    rows = [
        {
            "scenario": schedule.scenario,
            "region": project.region.value,
            "group": project.group.value,
            "facility_id": project.facility_id,
            "build_type": project.build_type.value,
            "tech_id": project.tech_id,
            "development_start": project.development_start,
            "online_year": project.online_year,
            "total_capex_usd": project.total_capex,
            "abated_scope1_tco2": project.abated_scope1,
            "co2_stored_tco2": project.co2_stored,
            "lcoa_usd_per_tco2": project.lcoa_at_decision,
            "learning_index": project.learning_index,
            "runner_up": project.runner_up or "",
            "runner_up_lcoa_usd_per_tco2": project.runner_up_lcoa,
            "site_id": project.site_id or "",
        }
        for result in results
        for schedule in result.schedules
        for project in schedule.projects
    ]
    return _flag_outliers(pd.DataFrame(rows, columns=[key for key in SCHEDULE_UNITS if key != "outlier"]))


def lcoa_frame(results: Sequence[PathwayResult]) -> pd.DataFrame:
    rows = [
        {
            "scenario": schedule.scenario,
            "region": project.region.value,
            "group": project.group.value,
            "facility_id": project.facility_id,
            "tech_id": project.tech_id,
            "online_year": project.online_year,
            "capex_before_learning_usd": project.quote.capex_before_learning,
            "learning_multiplier": project.quote.learning_multiplier,
            "ppa_capex_usd": project.quote.ppa_capex,
            "annuity": project.quote.annuity,
            "annual_fixed_om_usd": project.quote.annual_fixed_om,
            "annual_energy_usd": project.quote.annual_energy_delta_cost,
            "annual_ts_usd": project.quote.annual_ts_cost,
            "ts_unit_cost_usd_per_tco2": project.quote.ts_unit_cost,
            "abated_scope1_tco2": project.abated_scope1,
            "lcoa_usd_per_tco2": project.lcoa_at_decision,
        }
        for result in results
        for schedule in result.schedules
        for project in schedule.projects
    ]
    return _flag_outliers(pd.DataFrame(rows, columns=[key for key in LCOA_UNITS if key != "outlier"]))


def completion_frame(results: Sequence[PathwayResult]) -> pd.DataFrame:
    rows = [
        {
            "scenario": schedule.scenario,
            "region": schedule.region.value,
            "group": schedule.group.value,
            "completion": schedule.completion_label,
            "retrofits": schedule.retrofit_count,
            "projects": len(schedule.projects),
            "unabated": len(schedule.unabated),
            "blocked": len(schedule.blocked),
            "unabated_newbuilds": len(schedule.unabated_newbuilds),
        }
        for result in results
        for schedule in result.schedules
    ]
    return pd.DataFrame(rows, columns=list(COMPLETION_UNITS))


def _concat(frames: Sequence[pd.DataFrame], columns: Sequence[str]) -> pd.DataFrame:
    present = [frame for frame in frames if not frame.empty]
    if not present:
        return pd.DataFrame(columns=list(columns))
    return pd.concat(present, ignore_index=True)[list(columns)]


def write_run_outputs(
    out_dir: Path,
    results: Sequence[PathwayResult],
    emissions: Sequence[pd.DataFrame],
    scenarios: Sequence[ScenarioParams],
) -> list[Path]:
    """Write every run table, the decision log and the effective scenarios."""

    written = [
        write_table(out_dir / SCHEDULE_FILE, schedule_frame(results), SCHEDULE_UNITS),
        write_table(
            out_dir / CAPEX_FILE, _concat([result.capex for result in results], CAPEX_COLUMNS), CAPEX_UNITS
        ),
        write_table(out_dir / LCOA_FILE, lcoa_frame(results), LCOA_UNITS),
        write_table(out_dir / EMISSIONS_FILE, _concat(emissions, EMISSIONS_COLUMNS), EMISSIONS_UNITS),
        write_table(
            out_dir / STORAGE_FILE, _concat([result.storage for result in results], STORAGE_COLUMNS), STORAGE_UNITS
        ),
        write_table(out_dir / COMPLETION_FILE, completion_frame(results), COMPLETION_UNITS),
        write_json_lines(
            out_dir / DECISIONS_FILE,
            (record.to_dict() for result in results for record in result.decisions),
        ),
    ]
    for params in scenarios:
        written.append(dump_scenario(params, out_dir / f"scenario_{params.name}.json"))
    return written


__all__ = [
    "CAPEX_FILE",
    "COMPLETION_FILE",
    "DECISIONS_FILE",
    "EMISSIONS_FILE",
    "LCOA_FILE",
    "OUTLIER_RATIO",
    "SCHEDULE_FILE",
    "STORAGE_FILE",
    "completion_frame",
    "lcoa_frame",
    "schedule_frame",
    "write_run_outputs",
]
