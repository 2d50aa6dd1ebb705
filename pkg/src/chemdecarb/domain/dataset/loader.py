"""Asset table loading, validation, serialization and facility grouping."""

from __future__ import annotations

import math
from collections.abc import Callable
from pathlib import Path
from typing import Any, Final

import pandas as pd

from chemdecarb.core.errors import (
    AssetRowError,
    AssetSchemaError,
    DuplicateAssetError,
    FacilityConflictError,
    InputError,
)
from chemdecarb.core.filesystem import ensure_parent_directory
from chemdecarb.core.vocabulary import BASE_YEAR, FEEDSTOCKS, PROCESS_CHEMICALS, Chemical, Region
from chemdecarb.domain.dataset.records import (
    ASSET_COLUMNS,
    INTENSITY_COLUMNS,
    AssetRecord,
    AssetTable,
    Facility,
    ValidationReport,
    Violation,
)
from chemdecarb.infra.logger.logger import logger


def _parse_text(value: str) -> str:
    return value.strip()


def _parse_float(value: str) -> float:
    return float(value)


def _parse_int(value: str) -> int:
    return int(value)


_PARSERS: Final[dict[str, Callable[[str], Any]]] = {
    "asset_id": _parse_text,
    "facility_id": _parse_text,
    "owner": _parse_text,
    "region": Region.from_user_input,
    "latitude": _parse_float,
    "longitude": _parse_float,
    "startup_year": _parse_int,
    "chemical": Chemical.from_user_input,
    "process": _parse_text,
    "capacity": _parse_float,
    "utilization": _parse_float,
    "feedstock_type": _parse_text,
    **{column: _parse_float for column in INTENSITY_COLUMNS},
}


def load_asset_table(path: Path) -> AssetTable:
    """Load an asset CSV into an ``AssetTable``.

    Raises:
        InputError: When the file does not exist.
        AssetSchemaError: When a column is missing or unknown.
        AssetRowError: When a cell cannot be parsed; rows are 1-based data rows.
        DuplicateAssetError: When an asset_id repeats.
    """

    if not path.exists():
        raise InputError(f"Asset table not found: {path}")
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError as exc:
        raise AssetSchemaError("asset_id", f"Asset table {path} has no header row") from exc

    columns = [str(column).strip() for column in frame.columns]
    for column in ASSET_COLUMNS:
        if column not in columns:
            raise AssetSchemaError(column, f"Asset table is missing column '{column}'")
    for column in columns:
        if column not in ASSET_COLUMNS:
            raise AssetSchemaError(column, f"Asset table has unknown column '{column}'")
    frame.columns = columns

    records: list[AssetRecord] = []
    seen: set[str] = set()
    for row_number, row in enumerate(frame[list(ASSET_COLUMNS)].itertuples(index=False, name=None), start=1):
        values: dict[str, Any] = {}
        for column, cell in zip(ASSET_COLUMNS, row, strict=True):
            try:
                values[column] = _PARSERS[column](cell)
            except ValueError as exc:
                raise AssetRowError(row_number, column, cell, str(exc)) from exc
        record = AssetRecord(**values)
        if record.asset_id in seen:
            raise DuplicateAssetError(record.asset_id, row_number)
        seen.add(record.asset_id)
        records.append(record)

    logger.info("Loaded %d assets from %s", len(records), path)
    return AssetTable(records)


def write_asset_table(table: AssetTable, path: Path) -> Path:
    """Write the canonical asset CSV; ``load_asset_table`` reads it back bit-exact."""

    _ = ensure_parent_directory(path)
    table.to_frame().to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    return path


def _is_finite_nonnegative(value: float) -> bool:
    return math.isfinite(value) and value >= 0


def validate_assets(table: AssetTable) -> ValidationReport:
    """List per-row violations of the asset invariants."""

    violations: list[Violation] = []
    for row, record in enumerate(table, start=1):

        def flag(field: str, message: str, *, _row: int = row, _asset: str = record.asset_id) -> None:
            violations.append(Violation(row=_row, asset_id=_asset, field=field, message=message))

        if not record.asset_id:
            flag("asset_id", "asset_id is empty")
        if not record.facility_id:
            flag("facility_id", "facility_id is empty")
        if not (math.isfinite(record.capacity) and record.capacity > 0):
            flag("capacity", f"capacity must be > 0, got {record.capacity}")
        if not (0 < record.utilization <= 1):
            flag("utilization", f"utilization must be in (0, 1], got {record.utilization}")
        for column in INTENSITY_COLUMNS:
            value = float(getattr(record, column))
            if not _is_finite_nonnegative(value):
                flag(column, f"{column} must be >= 0, got {value}")
        if record.startup_year > BASE_YEAR:
            flag("startup_year", f"startup_year must be <= {BASE_YEAR}, got {record.startup_year}")
        if not -90 <= record.latitude <= 90:
            flag("latitude", f"latitude out of range: {record.latitude}")
        if not -180 <= record.longitude <= 180:
            flag("longitude", f"longitude out of range: {record.longitude}")
        if record.feedstock_type not in FEEDSTOCKS:
            flag("feedstock_type", f"unknown feedstock token '{record.feedstock_type}'")
        chemicals = PROCESS_CHEMICALS.get(record.process)
        if chemicals is None:
            flag("process", f"unknown process token '{record.process}'")
        elif record.chemical not in chemicals:
            flag("chemical", f"process '{record.process}' does not produce {record.chemical.value}")

    return ValidationReport(tuple(violations))


def group_facilities(table: AssetTable) -> list[Facility]:
    """Partition assets by facility_id in order of first appearance.

    Raises:
        FacilityConflictError: When members of a facility disagree on region or location.
    """

    members: dict[str, list[AssetRecord]] = {}
    for record in table:
        members.setdefault(record.facility_id, []).append(record)

    facilities: list[Facility] = []
    for facility_id, assets in members.items():
        first = assets[0]
        capacity: dict[Chemical, float] = {}
        for asset in assets:
            if asset.region is not first.region:
                raise FacilityConflictError(facility_id, f"regions {first.region} and {asset.region}")
            if (asset.latitude, asset.longitude) != (first.latitude, first.longitude):
                raise FacilityConflictError(
                    facility_id,
                    f"locations ({first.latitude}, {first.longitude}) and ({asset.latitude}, {asset.longitude})",
                )
            capacity[asset.chemical] = capacity.get(asset.chemical, 0.0) + asset.capacity
        facilities.append(
            Facility(
                facility_id=facility_id,
                region=first.region,
                latitude=first.latitude,
                longitude=first.longitude,
                asset_ids=tuple(asset.asset_id for asset in assets),
                capacity_by_chemical=capacity,
            )
        )
    return facilities


__all__ = ["group_facilities", "load_asset_table", "validate_assets", "write_asset_table"]
