"""Asset and facility records."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import astuple, dataclass, field
from functools import cached_property
from typing import Final, final

import pandas as pd

from chemdecarb.core.vocabulary import Chemical, ChemicalGroup, Region, chemical_group

# Canonical asset CSV header, in order.
ASSET_COLUMNS: Final[tuple[str, ...]] = (
    "asset_id",
    "facility_id",
    "owner",
    "region",
    "latitude",
    "longitude",
    "startup_year",
    "chemical",
    "process",
    "capacity",
    "utilization",
    "feedstock_type",
    "feedstock_intensity",
    "electricity_intensity",
    "steam_intensity",
    "fuel_intensity",
    "process_co2_intensity",
)

INTENSITY_COLUMNS: Final[tuple[str, ...]] = (
    "feedstock_intensity",
    "electricity_intensity",
    "steam_intensity",
    "fuel_intensity",
    "process_co2_intensity",
)


@dataclass(slots=True, frozen=True)
class AssetRecord:
    """One production unit.

    Capacity is tonnes of product per year. Intensities are per tonne of
    product: feedstock, steam and fuel in GJ, electricity in MWh and process
    CO2 in tonnes. ``fuel_intensity`` excludes steam-raising fuel.
    """

    asset_id: str
    facility_id: str
    owner: str
    region: Region
    latitude: float
    longitude: float
    startup_year: int
    chemical: Chemical
    process: str
    capacity: float
    utilization: float
    feedstock_type: str
    feedstock_intensity: float
    electricity_intensity: float
    steam_intensity: float
    fuel_intensity: float
    process_co2_intensity: float

    @property
    def production(self) -> float:
        """Base-year output in tonnes per year."""

        return self.capacity * self.utilization

    @property
    def group(self) -> ChemicalGroup:
        return chemical_group(self.chemical, self.process)

    def as_row(self) -> tuple[object, ...]:
        """Field values in ``ASSET_COLUMNS`` order, enums as their tokens."""

        return tuple(value.value if isinstance(value, (Region, Chemical)) else value for value in astuple(self))


@dataclass(slots=True, frozen=True)
class Facility:
    """A site grouping one or more assets at a single location."""

    facility_id: str
    region: Region
    latitude: float
    longitude: float
    asset_ids: tuple[str, ...]
    capacity_by_chemical: Mapping[Chemical, float] = field(hash=False)


@final
class AssetTable:
    """Immutable, ordered collection of asset records."""

    def __init__(self, records: tuple[AssetRecord, ...] | list[AssetRecord]) -> None:
        self._records: tuple[AssetRecord, ...] = tuple(records)

    @property
    def records(self) -> tuple[AssetRecord, ...]:
        return self._records

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[AssetRecord]:
        return iter(self._records)

    def __getitem__(self, index: int) -> AssetRecord:
        return self._records[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AssetTable):
            return NotImplemented
        return self._records == other._records

    def __hash__(self) -> int:
        return hash(self._records)

    def __repr__(self) -> str:
        return f"AssetTable({len(self._records)} assets)"

    @cached_property
    def by_id(self) -> dict[str, AssetRecord]:
        """Lookup by asset identifier."""

        return {record.asset_id: record for record in self._records}

    def to_frame(self) -> pd.DataFrame:
        """Render the table as a DataFrame in canonical column order."""

        return pd.DataFrame([record.as_row() for record in self._records], columns=list(ASSET_COLUMNS))


@dataclass(slots=True, frozen=True)
class Violation:
    """One invariant violation, addressed by 1-based data row."""

    row: int
    asset_id: str
    field: str
    message: str


@dataclass(slots=True, frozen=True)
class ValidationReport:
    """Outcome of ``validate_assets``; empty iff the table is clean."""

    violations: tuple[Violation, ...] = ()

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)


__all__ = [
    "ASSET_COLUMNS",
    "AssetRecord",
    "AssetTable",
    "Facility",
    "INTENSITY_COLUMNS",
    "ValidationReport",
    "Violation",
]
