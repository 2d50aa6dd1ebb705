"""Geologic CO2 storage sites."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import CatalogError
from chemdecarb.core.vocabulary import Region


@dataclass(slots=True, frozen=True)
class StorageSite:
    """An injection site; capacity in MtCO2/y, cost in $/tCO2."""

    site_id: str
    region: Region
    latitude: float
    longitude: float
    unit_storage_cost: float
    injection_capacity: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.unit_storage_cost) and self.unit_storage_cost >= 0):
            raise CatalogError(f"Storage site '{self.site_id}': unit_storage_cost must be >= 0")
        if not (math.isfinite(self.injection_capacity) and self.injection_capacity > 0):
            raise CatalogError(f"Storage site '{self.site_id}': injection_capacity must be > 0")
        if not (-90 <= self.latitude <= 90 and -180 <= self.longitude <= 180):
            raise CatalogError(f"Storage site '{self.site_id}': invalid coordinates")

    @property
    def location(self) -> tuple[float, float]:
        return (self.latitude, self.longitude)

    @property
    def annual_limit(self) -> float:
        """Injection capacity in tCO2/y."""

        return self.injection_capacity * 1e6


def _site(region: Region, raw: Mapping[str, Any]) -> StorageSite:
    try:
        return StorageSite(
            site_id=str(raw["site_id"]),
            region=region,
            latitude=float(raw["latitude"]),
            longitude=float(raw["longitude"]),
            unit_storage_cost=float(raw["unit_storage_cost"]),
            injection_capacity=float(raw["injection_capacity"]),
        )
    except KeyError as exc:
        raise CatalogError(f"Storage site in {region.value} is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise CatalogError(f"Storage site in {region.value} is malformed: {exc}") from exc


def load_storage_sites(path: Path) -> dict[Region, tuple[StorageSite, ...]]:
    """Load ``storage_sites.json``: ``{"regions": {region: [site, ...]}}``."""

    payload = read_json_file(path, what="Storage sites")
    regions = payload.get("regions") if isinstance(payload, dict) else None
    if not isinstance(regions, dict):
        raise CatalogError(f"Storage sites file {path} must hold a 'regions' object")

    sites: dict[Region, tuple[StorageSite, ...]] = {}
    seen: set[str] = set()
    for raw_region, entries in regions.items():
        try:
            region = Region.from_user_input(str(raw_region))
        except ValueError as exc:
            raise CatalogError(str(exc)) from exc
        parsed = tuple(_site(region, entry) for entry in entries)
        for site in parsed:
            if site.site_id in seen:
                raise CatalogError(f"Duplicate storage site_id '{site.site_id}'")
            seen.add(site.site_id)
        sites[region] = parsed
    return sites


__all__ = ["StorageSite", "load_storage_sites"]
