"""CO2 transport-and-storage pricing."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Protocol

from geopy.distance import great_circle

from chemdecarb.core.errors import StorageExhaustedError
from chemdecarb.domain.catalog.storage import StorageSite
from chemdecarb.domain.costing.finance import FinanceParams

VOLUME_FACTOR_BOUNDS = (0.5, 2.0)


class Located(Protocol):
    @property
    def latitude(self) -> float: ...

    @property
    def longitude(self) -> float: ...


@dataclass(slots=True, frozen=True)
class TsQuote:
    """Cheapest storage route for a volume: $/tCO2, chosen site and pipeline length."""

    unit_cost: float
    site: StorageSite
    distance_km: float


@lru_cache(maxsize=65536)
def distance_km(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Great-circle distance between two points."""

    return float(great_circle((lat1, lon1), (lat2, lon2)).km)


def volume_factor(annual_co2: float, reference_volume: float) -> float:
    """Pipeline economies of scale: ``(V / V_ref)^-0.25`` clamped to [0.5, 2]."""

    low, high = VOLUME_FACTOR_BOUNDS
    return min(high, max(low, (annual_co2 / reference_volume) ** -0.25))


def ts_unit_cost(
    facility: Located,
    sites: Sequence[StorageSite],
    annual_co2: float,
    finance: FinanceParams,
    headroom: Mapping[str, float] | None = None,
) -> TsQuote:
    """Price storage of ``annual_co2`` t/y at the cheapest site that can take it.

    ``headroom`` maps site_id to remaining injection capacity in t/y; sites
    absent from it have their full capacity.

    Raises:
        StorageExhaustedError: When no site has room for the volume, or there are no sites.
    """

    if not sites:
        raise StorageExhaustedError(annual_co2)
    if annual_co2 <= 0:
        raise ValueError(f"annual_co2 must be > 0, got {annual_co2}")

    factor = volume_factor(annual_co2, finance.ts_reference_volume)
    best: TsQuote | None = None
    for site in sites:
        remaining = site.annual_limit if headroom is None else headroom.get(site.site_id, site.annual_limit)
        if remaining < annual_co2:
            continue
        km = distance_km(facility.latitude, facility.longitude, site.latitude, site.longitude)
        cost = site.unit_storage_cost + finance.ts_tariff_per_t_km * km * factor
        if best is None or cost < best.unit_cost:
            best = TsQuote(unit_cost=cost, site=site, distance_km=km)
    if best is None:
        raise StorageExhaustedError(annual_co2, sites[0].region.value)
    return best


def cheapest_site(sites: Sequence[StorageSite], headroom: Mapping[str, float] | None = None) -> StorageSite:
    """Lowest unit-cost site with headroom left; ties by site_id."""

    open_sites = [
        site
        for site in sites
        if (site.annual_limit if headroom is None else headroom.get(site.site_id, site.annual_limit)) > 0
    ]
    if not open_sites:
        raise StorageExhaustedError(0.0, sites[0].region.value if sites else None)
    return min(open_sites, key=lambda site: (site.unit_storage_cost, site.site_id))


__all__ = ["Located", "TsQuote", "cheapest_site", "distance_km", "ts_unit_cost", "volume_factor"]
