"""Plain builders for domain objects used across the test suite.

Kept outside fixtures so hypothesis-driven tests can call them directly.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Any

from chemdecarb.core.vocabulary import Chemical, Region
from chemdecarb.domain.catalog.options import AbatementOption, option_from_dict
from chemdecarb.domain.catalog.storage import StorageSite
from chemdecarb.domain.costing.finance import FinanceParams, PriceTable, RegionPrices
from chemdecarb.domain.costing.quotes import QuoteBasis
from chemdecarb.domain.dataset.records import AssetRecord

GULF: tuple[float, float] = (29.5, -95.0)

_ASSET_DEFAULTS: dict[str, Any] = {
    "asset_id": "NA-A0001",
    "facility_id": "NA-F0001",
    "owner": "Acme",
    "region": Region.NORTH_AMERICA,
    "latitude": GULF[0],
    "longitude": GULF[1],
    "startup_year": 1995,
    "chemical": Chemical.ETHYLENE,
    "process": "steam_cracker",
    "capacity": 1_500_000.0,
    "utilization": 0.88,
    "feedstock_type": "ethane",
    "feedstock_intensity": 55.0,
    "electricity_intensity": 0.1,
    "steam_intensity": 0.0,
    "fuel_intensity": 20.0,
    "process_co2_intensity": 0.0,
}


def make_asset(**overrides: Any) -> AssetRecord:
    """An ethane steam cracker on the US Gulf coast unless overridden."""

    return AssetRecord(**{**_ASSET_DEFAULTS, **overrides})


def make_option(**overrides: Any) -> AbatementOption:
    """A post-combustion capture record for steam crackers unless overridden."""

    raw: dict[str, Any] = {
        "tech_id": "ccs_postcombustion",
        "applicable_chemicals": ["ethylene"],
        "applicable_processes": ["steam_cracker"],
        "covered_streams": ["fuel"],
        "scope1_abatement_fraction": 0.95,
        "reference_capex": 2.2e9,
        "reference_capacity": 1.5e6,
    }
    raw.update(overrides)
    return option_from_dict(raw)


def make_prices(
    gas: float = 3.5, electricity: float = 65.0, ppa_capex: float = 1.6e6, ppa_cf: float = 0.4
) -> RegionPrices:
    return RegionPrices(
        gas_price=gas, electricity_price=electricity, ppa_capex_per_mw=ppa_capex, ppa_capacity_factor=ppa_cf
    )


def make_site(**overrides: Any) -> StorageSite:
    fields: dict[str, Any] = {
        "site_id": "gulf-saline",
        "region": Region.NORTH_AMERICA,
        "latitude": GULF[0],
        "longitude": GULF[1],
        "unit_storage_cost": 10.0,
        "injection_capacity": 150.0,
    }
    fields.update(overrides)
    return StorageSite(**fields)


def make_basis(
    *,
    sites: tuple[StorageSite, ...] | None = None,
    prices: RegionPrices | None = None,
    finance: FinanceParams | None = None,
    headroom: dict[str, float] | None = None,
) -> QuoteBasis:
    """North American prices and a single storage site at the cracker's gate."""

    region_prices = prices or make_prices()
    return QuoteBasis(
        finance=finance or FinanceParams(),
        prices=PriceTable({region: region_prices for region in Region}),
        sites={Region.NORTH_AMERICA: sites if sites is not None else (make_site(),)},
        headroom=headroom,
    )


def cracker_fleet(
    count: int, *, capacity: float = 1_500_000.0, region: Region = Region.NORTH_AMERICA
) -> list[AssetRecord]:
    """``count`` single-asset cracker facilities with distinct ids."""

    code = region.code
    return [
        make_asset(
            asset_id=f"{code}-A{index:04d}",
            facility_id=f"{code}-F{index:04d}",
            region=region,
            capacity=capacity,
        )
        for index in range(1, count + 1)
    ]


def with_capacity(asset: AssetRecord, capacity: float) -> AssetRecord:
    return replace(asset, capacity=capacity)


__all__ = [
    "GULF",
    "cracker_fleet",
    "make_asset",
    "make_basis",
    "make_option",
    "make_prices",
    "make_site",
    "with_capacity",
]
