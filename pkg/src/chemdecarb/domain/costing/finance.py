"""Financial parameters, annualization, capex adjustments and outlay profiles."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import numpy_financial as npf

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import FinanceConfigError, MissingPriceError
from chemdecarb.core.vocabulary import Region

HOURS_PER_YEAR = 8760.0


@dataclass(slots=True, frozen=True)
class FinanceParams:
    """Discounting and cost-adjustment parameters (2024 USD)."""

    discount_rate: float = 0.08
    asset_life: int = 20
    dollar_year: int = 2024
    logistic_steepness: float = 6.0
    ts_tariff_per_t_km: float = 0.02
    ts_reference_volume: float = 1e6
    location_factors: Mapping[Region, float] = field(
        default_factory=lambda: {
            Region.NORTH_AMERICA: 1.0,
            Region.EUROPE: 1.15,
            Region.MIDDLE_EAST: 0.9,
            Region.CHINA: 0.7,
        },
        hash=False,
    )

    def __post_init__(self) -> None:
        if not 0 < self.discount_rate < 1:
            raise FinanceConfigError(f"discount_rate must be in (0, 1), got {self.discount_rate}")
        if self.asset_life < 1:
            raise FinanceConfigError(f"asset_life must be >= 1, got {self.asset_life}")
        if self.logistic_steepness <= 0:
            raise FinanceConfigError("logistic_steepness must be > 0")
        if self.ts_tariff_per_t_km < 0 or self.ts_reference_volume <= 0:
            raise FinanceConfigError("ts_tariff_per_t_km must be >= 0 and ts_reference_volume > 0")
        for region, factor in self.location_factors.items():
            if not (math.isfinite(factor) and factor > 0):
                raise FinanceConfigError(f"Location factor for {region.value} must be > 0, got {factor}")
        if self.location_factors.get(Region.NORTH_AMERICA, 1.0) != 1.0:
            raise FinanceConfigError("The NorthAmerica location factor is the reference and must be 1.0")

    @property
    def annuity(self) -> float:
        return crf(self.discount_rate, self.asset_life)


def crf(r: float, n: int) -> float:
    """Capital recovery factor ``r(1+r)^n / ((1+r)^n - 1)``; ``1/n`` when ``r == 0``."""

    if n < 1:
        raise ValueError(f"Annuity period must be >= 1 year, got {n}")
    if r < 0:
        raise ValueError(f"Discount rate must be >= 0, got {r}")
    if r == 0:
        return 1.0 / n
    return float(-npf.pmt(r, n, 1.0))


def scale_capex(ref_capex: float, ref_capacity: float, capacity: float, exponent: float) -> float:
    """Power-law scaling of a reference capital cost to ``capacity``."""

    if capacity <= 0 or ref_capacity <= 0:
        raise ValueError(f"Capacities must be > 0, got {capacity} and {ref_capacity}")
    if not 0 < exponent <= 1:
        raise ValueError(f"Scale exponent must be in (0, 1], got {exponent}")
    return ref_capex * (capacity / ref_capacity) ** exponent


def locate_capex(capex: float, region: Region, finance: FinanceParams) -> float:
    """Translate a North American reference cost to ``region``."""

    try:
        factor = finance.location_factors[region]
    except KeyError as exc:
        raise FinanceConfigError(f"No location factor configured for region '{region}'") from exc
    return capex * factor


def outlay_profile(total: float, dev_years: int, steepness: float) -> list[float]:
    """Split ``total`` over ``dev_years`` along a normalized logistic curve.

    The final year takes whatever the rounded earlier years leave, so the
    entries sum back to ``total``.
    """

    if dev_years < 1:
        raise ValueError(f"Development time must be >= 1 year, got {dev_years}")
    if dev_years == 1:
        return [total]
    t = np.arange(dev_years + 1, dtype=float)
    cumulative = 1.0 / (1.0 + np.exp(-steepness * (t / dev_years - 0.5)))
    shares = np.diff(cumulative) / (cumulative[-1] - cumulative[0])
    outlays = [float(total * share) for share in shares[:-1]]
    outlays.append(total - sum(outlays))
    return outlays


@dataclass(slots=True, frozen=True)
class RegionPrices:
    """Energy prices: gas $/GJ, electricity $/MWh, PPA generator $/MW and capacity factor."""

    gas_price: float
    electricity_price: float
    ppa_capex_per_mw: float
    ppa_capacity_factor: float

    def __post_init__(self) -> None:
        if min(self.gas_price, self.electricity_price, self.ppa_capex_per_mw) < 0:
            raise FinanceConfigError("Prices must be >= 0")
        if not 0 < self.ppa_capacity_factor <= 1:
            raise FinanceConfigError(f"PPA capacity factor must be in (0, 1], got {self.ppa_capacity_factor}")


@dataclass(slots=True, frozen=True)
class PriceTable:
    regions: Mapping[Region, RegionPrices] = field(hash=False)

    def for_region(self, region: Region) -> RegionPrices:
        try:
            return self.regions[region]
        except KeyError as exc:
            raise MissingPriceError(region.value) from exc


def _region_key(raw: str) -> Region:
    try:
        return Region.from_user_input(raw)
    except ValueError as exc:
        raise FinanceConfigError(str(exc)) from exc


def finance_from_dict(payload: Mapping[str, Any]) -> FinanceParams:
    known = {
        "discount_rate",
        "asset_life",
        "dollar_year",
        "logistic_steepness",
        "ts_tariff_per_t_km",
        "ts_reference_volume",
        "location_factors",
    }
    body = {key: value for key, value in payload.items() if not key.startswith("_")}
    unknown = sorted(set(body) - known)
    if unknown:
        raise FinanceConfigError(f"Unknown finance key '{unknown[0]}'")
    factors = body.pop("location_factors", None)
    integral = ("asset_life", "dollar_year")
    try:
        params: dict[str, Any] = {
            key: (int(value) if key in integral else float(value)) for key, value in body.items()
        }
        if factors is not None:
            params["location_factors"] = {_region_key(key): float(value) for key, value in factors.items()}
    except (TypeError, ValueError) as exc:
        raise FinanceConfigError(f"Malformed finance parameters: {exc}") from exc
    return FinanceParams(**params)


def load_finance(path: Path) -> FinanceParams:
    """Load ``finance.json``."""

    payload = read_json_file(path, what="Finance")
    if not isinstance(payload, dict):
        raise FinanceConfigError(f"Finance file {path} must hold a JSON object")
    return finance_from_dict(payload)


def load_prices(path: Path) -> PriceTable:
    """Load ``prices.json``: ``{"regions": {region: {...}}}``."""

    payload = read_json_file(path, what="Prices")
    regions = payload.get("regions") if isinstance(payload, dict) else None
    if not isinstance(regions, dict):
        raise FinanceConfigError(f"Prices file {path} must hold a 'regions' object")
    table: dict[Region, RegionPrices] = {}
    for raw_region, entry in regions.items():
        try:
            table[_region_key(raw_region)] = RegionPrices(
                gas_price=float(entry["gas_price"]),
                electricity_price=float(entry["electricity_price"]),
                ppa_capex_per_mw=float(entry["ppa_capex_per_mw"]),
                ppa_capacity_factor=float(entry["ppa_capacity_factor"]),
            )
        except KeyError as exc:
            raise FinanceConfigError(f"Prices for {raw_region} are missing {exc}") from exc
    return PriceTable(table)


__all__ = [
    "FinanceParams",
    "HOURS_PER_YEAR",
    "PriceTable",
    "RegionPrices",
    "crf",
    "finance_from_dict",
    "load_finance",
    "load_prices",
    "locate_capex",
    "outlay_profile",
    "scale_capex",
]
