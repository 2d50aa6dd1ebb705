"""Levelized cost of abatement quotes for assets and facility slices."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from chemdecarb.core.errors import InapplicableOptionError, ZeroAbatementError
from chemdecarb.core.vocabulary import BuildType, Region
from chemdecarb.domain.catalog.options import AbatementOption, option_performance
from chemdecarb.domain.catalog.storage import StorageSite
from chemdecarb.domain.costing.finance import (
    HOURS_PER_YEAR,
    FinanceParams,
    PriceTable,
    RegionPrices,
    locate_capex,
    scale_capex,
)
from chemdecarb.domain.costing.learning import LearningParams, learning_multiplier
from chemdecarb.domain.costing.transport import Located, ts_unit_cost
from chemdecarb.domain.dataset.records import AssetRecord


@dataclass(slots=True, frozen=True)
class QuoteBasis:
    """Prices, finance and storage shared by every quote of a run.

    ``headroom`` is remaining injection capacity per site in t/y; None means
    every site is unused.
    """

    finance: FinanceParams
    prices: PriceTable
    sites: Mapping[Region, tuple[StorageSite, ...]] = field(hash=False)
    headroom: Mapping[str, float] | None = field(default=None, hash=False, compare=False)


@dataclass(slots=True, frozen=True)
class CostQuote:
    """Annualized cost and abatement of one option at one asset or facility slice.

    Money in 2024 USD, flows per year, tonnes of CO2 per year.
    """

    tech_id: str
    build_type: BuildType
    start_year: int
    development_time: int
    capex_before_learning: float
    learning_multiplier: float
    ppa_capex: float
    total_capex: float
    annual_fixed_om: float
    annual_energy_delta_cost: float
    annual_ts_cost: float
    abated_scope1: float
    co2_stored: float
    annuity: float
    lcoa: float
    site_id: str | None = None
    ts_unit_cost: float = 0.0

    @property
    def online_year(self) -> int:
        return self.start_year + self.development_time

    @property
    def annual_cost(self) -> float:
        return (
            self.total_capex * self.annuity
            + self.annual_fixed_om
            + self.annual_energy_delta_cost
            + self.annual_ts_cost
        )

    @classmethod
    def from_components(
        cls,
        *,
        tech_id: str,
        build_type: BuildType,
        start_year: int,
        development_time: int,
        capex_before_learning: float,
        learning_multiplier: float,
        ppa_capex: float,
        annual_fixed_om: float,
        annual_energy_delta_cost: float,
        annual_ts_cost: float,
        abated_scope1: float,
        co2_stored: float,
        annuity: float,
        site_id: str | None = None,
        ts_unit_cost: float = 0.0,
    ) -> CostQuote:
        """Assemble a quote and compute its LCOA over scope-1 abatement.

        Raises:
            ZeroAbatementError: When ``abated_scope1`` is not positive.
        """

        if abated_scope1 <= 0:
            raise ZeroAbatementError(tech_id, f"{build_type.value} quote")
        total_capex = capex_before_learning * learning_multiplier + ppa_capex
        annual = total_capex * annuity + annual_fixed_om + annual_energy_delta_cost + annual_ts_cost
        return cls(
            tech_id=tech_id,
            build_type=build_type,
            start_year=start_year,
            development_time=development_time,
            capex_before_learning=capex_before_learning,
            learning_multiplier=learning_multiplier,
            ppa_capex=ppa_capex,
            total_capex=total_capex,
            annual_fixed_om=annual_fixed_om,
            annual_energy_delta_cost=annual_energy_delta_cost,
            annual_ts_cost=annual_ts_cost,
            abated_scope1=abated_scope1,
            co2_stored=co2_stored,
            annuity=annuity,
            lcoa=annual / abated_scope1,
            site_id=site_id,
            ts_unit_cost=ts_unit_cost,
        )


@dataclass(slots=True, frozen=True)
class AssetCostTerms:
    """Pre-learning cost and abatement of one option at one asset, per year."""

    capex: float
    ppa_capex: float
    fixed_om_fraction: float
    energy_cost: float
    abated_scope1: float
    co2_stored: float


def asset_cost_terms(
    asset: AssetRecord,
    option: AbatementOption,
    build_type: BuildType,
    prices: RegionPrices,
    finance: FinanceParams,
) -> AssetCostTerms:
    """Scale, locate and energy-price ``option`` at ``asset``.

    PPA-backed options buy generation matched to the asset's whole
    electricity demand and stop paying for grid power.
    """

    if not option.allows(build_type):
        raise InapplicableOptionError(option.tech_id, asset.asset_id)
    performance = option_performance(option, asset)
    production = asset.production

    capex = locate_capex(
        scale_capex(option.reference_capex, option.reference_capacity, asset.capacity, option.scale_exponent),
        asset.region,
        finance,
    )
    if build_type is BuildType.NEWBUILD:
        capex *= option.newbuild_capex_factor

    gas_cost = performance.delta_gas * prices.gas_price
    if performance.ppa_backed:
        demand = asset.electricity_intensity + performance.delta_electricity
        ppa_capex = production * demand / (HOURS_PER_YEAR * prices.ppa_capacity_factor) * prices.ppa_capex_per_mw
        power_cost = -asset.electricity_intensity * prices.electricity_price
    else:
        ppa_capex = 0.0
        power_cost = performance.delta_electricity * prices.electricity_price

    return AssetCostTerms(
        capex=capex,
        ppa_capex=ppa_capex,
        fixed_om_fraction=option.fixed_om_fraction,
        energy_cost=production * (gas_cost + power_cost + performance.delta_feedstock_cost),
        abated_scope1=production * performance.abated_scope1,
        co2_stored=production * performance.co2_stored,
    )


def quote_slice(
    assets: Sequence[AssetRecord],
    records: Sequence[AbatementOption],
    build_type: BuildType,
    start_year: int,
    n_prior: int,
    learning: LearningParams,
    basis: QuoteBasis,
    location: Located,
) -> CostQuote:
    """Quote one technology across a facility slice.

    ``records[i]`` is the catalog record serving ``assets[i]``; all share a
    tech_id. Storage is priced once for the slice's combined CO2 from
    ``location``.
    """

    if not assets or len(assets) != len(records):
        raise ValueError("quote_slice needs one catalog record per asset")
    tech_id = records[0].tech_id
    if any(record.tech_id != tech_id for record in records):
        raise ValueError("quote_slice records must share a tech_id")

    region = assets[0].region
    prices = basis.prices.for_region(region)
    multiplier = learning_multiplier(n_prior, learning)

    capex = ppa_capex = fixed_om = energy = abated = stored = 0.0
    for asset, record in zip(assets, records, strict=True):
        terms = asset_cost_terms(asset, record, build_type, prices, basis.finance)
        capex += terms.capex
        ppa_capex += terms.ppa_capex
        fixed_om += terms.fixed_om_fraction * (terms.capex * multiplier + terms.ppa_capex)
        energy += terms.energy_cost
        abated += terms.abated_scope1
        stored += terms.co2_stored

    site_id: str | None = None
    unit_cost = 0.0
    if stored > 0:
        route = ts_unit_cost(location, basis.sites.get(region, ()), stored, basis.finance, basis.headroom)
        site_id = route.site.site_id
        unit_cost = route.unit_cost

    return CostQuote.from_components(
        tech_id=tech_id,
        build_type=build_type,
        start_year=start_year,
        development_time=max(record.development_time for record in records),
        capex_before_learning=capex,
        learning_multiplier=multiplier,
        ppa_capex=ppa_capex,
        annual_fixed_om=fixed_om,
        annual_energy_delta_cost=energy,
        annual_ts_cost=stored * unit_cost,
        abated_scope1=abated,
        co2_stored=stored,
        annuity=basis.finance.annuity,
        site_id=site_id,
        ts_unit_cost=unit_cost,
    )


def quote(
    asset: AssetRecord,
    option: AbatementOption,
    build_type: BuildType,
    year: int,
    n_prior: int,
    learning: LearningParams,
    basis: QuoteBasis,
) -> CostQuote:
    """Quote ``option`` for a single asset whose development starts in ``year``.

    Raises:
        InapplicableOptionError: When the option cannot serve the asset as ``build_type``.
        ZeroAbatementError: When the option abates no scope-1 CO2 at the asset.
        MissingPriceError: When the asset's region has no prices.
        StorageExhaustedError: When no storage site can take the captured CO2.
    """

    return quote_slice([asset], [option], build_type, year, n_prior, learning, basis, asset)


__all__ = ["AssetCostTerms", "CostQuote", "QuoteBasis", "asset_cost_terms", "quote", "quote_slice"]
