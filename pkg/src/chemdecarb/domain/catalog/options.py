"""Abatement technologies, their applicability and per-tonne performance."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import TYPE_CHECKING, Any, Final, final

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import CatalogError, InapplicableOptionError
from chemdecarb.core.vocabulary import (
    COMBUSTION_FACTORS,
    PROCESSES,
    BuildType,
    Chemical,
    ChemicalGroup,
    chemical_group,
    fuel_token,
)
from chemdecarb.domain.dataset.records import AssetRecord

if TYPE_CHECKING:
    from chemdecarb.domain.scenario.params import ScenarioParams

TECH_IDS: Final[frozenset[str]] = frozenset(
    {
        "ccs_postcombustion",
        "ccs_process_co2",
        "blue_h2",
        "green_h2",
        "electrified_cracker",
        "ccu_methanol",
        "bio_syngas_methanol",
        "bio_ethylene",
        "circular_pyoil",
    }
)
ELECTRIFIED_CRACKER: Final[str] = "electrified_cracker"
# Solvent regeneration burns natural gas regardless of the site's fuel.
REGENERATION_FUEL: Final[str] = "natural_gas"


class Stream(StrEnum):
    """Scope-1 emission streams an option can act on."""

    FUEL = "fuel"
    STEAM = "steam"
    PROCESS = "process"


COMBUSTION_STREAMS: Final[frozenset[Stream]] = frozenset({Stream.FUEL, Stream.STEAM})


@dataclass(slots=True, frozen=True)
class AbatementOption:
    """One catalog record: a technology for a set of processes.

    Energy deltas are per tonne of product: ``delta_fuel_gas`` in GJ of
    natural gas, ``delta_electricity`` in MWh, ``delta_feedstock_cost`` in $.
    ``regeneration_heat`` is GJ of gas per tCO2 captured from combustion
    streams. ``capture_fraction`` is the share of abated mass sent to storage.
    """

    tech_id: str
    applicable_chemicals: frozenset[Chemical]
    applicable_processes: frozenset[str]
    retrofit_allowed: bool
    newbuild_allowed: bool
    earliest_operation_year: int
    covered_streams: frozenset[Stream]
    scope1_abatement_fraction: float
    process_abatement_fraction: float
    capture_fraction: float
    regeneration_heat: float
    delta_electricity: float
    delta_fuel_gas: float
    delta_feedstock_cost: float
    co2_to_storage_per_t: float
    ppa_backed: bool
    reference_capex: float
    reference_capacity: float
    scale_exponent: float
    development_time: int
    fixed_om_fraction: float
    newbuild_capex_factor: float = 0.8
    feedstock_overlay: bool = False

    def __post_init__(self) -> None:
        where = f"Catalog option '{self.tech_id}'"
        if self.tech_id not in TECH_IDS:
            raise CatalogError(f"{where}: unknown tech_id")
        for name in (
            "scope1_abatement_fraction",
            "process_abatement_fraction",
            "capture_fraction",
            "fixed_om_fraction",
        ):
            value = float(getattr(self, name))
            if not 0 <= value <= 1:
                raise CatalogError(f"{where}: {name} must be in [0, 1], got {value}")
        if not 3 <= self.development_time <= 7:
            raise CatalogError(f"{where}: development_time must be in [3, 7], got {self.development_time}")
        if self.reference_capex <= 0 or self.reference_capacity <= 0:
            raise CatalogError(f"{where}: reference_capex and reference_capacity must be > 0")
        if not 0 < self.scale_exponent <= 1:
            raise CatalogError(f"{where}: scale_exponent must be in (0, 1]")
        if not (self.retrofit_allowed or self.newbuild_allowed):
            raise CatalogError(f"{where}: at least one of retrofit/newbuild must be allowed")
        if self.regeneration_heat < 0 or self.co2_to_storage_per_t < 0:
            raise CatalogError(f"{where}: regeneration_heat and co2_to_storage_per_t must be >= 0")
        if not 0 < self.newbuild_capex_factor <= 2:
            raise CatalogError(f"{where}: newbuild_capex_factor must be in (0, 2]")
        unknown = self.applicable_processes - PROCESSES
        if unknown:
            raise CatalogError(f"{where}: unknown process '{sorted(unknown)[0]}'")

    def allows(self, build_type: BuildType) -> bool:
        return self.retrofit_allowed if build_type is BuildType.RETROFIT else self.newbuild_allowed

    def serves(self, asset: AssetRecord) -> bool:
        """Whether the record's chemical and process sets cover the asset."""

        return asset.process in self.applicable_processes and asset.chemical in self.applicable_chemicals

    def operating_from(self, scenario: ScenarioParams | None = None) -> int:
        """Earliest operation year, honouring the scenario's e-cracker availability."""

        if scenario is not None and self.tech_id == ELECTRIFIED_CRACKER:
            return scenario.ecracker_year
        return self.earliest_operation_year


@dataclass(slots=True, frozen=True)
class PerformanceBundle:
    """Per-tonne effect of an option on one asset.

    CO2 terms are tonnes per tonne of product, gas in GJ/t, electricity in MWh/t.
    """

    tech_id: str
    baseline_combustion: float
    baseline_process: float
    abated_combustion: float
    abated_process: float
    regeneration_co2: float
    captured_combustion: float
    captured_process: float
    captured_regeneration: float
    captured_reformer: float
    delta_gas: float
    delta_electricity: float
    delta_feedstock_cost: float
    ppa_backed: bool

    @property
    def abated_scope1(self) -> float:
        """Net scope-1 removed: covered-stream abatement less the uncaptured regeneration CO2."""

        return self.abated_combustion + self.abated_process - self.regeneration_residual

    @property
    def regeneration_residual(self) -> float:
        return self.regeneration_co2 - self.captured_regeneration

    @property
    def residual_combustion(self) -> float:
        return self.baseline_combustion - self.abated_combustion + self.regeneration_residual

    @property
    def residual_process(self) -> float:
        return self.baseline_process - self.abated_process

    @property
    def co2_stored(self) -> float:
        return self.captured_combustion + self.captured_process + self.captured_regeneration + self.captured_reformer


def combustion_streams(asset: AssetRecord) -> dict[Stream, float]:
    """Pre-abatement combustion CO2 per tonne of product, by stream."""

    factor = COMBUSTION_FACTORS[fuel_token(asset.feedstock_type)]
    return {Stream.FUEL: asset.fuel_intensity * factor, Stream.STEAM: asset.steam_intensity * factor}


def option_performance(option: AbatementOption, asset: AssetRecord) -> PerformanceBundle:
    """Compute the per-tonne abatement, capture and energy deltas of ``option`` at ``asset``.

    Raises:
        InapplicableOptionError: When the option does not serve the asset's process or chemical.
    """

    if option.feedstock_overlay or not option.serves(asset):
        raise InapplicableOptionError(option.tech_id, asset.asset_id)

    streams = combustion_streams(asset)
    baseline_combustion = streams[Stream.FUEL] + streams[Stream.STEAM]
    covered_combustion = sum(streams[stream] for stream in option.covered_streams & COMBUSTION_STREAMS)
    abated_combustion = option.scope1_abatement_fraction * covered_combustion
    abated_process = (
        option.process_abatement_fraction * asset.process_co2_intensity
        if Stream.PROCESS in option.covered_streams
        else 0.0
    )

    captured_combustion = option.capture_fraction * abated_combustion
    captured_process = option.capture_fraction * abated_process
    regeneration_gas = option.regeneration_heat * captured_combustion
    regeneration_co2 = regeneration_gas * COMBUSTION_FACTORS[REGENERATION_FUEL]
    captured_regeneration = option.scope1_abatement_fraction * regeneration_co2

    return PerformanceBundle(
        tech_id=option.tech_id,
        baseline_combustion=baseline_combustion,
        baseline_process=asset.process_co2_intensity,
        abated_combustion=abated_combustion,
        abated_process=abated_process,
        regeneration_co2=regeneration_co2,
        captured_combustion=captured_combustion,
        captured_process=captured_process,
        captured_regeneration=captured_regeneration,
        captured_reformer=option.co2_to_storage_per_t,
        delta_gas=option.delta_fuel_gas + regeneration_gas,
        delta_electricity=option.delta_electricity,
        delta_feedstock_cost=option.delta_feedstock_cost,
        ppa_backed=option.ppa_backed,
    )


@final
class Catalog:
    """Immutable set of abatement option records.

    A ``tech_id`` may repeat across records with disjoint process sets so that
    each process family carries its own reference cost.
    """

    def __init__(self, options: Iterable[AbatementOption]) -> None:
        self._options: tuple[AbatementOption, ...] = tuple(options)
        claimed: dict[tuple[str, str], AbatementOption] = {}
        for option in self._options:
            for process in option.applicable_processes:
                key = (option.tech_id, process)
                if key in claimed:
                    raise CatalogError(f"Catalog option '{option.tech_id}' is defined twice for process '{process}'")
                claimed[key] = option
        self._by_process: dict[tuple[str, str], AbatementOption] = claimed

    @property
    def options(self) -> tuple[AbatementOption, ...]:
        return self._options

    def __iter__(self) -> Iterator[AbatementOption]:
        return iter(self._options)

    def __len__(self) -> int:
        return len(self._options)

    def record_for(self, tech_id: str, process: str) -> AbatementOption | None:
        """The record of ``tech_id`` that covers ``process``, if any."""

        return self._by_process.get((tech_id, process))

    def overlays(self) -> tuple[AbatementOption, ...]:
        """Feedstock-substitution records carried for the emissions overlay only."""

        return tuple(option for option in self._options if option.feedstock_overlay)

    def applicable_options(
        self,
        asset: AssetRecord,
        build_type: BuildType,
        year: int,
        scenario: ScenarioParams | None = None,
    ) -> list[AbatementOption]:
        """Options that can serve ``asset`` as ``build_type`` operating in ``year``, by tech_id."""

        if chemical_group(asset.chemical, asset.process) is ChemicalGroup.CHLOR_ALKALI:
            return []
        return sorted(
            (
                option
                for option in self._options
                if not option.feedstock_overlay
                and option.serves(asset)
                and option.allows(build_type)
                and year >= option.operating_from(scenario)
            ),
            key=lambda option: option.tech_id,
        )


def applicable_options(
    asset: AssetRecord,
    build_type: BuildType,
    year: int,
    scenario: ScenarioParams | None,
    *,
    catalog: Catalog,
) -> list[AbatementOption]:
    """Filter the catalog by chemical/process match, build type and operating year."""

    return catalog.applicable_options(asset, build_type, year, scenario)


_OPTION_DEFAULTS: Final[Mapping[str, Any]] = {
    "retrofit_allowed": True,
    "newbuild_allowed": True,
    "earliest_operation_year": 2030,
    "covered_streams": [],
    "scope1_abatement_fraction": 0.0,
    "process_abatement_fraction": 0.0,
    "capture_fraction": 1.0,
    "regeneration_heat": 0.0,
    "delta_electricity": 0.0,
    "delta_fuel_gas": 0.0,
    "delta_feedstock_cost": 0.0,
    "co2_to_storage_per_t": 0.0,
    "ppa_backed": False,
    "scale_exponent": 0.65,
    "development_time": 5,
    "fixed_om_fraction": 0.03,
    "newbuild_capex_factor": 0.8,
    "feedstock_overlay": False,
}
_REQUIRED: Final[tuple[str, ...]] = (
    "tech_id",
    "applicable_chemicals",
    "applicable_processes",
    "reference_capex",
    "reference_capacity",
)


def option_from_dict(raw: Mapping[str, Any]) -> AbatementOption:
    """Build one option from a catalog JSON record, applying documented defaults."""

    record = {key: value for key, value in raw.items() if not key.startswith("_")}
    for key in _REQUIRED:
        if key not in record:
            raise CatalogError(f"Catalog record is missing '{key}'")
    unknown = sorted(set(record) - set(_REQUIRED) - set(_OPTION_DEFAULTS))
    if unknown:
        raise CatalogError(f"Catalog record '{record['tech_id']}' has unknown key '{unknown[0]}'")
    merged = {**_OPTION_DEFAULTS, **record}
    try:
        return AbatementOption(
            tech_id=str(merged["tech_id"]),
            applicable_chemicals=frozenset(Chemical.from_user_input(c) for c in merged["applicable_chemicals"]),
            applicable_processes=frozenset(str(p) for p in merged["applicable_processes"]),
            retrofit_allowed=bool(merged["retrofit_allowed"]),
            newbuild_allowed=bool(merged["newbuild_allowed"]),
            earliest_operation_year=int(merged["earliest_operation_year"]),
            covered_streams=frozenset(Stream(s) for s in merged["covered_streams"]),
            scope1_abatement_fraction=float(merged["scope1_abatement_fraction"]),
            process_abatement_fraction=float(merged["process_abatement_fraction"]),
            capture_fraction=float(merged["capture_fraction"]),
            regeneration_heat=float(merged["regeneration_heat"]),
            delta_electricity=float(merged["delta_electricity"]),
            delta_fuel_gas=float(merged["delta_fuel_gas"]),
            delta_feedstock_cost=float(merged["delta_feedstock_cost"]),
            co2_to_storage_per_t=float(merged["co2_to_storage_per_t"]),
            ppa_backed=bool(merged["ppa_backed"]),
            reference_capex=float(merged["reference_capex"]),
            reference_capacity=float(merged["reference_capacity"]),
            scale_exponent=float(merged["scale_exponent"]),
            development_time=int(merged["development_time"]),
            fixed_om_fraction=float(merged["fixed_om_fraction"]),
            newbuild_capex_factor=float(merged["newbuild_capex_factor"]),
            feedstock_overlay=bool(merged["feedstock_overlay"]),
        )
    except ValueError as exc:
        raise CatalogError(f"Catalog record '{merged['tech_id']}': {exc}") from exc


def load_catalog(path: Path) -> Catalog:
    """Load ``catalog.json``: ``{"options": [...]}``."""

    payload = read_json_file(path, what="Catalog")
    if not isinstance(payload, dict) or not isinstance(payload.get("options"), list):
        raise CatalogError(f"Catalog {path} must be an object with an 'options' list")
    return Catalog(option_from_dict(raw) for raw in payload["options"])


__all__ = [
    "AbatementOption",
    "COMBUSTION_STREAMS",
    "Catalog",
    "ELECTRIFIED_CRACKER",
    "PerformanceBundle",
    "Stream",
    "TECH_IDS",
    "applicable_options",
    "combustion_streams",
    "load_catalog",
    "option_from_dict",
    "option_performance",
]
