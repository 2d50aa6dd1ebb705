"""Closed vocabularies and calendar constants shared by every layer."""

from __future__ import annotations

from collections.abc import Mapping
from enum import StrEnum
from typing import Final, Self


class _Vocabulary(StrEnum):
    """String enum with forgiving user-input parsing."""

    @classmethod
    def from_user_input(cls, value: str) -> Self:
        """Translate raw input (config or CLI) into the matching member."""

        normalized = value.strip()
        for member in cls:
            if normalized in (member.value, member.name) or normalized.lower() == member.value.lower():
                return member
        valid: Final[str] = ", ".join(member.value for member in cls)
        msg = f"Unsupported {cls.__name__} '{value}'. Valid options: {valid}"
        raise ValueError(msg)


class Region(_Vocabulary):
    """Modelled production regions."""

    NORTH_AMERICA = "NorthAmerica"
    EUROPE = "Europe"
    MIDDLE_EAST = "MiddleEast"
    CHINA = "China"

    @property
    def code(self) -> str:
        """Two-letter code used in synthetic identifiers."""

        return _REGION_CODES[self]

    @classmethod
    def from_user_input(cls, value: str) -> Self:
        normalized = value.strip().upper()
        for member, code in _REGION_CODES.items():
            if normalized == code:
                return cls(member.value)
        return super().from_user_input(value)


_REGION_CODES: Final[dict[Region, str]] = {
    Region.NORTH_AMERICA: "NA",
    Region.EUROPE: "EU",
    Region.MIDDLE_EAST: "ME",
    Region.CHINA: "CN",
}


class Chemical(_Vocabulary):
    """Building-block chemicals carried in the asset database."""

    ETHYLENE = "ethylene"
    PROPYLENE = "propylene"
    BENZENE = "benzene"
    BUTADIENE = "butadiene"
    TOLUENE = "toluene"
    XYLENE = "xylene"
    AMMONIA = "ammonia"
    METHANOL = "methanol"
    CHLOR_ALKALI = "chlor_alkali"


class ChemicalGroup(_Vocabulary):
    """Reporting and capital-cap groups."""

    STEAM_CRACKERS = "steam_crackers"
    ON_PURPOSE_PROPYLENE = "on_purpose_propylene"
    AROMATICS = "aromatics"
    METHANOL = "methanol"
    AMMONIA = "ammonia"
    CHLOR_ALKALI = "chlor_alkali"


class BuildType(_Vocabulary):
    """Whether an abatement project retrofits an existing unit or ships with a new one."""

    RETROFIT = "retrofit"
    NEWBUILD = "newbuild"


class ScenarioId(_Vocabulary):
    """Named scenario presets plus user-assembled parameter sets."""

    SU = "SU"
    GA = "GA"
    GG = "GG"
    CUSTOM = "custom"


class PlanningMode(_Vocabulary):
    """How deployment is paced within a region."""

    DEADLINE = "deadline"
    CAPITAL_CAP = "capital_cap"


class Pooling(_Vocabulary):
    """Scope over which commissioned projects teach later ones."""

    GLOBAL = "global"
    PER_REGION = "per_region"


BASE_YEAR: Final[int] = 2023
HORIZON: Final[int] = 2080
EARLIEST_START: Final[int] = 2024
YEARS: Final[range] = range(BASE_YEAR, HORIZON + 1)
CAPEX_YEARS: Final[range] = range(EARLIEST_START, HORIZON + 1)

# Groups with capital rows; chlor-alkali is abated only through the grid.
SCHEDULED_GROUPS: Final[tuple[ChemicalGroup, ...]] = (
    ChemicalGroup.STEAM_CRACKERS,
    ChemicalGroup.ON_PURPOSE_PROPYLENE,
    ChemicalGroup.AROMATICS,
    ChemicalGroup.METHANOL,
    ChemicalGroup.AMMONIA,
)

PROCESS_CHEMICALS: Final[Mapping[str, frozenset[Chemical]]] = {
    "steam_cracker": frozenset({Chemical.ETHYLENE}),
    "on_purpose_propylene": frozenset({Chemical.PROPYLENE}),
    "aromatics_extraction": frozenset({Chemical.BENZENE, Chemical.TOLUENE, Chemical.XYLENE}),
    "butadiene_extraction": frozenset({Chemical.BUTADIENE}),
    "smr_ammonia": frozenset({Chemical.AMMONIA}),
    "coal_ammonia": frozenset({Chemical.AMMONIA}),
    "smr_methanol": frozenset({Chemical.METHANOL}),
    "coal_methanol": frozenset({Chemical.METHANOL}),
    "electrolysis_chlor_alkali": frozenset({Chemical.CHLOR_ALKALI}),
}
PROCESSES: Final[frozenset[str]] = frozenset(PROCESS_CHEMICALS)

FEEDSTOCKS: Final[frozenset[str]] = frozenset(
    {"ethane", "propane", "butane", "naphtha", "gas_oil", "natural_gas", "coal", "salt"}
)

# tCO2 per GJ combusted
COMBUSTION_FACTORS: Final[Mapping[str, float]] = {
    "natural_gas": 0.0561,
    "coal": 0.0946,
}

_AROMATICS: Final[frozenset[Chemical]] = frozenset(
    {Chemical.BENZENE, Chemical.TOLUENE, Chemical.XYLENE, Chemical.BUTADIENE}
)


def chemical_group(chemical: Chemical, process: str) -> ChemicalGroup:
    """Map an asset's chemical and process onto its reporting group."""

    if process == "steam_cracker":
        return ChemicalGroup.STEAM_CRACKERS
    if chemical is Chemical.PROPYLENE:
        return ChemicalGroup.ON_PURPOSE_PROPYLENE
    if chemical in _AROMATICS:
        return ChemicalGroup.AROMATICS
    if chemical is Chemical.METHANOL:
        return ChemicalGroup.METHANOL
    if chemical is Chemical.AMMONIA:
        return ChemicalGroup.AMMONIA
    return ChemicalGroup.CHLOR_ALKALI


def fuel_token(feedstock_type: str) -> str:
    """Fuel burnt for process heat and steam: coal on coal-based sites, gas elsewhere."""

    return "coal" if feedstock_type == "coal" else "natural_gas"


__all__ = [
    "BASE_YEAR",
    "BuildType",
    "CAPEX_YEARS",
    "COMBUSTION_FACTORS",
    "Chemical",
    "ChemicalGroup",
    "EARLIEST_START",
    "FEEDSTOCKS",
    "HORIZON",
    "PROCESSES",
    "PROCESS_CHEMICALS",
    "PlanningMode",
    "Pooling",
    "Region",
    "SCHEDULED_GROUPS",
    "ScenarioId",
    "YEARS",
    "chemical_group",
    "fuel_token",
]
