"""Tests for the shared vocabularies."""

import pytest

from chemdecarb.core.vocabulary import (
    BASE_YEAR,
    HORIZON,
    PROCESS_CHEMICALS,
    SCHEDULED_GROUPS,
    YEARS,
    Chemical,
    ChemicalGroup,
    PlanningMode,
    Region,
    chemical_group,
    fuel_token,
)


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("NorthAmerica", Region.NORTH_AMERICA),
        ("northamerica", Region.NORTH_AMERICA),
        ("NA", Region.NORTH_AMERICA),
        ("eu", Region.EUROPE),
        (" ME ", Region.MIDDLE_EAST),
        ("CHINA", Region.CHINA),
        ("CN", Region.CHINA),
    ],
)
def test_region_from_user_input(raw: str, expected: Region) -> None:
    assert Region.from_user_input(raw) is expected


def test_region_codes() -> None:
    assert [region.code for region in Region] == ["NA", "EU", "ME", "CN"]


def test_unknown_member_lists_valid_options() -> None:
    with pytest.raises(ValueError, match="Valid options: deadline, capital_cap"):
        _ = PlanningMode.from_user_input("budget")


@pytest.mark.parametrize(
    "chemical,process,group",
    [
        (Chemical.ETHYLENE, "steam_cracker", ChemicalGroup.STEAM_CRACKERS),
        (Chemical.PROPYLENE, "on_purpose_propylene", ChemicalGroup.ON_PURPOSE_PROPYLENE),
        (Chemical.BENZENE, "aromatics_extraction", ChemicalGroup.AROMATICS),
        (Chemical.BUTADIENE, "butadiene_extraction", ChemicalGroup.AROMATICS),
        (Chemical.METHANOL, "coal_methanol", ChemicalGroup.METHANOL),
        (Chemical.AMMONIA, "smr_ammonia", ChemicalGroup.AMMONIA),
        (Chemical.CHLOR_ALKALI, "electrolysis_chlor_alkali", ChemicalGroup.CHLOR_ALKALI),
    ],
)
def test_chemical_group(chemical: Chemical, process: str, group: ChemicalGroup) -> None:
    assert chemical_group(chemical, process) is group


def test_chlor_alkali_is_not_scheduled() -> None:
    assert ChemicalGroup.CHLOR_ALKALI not in SCHEDULED_GROUPS
    assert len(SCHEDULED_GROUPS) == 5


def test_every_chemical_has_a_process() -> None:
    covered = set().union(*PROCESS_CHEMICALS.values())
    assert covered == set(Chemical)


def test_fuel_token() -> None:
    assert fuel_token("coal") == "coal"
    assert fuel_token("naphtha") == "natural_gas"
    assert fuel_token("natural_gas") == "natural_gas"


def test_year_grid() -> None:
    assert YEARS[0] == BASE_YEAR == 2023
    assert YEARS[-1] == HORIZON == 2080
    assert len(YEARS) == 58
