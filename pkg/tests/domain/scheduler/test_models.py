"""Tests for projects, schedules and the shared ledgers."""

from dataclasses import replace

import pytest

from chemdecarb.core.vocabulary import BuildType, ChemicalGroup, Pooling, Region
from chemdecarb.domain.costing.learning import LearningParams
from chemdecarb.domain.costing.quotes import quote
from chemdecarb.domain.scheduler.models import (
    UNFINISHED,
    AbatementProject,
    DecisionRecord,
    DeploymentSchedule,
    LearningState,
    StorageLedger,
)
from tests.builders import make_asset, make_basis, make_option, make_site

NA, EU = Region.NORTH_AMERICA, Region.EUROPE
CRACKERS = ChemicalGroup.STEAM_CRACKERS


def _project(
    facility_id: str = "NA-F0001",
    *,
    tech_id: str = "ccs_postcombustion",
    region: Region = NA,
    start: int = 2025,
    build_type: BuildType = BuildType.RETROFIT,
    outlay: dict[int, float] | None = None,
) -> AbatementProject:
    record = make_option(tech_id=tech_id)
    result = quote(make_asset(), record, BuildType.RETROFIT, start, 0, LearningParams(0.0, 0.0), make_basis())
    return AbatementProject(
        facility_id=facility_id,
        region=region,
        group=CRACKERS,
        tech_id=tech_id,
        build_type=build_type,
        development_start=start,
        online_year=start + 5,
        total_capex=result.total_capex,
        outlay=outlay if outlay is not None else {start: result.total_capex},
        abated_scope1=result.abated_scope1,
        co2_stored=result.co2_stored,
        lcoa_at_decision=result.lcoa,
        learning_index=0,
        asset_ids=("NA-A0001",),
        records=(record,),
        quote=result,
        site_id=result.site_id,
    )


class TestDeploymentSchedule:
    def test_annual_capex_by_build_type(self) -> None:
        schedule = DeploymentSchedule(
            "SU",
            NA,
            CRACKERS,
            projects=(
                _project("NA-F0001", outlay={2025: 1.0, 2026: 2.0}),
                _project("NA-F0002", outlay={2026: 3.0}),
                _project("NA-N0001", build_type=BuildType.NEWBUILD, outlay={2026: 5.0, 2080: 1.0}),
            ),
        )

        everything = schedule.annual_capex()
        retrofits = schedule.annual_capex(BuildType.RETROFIT)

        assert list(everything) == list(range(2024, 2081))
        assert everything[2026] == pytest.approx(10.0)
        assert everything[2080] == pytest.approx(1.0)
        assert retrofits[2025] == pytest.approx(1.0)
        assert retrofits[2026] == pytest.approx(5.0)
        assert sum(schedule.annual_capex(BuildType.NEWBUILD).values()) == pytest.approx(6.0)
        assert len(schedule.retrofits) == 2

    def test_completion_is_last_retrofit_online_year(self) -> None:
        schedule = DeploymentSchedule(
            "SU",
            NA,
            CRACKERS,
            projects=(
                _project("NA-F0001", start=2025),
                _project("NA-F0002", start=2040),
                _project("NA-N0001", start=2050, build_type=BuildType.NEWBUILD),
            ),
        )
        assert schedule.completion_year == 2045
        assert schedule.completion_label == "2045"

    def test_unabated_facilities_leave_it_unfinished(self) -> None:
        schedule = DeploymentSchedule("GA", NA, CRACKERS, projects=(_project(),), unabated=("NA-F0009",))
        assert schedule.completion_year is None
        assert schedule.completion_label == UNFINISHED

    def test_empty_cell(self) -> None:
        schedule = DeploymentSchedule("SU", EU, CRACKERS)
        assert schedule.completion_year is None
        assert schedule.completion_label == "-"


class TestLearningState:
    def test_counts_strictly_before_year(self) -> None:
        state = LearningState()
        state.record(_project("NA-F0001", start=2025))
        state.record(_project("NA-F0002", start=2030))

        assert state.n_prior("ccs_postcombustion", NA, 2030, Pooling.GLOBAL) == 0
        assert state.n_prior("ccs_postcombustion", NA, 2031, Pooling.GLOBAL) == 1
        assert state.n_prior("ccs_postcombustion", NA, 2036, Pooling.GLOBAL) == 2
        assert state.n_prior("blue_h2", NA, 2080, Pooling.GLOBAL) == 0
        assert len(state) == 2

    def test_regional_pooling(self) -> None:
        state = LearningState()
        state.record(_project("NA-F0001", region=NA))
        state.record(_project("EU-F0001", region=EU))

        assert state.n_prior("ccs_postcombustion", NA, 2040, Pooling.GLOBAL) == 2
        assert state.n_prior("ccs_postcombustion", NA, 2040, Pooling.PER_REGION) == 1

    def test_online_count_includes_the_year(self) -> None:
        state = LearningState()
        state.record(_project(start=2025))
        state.record(_project("EU-F0001", region=EU, start=2027))

        assert state.online_count("ccs_postcombustion", 2029) == 0
        assert state.online_count("ccs_postcombustion", 2030) == 1
        assert state.online_count("ccs_postcombustion", 2032) == 2
        assert state.online_count("ccs_postcombustion", 2032, NA) == 1
        assert [entry.facility_id for entry in state.entries] == ["NA-F0001", "EU-F0001"]


class TestStorageLedger:
    def test_from_sites_uses_annual_limit(self) -> None:
        ledger = StorageLedger.from_sites([make_site(injection_capacity=3.0)])
        assert ledger.headroom == {"gulf-saline": pytest.approx(3e6)}

    def test_reserve_and_can_take(self) -> None:
        ledger = StorageLedger({"a": 2e6})

        assert ledger.can_take("a", 2e6)
        ledger.reserve("a", 1.5e6)
        assert not ledger.can_take("a", 1e6)
        assert ledger.can_take("a", 5e5)
        assert not ledger.can_take("missing", 1.0)

    def test_nothing_to_store_always_fits(self) -> None:
        ledger = StorageLedger({"a": 0.0})

        assert ledger.can_take(None, 1e9)
        assert ledger.can_take("a", 0.0)
        ledger.reserve(None, 1e9)
        assert ledger.headroom == {"a": 0.0}


class TestDecisionRecord:
    def test_to_dict_omits_missing_target(self) -> None:
        record = DecisionRecord("GA", NA, CRACKERS, 2027, "capital_cap", committed=({"facility_id": "NA-F0001"},))
        payload = record.to_dict()

        assert payload["region"] == "NorthAmerica"
        assert payload["group"] == "steam_crackers"
        assert payload["committed"] == [{"facility_id": "NA-F0001"}]
        assert "target_year" not in payload

    def test_to_dict_keeps_target(self) -> None:
        record = replace(DecisionRecord("SU", NA, CRACKERS, 2025, "deadline"), target_year=2030)
        assert record.to_dict()["target_year"] == 2030
