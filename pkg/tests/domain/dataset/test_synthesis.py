"""Tests for seeded asset synthesis."""

import copy
from pathlib import Path
from typing import Any

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from shapely.geometry import Point, Polygon

from chemdecarb.config.paths import fixture_path
from chemdecarb.core.errors import SynthesisSpecError
from chemdecarb.core.vocabulary import Chemical, Region
from chemdecarb.domain.dataset.loader import group_facilities, validate_assets
from chemdecarb.domain.dataset.synthesis import (
    LogNormal,
    dump_synthesis_spec,
    load_synthesis_spec,
    sample_capacities,
    spec_from_dict,
    spec_to_dict,
    synthesize_assets,
)

GULF_BOX = [[27.0, -98.0], [27.0, -89.0], [31.0, -89.0], [31.0, -98.0]]
_INTENSITIES = {
    "feedstock": {"mean": 55.0, "spread": 3.0},
    "electricity": {"mean": 0.1, "spread": 0.02},
    "steam": {"mean": 0.0, "spread": 0.0},
    "fuel": {"mean": 20.0, "spread": 2.0},
    "process_co2": {"mean": 0.0, "spread": 0.0},
}


def _stratum(**overrides: Any) -> dict[str, Any]:
    stratum: dict[str, Any] = {
        "region": "NorthAmerica",
        "chemical": "ethylene",
        "process": "steam_cracker",
        "count": 10,
        "capacity": {"median": 1.0e6, "sigma": 0.4},
        "utilization": {"mean": 0.88, "spread": 0.05},
        "feedstock_type": "ethane",
        "intensities": copy.deepcopy(_INTENSITIES),
    }
    stratum.update(overrides)
    return stratum


def _payload(*strata: dict[str, Any], seed: int | None = 42) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "regions": {
            "NorthAmerica": {"polygon": GULF_BOX, "startup_years": [1970, 2015], "owners": ["Acme", "Gulf Olefins"]}
        },
        "strata": list(strata) or [_stratum()],
    }
    if seed is not None:
        payload["seed"] = seed
    return payload


class TestSynthesize:
    def test_deterministic_for_seed(self) -> None:
        spec = spec_from_dict(_payload())
        assert synthesize_assets(spec) == synthesize_assets(spec)

    @settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(seed=st.integers(min_value=0, max_value=2**64 - 1))
    def test_any_seed_reproduces(self, seed: int) -> None:
        """Two syntheses with one seed give identical tables."""

        large = _stratum(count=3, capacity={"median": 2.0e6, "sigma": 0.2})
        spec = spec_from_dict(_payload(_stratum(count=4), large))
        assert synthesize_assets(spec, seed=seed) == synthesize_assets(spec, seed=seed)

    def test_seed_override_changes_output(self) -> None:
        spec = spec_from_dict(_payload())
        assert synthesize_assets(spec, seed=1) != synthesize_assets(spec, seed=2)
        assert synthesize_assets(spec, seed=42) == synthesize_assets(spec)

    def test_identifiers_and_bounds(self) -> None:
        table = synthesize_assets(spec_from_dict(_payload()))
        assert [record.asset_id for record in table] == [f"NA-A{i:04d}" for i in range(1, 11)]
        assert [record.facility_id for record in table] == [f"NA-F{i:04d}" for i in range(1, 11)]
        box = Polygon([(lon, lat) for lat, lon in GULF_BOX])
        for record in table:
            assert box.contains(Point(record.longitude, record.latitude))
            assert 1970 <= record.startup_year <= 2015
            assert record.capacity % 1000 == 0 and record.capacity >= 1000
            assert 0.83 <= record.utilization <= 0.93
            assert record.owner in {"Acme", "Gulf Olefins"}
            assert round(record.latitude, 4) == record.latitude
        assert validate_assets(table).is_clean

    def test_hosted_stratum_shares_sites(self) -> None:
        hosted = _stratum(
            chemical="butadiene",
            process="butadiene_extraction",
            host_process="steam_cracker",
            count=4,
            capacity={"median": 1.0e5, "sigma": 0.2},
        )
        table = synthesize_assets(spec_from_dict(_payload(_stratum(), hosted)))
        facilities = group_facilities(table)
        assert len(table) == 14
        assert len(facilities) == 10
        shared = [facility for facility in facilities if len(facility.asset_ids) == 2]
        assert len(shared) == 4
        assert all(Chemical.BUTADIENE in facility.capacity_by_chemical for facility in shared)

    def test_too_few_hosts(self) -> None:
        hosted = _stratum(chemical="butadiene", process="butadiene_extraction", host_process="steam_cracker", count=11)
        with pytest.raises(SynthesisSpecError, match="hosts"):
            _ = synthesize_assets(spec_from_dict(_payload(_stratum(), hosted)))

    def test_zero_count_stratum_skipped(self) -> None:
        table = synthesize_assets(spec_from_dict(_payload(_stratum(), _stratum(chemical="ethylene", count=0))))
        assert len(table) == 10

    def test_regional_counts_from_fixture_spec(self) -> None:
        table = synthesize_assets(load_synthesis_spec(fixture_path("me_china_synthesis.json")))
        by_region = {region: sum(1 for r in table if r.region is region) for region in Region}
        assert by_region[Region.MIDDLE_EAST] == 55
        assert by_region[Region.CHINA] == 650
        assert len(group_facilities(table)) == 455
        assert validate_assets(table).is_clean


class TestSpec:
    def test_round_trip(self, tmp_path: Path) -> None:
        hosted = _stratum(chemical="butadiene", process="butadiene_extraction", host_process="steam_cracker", count=2)
        spec = spec_from_dict(_payload(_stratum(), hosted))
        path = dump_synthesis_spec(spec, tmp_path / "spec.json")
        assert load_synthesis_spec(path) == spec
        assert spec_to_dict(load_synthesis_spec(path)) == spec_to_dict(spec)

    def test_default_seed_only_when_absent(self) -> None:
        assert spec_from_dict(_payload(seed=None), default_seed=9).seed == 9
        assert spec_from_dict(_payload(seed=5), default_seed=9).seed == 5

    def test_missing_seed_without_default(self) -> None:
        with pytest.raises(SynthesisSpecError, match="seed"):
            _ = spec_from_dict(_payload(seed=None))

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed: int) -> None:
        with pytest.raises(SynthesisSpecError):
            _ = spec_from_dict(_payload(seed=seed))

    @pytest.mark.parametrize(
        "overrides",
        [
            {"process": "smr_ammonia"},
            {"feedstock_type": "unobtainium"},
            {"host_process": "fischer_tropsch"},
            {"capacity": {"median": 0.0, "sigma": 0.1}},
            {"utilization": {"mean": 1.5, "spread": 0.0}},
            {"startup_years": [2020, 2030]},
            {"region": "Europe"},
            {"polygon": [[0.0, 0.0], [1.0, 1.0]]},
        ],
    )
    def test_invalid_stratum(self, overrides: dict[str, Any]) -> None:
        with pytest.raises(SynthesisSpecError):
            _ = spec_from_dict(_payload(_stratum(**overrides)))

    def test_missing_intensity(self) -> None:
        stratum = _stratum()
        del stratum["intensities"]["steam"]
        with pytest.raises(SynthesisSpecError, match="steam"):
            _ = spec_from_dict(_payload(stratum))

    def test_empty_spec(self) -> None:
        with pytest.raises(SynthesisSpecError, match="empty"):
            _ = spec_from_dict(_payload(_stratum(count=0)))

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(SynthesisSpecError, match="not found"):
            _ = load_synthesis_spec(tmp_path / "absent.json")


def test_sample_capacities_rounding() -> None:
    values = sample_capacities(np.random.default_rng(0), LogNormal(median=2_000.0, sigma=1.5), 500)
    assert np.all(values >= 1_000.0)
    assert np.all(values % 1_000.0 == 0)


def test_sample_capacities_median() -> None:
    """Ten thousand draws land within five percent of the configured median."""

    values = sample_capacities(np.random.default_rng(7), LogNormal(median=1.0e6, sigma=0.5), 10_000)
    assert float(np.median(values)) == pytest.approx(1.0e6, rel=0.05)
