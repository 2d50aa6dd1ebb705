"""Tests for allocating production to existing assets and new builds."""

import numpy as np
import pytest

from chemdecarb.core.vocabulary import BASE_YEAR, Chemical, Region
from chemdecarb.domain.dataset.records import AssetTable
from chemdecarb.domain.projections.allocation import NEWBUILD_OWNER, ProductionPlan, build_production_plan
from chemdecarb.domain.projections.growth import growth_from_dict
from tests.builders import make_asset, make_site

NA, ETH = Region.NORTH_AMERICA, Chemical.ETHYLENE


def _plan(rate: float, *assets_overrides: dict[str, object]) -> ProductionPlan:
    assets = [
        make_asset(asset_id=f"NA-A{i:04d}", facility_id=f"NA-F{i:04d}", **overrides)
        for i, overrides in enumerate(assets_overrides or ({},), start=1)
    ]
    growth = growth_from_dict(
        {
            "planning_utilization": 0.92,
            "world_scale": {"ethylene": 1.5e6},
            "regions": {"NA": {"ethylene": {"rate_to_2050": rate}}},
        }
    )
    sites = {NA: (make_site(site_id="cheap", latitude=28.0, unit_storage_cost=5.0), make_site())}
    return build_production_plan(AssetTable(assets), growth, sites)


def test_output_sums_to_series_each_year() -> None:
    plan = _plan(0.014, {}, {"capacity": 800_000.0, "utilization": 0.8})
    total = plan.production_matrix(plan.assets).sum(axis=0)
    np.testing.assert_allclose(total, plan.series[(NA, ETH)].as_array(), rtol=1e-9)


def test_growth_triggers_newbuilds() -> None:
    plan = _plan(0.014)
    assert plan.newbuilds
    first = plan.newbuilds[0]
    assert first.asset.asset_id == "NB-NA-ethylene-001"
    assert first.asset.facility_id == first.asset.asset_id
    assert first.asset.owner == NEWBUILD_OWNER
    assert first.asset.capacity == 1.5e6
    assert first.asset.utilization == 0.92
    assert first.asset.startup_year == first.demand_year
    assert (first.asset.latitude, first.asset.longitude) == (28.0, -95.0)
    assert first.asset.fuel_intensity == pytest.approx(20.0)
    assert first.asset.process == "steam_cracker"


def test_newbuild_idle_before_demand_year() -> None:
    plan = _plan(0.014)
    first = plan.newbuilds[0]
    output = plan.output[first.asset.asset_id]
    assert np.all(output[: first.demand_year - BASE_YEAR] == 0.0)
    assert output[first.demand_year - BASE_YEAR] > 0.0


def test_existing_ramps_before_newbuilds() -> None:
    plan = _plan(0.014)
    existing = plan.output["NA-A0001"]
    first_year = plan.newbuilds[0].demand_year
    assert existing[0] == pytest.approx(1.5e6 * 0.88)
    assert existing[first_year - BASE_YEAR] == pytest.approx(1.5e6 * 0.92)


def test_decline_scales_existing_down() -> None:
    plan = _plan(-0.01, {}, {"capacity": 500_000.0})
    assert not plan.newbuilds
    first = plan.output["NA-A0001"]
    second = plan.output["NA-A0002"]
    np.testing.assert_allclose(first / second, np.full_like(first, 3.0))
    assert plan.production("NA-A0001", 2030) == pytest.approx(1.32e6 * 0.99**7)


def test_flat_demand_keeps_base_output() -> None:
    plan = _plan(0.0)
    assert not plan.newbuilds
    assert plan.production("NA-A0001", 2080) == pytest.approx(1.32e6)


def test_assets_lists_existing_then_newbuilds() -> None:
    plan = _plan(0.014)
    ids = [asset.asset_id for asset in plan]
    assert ids[0] == "NA-A0001"
    assert all(asset_id.startswith("NB-") for asset_id in ids[1:])
    assert len(ids) == 1 + len(plan.newbuilds)


def test_production_matrix_shape() -> None:
    plan = _plan(0.0)
    assert plan.production_matrix([]).shape == (0, 58)
    assert plan.production_matrix(plan.assets).shape == (1, 58)


def test_newbuild_shares_group() -> None:
    plan = _plan(0.014)
    assert plan.newbuilds[0].asset.group is plan.existing[0].group
