"""Tests for CO2 transport-and-storage pricing."""

import pytest

from chemdecarb.core.errors import StorageExhaustedError
from chemdecarb.domain.costing.finance import FinanceParams
from chemdecarb.domain.costing.transport import cheapest_site, distance_km, ts_unit_cost, volume_factor
from tests.builders import make_asset, make_site


@pytest.mark.parametrize(
    "volume,expected",
    [
        (1e6, 1.0),
        (16e6, 0.5),
        (1e9, 0.5),
        (1e6 / 16, 2.0),
        (1.0, 2.0),
    ],
)
def test_volume_factor(volume: float, expected: float) -> None:
    assert volume_factor(volume, 1e6) == pytest.approx(expected)


def test_distance_km_one_degree_of_latitude() -> None:
    assert distance_km(0.0, 0.0, 1.0, 0.0) == pytest.approx(111.2, abs=0.2)


def test_co_located_site_pays_storage_only() -> None:
    quote = ts_unit_cost(make_asset(), [make_site()], 1e6, FinanceParams())
    assert quote.distance_km == pytest.approx(0.0)
    assert quote.unit_cost == pytest.approx(10.0)
    assert quote.site.site_id == "gulf-saline"


def test_pipeline_tariff_scales_with_distance_and_volume() -> None:
    asset = make_asset(latitude=30.5, longitude=-95.0)
    site = make_site()
    finance = FinanceParams()
    km = distance_km(30.5, -95.0, site.latitude, site.longitude)

    at_reference = ts_unit_cost(asset, [site], 1e6, finance)
    large = ts_unit_cost(asset, [site], 16e6, finance)

    assert at_reference.unit_cost == pytest.approx(10.0 + 0.02 * km)
    assert large.unit_cost == pytest.approx(10.0 + 0.02 * km * 0.5)


def test_picks_cheapest_reachable_site() -> None:
    near_expensive = make_site(site_id="near", unit_storage_cost=30.0)
    far_cheap = make_site(site_id="far", latitude=31.0, unit_storage_cost=5.0)
    quote = ts_unit_cost(make_asset(), [near_expensive, far_cheap], 1e6, FinanceParams())
    assert quote.site.site_id == "far"


def test_headroom_excludes_full_sites() -> None:
    cheap = make_site(site_id="cheap", unit_storage_cost=5.0)
    dear = make_site(site_id="dear", unit_storage_cost=20.0)
    quote = ts_unit_cost(make_asset(), [cheap, dear], 2e6, FinanceParams(), headroom={"cheap": 1e6})
    assert quote.site.site_id == "dear"


def test_exhausted_when_no_site_has_room() -> None:
    site = make_site(injection_capacity=1.0)
    with pytest.raises(StorageExhaustedError) as excinfo:
        _ = ts_unit_cost(make_asset(), [site], 2e6, FinanceParams())
    assert excinfo.value.region == "NorthAmerica"


def test_exhausted_without_sites() -> None:
    with pytest.raises(StorageExhaustedError):
        _ = ts_unit_cost(make_asset(), [], 1e6, FinanceParams())


def test_non_positive_volume() -> None:
    with pytest.raises(ValueError):
        _ = ts_unit_cost(make_asset(), [make_site()], 0.0, FinanceParams())


def test_cheapest_site_ties_by_id() -> None:
    first = make_site(site_id="b-site")
    second = make_site(site_id="a-site")
    assert cheapest_site([first, second]).site_id == "a-site"
    assert cheapest_site([first, second], headroom={"a-site": 0.0}).site_id == "b-site"
