"""Tests for grouped and cumulative emissions totals."""

import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chemdecarb.core.errors import EmissionsError
from chemdecarb.domain.emissions.aggregation import aggregate, as_series, cumulative


@pytest.fixture
def results() -> pd.DataFrame:
    rows = [
        ("SU", region, chemical, scope, year, value)
        for region, chemical, base in (
            ("NorthAmerica", "ethylene", 10.0),
            ("NorthAmerica", "ammonia", 4.0),
            ("Europe", "ethylene", 6.0),
        )
        for scope, share in (("scope1_combustion", 1.0), ("scope2", 0.5))
        for year, value in ((2025, base * share), (2026, base * share * 2))
    ]
    return pd.DataFrame(rows, columns=["scenario", "region", "chemical", "scope", "year", "tco2"])


class TestAggregate:
    def test_world_series(self, results: pd.DataFrame) -> None:
        world = aggregate(results)
        assert list(world.columns) == ["year", "tco2"]
        assert as_series(world) == {2025: pytest.approx(30.0), 2026: pytest.approx(60.0)}

    def test_by_region(self, results: pd.DataFrame) -> None:
        by_region = aggregate(results, ["region"])
        europe = by_region[by_region["region"] == "Europe"]
        assert europe["tco2"].tolist() == pytest.approx([9.0, 18.0])

    def test_grand_total_independent_of_grouping(self, results: pd.DataFrame) -> None:
        totals = {
            tuple(keys): aggregate(results, keys)["tco2"].sum()
            for keys in ([], ["region"], ["chemical", "scope"], ["region", "chemical", "scope"])
        }
        assert len(set(round(value, 9) for value in totals.values())) == 1

    def test_unknown_key(self, results: pd.DataFrame) -> None:
        with pytest.raises(EmissionsError) as excinfo:
            _ = aggregate(results, ["owner"])
        assert "owner" in str(excinfo.value)

    def test_missing_column(self, results: pd.DataFrame) -> None:
        with pytest.raises(EmissionsError):
            _ = aggregate(results, ["group"])


    @settings(max_examples=500, deadline=None)
    @given(
        rows=st.lists(
            st.tuples(
                st.sampled_from(["SU", "GA", "GG"]),
                st.sampled_from(["NorthAmerica", "Europe", "China"]),
                st.sampled_from(["ethylene", "ammonia", "methanol"]),
                st.sampled_from(["scope1_combustion", "scope1_process", "scope2", "scope3_upstream"]),
                st.integers(min_value=2023, max_value=2080),
                st.floats(min_value=0.0, max_value=1e9),
            ),
            min_size=1,
            max_size=60,
        ),
        keys=st.lists(st.sampled_from(["region", "chemical", "scope", "scenario"]), unique=True, max_size=4),
    )
    def test_grand_total_survives_any_grouping(self, rows: list[tuple[object, ...]], keys: list[str]) -> None:
        """Summing any grouping back up gives the raw total."""

        frame = pd.DataFrame(rows, columns=["scenario", "region", "chemical", "scope", "year", "tco2"])
        grouped = aggregate(frame, keys)
        assert grouped["tco2"].sum() == pytest.approx(frame["tco2"].sum(), rel=1e-9, abs=1e-6)
        assert len(grouped) == len(frame.drop_duplicates([*keys, "year"]))


class TestCumulative:
    def test_inclusive_range(self) -> None:
        series = {year: 1.0 for year in range(2023, 2081)}
        assert cumulative(series) == 56.0
        assert cumulative(series, 2030, 2030) == 1.0

    def test_accepts_frames(self, results: pd.DataFrame) -> None:
        assert cumulative(results, 2025, 2026) == pytest.approx(90.0)

    def test_inverted_range(self) -> None:
        with pytest.raises(EmissionsError):
            _ = cumulative({2025: 1.0}, 2030, 2025)

    def test_range_outside_series(self) -> None:
        with pytest.raises(EmissionsError):
            _ = cumulative({2025: 1.0, 2026: 1.0}, 2025, 2080)

    def test_empty_series(self) -> None:
        assert cumulative({}) == 0.0
