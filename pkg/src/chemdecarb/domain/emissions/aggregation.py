"""Grouped sums and cumulative totals over emissions tables."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import Final

import pandas as pd

from chemdecarb.core.errors import EmissionsError

GROUP_KEYS: Final[frozenset[str]] = frozenset({"region", "chemical", "scope", "scenario", "group"})


def aggregate(results: pd.DataFrame, keys: Sequence[str] = ()) -> pd.DataFrame:
    """Sum ``tco2`` by ``keys`` and year.

    With no keys the result is one world series. Grand totals do not depend
    on the grouping chosen.

    Raises:
        EmissionsError: For a key outside region, chemical, scope, scenario and group.
    """

    unknown = [key for key in keys if key not in GROUP_KEYS]
    if unknown:
        raise EmissionsError(f"Cannot aggregate by '{unknown[0]}'; use any of {', '.join(sorted(GROUP_KEYS))}")
    missing = [key for key in keys if key not in results.columns]
    if missing:
        raise EmissionsError(f"Emissions table has no '{missing[0]}' column")
    columns = [*keys, "year"]
    return results.groupby(columns, as_index=False, sort=True)["tco2"].sum()


def as_series(frame: pd.DataFrame) -> dict[int, float]:
    """Year to tonnes for a single-series table."""

    totals = frame.groupby("year")["tco2"].sum()
    return {int(year): float(value) for year, value in totals.items()}


def cumulative(series: Mapping[int, float] | pd.DataFrame, start: int = 2025, end: int = 2080) -> float:
    """Inclusive sum of annual tonnes from ``start`` to ``end``.

    Raises:
        EmissionsError: When the range is inverted or leaves the series.
    """

    if start > end:
        raise EmissionsError(f"Cumulative range is inverted: {start} > {end}")
    values = as_series(series) if isinstance(series, pd.DataFrame) else series
    if not values:
        return 0.0
    if start < min(values) or end > max(values):
        raise EmissionsError(f"Range {start}-{end} is outside the series {min(values)}-{max(values)}")
    return float(sum(values.get(year, 0.0) for year in range(start, end + 1)))


__all__ = ["GROUP_KEYS", "aggregate", "as_series", "cumulative"]
