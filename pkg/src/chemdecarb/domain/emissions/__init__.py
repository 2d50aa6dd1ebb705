"""Scope-disaggregated emissions, intensity trajectories and the frozen reference."""

from chemdecarb.domain.emissions.aggregation import aggregate, as_series, cumulative
from chemdecarb.domain.emissions.inventory import (
    EMISSIONS_COLUMNS,
    REFERENCE_SCENARIO,
    SCOPES,
    EmissionsBreakdown,
    asset_emissions,
    compute_emissions,
    frozen_reference,
    stored_series,
)
from chemdecarb.domain.emissions.trajectories import (
    IntensityInputs,
    IntensityTrajectory,
    load_trajectories,
    multiplier,
    trajectory_for,
)

__all__ = [
    "EMISSIONS_COLUMNS",
    "EmissionsBreakdown",
    "IntensityInputs",
    "IntensityTrajectory",
    "REFERENCE_SCENARIO",
    "SCOPES",
    "aggregate",
    "as_series",
    "asset_emissions",
    "compute_emissions",
    "cumulative",
    "frozen_reference",
    "load_trajectories",
    "multiplier",
    "stored_series",
    "trajectory_for",
]
