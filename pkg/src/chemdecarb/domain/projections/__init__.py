"""Production trajectories, new-build sizing and per-asset production plans."""

from chemdecarb.domain.projections.allocation import NewBuild, ProductionPlan, build_production_plan
from chemdecarb.domain.projections.growth import (
    GrowthSchedule,
    GrowthTable,
    ProductionSeries,
    load_growth,
    newbuild_requirements,
    production_series,
    world_production,
)

__all__ = [
    "GrowthSchedule",
    "GrowthTable",
    "NewBuild",
    "ProductionPlan",
    "ProductionSeries",
    "build_production_plan",
    "load_growth",
    "newbuild_requirements",
    "production_series",
    "world_production",
]
