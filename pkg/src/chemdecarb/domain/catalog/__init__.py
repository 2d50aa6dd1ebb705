"""Abatement technology catalog and CO2 storage sites."""

from chemdecarb.domain.catalog.options import (
    TECH_IDS,
    AbatementOption,
    Catalog,
    PerformanceBundle,
    Stream,
    applicable_options,
    combustion_streams,
    load_catalog,
    option_performance,
)
from chemdecarb.domain.catalog.storage import StorageSite, load_storage_sites

__all__ = [
    "AbatementOption",
    "Catalog",
    "PerformanceBundle",
    "StorageSite",
    "Stream",
    "TECH_IDS",
    "applicable_options",
    "combustion_streams",
    "load_catalog",
    "load_storage_sites",
    "option_performance",
]
