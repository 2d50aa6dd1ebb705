"""Asset database: records, CSV loading, validation, grouping and synthesis."""

from chemdecarb.domain.dataset.loader import (
    group_facilities,
    load_asset_table,
    validate_assets,
    write_asset_table,
)
from chemdecarb.domain.dataset.records import (
    ASSET_COLUMNS,
    AssetRecord,
    AssetTable,
    Facility,
    ValidationReport,
    Violation,
)
from chemdecarb.domain.dataset.synthesis import (
    LogNormal,
    RegionFrame,
    Spread,
    Stratum,
    SynthesisSpec,
    dump_synthesis_spec,
    load_synthesis_spec,
    synthesize_assets,
)

__all__ = [
    "ASSET_COLUMNS",
    "AssetRecord",
    "AssetTable",
    "Facility",
    "LogNormal",
    "RegionFrame",
    "Spread",
    "Stratum",
    "SynthesisSpec",
    "ValidationReport",
    "Violation",
    "dump_synthesis_spec",
    "group_facilities",
    "load_asset_table",
    "load_synthesis_spec",
    "synthesize_assets",
    "validate_assets",
    "write_asset_table",
]
