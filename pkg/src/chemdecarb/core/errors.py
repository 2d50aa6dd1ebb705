"""Exception hierarchy shared across the package.

``InputError`` marks failures caused by user-supplied data or configuration;
the CLI maps it to exit code 2. Every other ``ChemdecarbError`` is treated as
an internal failure.
"""

from __future__ import annotations


class ChemdecarbError(Exception):
    """Base exception for chemdecarb failures."""


class InputError(ChemdecarbError):
    """Raised when inputs or configuration fail validation."""


class AssetSchemaError(InputError):
    """Raised when an asset table header is missing or has unknown columns."""

    def __init__(self, column: str, message: str | None = None) -> None:
        self.column: str = column
        super().__init__(message or f"Asset table schema error: column '{column}'")


class AssetRowError(InputError):
    """Raised when a cell of an asset table cannot be parsed."""

    def __init__(self, row: int, field: str, value: str, reason: str) -> None:
        self.row: int = row
        self.field: str = field
        self.value: str = value
        super().__init__(f"Row {row}, field '{field}': cannot parse {value!r} ({reason})")


class DuplicateAssetError(InputError):
    """Raised when an asset identifier occurs more than once."""

    def __init__(self, asset_id: str, row: int) -> None:
        self.asset_id: str = asset_id
        self.row: int = row
        super().__init__(f"Duplicate asset_id '{asset_id}' at row {row}")


class FacilityConflictError(InputError):
    """Raised when members of one facility disagree on region or location."""

    def __init__(self, facility_id: str, detail: str) -> None:
        self.facility_id: str = facility_id
        super().__init__(f"Facility '{facility_id}' has conflicting members: {detail}")


class SynthesisSpecError(InputError):
    """Raised for malformed or unsatisfiable synthesis specifications."""


class ProjectionError(InputError):
    """Raised when production series cannot be combined or configured."""


class CatalogError(InputError):
    """Raised when an abatement catalog or storage-site file is invalid."""


class InapplicableOptionError(ChemdecarbError):
    """Raised when an option is evaluated against an asset it cannot serve."""

    def __init__(self, tech_id: str, asset_id: str) -> None:
        self.tech_id: str = tech_id
        self.asset_id: str = asset_id
        super().__init__(f"Option '{tech_id}' is not applicable to asset '{asset_id}'")


class FinanceConfigError(InputError):
    """Raised for invalid finance, price or learning parameters."""


class MissingPriceError(InputError):
    """Raised when a region has no energy prices configured."""

    def __init__(self, region: str) -> None:
        self.region: str = region
        super().__init__(f"No energy prices configured for region '{region}'")


class ZeroAbatementError(ChemdecarbError):
    """Raised when a quote would divide by zero abated tonnes."""

    def __init__(self, tech_id: str, subject: str) -> None:
        self.tech_id: str = tech_id
        self.subject: str = subject
        super().__init__(f"Option '{tech_id}' abates no scope-1 CO2 at '{subject}'")


class StorageExhaustedError(ChemdecarbError):
    """Raised when no storage site has injection headroom for a volume."""

    def __init__(self, annual_co2: float, region: str | None = None) -> None:
        self.annual_co2: float = annual_co2
        self.region: str | None = region
        where = f" in {region}" if region else ""
        super().__init__(f"No storage site{where} can accept {annual_co2:,.0f} tCO2/y")


class NoApplicableOptionError(ChemdecarbError):
    """Raised when a project has no feasible abatement option."""

    def __init__(self, subject: str, year: int) -> None:
        self.subject: str = subject
        self.year: int = year
        super().__init__(f"No applicable abatement option for '{subject}' in {year}")


class DeadlineInfeasibleError(InputError):
    """Raised when a completion deadline cannot be met given development times."""

    def __init__(self, deadline: int, earliest_feasible: int, cell: str = "") -> None:
        self.deadline: int = deadline
        self.earliest_feasible: int = earliest_feasible
        where = f" for {cell}" if cell else ""
        super().__init__(
            f"Deadline {deadline}{where} is infeasible; earliest feasible year is {earliest_feasible}"
        )


class EmissionsError(InputError):
    """Raised for invalid emissions queries or trajectory inputs."""


class ScenarioError(InputError):
    """Raised when scenario parameters violate their invariants."""


class UnknownScenarioKeyError(ScenarioError):
    """Raised when a scenario file carries a key that is not recognised."""

    def __init__(self, key: str) -> None:
        self.key: str = key
        super().__init__(f"Unknown scenario key '{key}'")


class ReportInputError(InputError):
    """Raised when a run directory lacks the outputs a report needs."""


__all__ = [
    "AssetRowError",
    "AssetSchemaError",
    "CatalogError",
    "ChemdecarbError",
    "DeadlineInfeasibleError",
    "DuplicateAssetError",
    "EmissionsError",
    "FacilityConflictError",
    "FinanceConfigError",
    "InapplicableOptionError",
    "InputError",
    "MissingPriceError",
    "NoApplicableOptionError",
    "ProjectionError",
    "ReportInputError",
    "ScenarioError",
    "StorageExhaustedError",
    "SynthesisSpecError",
    "UnknownScenarioKeyError",
    "ZeroAbatementError",
]
