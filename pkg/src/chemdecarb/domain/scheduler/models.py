"""Projects, schedules, learning ledger and per-asset abatement states."""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any, final

from chemdecarb.core.vocabulary import CAPEX_YEARS, BuildType, ChemicalGroup, Pooling, Region
from chemdecarb.domain.catalog.options import AbatementOption, PerformanceBundle
from chemdecarb.domain.costing.quotes import CostQuote

UNFINISHED = ">2080"


@dataclass(slots=True, frozen=True)
class AbatementProject:
    """A committed, costed retrofit or new-build abatement project.

    ``outlay`` maps calendar year to USD spent during development;
    ``learning_index`` is the number of prior same-technology projects
    the quote learned from.
    """

    facility_id: str
    region: Region
    group: ChemicalGroup
    tech_id: str
    build_type: BuildType
    development_start: int
    online_year: int
    total_capex: float
    outlay: Mapping[int, float] = field(hash=False)
    abated_scope1: float
    co2_stored: float
    lcoa_at_decision: float
    learning_index: int
    asset_ids: tuple[str, ...]
    records: tuple[AbatementOption, ...] = field(hash=False, repr=False)
    quote: CostQuote = field(hash=False, repr=False)
    site_id: str | None = None
    runner_up: str | None = None
    runner_up_lcoa: float | None = None

    @property
    def development_time(self) -> int:
        return self.online_year - self.development_start


@dataclass(slots=True, frozen=True)
class DeploymentSchedule:
    """Projects of one (scenario, region, chemical group) cell in commit order.

    ``unabated`` lists existing facilities still unabated at the horizon;
    ``blocked`` the subset no option could ever fit under the cap and
    ``unabated_newbuilds`` the new builds left without a feasible option.
    """

    scenario: str
    region: Region
    group: ChemicalGroup
    projects: tuple[AbatementProject, ...] = ()
    unabated: tuple[str, ...] = ()
    blocked: tuple[str, ...] = ()
    unabated_newbuilds: tuple[str, ...] = ()
    retrofit_count: int = 0

    def annual_capex(self, build_type: BuildType | None = None) -> dict[int, float]:
        """USD per year for 2024-2080, summed from project outlays."""

        series = dict.fromkeys(CAPEX_YEARS, 0.0)
        for project in self.projects:
            if build_type is not None and project.build_type is not build_type:
                continue
            for year, amount in project.outlay.items():
                series[year] += amount
        return series

    @property
    def retrofits(self) -> tuple[AbatementProject, ...]:
        return tuple(project for project in self.projects if project.build_type is BuildType.RETROFIT)

    @property
    def completion_year(self) -> int | None:
        """Last retrofit online year, or None when existing facilities remain unabated."""

        if self.unabated:
            return None
        retrofits = self.retrofits
        return max(project.online_year for project in retrofits) if retrofits else None

    @property
    def completion_label(self) -> str:
        if self.unabated:
            return UNFINISHED
        year = self.completion_year
        return "-" if year is None else str(year)


@dataclass(slots=True, frozen=True)
class LedgerEntry:
    tech_id: str
    region: Region
    online_year: int
    facility_id: str


@final
class LearningState:
    """Commissioning ledger shared by every cell of one scenario run.

    Counts answer "how many same-technology projects were online strictly
    before year y", globally or within a region.
    """

    def __init__(self) -> None:
        self._entries: list[LedgerEntry] = []
        self._global: dict[str, list[int]] = defaultdict(list)
        self._regional: dict[tuple[str, Region], list[int]] = defaultdict(list)

    @property
    def entries(self) -> tuple[LedgerEntry, ...]:
        return tuple(self._entries)

    def record(self, project: AbatementProject) -> None:
        entry = LedgerEntry(project.tech_id, project.region, project.online_year, project.facility_id)
        self._entries.append(entry)
        insort(self._global[entry.tech_id], entry.online_year)
        insort(self._regional[(entry.tech_id, entry.region)], entry.online_year)

    def n_prior(self, tech_id: str, region: Region, before_year: int, pooling: Pooling) -> int:
        years = self._global[tech_id] if pooling is Pooling.GLOBAL else self._regional[(tech_id, region)]
        return bisect_left(years, before_year)

    def online_count(self, tech_id: str, year: int, region: Region | None = None) -> int:
        """Projects of ``tech_id`` operating in ``year`` (online on or before it)."""

        years = self._global[tech_id] if region is None else self._regional[(tech_id, region)]
        return bisect_left(years, year + 1)

    def __len__(self) -> int:
        return len(self._entries)


@final
class StorageLedger:
    """Remaining annual injection capacity per storage site, in tCO2/y."""

    def __init__(self, limits: Mapping[str, float]) -> None:
        self._headroom: dict[str, float] = dict(limits)

    @classmethod
    def from_sites(cls, sites: Iterable[Any]) -> StorageLedger:
        return cls({site.site_id: site.annual_limit for site in sites})

    @property
    def headroom(self) -> Mapping[str, float]:
        return self._headroom

    def can_take(self, site_id: str | None, amount: float) -> bool:
        if site_id is None or amount <= 0:
            return True
        return self._headroom.get(site_id, 0.0) >= amount

    def reserve(self, site_id: str | None, amount: float) -> None:
        if site_id is None or amount <= 0:
            return
        self._headroom[site_id] = self._headroom.get(site_id, 0.0) - amount


@dataclass(slots=True, frozen=True)
class AbatementState:
    """How one asset is abated: the chosen record's per-tonne effect from ``online_year``."""

    asset_id: str
    facility_id: str
    tech_id: str
    online_year: int
    performance: PerformanceBundle
    site_id: str | None = None

    def active(self, year: int) -> bool:
        return year >= self.online_year


@dataclass(slots=True, frozen=True)
class DecisionRecord:
    """One planning decision: committed projects in order and the best deferred candidates."""

    scenario: str
    region: Region
    group: ChemicalGroup
    decision_year: int
    mode: str
    committed: tuple[Mapping[str, Any], ...] = field(default=(), hash=False)
    deferred: tuple[Mapping[str, Any], ...] = field(default=(), hash=False)
    deferred_count: int = 0
    target_year: int | None = None

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "scenario": self.scenario,
            "region": self.region.value,
            "group": self.group.value,
            "decision_year": self.decision_year,
            "mode": self.mode,
            "committed": [dict(item) for item in self.committed],
            "deferred": [dict(item) for item in self.deferred],
            "deferred_count": self.deferred_count,
        }
        if self.target_year is not None:
            payload["target_year"] = self.target_year
        return payload


__all__ = [
    "AbatementProject",
    "AbatementState",
    "DecisionRecord",
    "DeploymentSchedule",
    "LearningState",
    "LedgerEntry",
    "StorageLedger",
    "UNFINISHED",
]
