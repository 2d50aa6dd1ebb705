"""Facility slices, option quoting and least-LCOA selection."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from enum import StrEnum
from typing import Final

from chemdecarb.core.errors import NoApplicableOptionError, StorageExhaustedError, ZeroAbatementError
from chemdecarb.core.vocabulary import EARLIEST_START, HORIZON, BuildType, ChemicalGroup, Region
from chemdecarb.domain.catalog.options import AbatementOption, Catalog
from chemdecarb.domain.costing.quotes import CostQuote, QuoteBasis, quote_slice
from chemdecarb.domain.dataset.records import AssetRecord
from chemdecarb.domain.scenario.params import ScenarioParams
from chemdecarb.domain.scheduler.models import DecisionRecord, LearningState, StorageLedger
from chemdecarb.infra.logger.logger import PathwayEvent, logger

DECISION_LOG_LIMIT: Final[int] = 50


class Timing(StrEnum):
    """Whether a quoting year is the development start or the online year."""

    START = "start"
    ONLINE = "online"


@dataclass(slots=True, frozen=True)
class ProjectCandidate:
    """The assets of one chemical group at one facility, abated as one project.

    New builds are single-asset candidates keyed by their asset id.
    """

    facility_id: str
    region: Region
    group: ChemicalGroup
    build_type: BuildType
    assets: tuple[AssetRecord, ...]
    demand_year: int = EARLIEST_START

    @property
    def latitude(self) -> float:
        return self.assets[0].latitude

    @property
    def longitude(self) -> float:
        return self.assets[0].longitude

    @property
    def asset_ids(self) -> tuple[str, ...]:
        return tuple(asset.asset_id for asset in self.assets)


def facility_slices(assets: Iterable[AssetRecord]) -> list[ProjectCandidate]:
    """Group existing assets into (facility, chemical group) retrofit candidates."""

    slices: dict[tuple[str, ChemicalGroup], list[AssetRecord]] = defaultdict(list)
    for asset in assets:
        slices[(asset.facility_id, asset.group)].append(asset)
    return [
        ProjectCandidate(
            facility_id=facility_id,
            region=members[0].region,
            group=group,
            build_type=BuildType.RETROFIT,
            assets=tuple(members),
        )
        for (facility_id, group), members in sorted(slices.items(), key=lambda item: (item[0][0], item[0][1].value))
    ]


@dataclass(slots=True)
class PlanningContext:
    """State shared by every cell of one scenario run.

    ``basis`` sees the storage ledger's live headroom.
    """

    scenario: ScenarioParams
    catalog: Catalog
    basis: QuoteBasis
    learning: LearningState = field(default_factory=LearningState)
    storage: StorageLedger | None = None
    decision_log_limit: int = DECISION_LOG_LIMIT
    decisions: list[DecisionRecord] = field(default_factory=list)
    _records: dict[tuple[str, BuildType], dict[str, tuple[AbatementOption, ...]]] = field(default_factory=dict)

    @classmethod
    def create(
        cls,
        scenario: ScenarioParams,
        catalog: Catalog,
        basis: QuoteBasis,
        *,
        decision_log_limit: int = DECISION_LOG_LIMIT,
    ) -> PlanningContext:
        sites = [site for region_sites in basis.sites.values() for site in region_sites]
        storage = StorageLedger.from_sites(sites)
        return cls(
            scenario=scenario,
            catalog=catalog,
            basis=replace(basis, headroom=storage.headroom),
            storage=storage,
            decision_log_limit=decision_log_limit,
        )

    def records_for(self, candidate: ProjectCandidate) -> dict[str, tuple[AbatementOption, ...]]:
        """Records by tech_id that serve every asset of ``candidate``, ignoring timing."""

        key = (candidate.facility_id, candidate.build_type)
        cached = self._records.get(key)
        if cached is not None:
            return cached
        per_asset: list[dict[str, AbatementOption]] = [
            {
                option.tech_id: option
                for option in self.catalog.applicable_options(asset, candidate.build_type, HORIZON, None)
            }
            for asset in candidate.assets
        ]
        shared = set(per_asset[0]).intersection(*per_asset[1:]) if per_asset else set()
        records = {tech: tuple(choice[tech] for choice in per_asset) for tech in sorted(shared)}
        self._records[key] = records
        return records

    def development_times(self, candidates: Iterable[ProjectCandidate]) -> list[int]:
        return [
            max(record.development_time for record in records)
            for candidate in candidates
            for records in self.records_for(candidate).values()
        ]


@dataclass(slots=True, frozen=True)
class OptionChoice:
    """The cheapest feasible option of a candidate and the option ranked after it."""

    candidate: ProjectCandidate
    records: tuple[AbatementOption, ...]
    quote: CostQuote
    n_prior: int
    runner_up: str | None = None
    runner_up_lcoa: float | None = None

    @property
    def tech_id(self) -> str:
        return self.quote.tech_id

    @property
    def rank_key(self) -> tuple[float, float, str, str]:
        return (self.quote.lcoa, -self.quote.abated_scope1, self.quote.tech_id, self.candidate.facility_id)


def _earliest_operation(records: Sequence[AbatementOption], scenario: ScenarioParams) -> int:
    return max(record.operating_from(scenario) for record in records)


def quote_options(
    candidate: ProjectCandidate,
    year: int,
    context: PlanningContext,
    *,
    timing: Timing = Timing.START,
) -> list[tuple[tuple[AbatementOption, ...], CostQuote, int]]:
    """Quote every time-feasible option of ``candidate``.

    With ``Timing.START`` every option starts in ``year``; with
    ``Timing.ONLINE`` every option comes online in ``year`` and starts
    ``development_time`` earlier. Options that abate nothing or find no
    storage are dropped.
    """

    scenario = context.scenario
    quoted: list[tuple[tuple[AbatementOption, ...], CostQuote, int]] = []
    for tech_id, records in context.records_for(candidate).items():
        development = max(record.development_time for record in records)
        start = year if timing is Timing.START else year - development
        online = start + development
        if start < EARLIEST_START or not scenario.first_online_year <= online <= HORIZON:
            continue
        if online < _earliest_operation(records, scenario):
            continue
        params = scenario.learning.for_tech(tech_id)
        n_prior = context.learning.n_prior(tech_id, candidate.region, start, params.pooling)
        try:
            result = quote_slice(
                candidate.assets,
                records,
                candidate.build_type,
                start,
                n_prior,
                params,
                context.basis,
                candidate,
            )
        except ZeroAbatementError as exc:
            logger.debug("Dropping %s for %s: %s", tech_id, candidate.facility_id, exc)
            continue
        except StorageExhaustedError as exc:
            logger.debug(
                "Dropping %s for %s: %s",
                tech_id,
                candidate.facility_id,
                exc,
                extra={
                    "pathway_event": PathwayEvent.STORAGE_EXHAUSTED,
                    "region": candidate.region.value,
                    "facility_id": candidate.facility_id,
                    "annual_co2": exc.annual_co2,
                },
            )
            continue
        quoted.append((records, result, n_prior))
    return quoted


def select_option(
    candidate: ProjectCandidate,
    year: int,
    context: PlanningContext,
    *,
    timing: Timing = Timing.START,
) -> OptionChoice:
    """Least-LCOA option; ties go to larger abatement, then tech_id.

    Raises:
        NoApplicableOptionError: When no option is feasible in ``year``.
    """

    quoted = quote_options(candidate, year, context, timing=timing)
    if not quoted:
        raise NoApplicableOptionError(candidate.facility_id, year)
    quoted.sort(key=lambda item: (item[1].lcoa, -item[1].abated_scope1, item[1].tech_id))
    records, best, n_prior = quoted[0]
    runner = quoted[1][1] if len(quoted) > 1 else None
    return OptionChoice(
        candidate=candidate,
        records=records,
        quote=best,
        n_prior=n_prior,
        runner_up=runner.tech_id if runner is not None else None,
        runner_up_lcoa=runner.lcoa if runner is not None else None,
    )


def rank_choices(choices: Iterable[OptionChoice]) -> list[OptionChoice]:
    """Order candidates for commitment: LCOA, larger abatement, tech_id, facility_id."""

    return sorted(choices, key=lambda choice: choice.rank_key)


def choice_summary(choice: OptionChoice) -> Mapping[str, object]:
    """Decision-log entry for one candidate."""

    entry: dict[str, object] = {
        "facility_id": choice.candidate.facility_id,
        "build_type": choice.candidate.build_type.value,
        "tech_id": choice.tech_id,
        "lcoa": round(choice.quote.lcoa, 4),
        "abated_scope1": round(choice.quote.abated_scope1, 1),
        "start_year": choice.quote.start_year,
        "online_year": choice.quote.online_year,
    }
    if choice.runner_up is not None:
        entry["runner_up"] = choice.runner_up
        entry["runner_up_lcoa"] = None if choice.runner_up_lcoa is None else round(choice.runner_up_lcoa, 4)
    return entry


def storage_ok(choice: OptionChoice, context: PlanningContext) -> bool:
    """Whether the quoted site still has headroom for the candidate's CO2."""

    if context.storage is None:
        return True
    return context.storage.can_take(choice.quote.site_id, choice.quote.co2_stored)


__all__ = [
    "DECISION_LOG_LIMIT",
    "OptionChoice",
    "PlanningContext",
    "ProjectCandidate",
    "Timing",
    "choice_summary",
    "facility_slices",
    "quote_options",
    "rank_choices",
    "select_option",
    "storage_ok",
]
