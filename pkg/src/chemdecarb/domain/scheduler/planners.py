"""Per-cell deployment planners: completion deadlines and annual capital caps.

Planners advance one decision year at a time so that a pathway can step
every cell in lockstep over a shared learning ledger and storage ledger.
"""

from __future__ import annotations

import math
from bisect import insort
from collections import Counter
from dataclasses import dataclass
from typing import Final

from chemdecarb.core.errors import DeadlineInfeasibleError, NoApplicableOptionError
from chemdecarb.core.vocabulary import BASE_YEAR, CAPEX_YEARS, EARLIEST_START, HORIZON, ChemicalGroup, Region
from chemdecarb.domain.costing.finance import outlay_profile
from chemdecarb.domain.scheduler.models import AbatementProject, DecisionRecord, DeploymentSchedule
from chemdecarb.domain.scheduler.selection import (
    OptionChoice,
    PlanningContext,
    ProjectCandidate,
    Timing,
    choice_summary,
    quote_options,
    rank_choices,
    select_option,
    storage_ok,
)
from chemdecarb.infra.logger.logger import PathwayEvent, logger

CAP_TOLERANCE: Final[float] = 1e-6


@dataclass(slots=True, frozen=True)
class Cell:
    """Existing facility slices and new builds of one (region, chemical group)."""

    region: Region
    group: ChemicalGroup
    retrofits: tuple[ProjectCandidate, ...] = ()
    newbuilds: tuple[ProjectCandidate, ...] = ()

    @property
    def label(self) -> str:
        return f"{self.region.value}/{self.group.value}"


class CellPlanner:
    """Shared commit, new-build and logging behaviour of both planning modes."""

    mode: str = ""

    def __init__(self, cell: Cell, context: PlanningContext) -> None:
        self.cell: Cell = cell
        self.context: PlanningContext = context
        self.projects: list[AbatementProject] = []
        self.unabated_newbuilds: list[str] = []
        self._newbuilds_due: dict[int, list[ProjectCandidate]] = {}
        first_online = context.scenario.first_online_year
        for candidate in cell.newbuilds:
            devs = context.development_times([candidate])
            if not devs:
                logger.warning("New build %s has no applicable option; it runs unabated", candidate.facility_id)
                self.unabated_newbuilds.append(candidate.facility_id)
                continue
            online = max(candidate.demand_year, first_online)
            decision = max(BASE_YEAR, online - max(devs))
            self._newbuilds_due.setdefault(decision, []).append(candidate)

    def commit(self, choice: OptionChoice) -> AbatementProject:
        """Freeze ``choice`` into a project and update the shared ledgers."""

        quote = choice.quote
        finance = self.context.basis.finance
        amounts = outlay_profile(quote.total_capex, quote.development_time, finance.logistic_steepness)
        project = AbatementProject(
            facility_id=choice.candidate.facility_id,
            region=self.cell.region,
            group=self.cell.group,
            tech_id=quote.tech_id,
            build_type=choice.candidate.build_type,
            development_start=quote.start_year,
            online_year=quote.online_year,
            total_capex=quote.total_capex,
            outlay={quote.start_year + offset: amount for offset, amount in enumerate(amounts)},
            abated_scope1=quote.abated_scope1,
            co2_stored=quote.co2_stored,
            lcoa_at_decision=quote.lcoa,
            learning_index=choice.n_prior,
            asset_ids=choice.candidate.asset_ids,
            records=choice.records,
            quote=quote,
            site_id=quote.site_id,
            runner_up=choice.runner_up,
            runner_up_lcoa=choice.runner_up_lcoa,
        )
        self.context.learning.record(project)
        if self.context.storage is not None:
            self.context.storage.reserve(quote.site_id, quote.co2_stored)
        self.projects.append(project)
        return project

    def place_newbuilds(self, year: int) -> list[OptionChoice]:
        """Commit the new builds whose decision falls in ``year``; caps do not apply."""

        committed: list[OptionChoice] = []
        first_online = self.context.scenario.first_online_year
        for candidate in self._newbuilds_due.pop(year, []):
            online = max(candidate.demand_year, first_online)
            try:
                choice = select_option(candidate, online, self.context, timing=Timing.ONLINE)
            except NoApplicableOptionError:
                logger.warning(
                    "New build %s has no feasible option for %d; it runs unabated", candidate.facility_id, online
                )
                self.unabated_newbuilds.append(candidate.facility_id)
                continue
            self.commit(choice)
            committed.append(choice)
        return committed

    def log_decision(
        self,
        year: int,
        committed: list[OptionChoice],
        deferred: list[OptionChoice],
        *,
        target_year: int | None = None,
    ) -> None:
        if not committed and not deferred:
            return
        limit = self.context.decision_log_limit
        self.context.decisions.append(
            DecisionRecord(
                scenario=self.context.scenario.name,
                region=self.cell.region,
                group=self.cell.group,
                decision_year=year,
                mode=self.mode,
                committed=tuple(choice_summary(choice) for choice in committed),
                deferred=tuple(choice_summary(choice) for choice in deferred[:limit]),
                deferred_count=len(deferred),
                target_year=target_year,
            )
        )

    def step(self, year: int) -> None:
        raise NotImplementedError

    def remaining(self) -> list[str]:
        raise NotImplementedError

    def blocked(self) -> list[str]:
        return []

    def schedule(self) -> DeploymentSchedule:
        return DeploymentSchedule(
            scenario=self.context.scenario.name,
            region=self.cell.region,
            group=self.cell.group,
            projects=tuple(self.projects),
            unabated=tuple(sorted(self.remaining())),
            blocked=tuple(sorted(self.blocked())),
            unabated_newbuilds=tuple(sorted(self.unabated_newbuilds)),
            retrofit_count=len(self.cell.retrofits),
        )

    def run(self) -> DeploymentSchedule:
        """Plan this cell alone over every decision year."""

        for year in range(BASE_YEAR, HORIZON + 1):
            self.step(year)
        return self.schedule()


class DeadlinePlanner(CellPlanner):
    """Initial wave at the first online year, followers spaced evenly to the deadline.

    Each target year is decided ``max_dev`` years ahead; every option is
    quoted for its own start so that it comes online in the target year.
    The cheapest remaining slices fill the target's count.
    """

    mode = "deadline"

    def __init__(self, cell: Cell, deadline: int, initial_wave: int, context: PlanningContext) -> None:
        super().__init__(cell, context)
        self.deadline: int = deadline
        self._remaining: dict[str, ProjectCandidate] = {
            candidate.facility_id: candidate for candidate in cell.retrofits
        }
        self._targets: Counter[int] = Counter()
        self._max_dev: int = 0

        devs = context.development_times(cell.retrofits)
        if not cell.retrofits or not devs:
            if cell.retrofits:
                logger.warning("%s has no applicable retrofit option; its facilities stay unabated", cell.label)
            return
        self._max_dev = max(devs)
        first_online = context.scenario.first_online_year
        total = len(cell.retrofits)
        wave = min(initial_wave, total)
        followers = total - wave
        window_start = first_online + 1 + min(devs)
        if deadline < first_online or (followers and deadline < window_start):
            earliest = first_online if deadline < first_online else window_start
            raise DeadlineInfeasibleError(deadline, earliest, cell.label)

        self._targets[first_online] += wave
        window = deadline - window_start + 1
        for index in range(followers):
            self._targets[window_start + math.floor(index * window / followers)] += 1

    def target_schedule(self) -> dict[int, int]:
        """Slices due online per target year."""

        return dict(sorted(self._targets.items()))

    def _decision_year(self, target: int) -> int:
        return max(BASE_YEAR, target - self._max_dev)

    def _choices(self, target: int) -> list[OptionChoice]:
        choices: list[OptionChoice] = []
        for candidate in self._remaining.values():
            try:
                choices.append(select_option(candidate, target, self.context, timing=Timing.ONLINE))
            except NoApplicableOptionError:
                continue
        return rank_choices(choices)

    def _fill(self, year: int, target: int, count: int) -> int:
        ranked = self._choices(target)
        committed: list[OptionChoice] = []
        while count > 0 and ranked:
            choice = ranked.pop(0)
            if not storage_ok(choice, self.context):
                # Reservations only raise storage costs, so a re-quote can only fall in rank.
                try:
                    requote = select_option(choice.candidate, target, self.context, timing=Timing.ONLINE)
                except NoApplicableOptionError:
                    continue
                insort(ranked, requote, key=lambda item: item.rank_key)
                continue
            self.commit(choice)
            del self._remaining[choice.candidate.facility_id]
            committed.append(choice)
            count -= 1
        self.log_decision(year, committed, ranked, target_year=target)
        return count

    def step(self, year: int) -> None:
        self.place_newbuilds(year)
        for target in sorted(self._targets):
            if self._decision_year(target) != year or not self._remaining:
                continue
            shortfall = self._fill(year, target, self._targets[target])
            if shortfall <= 0:
                continue
            if target < HORIZON:
                self._targets[target + 1] += shortfall
                self._targets[target] -= shortfall
                if target + 1 > self.deadline:
                    logger.warning(
                        "%s misses its %d deadline; %d slices moved to %d",
                        self.cell.label,
                        self.deadline,
                        shortfall,
                        target + 1,
                    )

    def remaining(self) -> list[str]:
        return list(self._remaining)


class CapitalCapPlanner(CellPlanner):
    """Earliest affordable start under an annual capital cap for the cell.

    New builds commit first and count toward the cap. Pending retrofits are
    ranked by LCOA and start when every year of their outlay fits; others
    wait for a later year. A slice none of whose options fits the cap in any
    single year is blocked for good.
    """

    mode = "capital_cap"

    def __init__(self, cell: Cell, cap: float, context: PlanningContext) -> None:
        super().__init__(cell, context)
        self.cap: float = cap
        self.spending: dict[int, float] = dict.fromkeys(CAPEX_YEARS, 0.0)
        self._pending: dict[str, ProjectCandidate] = {
            candidate.facility_id: candidate for candidate in cell.retrofits
        }
        self._blocked: list[str] = []

    def _peak(self, total: float, development: int) -> float:
        return max(outlay_profile(total, development, self.context.basis.finance.logistic_steepness))

    def _best_within_cap(self, candidate: ProjectCandidate, year: int) -> tuple[OptionChoice | None, bool]:
        """Cheapest option whose peak outlay fits the cap, and whether the slice is blocked for good.

        A slice is blocked once every one of its options is quotable and none fits.
        """

        quoted = quote_options(candidate, year, self.context, timing=Timing.START)
        if not quoted:
            return None, False
        limit = self.cap + CAP_TOLERANCE
        fitting = [item for item in quoted if self._peak(item[1].total_capex, item[1].development_time) <= limit]
        if not fitting:
            return None, len(quoted) == len(self.context.records_for(candidate))
        fitting.sort(key=lambda item: (item[1].lcoa, -item[1].abated_scope1, item[1].tech_id))
        records, best, n_prior = fitting[0]
        runner = fitting[1][1] if len(fitting) > 1 else None
        return (
            OptionChoice(
                candidate=candidate,
                records=records,
                quote=best,
                n_prior=n_prior,
                runner_up=runner.tech_id if runner is not None else None,
                runner_up_lcoa=runner.lcoa if runner is not None else None,
            ),
            True,
        )

    def _fits(self, choice: OptionChoice) -> bool:
        quote = choice.quote
        steepness = self.context.basis.finance.logistic_steepness
        amounts = outlay_profile(quote.total_capex, quote.development_time, steepness)
        return all(
            self.spending[quote.start_year + offset] + amount <= self.cap + CAP_TOLERANCE
            for offset, amount in enumerate(amounts)
        )

    def commit(self, choice: OptionChoice) -> AbatementProject:
        project = super().commit(choice)
        for year, amount in project.outlay.items():
            self.spending[year] += amount
        return project

    def step(self, year: int) -> None:
        self.place_newbuilds(year)
        if year < EARLIEST_START or not self._pending:
            return

        choices: list[OptionChoice] = []
        for facility_id, candidate in list(self._pending.items()):
            choice, blocked = self._best_within_cap(candidate, year)
            if choice is not None:
                choices.append(choice)
            elif blocked:
                logger.warning(
                    "No option for %s fits the %.3g USD/y cap; it stays unabated",
                    facility_id,
                    self.cap,
                    extra={
                        "pathway_event": PathwayEvent.SCHEDULE_BLOCKED,
                        "scenario": self.context.scenario.name,
                        "region": self.cell.region.value,
                        "group": self.cell.group.value,
                        "facility_id": facility_id,
                    },
                )
                self._blocked.append(facility_id)
                del self._pending[facility_id]

        committed: list[OptionChoice] = []
        deferred: list[OptionChoice] = []
        for choice in rank_choices(choices):
            if not storage_ok(choice, self.context):
                requote, _ = self._best_within_cap(choice.candidate, year)
                if requote is None:
                    continue
                choice = requote
            if self._fits(choice):
                self.commit(choice)
                del self._pending[choice.candidate.facility_id]
                committed.append(choice)
            else:
                deferred.append(choice)
        self.log_decision(year, committed, deferred)

    def remaining(self) -> list[str]:
        return list(self._pending) + self._blocked

    def blocked(self) -> list[str]:
        return list(self._blocked)


def plan_deadline(
    cell: Cell,
    deadline: int,
    initial_wave: int,
    context: PlanningContext,
) -> DeploymentSchedule:
    """Schedule one cell to complete by ``deadline``.

    Raises:
        DeadlineInfeasibleError: When ``deadline`` precedes the first online year, or followers cannot
            come online by it.
    """

    return DeadlinePlanner(cell, deadline, initial_wave, context).run()


def plan_capital_cap(cell: Cell, cap: float, context: PlanningContext) -> DeploymentSchedule:
    """Schedule one cell under an annual spending cap in USD."""

    return CapitalCapPlanner(cell, cap, context).run()


__all__ = [
    "CAP_TOLERANCE",
    "CapitalCapPlanner",
    "Cell",
    "CellPlanner",
    "DeadlinePlanner",
    "plan_capital_cap",
    "plan_deadline",
]
