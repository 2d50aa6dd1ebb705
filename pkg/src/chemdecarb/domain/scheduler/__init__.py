"""Deployment scheduling under completion deadlines or annual capital caps."""

from chemdecarb.domain.scheduler.models import (
    UNFINISHED,
    AbatementProject,
    AbatementState,
    DecisionRecord,
    DeploymentSchedule,
    LearningState,
    StorageLedger,
)
from chemdecarb.domain.scheduler.pathway import PathwayPlanner, PathwayResult, build_cells, simulate_pathway
from chemdecarb.domain.scheduler.planners import (
    CapitalCapPlanner,
    Cell,
    DeadlinePlanner,
    plan_capital_cap,
    plan_deadline,
)
from chemdecarb.domain.scheduler.selection import (
    OptionChoice,
    PlanningContext,
    ProjectCandidate,
    Timing,
    facility_slices,
    select_option,
)

__all__ = [
    "AbatementProject",
    "AbatementState",
    "CapitalCapPlanner",
    "Cell",
    "DeadlinePlanner",
    "DecisionRecord",
    "DeploymentSchedule",
    "LearningState",
    "OptionChoice",
    "PathwayPlanner",
    "PathwayResult",
    "PlanningContext",
    "ProjectCandidate",
    "StorageLedger",
    "Timing",
    "UNFINISHED",
    "build_cells",
    "facility_slices",
    "plan_capital_cap",
    "plan_deadline",
    "select_option",
    "simulate_pathway",
]
