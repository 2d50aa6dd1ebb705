"""Experience-curve capital cost reductions."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from chemdecarb.config.file_ops import read_json_file
from chemdecarb.core.errors import FinanceConfigError
from chemdecarb.core.vocabulary import Pooling


@dataclass(slots=True, frozen=True)
class LearningParams:
    """Learning rates per doubling; the early rate applies up to ``early_phase_count`` projects."""

    lr_early: float
    lr_mature: float
    early_phase_count: int = 5
    pooling: Pooling = Pooling.GLOBAL

    def __post_init__(self) -> None:
        if not 0 <= self.lr_early <= self.lr_mature < 1:
            raise FinanceConfigError(
                f"Learning rates must satisfy 0 <= lr_early <= lr_mature < 1, got {self.lr_early}, {self.lr_mature}"
            )
        if self.early_phase_count < 1:
            raise FinanceConfigError(f"early_phase_count must be >= 1, got {self.early_phase_count}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "lr_early": self.lr_early,
            "lr_mature": self.lr_mature,
            "early_phase_count": self.early_phase_count,
            "pooling": self.pooling.value,
        }


def _exponent(rate: float) -> float:
    return -math.log2(1.0 - rate)


def learning_multiplier(n_prior: int, lp: LearningParams) -> float:
    """Capex multiplier for a project preceded by ``n_prior`` commissioned ones.

    Piecewise power law in the unit number ``n_prior + 1``, continuous at the
    end of the early phase. The first project pays full cost.
    """

    if n_prior < 0:
        raise ValueError(f"n_prior must be >= 0, got {n_prior}")
    unit = n_prior + 1
    if unit == 1:
        return 1.0
    boundary = lp.early_phase_count
    if unit <= boundary:
        return unit ** -_exponent(lp.lr_early)
    return boundary ** -_exponent(lp.lr_early) * (unit / boundary) ** -_exponent(lp.lr_mature)


@dataclass(slots=True, frozen=True)
class LearningProfile:
    """Scenario learning: default parameters plus per-technology overrides."""

    default: LearningParams
    overrides: Mapping[str, LearningParams] = field(default_factory=dict, hash=False)

    def for_tech(self, tech_id: str) -> LearningParams:
        return self.overrides.get(tech_id, self.default)

    def to_dict(self) -> dict[str, Any]:
        payload = self.default.to_dict()
        if self.overrides:
            payload["overrides"] = {tech: params.to_dict() for tech, params in sorted(self.overrides.items())}
        return payload


_PARAM_KEYS = frozenset({"lr_early", "lr_mature", "early_phase_count", "pooling"})


def learning_params_from_dict(raw: Mapping[str, Any], *, where: str = "learning") -> LearningParams:
    unknown = sorted(set(raw) - _PARAM_KEYS)
    if unknown:
        raise FinanceConfigError(f"Unknown {where} key '{unknown[0]}'")
    try:
        return LearningParams(
            lr_early=float(raw["lr_early"]),
            lr_mature=float(raw["lr_mature"]),
            early_phase_count=int(raw.get("early_phase_count", 5)),
            pooling=Pooling.from_user_input(str(raw.get("pooling", Pooling.GLOBAL.value))),
        )
    except KeyError as exc:
        raise FinanceConfigError(f"{where} is missing {exc}") from exc
    except ValueError as exc:
        raise FinanceConfigError(f"{where}: {exc}") from exc


def learning_profile_from_dict(raw: Mapping[str, Any], *, where: str = "learning") -> LearningProfile:
    body = {key: value for key, value in raw.items() if not key.startswith("_")}
    overrides_raw = body.pop("overrides", {}) or {}
    overrides = {
        str(tech): learning_params_from_dict(params, where=f"{where}.overrides.{tech}")
        for tech, params in overrides_raw.items()
    }
    return LearningProfile(default=learning_params_from_dict(body, where=where), overrides=overrides)


def load_learning(path: Path) -> dict[str, LearningProfile]:
    """Load ``learning.json``: one profile per scenario preset name."""

    payload = read_json_file(path, what="Learning")
    if not isinstance(payload, dict):
        raise FinanceConfigError(f"Learning file {path} must hold a JSON object")
    return {
        name: learning_profile_from_dict(entry, where=f"learning.{name}")
        for name, entry in payload.items()
        if not name.startswith("_")
    }


__all__ = [
    "LearningParams",
    "LearningProfile",
    "Pooling",
    "learning_multiplier",
    "learning_params_from_dict",
    "learning_profile_from_dict",
    "load_learning",
]
