"""Tests for scenario parameters and presets."""

import json
from dataclasses import replace
from pathlib import Path

import pytest

from chemdecarb.core.errors import ScenarioError, UnknownScenarioKeyError
from chemdecarb.core.vocabulary import ChemicalGroup, PlanningMode, Pooling, Region, ScenarioId
from chemdecarb.domain.scenario.params import Deadlines, params_from_dict
from chemdecarb.domain.scenario.presets import (
    dump_scenario,
    load_scenario,
    preset,
    preset_tree,
    resolve_scenario,
    scenario_from_dict,
)


class TestPresets:
    def test_su(self) -> None:
        su = preset("SU")
        assert su.scenario_id is ScenarioId.SU
        assert su.name == "SU"
        assert all(su.mode(region) is PlanningMode.DEADLINE for region in Region)
        assert su.deadline(Region.NORTH_AMERICA) == 2050
        assert su.deadline(Region.EUROPE) == 2050
        assert su.deadline(Region.MIDDLE_EAST) == 2060
        assert su.deadline(Region.CHINA) == 2060
        assert su.learning.default.lr_early == 0.05
        assert su.learning.default.lr_mature == 0.15
        assert su.first_online_year == 2030
        assert su.initial_wave == 3

    def test_ga_caps(self) -> None:
        ga = preset("GA")
        assert all(ga.mode(region) is PlanningMode.CAPITAL_CAP for region in Region)
        assert ga.cap(Region.NORTH_AMERICA, ChemicalGroup.STEAM_CRACKERS) == 2.3e9
        assert ga.learning.default.pooling is Pooling.GLOBAL

    def test_gg_pools_per_region(self) -> None:
        gg = preset("gg")
        assert gg.learning.default.pooling is Pooling.PER_REGION
        assert gg.cap(Region.NORTH_AMERICA, ChemicalGroup.STEAM_CRACKERS) == 1.9e9
        assert gg.trajectory.grid_floor_year == 2080

    def test_missing_cap(self) -> None:
        with pytest.raises(ScenarioError, match="No capital cap"):
            _ = preset("SU").cap(Region.NORTH_AMERICA, ChemicalGroup.STEAM_CRACKERS)

    @pytest.mark.parametrize("name", ["custom", "XX"])
    def test_not_a_preset(self, name: str) -> None:
        with pytest.raises(ScenarioError):
            _ = preset(name)

    def test_tree_is_a_copy(self) -> None:
        tree = preset_tree("SU")
        tree["deadlines"]["na_eu"] = 2040
        assert preset("SU").deadline(Region.NORTH_AMERICA) == 2050

    def test_round_trip_through_dict(self) -> None:
        ga = preset("GA")
        assert params_from_dict(ga.to_dict()) == ga


class TestInvariants:
    def test_deadline_before_first_online(self) -> None:
        with pytest.raises(ScenarioError, match="Deadline"):
            _ = replace(preset("SU"), deadlines=Deadlines(na_eu=2028, me_china=2060))

    def test_deadline_beyond_horizon(self) -> None:
        with pytest.raises(ScenarioError):
            _ = replace(preset("SU"), deadlines=Deadlines(na_eu=2050, me_china=2081))

    def test_initial_wave(self) -> None:
        with pytest.raises(ScenarioError, match="initial_wave"):
            _ = replace(preset("SU"), initial_wave=0)

    def test_first_online_year(self) -> None:
        with pytest.raises(ScenarioError):
            _ = replace(preset("SU"), first_online_year=2024)

    def test_capital_cap_needs_every_group(self) -> None:
        ga = preset("GA")
        caps = {region: dict(groups) for region, groups in ga.caps.items()}
        del caps[Region.EUROPE][ChemicalGroup.AMMONIA]
        with pytest.raises(ScenarioError, match="Europe"):
            _ = replace(ga, caps=caps)

    def test_non_positive_cap(self) -> None:
        ga = preset("GA")
        caps = {region: dict(groups) for region, groups in ga.caps.items()}
        caps[Region.CHINA][ChemicalGroup.METHANOL] = 0.0
        with pytest.raises(ScenarioError):
            _ = replace(ga, caps=caps)

    def test_missing_mode(self) -> None:
        su = preset("SU")
        modes = {region: mode for region, mode in su.modes.items() if region is not Region.CHINA}
        with pytest.raises(ScenarioError, match="China"):
            _ = replace(su, modes=modes)


class TestCircularRamp:
    def test_linear_ramp(self) -> None:
        ramp = preset("SU").circular
        assert ramp.share(Region.NORTH_AMERICA, 2025) == 0.0
        assert ramp.share(Region.NORTH_AMERICA, 2037) == pytest.approx(0.2 * 12 / 25)
        assert ramp.share(Region.NORTH_AMERICA, 2050) == pytest.approx(0.2)
        assert ramp.share(Region.NORTH_AMERICA, 2070) == pytest.approx(0.2)
        assert ramp.share(Region.CHINA, 2050) == pytest.approx(0.2 * 25 / 35)

    def test_before_ramp(self) -> None:
        assert preset("SU").circular.share(Region.EUROPE, 2023) == 0.0


class TestScenarioFiles:
    def test_override_becomes_custom(self) -> None:
        params = scenario_from_dict({"preset": "SU", "deadlines": {"na_eu": 2045}}, label="fast")
        assert params.scenario_id is ScenarioId.CUSTOM
        assert params.name == "fast"
        assert params.deadline(Region.NORTH_AMERICA) == 2045
        assert params.deadline(Region.CHINA) == 2060

    def test_label_only_keeps_preset_id(self) -> None:
        params = scenario_from_dict({"preset": "GA", "label": "GA-copy"})
        assert params.scenario_id is ScenarioId.GA
        assert params.name == "GA-copy"

    def test_missing_preset(self) -> None:
        with pytest.raises(ScenarioError, match="preset"):
            _ = scenario_from_dict({"deadlines": {"na_eu": 2045}})

    def test_unknown_top_level_key(self) -> None:
        with pytest.raises(UnknownScenarioKeyError) as excinfo:
            _ = scenario_from_dict({"preset": "SU", "carbon_tax": 100})
        assert excinfo.value.key == "carbon_tax"

    def test_unknown_nested_key(self) -> None:
        with pytest.raises(UnknownScenarioKeyError) as excinfo:
            _ = scenario_from_dict({"preset": "SU", "trajectory": {"bogus": 1}})
        assert excinfo.value.key == "trajectory.bogus"

    def test_unknown_region_key(self) -> None:
        with pytest.raises(UnknownScenarioKeyError) as excinfo:
            _ = scenario_from_dict({"preset": "SU", "modes": {"Atlantis": "deadline"}})
        assert excinfo.value.key == "modes.Atlantis"

    def test_invariant_violation_after_merge(self) -> None:
        with pytest.raises(ScenarioError):
            _ = scenario_from_dict({"preset": "SU", "circular": {"target_share": 1.5}})

    def test_load_labels_custom_by_stem(self, tmp_path: Path) -> None:
        path = tmp_path / "late_deadline.json"
        _ = path.write_text(json.dumps({"preset": "SU", "deadlines": {"me_china": 2070}}))
        params = load_scenario(path)
        assert params.name == "late_deadline"
        assert params.deadline(Region.MIDDLE_EAST) == 2070

    def test_dump_then_load(self, tmp_path: Path) -> None:
        original = scenario_from_dict({"preset": "GG", "initial_wave": 5}, label="wide")
        path = dump_scenario(original, tmp_path / "wide.json")
        assert load_scenario(path) == original

    def test_resolve_name_or_path(self, tmp_path: Path) -> None:
        assert resolve_scenario("GA").scenario_id is ScenarioId.GA
        path = tmp_path / "x.json"
        _ = path.write_text(json.dumps({"preset": "GA"}))
        assert resolve_scenario(str(path)).scenario_id is ScenarioId.GA
