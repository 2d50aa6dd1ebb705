"""Shared pytest fixtures."""

from __future__ import annotations

from collections.abc import Iterator

import pytest

from chemdecarb.application.services.run_service import RunRequest, RunResult, RunService
from chemdecarb.config.config import Config
from chemdecarb.config.paths import fixture_path
from chemdecarb.domain.catalog.options import AbatementOption
from chemdecarb.domain.costing.quotes import QuoteBasis
from chemdecarb.domain.dataset.records import AssetRecord
from tests.builders import make_asset, make_basis, make_option


@pytest.fixture(autouse=True)
def fresh_config() -> Iterator[None]:
    """Drop any cached configuration between tests."""

    Config.reset()
    yield
    Config.reset()


@pytest.fixture
def cracker() -> AssetRecord:
    return make_asset()


@pytest.fixture
def ccs_option() -> AbatementOption:
    return make_option()


@pytest.fixture
def basis() -> QuoteBasis:
    return make_basis()


@pytest.fixture(scope="module")
def eu_run(tmp_path_factory: pytest.TempPathFactory) -> RunResult:
    """SU and GA over the European cracker fixture with the frozen reference."""

    request = RunRequest(
        out_dir=tmp_path_factory.mktemp("eu_run"),
        assets_path=fixture_path("eu_crackers.csv"),
        scenarios=["SU", "GA"],
        frozen_reference=True,
    )
    return RunService(Config()).run(request)
