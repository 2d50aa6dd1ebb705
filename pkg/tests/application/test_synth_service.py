"""Tests for the synthesis application service."""

from pathlib import Path

from pytest_mock import MockerFixture

from chemdecarb.application.services.manifest import load_manifest, verify_manifest
from chemdecarb.application.services.synth_service import ASSETS_NAME, SynthRequest, SynthService
from chemdecarb.config.config import Config
from chemdecarb.config.paths import fixture_path
from chemdecarb.core.filesystem import file_sha256
from chemdecarb.domain.dataset.loader import load_asset_table


def test_synth_writes_assets_and_manifest(tmp_path: Path) -> None:
    service = SynthService(Config())
    request = SynthRequest(out_dir=tmp_path / "synth", spec_path=fixture_path("me_china_synthesis.json"))

    result = service.run(request)

    assert result.assets_path == tmp_path / "synth" / ASSETS_NAME
    assert result.asset_count == 705
    assert result.facility_count == 455
    assert len(load_asset_table(result.assets_path)) == 705
    manifest = load_manifest(tmp_path / "synth")
    assert manifest.command == "synth"
    assert manifest.seed == result.seed
    assert verify_manifest(tmp_path / "synth") == []


def test_same_seed_same_bytes(tmp_path: Path) -> None:
    service = SynthService(Config())
    spec = fixture_path("me_china_synthesis.json")

    first = service.run(SynthRequest(out_dir=tmp_path / "a", spec_path=spec, seed=11))
    second = service.run(SynthRequest(out_dir=tmp_path / "b", spec_path=spec, seed=11))
    third = service.run(SynthRequest(out_dir=tmp_path / "c", spec_path=spec, seed=12))

    assert file_sha256(first.assets_path) == file_sha256(second.assets_path)
    assert file_sha256(first.assets_path) != file_sha256(third.assets_path)


def test_configured_spec_is_used(tmp_path: Path, mocker: MockerFixture) -> None:
    config = Config(synthesis_spec_path=fixture_path("me_china_synthesis.json"))
    mock_logger = mocker.patch("chemdecarb.application.services.synth_service.logger")

    result = SynthService(config).run(SynthRequest(out_dir=tmp_path))

    assert result.facility_count == 455
    assert mock_logger.info.call_count == 2
