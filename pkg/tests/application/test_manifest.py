"""Tests for provenance manifests."""

import json
from pathlib import Path

import pytest

from chemdecarb import __version__
from chemdecarb.application.services.manifest import (
    MANIFEST_NAME,
    RunManifest,
    build_manifest,
    load_manifest,
    verify_manifest,
    write_manifest,
)
from chemdecarb.core.errors import ReportInputError
from chemdecarb.core.filesystem import file_sha256


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    directory = tmp_path / "out"
    directory.mkdir()
    _ = (directory / "schedule.csv").write_text("a,b\n1,2\n")
    _ = (tmp_path / "catalog.json").write_text("[]")
    return directory


def _manifest(out_dir: Path) -> RunManifest:
    return build_manifest(
        "run",
        out_dir,
        inputs={"catalog": out_dir.parent / "catalog.json"},
        outputs=[out_dir / "schedule.csv"],
        scenarios=["SU"],
        seed=7,
    )


def test_build_records_digests(out_dir: Path) -> None:
    manifest = _manifest(out_dir)

    assert manifest.outputs["schedule.csv"].path == "schedule.csv"
    assert manifest.outputs["schedule.csv"].sha256 == file_sha256(out_dir / "schedule.csv")
    assert manifest.inputs["catalog"].path.endswith("catalog.json")
    assert manifest.tool_version == __version__
    assert manifest.created_at


def test_write_then_load(out_dir: Path) -> None:
    manifest = _manifest(out_dir)
    path = write_manifest(out_dir, manifest)

    assert path.name == MANIFEST_NAME
    assert json.loads(path.read_text())["scenarios"] == ["SU"]
    assert load_manifest(out_dir) == manifest


def test_verify_reports_changed_and_missing_outputs(out_dir: Path) -> None:
    _ = write_manifest(out_dir, _manifest(out_dir))
    assert verify_manifest(out_dir) == []

    _ = (out_dir / "schedule.csv").write_text("a,b\n1,3\n")
    assert verify_manifest(out_dir) == ["schedule.csv"]

    (out_dir / "schedule.csv").unlink()
    assert verify_manifest(out_dir) == ["schedule.csv"]


def test_missing_manifest(tmp_path: Path) -> None:
    with pytest.raises(ReportInputError):
        _ = load_manifest(tmp_path)


def test_malformed_manifest(tmp_path: Path) -> None:
    _ = (tmp_path / MANIFEST_NAME).write_text(json.dumps({"command": "run"}))
    with pytest.raises(ReportInputError) as excinfo:
        _ = load_manifest(tmp_path)
    assert "Malformed" in str(excinfo.value)
