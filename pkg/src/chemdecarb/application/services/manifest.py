"""Provenance manifest written beside every set of outputs."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass, field
from datetime import UTC, datetime
from pathlib import Path
from typing import Any, Final

from chemdecarb import __version__
from chemdecarb.config.file_ops import read_json_file, write_json_file
from chemdecarb.core.errors import ReportInputError
from chemdecarb.core.filesystem import file_sha256

MANIFEST_NAME: Final[str] = "manifest.json"


@dataclass(slots=True, frozen=True)
class FileDigest:
    path: str
    sha256: str

    @classmethod
    def of(cls, path: Path, *, relative_to: Path | None = None) -> FileDigest:
        shown = path.relative_to(relative_to) if relative_to is not None else path
        return cls(path=str(shown), sha256=file_sha256(path))


@dataclass(slots=True, frozen=True)
class RunManifest:
    """Inputs and outputs of one command with their sha256 digests.

    Output paths are relative to the manifest's directory.
    """

    command: str
    inputs: Mapping[str, FileDigest] = field(hash=False)
    outputs: Mapping[str, FileDigest] = field(hash=False)
    scenarios: tuple[str, ...] = ()
    seed: int | None = None
    tool_version: str = __version__
    created_at: str = ""

    def to_dict(self) -> dict[str, Any]:
        payload = asdict(self)
        payload["scenarios"] = list(self.scenarios)
        return payload

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> RunManifest:
        try:
            return cls(
                command=str(payload["command"]),
                inputs={key: FileDigest(**value) for key, value in payload["inputs"].items()},
                outputs={key: FileDigest(**value) for key, value in payload["outputs"].items()},
                scenarios=tuple(payload.get("scenarios", ())),
                seed=payload.get("seed"),
                tool_version=str(payload.get("tool_version", "")),
                created_at=str(payload.get("created_at", "")),
            )
        except (KeyError, TypeError) as exc:
            raise ReportInputError(f"Malformed manifest: {exc}") from exc


def build_manifest(
    command: str,
    out_dir: Path,
    *,
    inputs: Mapping[str, Path],
    outputs: Sequence[Path],
    scenarios: Sequence[str] = (),
    seed: int | None = None,
) -> RunManifest:
    return RunManifest(
        command=command,
        inputs={key: FileDigest.of(path) for key, path in sorted(inputs.items())},
        outputs={path.name: FileDigest.of(path, relative_to=out_dir) for path in sorted(outputs)},
        scenarios=tuple(scenarios),
        seed=seed,
        created_at=datetime.now(UTC).isoformat(timespec="seconds"),
    )


def write_manifest(out_dir: Path, manifest: RunManifest) -> Path:
    path = out_dir / MANIFEST_NAME
    write_json_file(path, manifest.to_dict())
    return path


def load_manifest(out_dir: Path) -> RunManifest:
    """Read ``manifest.json`` from ``out_dir``.

    Raises:
        ReportInputError: When the manifest is absent or malformed.
    """

    path = out_dir / MANIFEST_NAME
    if not path.exists():
        raise ReportInputError(f"No {MANIFEST_NAME} in {out_dir}")
    payload = read_json_file(path, what="Manifest")
    if not isinstance(payload, dict):
        raise ReportInputError(f"Manifest {path} must hold a JSON object")
    return RunManifest.from_dict(payload)


def verify_manifest(out_dir: Path) -> list[str]:
    """Recompute output digests; returns the names that are missing or changed."""

    manifest = load_manifest(out_dir)
    mismatched: list[str] = []
    for name, digest in manifest.outputs.items():
        path = out_dir / digest.path
        if not path.exists() or file_sha256(path) != digest.sha256:
            mismatched.append(name)
    return mismatched


__all__ = [
    "FileDigest",
    "MANIFEST_NAME",
    "RunManifest",
    "build_manifest",
    "load_manifest",
    "verify_manifest",
    "write_manifest",
]
