"""Core vocabulary, errors and filesystem helpers."""

from chemdecarb.core.errors import ChemdecarbError, InputError
from chemdecarb.core.filesystem import ensure_directory, ensure_parent_directory, file_sha256

__all__ = [
    "ChemdecarbError",
    "InputError",
    "ensure_directory",
    "ensure_parent_directory",
    "file_sha256",
]
