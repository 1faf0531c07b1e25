"""File System Operations

Hashing, atomic writes and directory helpers shared by exporters and the CLI.
Every output goes through ``atomic_write_text`` so an interrupted command never
leaves a half-written artifact behind.
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from netlex.models.exceptions import InputOutputError
from netlex.models.manifest import FileRecord


def ensure_directory(path: Path, parents: bool = True, exist_ok: bool = True) -> Path:
    """
    Ensure directory exists.

    Args:
        path: Directory path to create
        parents: Create parent directories if needed
        exist_ok: Don't error if directory already exists

    Returns:
        Path: The created/existing directory path

    Raises:
        InputOutputError: If directory creation fails
    """
    try:
        path = Path(path)
        path.mkdir(parents=parents, exist_ok=exist_ok)
        return path
    except OSError as e:
        raise InputOutputError(
            f"couldn't create directory: {path}",
            suggestions=[
                "Check directory permissions",
                "Ensure parent directories exist",
                f"Original error: {e}",
            ],
        ) from e


def calculate_file_hash(path: Path, algorithm: str = "sha256") -> str:
    """
    Calculate a file's content hash.

    Args:
        path: File path
        algorithm: Hash algorithm (md5, sha1, sha256, sha512)

    Returns:
        str: Hexadecimal hash string

    Raises:
        InputOutputError: If file can't be hashed
    """
    try:
        hasher = hashlib.new(algorithm)
        with open(path, "rb") as f:
            for chunk in iter(lambda: f.read(1 << 16), b""):
                hasher.update(chunk)
        return hasher.hexdigest()
    except (OSError, ValueError) as e:
        raise InputOutputError(
            f"couldn't hash file: {path}",
            suggestions=[
                "Check file exists and is readable",
                f"Check algorithm is supported: {algorithm}",
                f"Original error: {e}",
            ],
        ) from e


def file_record(path: Path, relative_to: Union[Path, None] = None) -> FileRecord:
    """Path, sha256 and size of ``path`` for a run manifest."""
    path = Path(path)
    shown = path.relative_to(relative_to) if relative_to is not None else path
    return FileRecord(
        path=shown.as_posix(),
        sha256=calculate_file_hash(path),
        size_bytes=path.stat().st_size,
    )


def atomic_write_text(path: Path, content: str, encoding: str = "utf-8") -> Path:
    """
    Write ``content`` to a sibling temp file, then rename it over ``path``.

    Newlines are written as ``\\n`` on every platform so outputs hash the same.
    """
    path = Path(path)
    ensure_directory(path.parent)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding=encoding, newline="\n") as f:
            f.write(content)
        os.replace(tmp_name, path)
    except (OSError, UnicodeError) as e:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise InputOutputError(
            f"couldn't write file: {path}",
            suggestions=[
                "Check directory permissions",
                "Check disk space",
                f"Original error: {e}",
            ],
        ) from e
    return path


def dump_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json_file(path: Path, data: Any) -> Path:
    try:
        content = dump_json(data)
    except (TypeError, ValueError) as e:
        raise InputOutputError(
            f"couldn't serialize JSON data for: {path}",
            suggestions=["Check data is JSON serializable", f"Serialization error: {e}"],
        ) from e
    return atomic_write_text(path, content)


def read_json_file(path: Path) -> Dict[str, Any]:
    """
    Read a JSON object from ``path``.

    Raises:
        InputOutputError: If the file can't be read or isn't valid JSON
    """
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InputOutputError(f"couldn't read file: {path}") from e
    except json.JSONDecodeError as e:
        raise InputOutputError(
            f"couldn't parse JSON file: {path}",
            suggestions=["Check JSON syntax is valid", f"JSON error: {e}"],
        ) from e


def remove_files(paths: Iterable[Path]) -> List[Path]:
    """Delete the given files, ignoring ones already gone; returns what was removed."""
    removed = []
    for path in paths:
        try:
            Path(path).unlink()
            removed.append(Path(path))
        except FileNotFoundError:
            continue
    return removed
