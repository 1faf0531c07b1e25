"""Output directory bookkeeping: what a command wrote, hashed for its manifest."""

from pathlib import Path
from typing import List

from loguru import logger

from netlex.models.manifest import FileRecord, RunManifest
from netlex.utils.file_utils import (
    atomic_write_text,
    dump_json,
    ensure_directory,
    file_record,
    remove_files,
)

MANIFEST_NAME = "manifest.json"


class OutputDirectory:
    """
    Writes a command's outputs under one directory and remembers them.

    ``rollback`` deletes everything written so far, for commands that must not
    leave partial results.
    """

    def __init__(self, root: Path):
        self.root = ensure_directory(Path(root))
        self.written: List[Path] = []

    def path(self, name: str) -> Path:
        return self.root / name

    def write_text(self, name: str, content: str) -> Path:
        path = atomic_write_text(self.path(name), content)
        if path not in self.written:
            self.written.append(path)
        logger.debug(f"Wrote {path}")
        return path

    def records(self) -> List[FileRecord]:
        return [file_record(p, self.root) for p in self.written]

    def write_manifest(self, manifest: RunManifest) -> Path:
        """Attach the output records to ``manifest`` and write it last."""
        manifest.outputs = self.records()
        path = atomic_write_text(
            self.path(MANIFEST_NAME), dump_json(manifest.model_dump(mode="json"))
        )
        logger.info(f"Manifest written to {path}")
        return path

    def rollback(self) -> List[Path]:
        removed = remove_files(self.written)
        if removed:
            logger.warning(f"Removed {len(removed)} partial outputs from {self.root}")
        self.written = []
        return removed
