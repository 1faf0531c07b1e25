"""Run manifest models: what a command read, how it was configured, what it wrote."""

from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class FileRecord(BaseModel):
    """A file with its content hash."""

    path: str
    sha256: str
    size_bytes: int


class RunManifest(BaseModel):
    """Reproducibility record written next to every command's outputs."""

    command: str
    tool_version: str
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    seed: Optional[int] = None
    params: Dict[str, Any] = Field(default_factory=dict, description="Every flag as invoked")
    config: Dict[str, Any] = Field(default_factory=dict, description="Effective NetlexConfig")
    inputs: List[FileRecord] = Field(default_factory=list)
    outputs: List[FileRecord] = Field(default_factory=list)
    details: Dict[str, Any] = Field(
        default_factory=dict, description="Command-specific extras, e.g. sample-run manifest"
    )

    def data_outputs(self) -> Dict[str, str]:
        """Output path -> sha256."""
        return {record.path: record.sha256 for record in self.outputs}
