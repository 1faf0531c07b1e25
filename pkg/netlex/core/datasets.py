"""
Known datasets and checksum pinning.

netlex never downloads anything: the registry records where each dataset is
published and what its parsed size must be, and a checksum file pins the exact
local copies an experiment used.
"""

from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, Field

from netlex.models.exceptions import InputOutputError, ValidationError
from netlex.models.graph import GraphFormat
from netlex.utils.file_utils import calculate_file_hash, read_json_file, write_json_file

SNAP_DATA_URL = "http://snap.stanford.edu/data/"
PAJEK_DATA_URL = "http://vlado.fmf.uni-lj.si/pub/networks/data/"


class DatasetInfo(BaseModel):
    """A published social-network dataset and the sizes it must parse to."""

    name: str
    filename: str = Field(description="File name expected in the data directory")
    format: GraphFormat
    url: Optional[str] = Field(default=None, description="Where the file is published")
    lcc: bool = Field(default=False, description="Experiments use the largest component only")
    expected_nodes: Optional[int] = None
    expected_edges: Optional[int] = Field(
        default=None, description="Undirected edges after cleaning (and LCC when set)"
    )
    notes: str = ""


DATASETS: Dict[str, DatasetInfo] = {
    d.name: d
    for d in [
        DatasetInfo(
            name="twitter",
            filename="twitter.txt",
            format=GraphFormat.SNAP,
            notes="2500-user friendship crawl; not publicly archived",
        ),
        DatasetInfo(
            name="epinions",
            filename="soc-Epinions1.txt",
            format=GraphFormat.SNAP,
            url=SNAP_DATA_URL + "soc-Epinions1.html",
            expected_nodes=75879,
            notes="who-trusts-whom network",
        ),
        DatasetInfo(
            name="wikipedia",
            filename="Wiki-Vote.txt",
            format=GraphFormat.SNAP,
            url=SNAP_DATA_URL + "wiki-Vote.html",
            expected_nodes=7115,
            notes="administrator election votes, directed",
        ),
        DatasetInfo(
            name="email",
            filename="Email-EuAll.txt",
            format=GraphFormat.SNAP,
            url=SNAP_DATA_URL + "email-EuAll.html",
            expected_nodes=265214,
            notes="EU research institution email, directed",
        ),
        DatasetInfo(
            name="author",
            filename="Geom.net",
            format=GraphFormat.PAJEK,
            url=PAJEK_DATA_URL,
            lcc=True,
            expected_nodes=3621,
            expected_edges=9461,
            notes="geombib co-authorship; largest component",
        ),
    ]
}


def get_dataset(name: str) -> DatasetInfo:
    try:
        return DATASETS[name.lower()]
    except KeyError:
        raise ValidationError(
            f"unknown dataset '{name}'", [f"Known datasets: {', '.join(DATASETS)}"]
        ) from None


def locate(data_dir: Path, names: Optional[List[str]] = None) -> Dict[str, Path]:
    """Registry datasets present in ``data_dir``, by name; missing ones are skipped."""
    found: Dict[str, Path] = {}
    for name in names or list(DATASETS):
        info = get_dataset(name)
        path = Path(data_dir) / info.filename
        if path.is_file():
            found[info.name] = path
        else:
            logger.info(f"Dataset {info.name} not found at {path}")
    return found


def pin_checksums(data_dir: Path, checksum_file: Path) -> Dict[str, Dict[str, str]]:
    """Hash every registry dataset present in ``data_dir`` into ``checksum_file``."""
    found = locate(data_dir)
    if not found:
        raise InputOutputError(
            f"no known dataset files in {data_dir}",
            [f"Expected file names: {', '.join(d.filename for d in DATASETS.values())}"],
        )
    pins = {
        name: {"file": path.name, "sha256": calculate_file_hash(path)}
        for name, path in sorted(found.items())
    }
    write_json_file(checksum_file, pins)
    logger.info(f"Pinned {len(pins)} datasets into {checksum_file}")
    return pins


def verify_checksums(data_dir: Path, checksum_file: Path) -> Dict[str, str]:
    """
    Compare local files with pinned hashes.

    Returns name -> ``ok``, ``mismatch`` or ``missing``.
    """
    pins = read_json_file(checksum_file)
    status: Dict[str, str] = {}
    for name, pin in sorted(pins.items()):
        path = Path(data_dir) / pin["file"]
        if not path.is_file():
            status[name] = "missing"
        elif calculate_file_hash(path) != pin["sha256"]:
            status[name] = "mismatch"
        else:
            status[name] = "ok"
    return status
