"""
Export System

CSV, JSON and SNAP edge-list writers for netlex results.
"""

from netlex.exporters.edgelist_exporter import (
    labels_preserved,
    render_snap_edgelist,
    write_snap_edgelist,
)
from netlex.exporters.output_dir import OutputDirectory

__all__ = ["OutputDirectory", "labels_preserved", "render_snap_edgelist", "write_snap_edgelist"]
