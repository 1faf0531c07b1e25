"""
SNAP edge-list writer.

Output shape::

    # Nodes: 5 Edges: 4
    # isolated: 17
    3\t8
    3\t11

Nodes are written by label when every label is a distinct token the SNAP
reader gives back unchanged. Otherwise (whitespace, a leading ``#``, empty or
repeated labels, as Pajek vertex names allow) nodes are written by index and
callers keep the labels elsewhere; see :func:`labels_preserved`.
"""

import io
import re
from pathlib import Path
from typing import List, TextIO, Union

from netlex.models.graph import Graph
from netlex.utils.file_utils import atomic_write_text

_WHITESPACE = re.compile(r"\s")


def is_safe_token(label: str) -> bool:
    return bool(label) and not label.startswith("#") and not _WHITESPACE.search(label)


def labels_preserved(g: Graph) -> bool:
    """True when ``g`` is written by label; False means indices are written instead."""
    labels = g.label_list()
    return all(is_safe_token(label) for label in labels) and len(set(labels)) == len(labels)


def snap_tokens(g: Graph) -> List[str]:
    if labels_preserved(g):
        return g.label_list()
    return [str(i) for i in range(g.node_count)]


def render_snap_edgelist(g: Graph) -> str:
    """The SNAP text of ``g``; identical graphs render to identical text."""
    out = io.StringIO()
    out.write(f"# Nodes: {g.node_count} Edges: {g.edge_count}\n")
    tokens = snap_tokens(g)
    for u in range(g.node_count):
        if g.is_isolated(u):
            out.write(f"# isolated: {tokens[u]}\n")
    for u, v in g.edges():
        out.write(f"{tokens[u]}\t{tokens[v]}\n")
    return out.getvalue()


def write_snap_edgelist(g: Graph, target: Union[Path, str, TextIO]) -> None:
    """Write ``g`` to a path (atomically) or an open text stream."""
    text = render_snap_edgelist(g)
    if isinstance(target, (str, Path)):
        atomic_write_text(Path(target), text)
    else:
        target.write(text)
