"""
SNAP edge-list reader.

UTF-8 text; lines starting with ``#`` are comments; every data line holds two
whitespace-separated node identifiers. Arcs are collapsed to undirected edges,
self-loops dropped and duplicates merged. Node indices follow first appearance.

The comment form ``# isolated: <label>`` declares a node without edges; the
writer in :mod:`netlex.exporters.edgelist_exporter` emits it so samples with
isolated nodes survive a round trip. A file without data lines is rejected
with "no edges" unless it carries the writer's ``# Nodes: n Edges: 0`` header
and declares its nodes.
"""

import re
from contextlib import ExitStack
from pathlib import Path
from typing import Dict, List, Set, TextIO, Tuple

from loguru import logger

from netlex.models.exceptions import GraphParseError, InputOutputError
from netlex.models.graph import Directedness, EdgeListSource, Graph, GraphFormat, ParseDiagnostics

ISOLATED_RE = re.compile(r"^#\s*isolated:\s*(\S+)\s*$")
HEADER_RE = re.compile(r"^#\s*Nodes:\s*\d+\s+Edges:\s*\d+\s*$")


def open_source(source: EdgeListSource, stack: ExitStack, errors: str = "strict") -> TextIO:
    """Open a path source inside ``stack``; streams are returned as given."""
    if isinstance(source.location, Path):
        try:
            return stack.enter_context(
                source.location.open("r", encoding="utf-8", errors=errors)
            )
        except OSError as e:
            raise InputOutputError(f"cannot read {source.location}: {e}") from e
    return source.location


def parse_snap_edgelist(source: EdgeListSource) -> Tuple[Graph, ParseDiagnostics]:
    """Parse a SNAP-style edge list into a cleaned undirected simple graph."""
    diagnostics = ParseDiagnostics(source=source.display_name, format=GraphFormat.SNAP)
    index: Dict[str, int] = {}
    edges: Set[Tuple[int, int]] = set()
    arcs_seen: Set[Tuple[int, int]] = set()
    declared = False
    headed = False

    def node(label: str) -> int:
        if label not in index:
            index[label] = len(index)
        return index[label]

    with ExitStack() as stack:
        stream = open_source(source, stack)
        try:
            for line_number, raw in enumerate(stream, start=1):
                diagnostics.lines_read += 1
                line = raw.strip()
                if not line:
                    continue
                if line.startswith("#"):
                    match = ISOLATED_RE.match(line)
                    if match:
                        node(match.group(1))
                        declared = True
                    elif HEADER_RE.match(line):
                        headed = True
                    continue
                tokens = line.split()
                if len(tokens) != 2:
                    raise GraphParseError(
                        f"expected 2 node identifiers, found {len(tokens)}",
                        path=source.path,
                        line_number=line_number,
                    )
                u, v = node(tokens[0]), node(tokens[1])
                diagnostics.arcs_read += 1
                if u == v:
                    diagnostics.self_loops_dropped += 1
                    continue
                key = (u, v) if u < v else (v, u)
                if key in edges:
                    if source.directed is not Directedness.UNDIRECTED and (u, v) not in arcs_seen:
                        diagnostics.reciprocal_arcs_collapsed += 1
                    else:
                        diagnostics.duplicates_merged += 1
                else:
                    edges.add(key)
                arcs_seen.add((u, v))
        except UnicodeDecodeError as e:
            raise GraphParseError(f"not valid UTF-8 text: {e}", path=source.path) from e

    if not edges and not (declared and headed):
        raise GraphParseError("no edges", path=source.path)

    labels: List[str] = [""] * len(index)
    for label, i in index.items():
        labels[i] = label
    graph = Graph.from_edges(len(index), sorted(edges), labels, name=source.display_name)
    logger.info(
        f"Parsed SNAP edge list {source.display_name}: {graph.node_count} nodes, "
        f"{graph.edge_count} edges ({diagnostics.summary()})"
    )
    return graph, diagnostics
