"""
Pajek ``.net`` reader (the subset needed for collaboration datasets).

Supported: ``*Vertices n`` header, optional vertex lines ``i "label" ...``,
``*Edges`` / ``*Arcs`` pair sections (1-based, trailing weight columns
ignored), ``*Edgeslist`` / ``*Arcslist`` adjacency sections and ``%``
comments. Any other ``*Section`` (``*Network``, ``*Partition``, ...) is skipped
with a warning wherever it appears.
"""

import shlex
from contextlib import ExitStack
from typing import List, Optional, Set, Tuple

from loguru import logger

from netlex.models.exceptions import GraphParseError
from netlex.models.graph import EdgeListSource, Graph, GraphFormat, ParseDiagnostics
from netlex.parsers.snap_parser import open_source

PAIR_SECTIONS = {"*edges", "*arcs"}
LIST_SECTIONS = {"*edgeslist", "*arcslist"}


def _vertex_index(token: str, n: int, source: EdgeListSource, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(
            f"vertex index '{token}' is not an integer", path=source.path, line_number=line_number
        ) from None
    if not 1 <= value <= n:
        raise GraphParseError(
            f"vertex index {value} out of range [1, {n}]", path=source.path, line_number=line_number
        )
    return value - 1


def _vertex_label(line: str) -> Tuple[str, Optional[str]]:
    try:
        tokens = shlex.split(line, posix=True)
    except ValueError:
        tokens = line.split()
    if len(tokens) < 2:
        return tokens[0], None
    return tokens[0], tokens[1]


def parse_pajek(source: EdgeListSource) -> Tuple[Graph, ParseDiagnostics]:
    """Parse a Pajek network file into a cleaned undirected simple graph."""
    diagnostics = ParseDiagnostics(source=source.display_name, format=GraphFormat.PAJEK)
    n: Optional[int] = None
    labels: List[str] = []
    edges: Set[Tuple[int, int]] = set()
    section: Optional[str] = None

    with ExitStack() as stack:
        stream = open_source(source, stack, errors="replace")
        for line_number, raw in enumerate(stream, start=1):
            diagnostics.lines_read += 1
            line = raw.strip()
            if not line or line.startswith("%"):
                continue

            if line.startswith("*"):
                keyword = line.split()[0].lower()
                if keyword == "*vertices":
                    parts = line.split()
                    if len(parts) < 2 or not parts[1].isdigit():
                        raise GraphParseError(
                            "*Vertices header needs a vertex count",
                            path=source.path,
                            line_number=line_number,
                        )
                    n = int(parts[1])
                    labels = [str(i + 1) for i in range(n)]
                    section = "*vertices"
                    continue
                if keyword in PAIR_SECTIONS or keyword in LIST_SECTIONS:
                    if n is None:
                        raise GraphParseError(
                            f"missing *Vertices header before {line.split()[0]}",
                            path=source.path,
                            line_number=line_number,
                        )
                    section = keyword
                else:
                    section = "skip"
                    diagnostics.skipped_sections.append(line.split()[0])
                    logger.warning(
                        f"Skipping unsupported Pajek section {line.split()[0]} "
                        f"in {source.display_name} (line {line_number})"
                    )
                continue

            if section == "skip":
                continue
            if n is None:
                raise GraphParseError(
                    "missing *Vertices header", path=source.path, line_number=line_number
                )
            if section == "*vertices":
                first, label = _vertex_label(line)
                idx = _vertex_index(first, n, source, line_number)
                if label is not None:
                    labels[idx] = label
                continue

            tokens = line.split()
            if section in PAIR_SECTIONS:
                if len(tokens) < 2:
                    raise GraphParseError(
                        f"edge line needs two vertex indices, found {len(tokens)}",
                        path=source.path,
                        line_number=line_number,
                    )
                pairs = [(tokens[0], tokens[1])]
            else:
                pairs = [(tokens[0], t) for t in tokens[1:]]

            for a, b in pairs:
                u = _vertex_index(a, n, source, line_number)
                v = _vertex_index(b, n, source, line_number)
                diagnostics.arcs_read += 1
                if u == v:
                    diagnostics.self_loops_dropped += 1
                    continue
                key = (u, v) if u < v else (v, u)
                if key in edges:
                    diagnostics.duplicates_merged += 1
                else:
                    edges.add(key)

    if n is None:
        raise GraphParseError("missing *Vertices header", path=source.path)

    graph = Graph.from_edges(n, sorted(edges), labels, name=source.display_name)
    logger.info(
        f"Parsed Pajek network {source.display_name}: {graph.node_count} nodes, "
        f"{graph.edge_count} edges ({diagnostics.summary()})"
    )
    return graph, diagnostics
