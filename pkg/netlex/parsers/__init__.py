"""
Graph file readers.

``load_graph`` resolves the format tag first (explicit flag, else file
extension) and then dispatches to the matching parser.
"""

from pathlib import Path
from typing import Optional, Tuple, Union

from netlex.models.exceptions import InputOutputError, UnsupportedFormatError
from netlex.models.graph import Directedness, EdgeListSource, Graph, GraphFormat, ParseDiagnostics
from netlex.parsers.pajek_parser import parse_pajek
from netlex.parsers.snap_parser import parse_snap_edgelist

PAJEK_EXTENSIONS = {".net", ".paj", ".pajek"}


def resolve_format(path: Path, format_tag: Optional[Union[str, GraphFormat]] = None) -> GraphFormat:
    """Explicit tag wins; otherwise Pajek extensions map to pajek and everything else to snap."""
    if format_tag is not None:
        try:
            return GraphFormat(format_tag)
        except ValueError:
            raise UnsupportedFormatError(str(format_tag)) from None
    return GraphFormat.PAJEK if path.suffix.lower() in PAJEK_EXTENSIONS else GraphFormat.SNAP


def parse_source(source: EdgeListSource) -> Tuple[Graph, ParseDiagnostics]:
    if source.format is GraphFormat.SNAP:
        return parse_snap_edgelist(source)
    if source.format is GraphFormat.PAJEK:
        return parse_pajek(source)
    raise UnsupportedFormatError(str(source.format))


def load_graph(
    path: Union[str, Path],
    format_tag: Optional[Union[str, GraphFormat]] = None,
    directed: Directedness = Directedness.AUTO,
    name: Optional[str] = None,
) -> Tuple[Graph, ParseDiagnostics]:
    """Read a graph file from disk."""
    path = Path(path)
    graph_format = resolve_format(path, format_tag)
    if not path.is_file():
        raise InputOutputError(f"input file not found: {path}")
    return parse_source(EdgeListSource(path, graph_format, directed, name))


__all__ = [
    "load_graph",
    "parse_pajek",
    "parse_snap_edgelist",
    "parse_source",
    "resolve_format",
]
