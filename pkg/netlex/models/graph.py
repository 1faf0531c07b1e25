"""Graph Data Models

The immutable undirected simple graph every netlex module works on, plus the
carriers describing where a graph comes from and what cleaning its parser did.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

from pydantic import BaseModel, Field

from netlex.models.exceptions import EdgeNotFoundError, GraphParseError, NodeNotFoundError


class GraphFormat(str, Enum):
    """Supported input file formats."""

    SNAP = "snap"      # "#" comments, two identifiers per data line
    PAJEK = "pajek"    # *Vertices / *Edges / *Arcs sections


class Directedness(str, Enum):
    """Hint describing how the input file should be read."""

    DIRECTED = "directed"
    UNDIRECTED = "undirected"
    AUTO = "auto"


@dataclass(frozen=True)
class EdgeListSource:
    """Where a graph comes from: a path or an open text stream, plus its format tag."""

    location: Union[Path, TextIO]
    format: GraphFormat
    directed: Directedness = Directedness.AUTO
    name: Optional[str] = None

    @property
    def display_name(self) -> str:
        if self.name:
            return self.name
        if isinstance(self.location, Path):
            return self.location.stem
        return getattr(self.location, "name", "<stream>")

    @property
    def path(self) -> Optional[Path]:
        return self.location if isinstance(self.location, Path) else None


class ParseDiagnostics(BaseModel):
    """What the parser saw and cleaned while building a graph."""

    source: str = Field(description="Display name of the parsed source")
    format: GraphFormat
    lines_read: int = 0
    arcs_read: int = 0
    self_loops_dropped: int = 0
    duplicates_merged: int = 0
    reciprocal_arcs_collapsed: int = 0
    skipped_sections: List[str] = Field(default_factory=list)

    def summary(self) -> str:
        parts = [
            f"{self.arcs_read} arcs",
            f"{self.self_loops_dropped} self-loops dropped",
            f"{self.duplicates_merged} duplicates merged",
        ]
        if self.reciprocal_arcs_collapsed:
            parts.append(f"{self.reciprocal_arcs_collapsed} reciprocal arcs collapsed")
        return ", ".join(parts)


@dataclass(frozen=True)
class Graph:
    """
    Immutable undirected simple graph with dense node indices.

    ``adjacency[u]`` is the sorted tuple of neighbours of ``u``. Symmetry,
    absence of self-loops and duplicate-free adjacency are guaranteed by
    :meth:`from_edges`; direct construction is checked in ``__post_init__``.
    """

    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None
    name: str = ""
    edge_count: int = field(init=False)

    def __post_init__(self) -> None:
        total = sum(len(neigh) for neigh in self.adjacency)
        if total % 2:
            raise ValueError("adjacency is not symmetric: odd total degree")
        object.__setattr__(self, "edge_count", total // 2)
        if self.labels is not None and len(self.labels) != len(self.adjacency):
            raise ValueError("labels must have one entry per node")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "Graph":
        """Build a simple graph, dropping self-loops and merging duplicate edges."""
        neighbour_sets: List[set] = [set() for _ in range(node_count)]
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise NodeNotFoundError(max(u, v), node_count)
            neighbour_sets[u].add(v)
            neighbour_sets[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in neighbour_sets)
        return cls(adjacency, tuple(labels) if labels is not None else None, name)

    @classmethod
    def empty(cls, name: str = "") -> "Graph":
        return cls((), (), name)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    def neighbors(self, u: int) -> Tuple[int, ...]:
        self._check_node(u)
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        self._check_node(u)
        return len(self.adjacency[u])

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Neighbourhoods as frozensets, built once on first use."""
        return tuple(frozenset(neigh) for neigh in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self.neighbor_sets[u]

    def require_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise EdgeNotFoundError(u, v)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Each undirected edge once as ``(u, v)`` with ``u < v``, in index order."""
        for u, neigh in enumerate(self.adjacency):
            for v in neigh:
                if u < v:
                    yield u, v

    def label(self, u: int) -> str:
        self._check_node(u)
        return self.labels[u] if self.labels is not None else str(u)

    def label_list(self) -> List[str]:
        return [self.label(u) for u in range(self.node_count)]

    def degrees(self) -> List[int]:
        return [len(neigh) for neigh in self.adjacency]

    def is_isolated(self, u: int) -> bool:
        return not self.adjacency[u]

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def induced_subgraph(self, nodes: Iterable[int], name: Optional[str] = None) -> "Graph":
        """Subgraph on ``nodes`` with every source edge between them, reindexed in the given order."""
        order = list(dict.fromkeys(nodes))
        index: Dict[int, int] = {}
        for new, old in enumerate(order):
            self._check_node(old)
            index[old] = new
        adjacency = tuple(
            tuple(sorted(index[w] for w in self.adjacency[old] if w in index)) for old in order
        )
        labels = tuple(self.label(old) for old in order)
        return Graph(adjacency, labels, self.name if name is None else name)

    def edge_subgraph(
        self, edges: Iterable[Tuple[int, int]], name: Optional[str] = None
    ) -> "Graph":
        """Subgraph holding exactly ``edges`` and their endpoints, nodes in first-appearance order."""
        index: Dict[int, int] = {}
        local: List[Tuple[int, int]] = []
        for u, v in edges:
            self.require_edge(u, v)
            for w in (u, v):
                if w not in index:
                    index[w] = len(index)
            local.append((index[u], index[v]))
        labels = [""] * len(index)
        for old, new in index.items():
            labels[new] = self.label(old)
        return Graph.from_edges(len(index), local, labels, self.name if name is None else name)

    def _check_node(self, u: int) -> None:
        if not 0 <= u < len(self.adjacency):
            raise NodeNotFoundError(u, len(self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, nodes={self.node_count}, edges={self.edge_count})"


def check_invariants(g: Graph) -> None:
    """Raise ``GraphParseError`` when ``g`` breaks symmetry, simplicity or sortedness."""
    for u, neigh in enumerate(g.adjacency):
        if list(neigh) != sorted(set(neigh)):
            raise GraphParseError(f"adjacency of node {u} is unsorted or has duplicates")
        for v in neigh:
            if v == u:
                raise GraphParseError(f"self-loop on node {u}")
            if not 0 <= v < g.node_count:
                raise GraphParseError(f"neighbour {v} of node {u} out of range")
            if u not in g.neighbor_sets[v]:
                raise GraphParseError(f"edge {u}-{v} is not symmetric")
