"""Shared fixtures: small named graphs and file helpers."""

from pathlib import Path
from typing import Callable

import pytest

from netlex.models.graph import Graph
from tests.graphs import complete_graph, cycle_graph, make_graph, path_graph, star_graph


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def p5() -> Graph:
    return path_graph(5)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def s4() -> Graph:
    return star_graph(4)


@pytest.fixture
def triangle() -> Graph:
    return complete_graph(3)


@pytest.fixture
def paw() -> Graph:
    """Triangle 0-1-2 with pendant 3 on node 2."""
    return make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)], "paw")


@pytest.fixture
def two_triangles() -> Graph:
    """Disjoint triangles {0,1,2} and {3,4,5}."""
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], "two-triangles")


@pytest.fixture
def tree() -> Graph:
    """Binary tree on 7 nodes."""
    return make_graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)], "tree")


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write text to ``tmp_path / name`` and return the path."""

    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def k5_file(write_file) -> Path:
    lines = ["# K5"] + [f"{i}\t{j}" for i in range(5) for j in range(i + 1, 5)]
    return write_file("k5.txt", "\n".join(lines) + "\n")


@pytest.fixture
def p3_file(write_file) -> Path:
    return write_file("p3.txt", "a b\nb c\n")


@pytest.fixture
def grid_file(write_file) -> Path:
    """6x6 grid as a SNAP edge list."""
    lines = []
    for r in range(6):
        for c in range(6):
            u = r * 6 + c
            if c < 5:
                lines.append(f"{u}\t{u + 1}")
            if r < 5:
                lines.append(f"{u}\t{u + 6}")
    return write_file("grid.txt", "\n".join(lines) + "\n")
