"""SNAP and Pajek readers."""

import io
import random
from pathlib import Path
from typing import List, Set, Tuple

import pytest

from netlex.models.exceptions import (
    EXIT_PARSE,
    GraphParseError,
    InputOutputError,
    UnsupportedFormatError,
)
from netlex.models.graph import Directedness, EdgeListSource, GraphFormat, check_invariants
from netlex.parsers import load_graph, parse_source, resolve_format


def parse_snap_text(text: str, directed: Directedness = Directedness.AUTO):
    return parse_source(EdgeListSource(io.StringIO(text), GraphFormat.SNAP, directed, "t"))


def parse_pajek_text(text: str):
    return parse_source(EdgeListSource(io.StringIO(text), GraphFormat.PAJEK, name="t"))


class TestSnap:
    def test_labels_follow_first_appearance(self, p3_file):
        g, diagnostics = load_graph(p3_file)
        assert g.label_list() == ["a", "b", "c"]
        assert list(g.edges()) == [(0, 1), (1, 2)]
        assert g.name == "p3"
        assert diagnostics.arcs_read == 2
        check_invariants(g)

    def test_comments_and_blank_lines_ignored(self):
        g, diagnostics = parse_snap_text("# Directed graph\n# Nodes: 3\n\n1\t2\n\n2   3\n")
        assert g.node_count == 3
        assert g.edge_count == 2
        assert diagnostics.lines_read == 6

    def test_self_loops_dropped(self):
        g, diagnostics = parse_snap_text("1 1\n1 2\n")
        assert g.node_count == 2
        assert g.edge_count == 1
        assert diagnostics.self_loops_dropped == 1

    def test_duplicate_arcs_merged(self):
        g, diagnostics = parse_snap_text("1 2\n1 2\n")
        assert g.edge_count == 1
        assert diagnostics.duplicates_merged == 1
        assert diagnostics.reciprocal_arcs_collapsed == 0

    def test_reciprocal_arcs_collapse(self):
        g, diagnostics = parse_snap_text("1 2\n2 1\n")
        assert g.edge_count == 1
        assert diagnostics.reciprocal_arcs_collapsed == 1

    def test_reciprocal_counts_as_duplicate_when_undirected(self):
        _, diagnostics = parse_snap_text("1 2\n2 1\n", Directedness.UNDIRECTED)
        assert diagnostics.duplicates_merged == 1
        assert diagnostics.reciprocal_arcs_collapsed == 0

    def test_isolated_comment_declares_node(self):
        g, _ = parse_snap_text("# isolated: x\n1 2\n")
        assert g.node_count == 3
        assert g.label(0) == "x"
        assert g.is_isolated(0)

    def test_only_isolated_nodes(self):
        g, _ = parse_snap_text("# Nodes: 2 Edges: 0\n# isolated: a\n# isolated: b\n")
        assert g.node_count == 2
        assert g.edge_count == 0

    def test_isolated_nodes_without_header_have_no_edges(self):
        with pytest.raises(GraphParseError, match="no edges"):
            parse_snap_text("# isolated: a\n# isolated: b\n")

    def test_bad_line_reports_line_number(self, write_file):
        path = write_file("bad.txt", "1 2\n1 2 3\n")
        with pytest.raises(GraphParseError) as info:
            load_graph(path)
        assert info.value.line_number == 2
        assert f"{path}:2" in info.value.message
        assert info.value.exit_code == EXIT_PARSE

    def test_single_token_line(self):
        with pytest.raises(GraphParseError, match="found 1"):
            parse_snap_text("1 2\n3\n")

    def test_no_edges(self):
        with pytest.raises(GraphParseError, match="no edges"):
            parse_snap_text("# nothing here\n")

    def test_invalid_utf8(self, tmp_path: Path):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"1 2\n\xff\xfe 3\n")
        with pytest.raises(GraphParseError, match="UTF-8"):
            load_graph(path)


PAJEK = """% collaboration test network
*Vertices 4
1 "Alice Smith" 0.1 0.2
2 "Bob"
*Edges
1 2
2 3 1.5
*Arcs
3 1
1 1
"""


class TestPajek:
    def test_sections_and_labels(self):
        g, diagnostics = parse_pajek_text(PAJEK)
        assert g.node_count == 4
        assert g.label_list() == ["Alice Smith", "Bob", "3", "4"]
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
        assert g.is_isolated(3)
        assert diagnostics.arcs_read == 4
        assert diagnostics.self_loops_dropped == 1
        check_invariants(g)

    def test_edges_list_section(self):
        g, _ = parse_pajek_text("*Vertices 3\n*Edgeslist\n1 2 3\n")
        assert sorted(g.edges()) == [(0, 1), (0, 2)]

    def test_duplicates_across_sections(self):
        g, diagnostics = parse_pajek_text("*Vertices 2\n*Edges\n1 2\n*Arcs\n2 1\n")
        assert g.edge_count == 1
        assert diagnostics.duplicates_merged == 1

    def test_unknown_section_skipped(self):
        g, diagnostics = parse_pajek_text("*Vertices 3\n*Edges\n1 2\n*Partition x\n1\n2\n3\n")
        assert g.edge_count == 1
        assert diagnostics.skipped_sections == ["*Partition"]

    def test_index_out_of_range(self):
        with pytest.raises(GraphParseError) as info:
            parse_pajek_text("*Vertices 2\n*Edges\n1 3\n")
        assert info.value.line_number == 3

    def test_non_integer_index(self):
        with pytest.raises(GraphParseError, match="not an integer"):
            parse_pajek_text("*Vertices 2\n*Edges\n1 b\n")

    def test_network_header_skipped(self):
        g, diagnostics = parse_pajek_text("*Network Geom\n*Vertices 2\n*Edges\n1 2\n")
        assert (g.node_count, g.edge_count) == (2, 1)
        assert diagnostics.skipped_sections == ["*Network"]

    def test_unknown_section_before_vertices(self):
        text = "*Network x\n*Partition p\n1\n2\n*Vertices 2\n*Edges\n1 2\n"
        g, diagnostics = parse_pajek_text(text)
        assert g.edge_count == 1
        assert diagnostics.skipped_sections == ["*Network", "*Partition"]

    def test_missing_vertices_header(self):
        with pytest.raises(GraphParseError, match="Vertices"):
            parse_pajek_text("*Edges\n1 2\n")
        with pytest.raises(GraphParseError) as info:
            parse_pajek_text("*Network x\n*Arcs\n1 2\n")
        assert info.value.line_number == 2

    def test_vertices_header_without_count(self):
        with pytest.raises(GraphParseError, match="vertex count"):
            parse_pajek_text("*Vertices\n")

    def test_load_by_extension(self, write_file):
        path = write_file("small.net", "*Vertices 3\n*Edges\n1 2\n2 3\n")
        g, diagnostics = load_graph(path)
        assert diagnostics.format is GraphFormat.PAJEK
        assert g.edge_count == 2


def random_pairs(rng: random.Random, labels: int, count: int) -> List[Tuple[int, int]]:
    """Arcs with self-loops, repeats and reciprocals mixed in."""
    pairs = [(rng.randrange(labels), rng.randrange(labels)) for _ in range(count)]
    pairs += [(v, u) for u, v in rng.sample(pairs, count // 3)]
    pairs += rng.sample(pairs, count // 4)
    rng.shuffle(pairs)
    return pairs


def expected_edges(pairs: List[Tuple[int, int]]) -> Set[frozenset]:
    return {frozenset(p) for p in pairs if p[0] != p[1]}


def labelled_edges(g) -> Set[frozenset]:
    return {frozenset((g.label(u), g.label(v))) for u, v in g.edges()}


class TestRandomInputs:
    @pytest.mark.parametrize("seed", range(40))
    def test_snap_graphs_are_symmetric_and_simple(self, seed):
        rng = random.Random(seed)
        pairs = random_pairs(rng, rng.randint(2, 15), rng.randint(1, 40))
        pairs.append((0, 1))
        sep = rng.choice([" ", "\t", "  "])
        text = "# random\n" + "".join(f"{u}{sep}{v}\n" for u, v in pairs)
        g, _ = parse_snap_text(text)
        check_invariants(g)
        want = {frozenset(map(str, e)) for e in expected_edges(pairs)}
        assert labelled_edges(g) == want
        assert g.edge_count == len(want)
        assert sum(g.degrees()) == 2 * g.edge_count

    @pytest.mark.parametrize("seed", range(40))
    def test_pajek_graphs_are_symmetric_and_simple(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 15)
        pairs = random_pairs(rng, n, rng.randint(1, 40))
        half = len(pairs) // 2
        lines = [f"*Vertices {n}"]
        for section, chunk in (("*Edges", pairs[:half]), ("*Arcs", pairs[half:])):
            lines.append(section)
            for u, v in chunk:
                weight = rng.choice(["", " 1", " 2.5"])
                lines.append(f"{u + 1} {v + 1}{weight}")
        g, _ = parse_pajek_text("\n".join(lines) + "\n")
        check_invariants(g)
        assert g.node_count == n
        want = {frozenset(str(i + 1) for i in e) for e in expected_edges(pairs)}
        assert labelled_edges(g) == want
        assert g.edge_count == len(want)


class TestFormatResolution:
    @pytest.mark.parametrize(
        "filename, expected",
        [
            ("Geom.net", GraphFormat.PAJEK),
            ("graph.PAJ", GraphFormat.PAJEK),
            ("soc-Epinions1.txt", GraphFormat.SNAP),
            ("edges", GraphFormat.SNAP),
        ],
    )
    def test_extension(self, filename, expected):
        assert resolve_format(Path(filename)) is expected

    def test_explicit_tag_wins(self):
        assert resolve_format(Path("graph.net"), "snap") is GraphFormat.SNAP

    def test_unknown_tag(self):
        with pytest.raises(UnsupportedFormatError) as info:
            resolve_format(Path("graph.txt"), "gml")
        assert info.value.exit_code == 2

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(InputOutputError):
            load_graph(tmp_path / "absent.txt")
