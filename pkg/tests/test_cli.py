"""End-to-end CLI behaviour: outputs, manifests, exit codes and replay."""

import json
from pathlib import Path
from typing import List

import pytest
from click.testing import CliRunner, Result

from netlex import __version__
from netlex.cli.main import _sampler, cli
from netlex.models.exceptions import ValidationError


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def invoke(runner: CliRunner):
    def _invoke(*args: str) -> Result:
        return runner.invoke(cli, [str(a) for a in args])

    return _invoke


@pytest.fixture
def lonely_file(write_file) -> Path:
    """A single isolated node."""
    return write_file("lonely.txt", "# Nodes: 1 Edges: 0\n# isolated: a\n")


def files_in(directory: Path) -> List[str]:
    return sorted(p.name for p in directory.iterdir() if p.is_file())


def manifest_of(directory: Path) -> dict:
    return json.loads((directory / "manifest.json").read_text(encoding="utf-8"))


class TestStats:
    def test_k5(self, invoke, k5_file, tmp_path):
        out = tmp_path / "out"
        result = invoke("stats", "--input", k5_file, "--out-dir", out)
        assert result.exit_code == 0, result.output
        assert "2.0000" in result.output
        assert files_in(out) == ["k5_stats.csv", "k5_stats.json", "manifest.json", "netlex.log"]
        assert (out / "k5_stats.csv").read_text().splitlines()[1] == "k5,5,10,2.0,4,1,3,1.0,1.0,"

        manifest = manifest_of(out)
        assert manifest["command"] == "stats"
        assert manifest["tool_version"] == __version__
        assert [r["path"] for r in manifest["outputs"]] == ["k5_stats.csv", "k5_stats.json"]
        assert manifest["inputs"][0]["path"] == str(k5_file)
        assert manifest["config"]["ccg_mode"] == "mean-local"

    def test_transitivity_and_name(self, invoke, grid_file, tmp_path):
        out = tmp_path / "out"
        result = invoke(
            "stats", "--input", grid_file, "--name", "grid6", "--ccg-mode", "transitivity",
            "--out-dir", out,
        )
        assert result.exit_code == 0, result.output
        stats = json.loads((out / "grid6_stats.json").read_text())["stats"]
        assert stats["ccg_mode"] == "transitivity"
        assert stats["girth"] == 4
        assert stats["diameter"] == 10

    def test_parse_error_exit_code(self, invoke, write_file, tmp_path):
        bad = write_file("bad.txt", "1 2\n1 2 3\n")
        out = tmp_path / "out"
        result = invoke("stats", "--input", bad, "--out-dir", out)
        assert result.exit_code == 3
        assert "✗ Error in stats" in result.output
        assert "bad.txt:2" in result.output
        assert "manifest.json" not in files_in(out)

    def test_missing_input(self, invoke, tmp_path):
        result = invoke("stats", "--input", tmp_path / "absent.txt", "--out-dir", tmp_path / "o")
        assert result.exit_code == 4

    def test_computation_error(self, invoke, write_file, tmp_path):
        isolated = write_file("pair.txt", "# Nodes: 2 Edges: 0\n# isolated: a\n# isolated: b\n")
        result = invoke("stats", "--input", isolated, "--out-dir", tmp_path / "o")
        assert result.exit_code == 5
        assert "no reachable pairs" in result.output

    def test_bad_config(self, invoke, write_file, k5_file, tmp_path):
        config = write_file("cfg.json", '{"unknown": 1}')
        result = invoke("stats", "--input", k5_file, "--config", config, "--out-dir", tmp_path / "o")
        assert result.exit_code == 2

    def test_usage_errors(self, invoke, k5_file, tmp_path):
        out = tmp_path / "out"
        assert invoke("stats", "--out-dir", out).exit_code == 2
        assert invoke("stats", "--input", k5_file, "--format", "gml", "--out-dir", out).exit_code == 2
        assert invoke("stats", "--input", k5_file, "--name", "../x", "--out-dir", out).exit_code == 2


class TestMetrics:
    def test_selected_metrics(self, invoke, p3_file, tmp_path):
        out = tmp_path / "out"
        result = invoke(
            "metrics", "--input", p3_file, "--metrics", "degree,closeness", "--normalized",
            "--out-dir", out,
        )
        assert result.exit_code == 0, result.output
        assert files_in(out) == [
            "manifest.json",
            "netlex.log",
            "p3_closeness.csv",
            "p3_closeness_normalized.csv",
            "p3_degree.csv",
            "p3_degree_normalized.csv",
            "p3_metrics.json",
        ]
        assert (out / "p3_degree_normalized.csv").read_text() == (
            "node_label,value\na,0.5\nb,1.0\nc,0.5\n"
        )

    def test_unknown_metric(self, invoke, p3_file, tmp_path):
        result = invoke("metrics", "--input", p3_file, "--metrics", "pagerank", "--out-dir", tmp_path)
        assert result.exit_code == 2
        assert "unknown metric" in result.output

    def test_failure_rolls_back_partial_outputs(self, invoke, lonely_file, tmp_path):
        out = tmp_path / "out"
        result = invoke("metrics", "--input", lonely_file, "--normalized", "--out-dir", out)
        assert result.exit_code == 5
        assert [name for name in files_in(out) if name != "netlex.log"] == []


class TestSample:
    def args(self, path: Path, out: Path, *extra: str) -> List[str]:
        return [
            "sample", "--input", path, "--method", "snowball", "--size", "10", "--seed", "3",
            "--count", "3", "--out-dir", out, *extra,
        ]

    def test_outputs_are_reproducible(self, invoke, grid_file, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        assert invoke(*self.args(grid_file, first)).exit_code == 0
        assert invoke(*self.args(grid_file, second)).exit_code == 0
        names = ["grid_snowball_000.txt", "grid_snowball_001.txt", "grid_snowball_002.txt"]
        for name in names + ["grid_samples.json"]:
            assert (first / name).read_bytes() == (second / name).read_bytes()
        assert manifest_of(first)["seed"] == 3
        samples = manifest_of(first)["details"]["sample_run"]["samples"]
        assert [s["seed"] for s in samples] == [3, 4, 5]
        assert all(s["nodes"] == 10 for s in samples)

    def test_unsafe_labels_are_kept_in_run_description(self, invoke, write_file, tmp_path):
        net = write_file(
            "people.net",
            '*Vertices 3\n1 "Alice Smith"\n2 "#admin"\n3 "Bob"\n*Edges\n1 2\n2 3\n1 3\n',
        )
        out = tmp_path / "o"
        result = invoke("sample", "--input", net, "--method", "node", "--size", "3",
                        "--seed", "0", "--count", "1", "--out-dir", out)
        assert result.exit_code == 0, result.output
        entry = json.loads((out / "people_samples.json").read_text(encoding="utf-8"))["samples"][0]
        assert sorted(entry["labels"]) == ["#admin", "Alice Smith", "Bob"]
        lines = (out / "people_node_000.txt").read_text(encoding="utf-8").splitlines()
        assert lines[1:] == ["0\t1", "0\t2", "1\t2"]

    def test_exhaustion_exit_code(self, invoke, write_file, tmp_path):
        tri = write_file("tri.txt", "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n")
        result = invoke("sample", "--input", tri, "--method", "snowball", "--size", "4",
                        "--seed", "0", "--out-dir", tmp_path / "o")
        assert result.exit_code == 5
        assert "reseed" in result.output

    def test_reseed_policy(self, invoke, write_file, tmp_path):
        tri = write_file("tri.txt", "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n")
        out = tmp_path / "o"
        result = invoke("sample", "--input", tri, "--method", "snowball", "--size", "4",
                        "--seed", "0", "--count", "2", "--on-exhaustion", "reseed", "--out-dir", out)
        assert result.exit_code == 0, result.output
        assert len(manifest_of(out)["details"]["sample_run"]["exhaustion_events"]) == 2

    @pytest.mark.parametrize("dropped", ["--method", "--size", "--seed"])
    def test_sampling_flags_are_required(self, invoke, grid_file, tmp_path, dropped):
        flags = {"--method": "snowball", "--size": "5", "--seed": "1"}
        del flags[dropped]
        args = [a for pair in flags.items() for a in pair]
        result = invoke("sample", "--input", grid_file, *args, "--out-dir", tmp_path)
        assert result.exit_code == 2
        assert dropped in result.output
        assert not (tmp_path / "manifest.json").exists()

    def test_missing_sampler_values_are_usage_errors(self):
        with pytest.raises(ValidationError, match="--method, --seed"):
            _sampler(None, 5, None, "error", 1)

    def test_negative_seed(self, invoke, grid_file, tmp_path):
        result = invoke(*self.args(grid_file, tmp_path / "o", "--seed", "-1"))
        assert result.exit_code == 2


class TestRobustness:
    def args(self, path: Path, out: Path, *extra: str) -> List[str]:
        return [
            "robustness", "--input", path, "--method", "node", "--size", "5", "--seed", "1",
            "--count", "3", "--out-dir", out, *extra,
        ]

    def test_identical_samples_not_flagged(self, invoke, k5_file, tmp_path):
        out = tmp_path / "out"
        result = invoke(*self.args(k5_file, out))
        assert result.exit_code == 0, result.output
        assert "flagged:" not in result.output
        for name in ["k5_robustness.json", "k5_robustness_long.csv", "k5_correlations.csv"]:
            assert (out / name).is_file()
        report = json.loads((out / "k5_robustness.json").read_text())
        assert set(report["reports"]) == {
            "degree", "local-cc", "strength", "betweenness", "eccentricity", "closeness",
        }
        assert report["failures"] == {}

    def test_threshold_flags(self, invoke, k5_file, tmp_path):
        result = invoke(*self.args(k5_file, tmp_path / "out", "--threshold", "1.1",
                                   "--metrics", "degree"))
        assert result.exit_code == 0, result.output
        assert "flagged: sample 2 degree" in result.output

    def test_every_metric_failing(self, invoke, lonely_file, tmp_path):
        out = tmp_path / "out"
        result = invoke("robustness", "--input", lonely_file, "--method", "node", "--size", "1",
                        "--seed", "0", "--count", "2", "--out-dir", out)
        assert result.exit_code == 5
        assert "manifest.json" not in files_in(out)


class TestReport:
    def test_full_graphs(self, invoke, k5_file, grid_file, tmp_path):
        out = tmp_path / "out"
        result = invoke(
            "report", "--input", k5_file, "--input", grid_file, "--name", "k5", "--name", "grid",
            "--full", "--out-dir", out,
        )
        assert result.exit_code == 0, result.output
        assert {"report_stats.csv", "report_distributions.csv", "report_correlations.csv",
                "report.json"} <= set(files_in(out))
        assert len((out / "report_stats.csv").read_text().splitlines()) == 3
        report = json.loads((out / "report.json").read_text())
        assert report["datasets"] == ["k5", "grid"]
        assert report["full_graphs"] is True
        assert report["correlations"]["degree"]["k5"]["k5"] == 1.0

    def test_one_sample_each(self, invoke, k5_file, grid_file, tmp_path):
        result = invoke(
            "report", "--input", k5_file, "--input", grid_file, "--method", "node", "--size", "5",
            "--seed", "0", "--out-dir", tmp_path / "out",
        )
        assert result.exit_code == 0, result.output

    def test_data_dir(self, invoke, tmp_path, grid_file):
        data = tmp_path / "data"
        data.mkdir()
        (data / "Wiki-Vote.txt").write_text(grid_file.read_text())
        out = tmp_path / "out"
        result = invoke("report", "--data-dir", data, "--full", "--out-dir", out)
        assert result.exit_code == 0, result.output
        assert json.loads((out / "report.json").read_text())["datasets"] == ["wikipedia"]

    def test_no_datasets(self, invoke, tmp_path):
        result = invoke("report", "--full", "--out-dir", tmp_path / "out")
        assert result.exit_code == 2

    def test_sampling_flags_required_without_full(self, invoke, k5_file, tmp_path):
        result = invoke("report", "--input", k5_file, "--out-dir", tmp_path / "out")
        assert result.exit_code == 2

    def test_names_must_match_inputs(self, invoke, k5_file, tmp_path):
        result = invoke("report", "--input", k5_file, "--name", "a", "--name", "b", "--full",
                        "--out-dir", tmp_path / "out")
        assert result.exit_code == 2


class TestReplay:
    def record(self, invoke, grid_file: Path, out: Path) -> Result:
        return invoke(
            "sample", "--input", grid_file, "--method", "link", "--size", "8", "--seed", "9",
            "--count", "2", "--out-dir", out,
        )

    def test_reproduces_outputs(self, invoke, grid_file, tmp_path):
        recorded = tmp_path / "recorded"
        assert self.record(invoke, grid_file, recorded).exit_code == 0
        result = invoke("replay", recorded / "manifest.json", "--out-dir", tmp_path / "again")
        assert result.exit_code == 0, result.output
        assert "reproduced 3 outputs" in result.output
        assert manifest_of(tmp_path / "again")["outputs"] == manifest_of(recorded)["outputs"]

    def test_replays_metrics_with_flags(self, invoke, p3_file, tmp_path):
        recorded = tmp_path / "recorded"
        result = invoke("metrics", "--input", p3_file, "--metrics", "betweenness", "--normalized",
                        "--out-dir", recorded)
        assert result.exit_code == 0, result.output
        result = invoke("replay", recorded / "manifest.json", "--out-dir", tmp_path / "again")
        assert result.exit_code == 0, result.output
        assert (tmp_path / "again" / "p3_betweenness_normalized.csv").is_file()

    def test_changed_input(self, invoke, grid_file, tmp_path):
        recorded = tmp_path / "recorded"
        assert self.record(invoke, grid_file, recorded).exit_code == 0
        grid_file.write_text(grid_file.read_text() + "0\t35\n")
        result = invoke("replay", recorded / "manifest.json", "--out-dir", tmp_path / "again")
        assert result.exit_code == 5
        assert "replay mismatch" in result.output

    def test_same_directory_rejected(self, invoke, grid_file, tmp_path):
        recorded = tmp_path / "recorded"
        assert self.record(invoke, grid_file, recorded).exit_code == 0
        result = invoke("replay", recorded / "manifest.json", "--out-dir", recorded)
        assert result.exit_code == 2

    def test_missing_manifest(self, invoke, tmp_path):
        result = invoke("replay", tmp_path / "manifest.json", "--out-dir", tmp_path / "again")
        assert result.exit_code == 4


class TestDatasetsCommands:
    def test_list(self, invoke):
        result = invoke("datasets", "list")
        assert result.exit_code == 0
        for name in ["twitter", "epinions", "wikipedia", "email", "author"]:
            assert name in result.output

    def test_pin_then_verify(self, invoke, tmp_path):
        data = tmp_path / "data"
        data.mkdir()
        (data / "Email-EuAll.txt").write_text("1 2\n")
        pins = tmp_path / "pins.json"
        assert invoke("datasets", "pin", "--data-dir", data, "--checksums", pins).exit_code == 0
        result = invoke("datasets", "verify", "--data-dir", data, "--checksums", pins)
        assert result.exit_code == 0
        assert "ok" in result.output

        (data / "Email-EuAll.txt").write_text("1 3\n")
        result = invoke("datasets", "verify", "--data-dir", data, "--checksums", pins)
        assert result.exit_code == 4
        assert "mismatch" in result.output

    def test_pin_without_datasets(self, invoke, tmp_path):
        result = invoke("datasets", "pin", "--data-dir", tmp_path, "--checksums", tmp_path / "p.json")
        assert result.exit_code == 4


def test_version(invoke):
    result = invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.output
