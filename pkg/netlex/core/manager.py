"""
netlex Core Manager - Central Control System

Coordinates loading, statistics, metrics, sampling and the robustness and
comparison experiments, writing every artifact through an
:class:`OutputDirectory` so callers can hash or roll back what was produced.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from netlex.core.components import largest_connected_component
from netlex.core.config_manager import ConfigManager
from netlex.core.distributions import bin_distribution, cross_dataset_correlations, trim_bins
from netlex.core.global_stats import compute_global_stats, structural_profile
from netlex.core.node_metrics import compute_metric, normalize_01
from netlex.core.robustness import RobustnessOutcome, robustness_reports
from netlex.core.sampling import draw_sample, run_repeated
from netlex.exporters import csv_exporter, json_exporter
from netlex.exporters.edgelist_exporter import labels_preserved, render_snap_edgelist
from netlex.exporters.output_dir import OutputDirectory
from netlex.models.config import NetlexConfig
from netlex.models.distributions import BinnedDistribution, TrimmedDistribution
from netlex.models.exceptions import ComputationError, ValidationError
from netlex.models.graph import Graph, ParseDiagnostics
from netlex.models.metrics import MetricName, MetricVector
from netlex.models.sampling import SampleRun, SamplerConfig
from netlex.models.stats import CCGMode, GlobalStats
from netlex.parsers import load_graph
from netlex.utils.file_utils import dump_json
from netlex.utils.logging_utils import log_operation
from netlex.utils.validation import sanitize_filename


@dataclass
class LoadedGraph:
    """A parsed input graph with its provenance."""

    graph: Graph
    diagnostics: ParseDiagnostics
    path: Path
    name: str
    lcc_applied: bool = False

    @property
    def stem(self) -> str:
        """File-name prefix for this graph's outputs."""
        return sanitize_filename(self.name)


@dataclass
class ReportResult:
    """What ``report`` computed for each dataset."""

    stats: List[GlobalStats]
    slices: Dict[str, List[TrimmedDistribution]]
    correlations: Dict[MetricName, Dict[str, Dict[str, Optional[float]]]]


class NetlexManager:
    """
    Main control system for netlex operations.

    Every public method that produces artifacts takes an ``OutputDirectory``
    and writes through it; the caller owns the run manifest.
    """

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        self.config_manager = config_manager or ConfigManager()

    @property
    def config(self) -> NetlexConfig:
        return self.config_manager.config

    # =====================================================================
    # Loading
    # =====================================================================

    def load(
        self,
        path: Path,
        format_tag: Optional[str] = None,
        lcc: bool = False,
        name: Optional[str] = None,
    ) -> LoadedGraph:
        """Parse ``path`` and optionally keep only its largest connected component."""
        path = Path(path)
        display = name or path.stem
        with log_operation("load", path=str(path)):
            graph, diagnostics = load_graph(path, format_tag, name=display)
            logger.info(
                f"Loaded {display}: {graph.node_count} nodes, {graph.edge_count} edges "
                f"({diagnostics.summary()})"
            )
            if lcc:
                graph = largest_connected_component(graph)
        return LoadedGraph(graph, diagnostics, path, display, lcc)

    # =====================================================================
    # Statistics and metrics
    # =====================================================================

    def stats(
        self,
        loaded: LoadedGraph,
        out: OutputDirectory,
        ccg_mode: Optional[CCGMode] = None,
    ) -> GlobalStats:
        """Basic statistics row of one graph, written as CSV and JSON."""
        mode = ccg_mode or self.config.ccg_mode
        with log_operation("stats", graph=loaded.name):
            stats = compute_global_stats(loaded.graph, mode, self.config, name=loaded.name)
        profile = structural_profile(stats)
        out.write_text(f"{loaded.stem}_stats.csv", csv_exporter.stats_table_csv([stats]))
        out.write_text(
            f"{loaded.stem}_stats.json",
            json_exporter.stats_json(stats, profile, loaded.diagnostics),
        )
        return stats

    def metrics(
        self,
        loaded: LoadedGraph,
        metrics: Sequence[MetricName],
        out: OutputDirectory,
        normalized: bool = False,
    ) -> Dict[MetricName, MetricVector]:
        """
        One CSV per metric of raw values, plus a ``_normalized`` variant when asked.

        Returns the vectors shown to the user: normalized ones when requested.
        """
        g = loaded.graph
        shown: Dict[MetricName, MetricVector] = {}
        for metric in metrics:
            with log_operation("metric", metric=metric.value, graph=loaded.name):
                raw = compute_metric(g, metric, config=self.config)
            out.write_text(f"{loaded.stem}_{metric.value}.csv", csv_exporter.metric_csv(g, raw))
            shown[metric] = raw
            if normalized:
                scaled = normalize_01(raw, g)
                out.write_text(
                    f"{loaded.stem}_{metric.value}_normalized.csv",
                    csv_exporter.metric_csv(g, scaled),
                )
                shown[metric] = scaled
        out.write_text(f"{loaded.stem}_metrics.json", json_exporter.metrics_json(g, shown))
        return shown

    # =====================================================================
    # Sampling experiments
    # =====================================================================

    def sample(
        self,
        loaded: LoadedGraph,
        sampler: SamplerConfig,
        count: int,
        out: OutputDirectory,
    ) -> SampleRun:
        """Draw ``count`` samples and write each as a SNAP edge list plus a run description."""
        with log_operation("sample", method=sampler.method.value, count=count):
            run = run_repeated(loaded.graph, sampler, count, self.config.max_workers)
        width = max(3, len(str(count - 1)))
        for i, sample in enumerate(run.samples):
            out.write_text(
                f"{loaded.stem}_{sampler.method.value}_{i:0{width}d}.txt",
                render_snap_edgelist(sample),
            )
        description = run.manifest()
        for entry, sample in zip(description["samples"], run.samples):
            if not labels_preserved(sample):
                entry["labels"] = sample.label_list()
        out.write_text(f"{loaded.stem}_samples.json", dump_json(description))
        return run

    def robustness(
        self,
        loaded: LoadedGraph,
        sampler: SamplerConfig,
        count: int,
        metrics: Sequence[MetricName],
        out: OutputDirectory,
        threshold: Optional[float] = None,
    ) -> Tuple[SampleRun, RobustnessOutcome]:
        """Sample, then correlate every sample's binned metrics with their average."""
        with log_operation("sample", method=sampler.method.value, count=count):
            run = run_repeated(loaded.graph, sampler, count, self.config.max_workers)
        with log_operation("robustness", metrics=[m.value for m in metrics]):
            outcome = robustness_reports(run, metrics, threshold, self.config)
        reports = list(outcome.reports.values())
        failures = {m.value: e.message for m, e in outcome.failures.items()}
        out.write_text(
            f"{loaded.stem}_robustness.json",
            json_exporter.robustness_json(reports, run.manifest(), failures),
        )
        out.write_text(
            f"{loaded.stem}_robustness_long.csv", csv_exporter.robustness_long_csv(reports)
        )
        out.write_text(f"{loaded.stem}_correlations.csv", csv_exporter.correlations_csv(reports))
        return run, outcome

    # =====================================================================
    # Cross-dataset comparison
    # =====================================================================

    def _report_graph(
        self, loaded: LoadedGraph, sampler: Optional[SamplerConfig]
    ) -> Graph:
        if sampler is None:
            return loaded.graph
        draw = draw_sample(loaded.graph, sampler)
        return draw.graph

    def _distributions(self, g: Graph) -> Dict[MetricName, BinnedDistribution]:
        return {
            metric: bin_distribution(compute_metric(g, metric, normalized=True, config=self.config))
            for metric in MetricName
        }

    def report(
        self,
        datasets: Sequence[LoadedGraph],
        out: OutputDirectory,
        sampler: Optional[SamplerConfig] = None,
        ccg_mode: Optional[CCGMode] = None,
    ) -> ReportResult:
        """
        Stats table and binned distributions of all six metrics for each
        dataset, on one sample each or on the whole graph when ``sampler`` is None.
        """
        if not datasets:
            raise ValidationError("report needs at least one dataset")
        mode = ccg_mode or self.config.ccg_mode
        trimmed_metrics = set(self.config.trimmed_metrics)
        stats: List[GlobalStats] = []
        slices: Dict[str, List[TrimmedDistribution]] = {}
        binned: Dict[MetricName, Dict[str, BinnedDistribution]] = {m: {} for m in MetricName}

        for loaded in datasets:
            try:
                with log_operation("report dataset", dataset=loaded.name):
                    g = self._report_graph(loaded, sampler)
                    stats.append(compute_global_stats(g, mode, self.config, name=loaded.name))
                    distributions = self._distributions(g)
            except ComputationError as e:
                raise e.with_context(dataset=loaded.name)
            slices[loaded.name] = []
            for metric, d in distributions.items():
                binned[metric][loaded.name] = d
                threshold = self.config.trim_threshold if metric in trimmed_metrics else 0
                slices[loaded.name].append(trim_bins(d.bins, metric, threshold))

        correlations = {m: cross_dataset_correlations(binned[m]) for m in MetricName}

        out.write_text("report_stats.csv", csv_exporter.stats_table_csv(stats))
        out.write_text("report_distributions.csv", csv_exporter.report_long_csv(slices))
        out.write_text(
            "report_correlations.csv",
            csv_exporter.correlation_matrix_csv({m.value: c for m, c in correlations.items()}),
        )
        out.write_text(
            "report.json",
            dump_json(
                {
                    "datasets": [d.name for d in datasets],
                    "full_graphs": sampler is None,
                    "stats": [s.model_dump(mode="json") for s in stats],
                    "profiles": [structural_profile(s).model_dump(mode="json") for s in stats],
                    "distributions": {
                        m.value: {name: d.bins for name, d in per.items()}
                        for m, per in binned.items()
                    },
                    "correlations": {m.value: matrix for m, matrix in correlations.items()},
                }
            ),
        )
        return ReportResult(stats, slices, correlations)

