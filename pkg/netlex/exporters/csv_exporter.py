"""
CSV renderings of netlex results.

UTF-8, a header row, ``\\n`` line endings and ``repr`` float formatting so the
same results always produce the same bytes.
"""

import csv
import io
from typing import Any, Iterable, List, Mapping, Optional, Sequence

from netlex.models.distributions import BinnedDistribution, RobustnessReport, TrimmedDistribution
from netlex.models.graph import Graph
from netlex.models.metrics import MetricVector
from netlex.models.stats import STATS_COLUMNS, GlobalStats


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def render_rows(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return out.getvalue()


def stats_table_csv(stats: Sequence[GlobalStats]) -> str:
    """Basic-statistics table, one row per graph."""
    return render_rows(STATS_COLUMNS, ([s.as_row()[c] for c in STATS_COLUMNS] for s in stats))


def metric_csv(g: Graph, vector: MetricVector) -> str:
    """``node_label,value`` per node in index order."""
    return render_rows(
        ["node_label", "value"],
        ((g.label(u), float(v)) for u, v in enumerate(vector.values)),
    )


def distribution_csv(d: BinnedDistribution) -> str:
    return render_rows(["bin", "count"], enumerate(d.bins))


def robustness_long_csv(reports: Sequence[RobustnessReport]) -> str:
    """
    Plot-ready long format: ``metric,sample_id,bin,count``.

    Each report contributes its samples followed by the average under
    ``sample_id`` ``average``.
    """
    rows: List[Sequence[Any]] = []
    for report in reports:
        metric = report.metric.value
        for sample_id, d in enumerate(report.distributions):
            rows.extend((metric, sample_id, k, c) for k, c in enumerate(d.bins))
        rows.extend((metric, "average", k, float(c)) for k, c in enumerate(report.average))
    return render_rows(["metric", "sample_id", "bin", "count"], rows)


def correlations_csv(reports: Sequence[RobustnessReport]) -> str:
    """``metric,sample_id,correlation,flagged`` per sample."""
    rows = []
    for report in reports:
        flagged = set(report.flagged)
        for sample_id, r in enumerate(report.correlations):
            rows.append((report.metric.value, sample_id, r, str(sample_id in flagged).lower()))
    return render_rows(["metric", "sample_id", "correlation", "flagged"], rows)


def report_long_csv(slices: Mapping[str, Sequence[TrimmedDistribution]]) -> str:
    """``dataset,metric,bin,count`` across datasets, for overlay plots."""
    rows = []
    for dataset, trimmed in slices.items():
        for t in trimmed:
            rows.extend((dataset, t.metric.value, k, c) for k, c in t.items())
    return render_rows(["dataset", "metric", "bin", "count"], rows)


def correlation_matrix_csv(
    matrices: Mapping[str, Mapping[str, Mapping[str, Optional[float]]]],
) -> str:
    """``metric,dataset_a,dataset_b,correlation``; degenerate pairs leave the cell empty."""
    rows = []
    for metric, matrix in matrices.items():
        for a, row in matrix.items():
            for b, r in row.items():
                rows.append((metric, a, b, r))
    return render_rows(["metric", "dataset_a", "dataset_b", "correlation"], rows)
