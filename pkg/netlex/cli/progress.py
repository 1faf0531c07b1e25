"""
Simple CLI Progress Indicators
Clean, Unix-style progress and result output. Progress goes to stderr so
stdout carries only results.
"""

import time
from typing import Dict, Iterable, List, Optional, Sequence

import click

from netlex.models.distributions import RobustnessReport
from netlex.models.metrics import MetricName, MetricVector
from netlex.models.stats import STATS_COLUMNS, GlobalStats


class SimpleProgress:
    """Step counter printed on one stderr line."""

    def __init__(self, description: str = "Processing", total: int = 0):
        self.description = description
        self.total_steps = total
        self.current_step = 0
        self.start_time = time.time()

    def update(self, step: int, message: str = "") -> None:
        self.current_step = step
        if self.total_steps > 0:
            text = f"{self.description}: {message} [{step}/{self.total_steps}]"
        else:
            text = f"{self.description}: {message}"
        click.echo(text, err=True)

    def complete(self, message: str = "Complete") -> None:
        elapsed = time.time() - self.start_time
        click.echo(f"{message} ({elapsed:.1f}s)", err=True)


def show_success(title: str, content: str = "", outputs: Optional[Iterable[str]] = None) -> None:
    click.echo(f"✓ {title}", err=True)
    if content:
        click.echo(f"  {content}", err=True)
    for path in outputs or []:
        click.echo(f"    {path}", err=True)


def show_warning(message: str) -> None:
    click.echo(f"! {message}", err=True)


def _format_cell(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def format_stats_table(stats: Sequence[GlobalStats]) -> str:
    """Basic-statistics table with one column per graph, rows in table order."""
    rows: List[List[str]] = []
    for column in STATS_COLUMNS:
        label = "" if column == "name" else column
        rows.append([label] + [_format_cell(s.as_row()[column]) for s in stats])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows]
    return "\n".join(lines)


def format_metric_summaries(vectors: Dict[MetricName, MetricVector]) -> str:
    lines = [f"{'metric':<14}{'min':>10}{'max':>10}{'mean':>10}"]
    for metric, vector in vectors.items():
        s = vector.summary()
        lines.append(f"{metric.value:<14}{s['min']:>10.4f}{s['max']:>10.4f}{s['mean']:>10.4f}")
    return "\n".join(lines)


def format_robustness(reports: Sequence[RobustnessReport]) -> str:
    """Correlation summary per metric and the flagged (sample, metric) pairs."""
    lines = [f"{'metric':<14}{'min r':>10}{'mean r':>10}{'spread':>10}  flagged"]
    for report in reports:
        s = report.summary()
        flagged = ",".join(str(i) for i in report.flagged) or "-"
        lines.append(
            f"{report.metric.value:<14}{s['min_correlation']:>10.4f}"
            f"{s['mean_correlation']:>10.4f}{s['spread']:>10.4f}  {flagged}"
        )
    return "\n".join(lines)
