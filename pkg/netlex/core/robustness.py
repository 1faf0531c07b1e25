"""
Sampling robustness: how well each sample's metric distribution tracks the
average over all samples of a run.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from loguru import logger

from netlex.core.distributions import average_distribution, bin_distribution, pearson_correlation
from netlex.core.node_metrics import compute_metric
from netlex.models.config import NetlexConfig
from netlex.models.distributions import BinnedDistribution, RobustnessReport
from netlex.models.exceptions import ComputationError, ValidationError
from netlex.models.metrics import MetricName
from netlex.models.sampling import SampleRun


def sample_distributions(
    run: SampleRun, metric: MetricName, config: Optional[NetlexConfig] = None
) -> List[BinnedDistribution]:
    """Binned normalized ``metric`` of every sample, in sample order."""
    cfg = config or NetlexConfig()
    distributions = []
    for index, sample in enumerate(run.samples):
        try:
            vector = compute_metric(sample, metric, normalized=True, config=cfg)
            distributions.append(bin_distribution(vector))
        except ComputationError as e:
            raise e.with_context(sample_index=index)
    return distributions


def robustness_report(
    run: SampleRun,
    metric: MetricName,
    threshold: Optional[float] = None,
    config: Optional[NetlexConfig] = None,
) -> RobustnessReport:
    """
    Bin ``metric`` on every sample, average the bins and correlate each
    sample against the average. Samples below ``threshold`` are flagged.
    """
    cfg = config or NetlexConfig()
    limit = cfg.correlation_threshold if threshold is None else threshold
    if run.sample_count == 0:
        raise ValidationError("robustness report needs at least one sample")

    distributions = sample_distributions(run, metric, cfg)
    average = average_distribution(distributions)
    correlations = []
    for index, d in enumerate(distributions):
        try:
            correlations.append(pearson_correlation(d.bins, average))
        except ComputationError as e:
            raise e.with_context(sample_index=index)
    flagged = [i for i, r in enumerate(correlations) if r < limit]

    report = RobustnessReport(
        metric=metric,
        threshold=limit,
        distributions=distributions,
        average=average,
        correlations=correlations,
        flagged=flagged,
    )
    logger.info(
        f"{metric.value}: min correlation {min(correlations):.4f} over "
        f"{run.sample_count} samples, {len(flagged)} flagged below {limit}"
    )
    return report


@dataclass
class RobustnessOutcome:
    """Reports for the metrics that succeeded and the errors of those that did not."""

    reports: Dict[MetricName, RobustnessReport] = field(default_factory=dict)
    failures: Dict[MetricName, ComputationError] = field(default_factory=dict)

    def flagged_pairs(self) -> List[tuple]:
        """(sample index, metric) for every flagged sample, ordered by metric then sample."""
        return [(i, m) for m, r in self.reports.items() for i in r.flagged]

    def spread_ranking(self) -> List[tuple]:
        """(metric, spread) sorted from the least to the most stable metric."""
        spreads = [(m, r.spread()) for m, r in self.reports.items()]
        return sorted(spreads, key=lambda item: item[1], reverse=True)


def robustness_reports(
    run: SampleRun,
    metrics: Sequence[MetricName],
    threshold: Optional[float] = None,
    config: Optional[NetlexConfig] = None,
) -> RobustnessOutcome:
    """Run ``robustness_report`` per metric; a failing metric does not stop the others."""
    outcome = RobustnessOutcome()
    for metric in metrics:
        try:
            outcome.reports[metric] = robustness_report(run, metric, threshold, config)
        except ComputationError as e:
            logger.error(f"{metric.value}: {e.message}")
            outcome.failures[metric] = e
    return outcome
