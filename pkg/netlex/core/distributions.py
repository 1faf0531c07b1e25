"""
Binning, averaging and correlating normalized metric distributions.

A normalized value v lands in bin round(100 * v), rounding half up at two
decimals, so the 101 bins cover 0.00, 0.01, ..., 1.00.
"""

from decimal import ROUND_HALF_UP, Decimal
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np
from loguru import logger

from netlex.models.distributions import BIN_COUNT, BinnedDistribution, TrimmedDistribution
from netlex.models.exceptions import DegenerateDistributionError, ValidationError
from netlex.models.metrics import MetricName, MetricVector, Number

_HUNDREDTH = Decimal("0.01")


def bin_index(value: Number) -> int:
    """Bin of a normalized value; values outside [0, 1] are rejected."""
    if not 0 <= value <= 1:
        raise ValidationError(f"value {value} is outside [0, 1]; normalize before binning")
    rounded = Decimal(str(float(value))).quantize(_HUNDREDTH, rounding=ROUND_HALF_UP)
    return int(rounded * 100)


def bin_distribution(m: MetricVector) -> BinnedDistribution:
    """Histogram of a normalized-01 vector over the 101 bins."""
    if not m.is_normalized:
        raise ValidationError(
            f"{m.metric.value} vector is raw; binning needs normalized-01 values",
            ["Compute the metric with normalized=True or pass it through normalize_01"],
        )
    bins = [0] * BIN_COUNT
    for value in m.values:
        bins[bin_index(value)] += 1
    return BinnedDistribution(metric=m.metric, bins=bins, total=len(m.values))


def average_distribution(distributions: Sequence[BinnedDistribution]) -> List[float]:
    """Per-bin arithmetic mean over distributions of the same metric."""
    if not distributions:
        raise ValidationError("cannot average an empty list of distributions")
    metrics = {d.metric for d in distributions}
    if len(metrics) > 1:
        names = ", ".join(sorted(m.value for m in metrics))
        raise ValidationError(f"cannot average distributions of different metrics ({names})")
    counts = np.array([d.bins for d in distributions], dtype=np.float64)
    return [float(x) for x in counts.mean(axis=0)]


def pearson_correlation(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson product-moment correlation of two 101-bin vectors."""
    if len(x) != BIN_COUNT or len(y) != BIN_COUNT:
        raise ValidationError(
            f"correlation needs two vectors of {BIN_COUNT} bins, got {len(x)} and {len(y)}"
        )
    a = np.asarray(x, dtype=np.float64)
    b = np.asarray(y, dtype=np.float64)
    da = a - a.mean()
    db = b - b.mean()
    sa = float(np.dot(da, da))
    sb = float(np.dot(db, db))
    if sa == 0.0:
        raise DegenerateDistributionError("first vector")
    if sb == 0.0:
        raise DegenerateDistributionError("second vector")
    r = float(np.dot(da, db)) / float(np.sqrt(sa * sb))
    return max(-1.0, min(1.0, r))


def trim_bins(
    counts: Sequence[float],
    metric: MetricName,
    threshold: float = 1,
) -> TrimmedDistribution:
    """
    Drop leading and trailing bins whose count is below ``threshold``.

    Interior bins are kept whatever their count. The input is not modified.
    """
    keep = [i for i, c in enumerate(counts) if c >= threshold]
    if not keep:
        logger.warning(
            f"Every {metric.value} bin is below the trim threshold {threshold}; empty slice"
        )
        return TrimmedDistribution(metric=metric, first_bin=0, counts=[], trimmed=bool(counts))
    first, last = keep[0], keep[-1]
    sliced = [float(c) for c in counts[first : last + 1]]
    return TrimmedDistribution(
        metric=metric,
        first_bin=first,
        counts=sliced,
        trimmed=first > 0 or last < len(counts) - 1,
    )


def cross_dataset_correlations(
    distributions: Mapping[str, BinnedDistribution],
) -> Dict[str, Dict[str, Optional[float]]]:
    """
    Pairwise Pearson matrix between datasets' distributions of one metric.

    Pairs involving a zero-variance distribution are ``None``; the diagonal is
    1.0 for non-degenerate distributions.
    """
    metrics = {d.metric for d in distributions.values()}
    if len(metrics) > 1:
        raise ValidationError("cross-dataset correlations need distributions of a single metric")
    names = list(distributions)
    matrix: Dict[str, Dict[str, Optional[float]]] = {a: {} for a in names}
    for a in names:
        bins = distributions[a].bins
        matrix[a][a] = None if len(set(bins)) == 1 else 1.0
    for a, b in combinations(names, 2):
        try:
            r: Optional[float] = pearson_correlation(distributions[a].bins, distributions[b].bins)
        except DegenerateDistributionError:
            logger.debug(f"Degenerate pair {a} / {b}; correlation left empty")
            r = None
        matrix[a][b] = matrix[b][a] = r
    return matrix
