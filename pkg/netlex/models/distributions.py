"""Binned distribution and robustness report models."""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from netlex.models.metrics import MetricName

BIN_COUNT = 101


class BinnedDistribution(BaseModel):
    """Counts of normalized metric values rounded to two decimals: bin k holds values ~ k/100."""

    model_config = ConfigDict(frozen=True)

    metric: MetricName
    bins: List[int] = Field(min_length=BIN_COUNT, max_length=BIN_COUNT)
    total: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_totals(self) -> "BinnedDistribution":
        if any(c < 0 for c in self.bins):
            raise ValueError("bin counts must be non-negative")
        if sum(self.bins) != self.total:
            raise ValueError(f"bins sum to {sum(self.bins)}, total says {self.total}")
        return self


class TrimmedDistribution(BaseModel):
    """Presentation slice of a distribution with sub-threshold tails removed."""

    metric: MetricName
    first_bin: int = Field(ge=0, le=BIN_COUNT, description="Bin index of counts[0]")
    counts: List[float]
    trimmed: bool = Field(description="Whether any tail bin was cut")

    @property
    def last_bin(self) -> int:
        return self.first_bin + len(self.counts) - 1

    def items(self) -> List[tuple]:
        return [(self.first_bin + i, c) for i, c in enumerate(self.counts)]


class RobustnessReport(BaseModel):
    """Per-sample distributions of one metric, their average and each sample's correlation to it."""

    metric: MetricName
    threshold: float
    distributions: List[BinnedDistribution]
    average: List[float] = Field(min_length=BIN_COUNT, max_length=BIN_COUNT)
    correlations: List[float]
    flagged: List[int] = Field(default_factory=list, description="Sample indices below threshold")

    @model_validator(mode="after")
    def _check_lengths(self) -> "RobustnessReport":
        if len(self.correlations) != len(self.distributions):
            raise ValueError("one correlation per sample distribution is required")
        return self

    @property
    def sample_count(self) -> int:
        return len(self.distributions)

    def spread(self) -> float:
        """Population standard deviation of the per-sample correlations."""
        if not self.correlations:
            return 0.0
        mean = sum(self.correlations) / len(self.correlations)
        return (sum((c - mean) ** 2 for c in self.correlations) / len(self.correlations)) ** 0.5

    def summary(self) -> Dict[str, Optional[float]]:
        return {
            "min_correlation": min(self.correlations) if self.correlations else None,
            "mean_correlation": (
                sum(self.correlations) / len(self.correlations) if self.correlations else None
            ),
            "spread": self.spread(),
        }
