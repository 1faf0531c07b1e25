"""Configuration Data Models

Pydantic model for every netlex tunable, with validated ranges and defaults.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from netlex.models.metrics import MetricName
from netlex.models.stats import CCGMode


class NetlexConfig(BaseModel):
    """Configuration model with validation and defaults."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "log_level": "INFO",
                "ccg_mode": "mean-local",
                "correlation_threshold": 0.9,
                "trim_threshold": 1,
                "max_workers": 4,
            }
        },
    )

    # Logging settings
    log_level: str = Field(
        default="INFO",
        description="Logging level for console output",
        pattern="^(TRACE|DEBUG|INFO|SUCCESS|WARNING|ERROR|CRITICAL)$",
    )

    # Statistics
    ccg_mode: CCGMode = Field(
        default=CCGMode.MEAN_LOCAL, description="Global clustering definition"
    )

    # Robustness experiment
    correlation_threshold: float = Field(
        default=0.90,
        ge=-1.0,
        le=2.0,
        description="Samples correlating below this with the average are flagged",
    )

    # Presentation trimming
    trim_threshold: int = Field(
        default=1, ge=0, description="Tail bins with fewer nodes than this are trimmed"
    )
    trimmed_metrics: List[MetricName] = Field(
        default_factory=lambda: [
            MetricName.DEGREE,
            MetricName.STRENGTH,
            MetricName.BETWEENNESS,
            MetricName.CLOSENESS,
        ],
        description="Metrics whose extreme bins are cut in reports",
    )

    # Performance settings
    max_workers: int = Field(
        default=1, ge=1, le=64, description="Worker processes for per-source loops"
    )
    path_block_size: int = Field(
        default=256, ge=1, le=65536, description="Sources per shortest-path block"
    )
    betweenness_block_size: int = Field(
        default=64, ge=1, le=65536, description="Sources per betweenness reduction block"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, v: object) -> object:
        return v.upper() if isinstance(v, str) else v
