"""Per-node metric models."""

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from netlex.models.exceptions import ValidationError


class MetricName(str, Enum):
    """The six node metrics."""

    DEGREE = "degree"
    LOCAL_CC = "local-cc"
    STRENGTH = "strength"
    BETWEENNESS = "betweenness"
    ECCENTRICITY = "eccentricity"
    CLOSENESS = "closeness"

    @classmethod
    def parse(cls, name: str) -> "MetricName":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValidationError(
                f"unknown metric '{name}'", [f"Valid metrics: {valid}"]
            ) from None

    @classmethod
    def parse_list(cls, names: str) -> List["MetricName"]:
        """Comma-separated names, or 'all'."""
        if names.strip().lower() == "all":
            return list(cls)
        parsed = [cls.parse(n) for n in names.split(",") if n.strip()]
        if not parsed:
            raise ValidationError("no metrics given", [f"Use 'all' or any of: {', '.join(m.value for m in cls)}"])
        return list(dict.fromkeys(parsed))


class Normalization(str, Enum):
    RAW = "raw"
    NORMALIZED_01 = "normalized-01"


Number = Union[float, Fraction]


@dataclass(frozen=True)
class MetricVector:
    """One value per node of a single metric on a single graph."""

    metric: MetricName
    values: Tuple[Number, ...]
    normalization: Normalization = Normalization.RAW

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_normalized(self) -> bool:
        return self.normalization is Normalization.NORMALIZED_01

    def as_floats(self) -> List[float]:
        return [float(v) for v in self.values]

    def with_values(self, values: Sequence[Number], normalization: Normalization) -> "MetricVector":
        return replace(self, values=tuple(values), normalization=normalization)

    def summary(self) -> Dict[str, float]:
        """min / max / mean over nodes (zeros for an empty vector)."""
        if not self.values:
            return {"min": 0.0, "max": 0.0, "mean": 0.0}
        floats = self.as_floats()
        return {"min": min(floats), "max": max(floats), "mean": sum(floats) / len(floats)}
