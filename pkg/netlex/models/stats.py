"""Global statistics models.

GlobalStats is one row of the basic-statistics table: counts, density, highest
degree, diameter, girth, global clustering, average path length and alpha.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

ACYCLIC = "acyclic"

# Column order of the basic-statistics table.
STATS_COLUMNS = [
    "name",
    "nodes",
    "edges",
    "density",
    "HD",
    "diameter",
    "girth",
    "CCG",
    "APL",
    "alpha",
]


class CCGMode(str, Enum):
    """How the global clustering coefficient is summarised."""

    MEAN_LOCAL = "mean-local"        # mean of local coefficients, degree < 2 counts as 0
    TRANSITIVITY = "transitivity"    # 3 * triangles / connected triples


class GlobalStats(BaseModel):
    """The seven basic statistics of one graph."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(default="", description="Dataset or sample name")
    nodes: int = Field(ge=0)
    edges: int = Field(ge=0)
    density: float = Field(ge=0, description="Edges per node")
    highest_degree: int = Field(ge=0)
    diameter: int = Field(ge=0, description="Longest finite shortest path, in hops")
    girth: Optional[int] = Field(default=None, description="Shortest cycle length; None when acyclic")
    ccg: float = Field(ge=0.0, le=1.0)
    ccg_mode: CCGMode = CCGMode.MEAN_LOCAL
    apl: float = Field(ge=0.0, description="Mean shortest path over reachable pairs")
    alpha: Optional[float] = Field(default=None, description="Power-law exponent of the degree histogram")

    @model_validator(mode="after")
    def _check_relations(self) -> "GlobalStats":
        if self.girth is not None and self.girth < 3:
            raise ValueError("girth must be >= 3 when present")
        if self.apl > self.diameter + 1e-9:
            raise ValueError("apl cannot exceed diameter")
        return self

    @property
    def girth_label(self) -> str:
        return ACYCLIC if self.girth is None else str(self.girth)

    def as_row(self) -> Dict[str, Any]:
        """Values keyed by table column, in table order."""
        return {
            "name": self.name,
            "nodes": self.nodes,
            "edges": self.edges,
            "density": self.density,
            "HD": self.highest_degree,
            "diameter": self.diameter,
            "girth": self.girth_label,
            "CCG": self.ccg,
            "APL": self.apl,
            "alpha": self.alpha if self.alpha is not None else "",
        }


class StructuralProfile(BaseModel):
    """Qualitative reading of a GlobalStats row against random-graph baselines."""

    name: str = ""
    scale_free: Optional[bool] = Field(description="alpha within [1.5, 3]; None without a fit")
    linear_decay: Optional[bool] = Field(description="alpha below 1.5")
    random_ccg: float = Field(description="Erdős–Rényi expected clustering <k>/(n-1)")
    random_apl: Optional[float] = Field(description="Erdős–Rényi expected path length ln n / ln <k>")
    clustering_ratio: Optional[float] = None
    path_ratio: Optional[float] = None
    small_world: bool = False
    notes: List[str] = Field(default_factory=list)
