"""Sampling configuration and repeated-sampling run models."""

from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field

from netlex.models.graph import Graph

SEED_MIN = 0
SEED_MAX = 2**64 - 1


class SamplingMethod(str, Enum):
    NODE = "node"            # induced subgraph on uniformly drawn nodes
    LINK = "link"            # uniformly drawn edges and their endpoints
    SNOWBALL = "snowball"    # BFS from a random seed node


class ExhaustionPolicy(str, Enum):
    ERROR = "error"
    RESEED = "reseed"


class SamplerConfig(BaseModel):
    """How one sample is drawn."""

    model_config = ConfigDict(frozen=True)

    method: SamplingMethod
    target_size: int = Field(ge=1, description="Nodes per sample")
    rng_seed: int = Field(ge=SEED_MIN, le=SEED_MAX)
    on_exhaustion: ExhaustionPolicy = ExhaustionPolicy.ERROR

    def for_sample(self, index: int) -> "SamplerConfig":
        """Config of sample ``index`` in a repeated run: seed, seed+1, ..."""
        return self.model_copy(update={"rng_seed": self.rng_seed + index})


class ExhaustionEvent(BaseModel):
    """A sampler ran out of reachable nodes or edges and applied its policy."""

    sample_index: int
    kind: str = Field(description="'reseed' or 'short'")
    detail: str
    collected: int = Field(description="Nodes collected when the event fired")


class SampleRun(BaseModel):
    """Artifacts of one repeated-sampling run."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    source: str = Field(description="Name of the source graph")
    source_nodes: int
    source_edges: int
    config: SamplerConfig
    samples: List[Graph] = Field(default_factory=list)
    exhaustion_events: List[ExhaustionEvent] = Field(default_factory=list)

    @property
    def sample_count(self) -> int:
        return len(self.samples)

    def manifest(self) -> Dict[str, Any]:
        """JSON-ready description of the run (no graph payloads)."""
        return {
            "source": self.source,
            "source_nodes": self.source_nodes,
            "source_edges": self.source_edges,
            "method": self.config.method.value,
            "target_size": self.config.target_size,
            "seed": self.config.rng_seed,
            "on_exhaustion": self.config.on_exhaustion.value,
            "sample_count": self.sample_count,
            "samples": [
                {
                    "index": i,
                    "seed": self.config.rng_seed + i,
                    "nodes": s.node_count,
                    "edges": s.edge_count,
                }
                for i, s in enumerate(self.samples)
            ],
            "exhaustion_events": [e.model_dump(mode="json") for e in self.exhaustion_events],
        }
