"""JSON renderings of netlex results; keys are always sorted."""

from typing import Any, Dict, Mapping, Optional, Sequence

from netlex.models.distributions import RobustnessReport
from netlex.models.graph import Graph, ParseDiagnostics
from netlex.models.metrics import MetricName, MetricVector
from netlex.models.stats import GlobalStats, StructuralProfile
from netlex.utils.file_utils import dump_json


def stats_json(
    stats: GlobalStats,
    profile: Optional[StructuralProfile] = None,
    diagnostics: Optional[ParseDiagnostics] = None,
) -> str:
    payload: Dict[str, Any] = {"stats": stats.model_dump(mode="json")}
    if profile is not None:
        payload["profile"] = profile.model_dump(mode="json")
    if diagnostics is not None:
        payload["diagnostics"] = diagnostics.model_dump(mode="json")
    return dump_json(payload)


def metrics_json(g: Graph, vectors: Mapping[MetricName, MetricVector]) -> str:
    """Per-metric values keyed by node label plus a min/max/mean summary."""
    labels = g.label_list()
    payload = {
        metric.value: {
            "normalization": vector.normalization.value,
            "summary": vector.summary(),
            "values": dict(zip(labels, vector.as_floats())),
        }
        for metric, vector in vectors.items()
    }
    return dump_json({"graph": g.name, "nodes": g.node_count, "metrics": payload})


def robustness_json(
    reports: Sequence[RobustnessReport],
    run_manifest: Mapping[str, Any],
    failures: Mapping[str, str],
) -> str:
    """Reports keyed by metric, the sample-run manifest and per-metric failures."""
    return dump_json(
        {
            "run": dict(run_manifest),
            "reports": {
                r.metric.value: {**r.model_dump(mode="json"), "summary": r.summary()}
                for r in reports
            },
            "failures": dict(failures),
        }
    )
