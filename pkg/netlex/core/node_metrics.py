"""
Per-node metrics.

Element level: degree. Group level: local clustering coefficient and
strength (3- and 4-cycles through incident edges against their maximum).
Network level: betweenness, eccentricity and closeness, the last two in
their reciprocal forms 1/max d and 1/sum d.
"""

import math
from collections import deque
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from netlex.core.global_stats import node_triangle_counts
from netlex.core.parallel import map_blocks, source_blocks
from netlex.core.paths import distance_profile
from netlex.models.config import NetlexConfig
from netlex.models.exceptions import TooFewNodesError
from netlex.models.graph import Graph
from netlex.models.metrics import MetricName, MetricVector, Normalization, Number


def degree_vector(g: Graph) -> MetricVector:
    return MetricVector(MetricName.DEGREE, tuple(float(k) for k in g.degrees()))


def local_clustering_vector(g: Graph) -> MetricVector:
    """cc(n) = 2 e_n / (k_n (k_n - 1)); 0 when k_n < 2."""
    values = []
    for e_n, k in zip(node_triangle_counts(g), g.degrees()):
        values.append(2 * e_n / (k * (k - 1)) if k >= 2 else 0.0)
    return MetricVector(MetricName.LOCAL_CC, tuple(values))


# ----------------------------------------------------------------------
# Strength
# ----------------------------------------------------------------------


def edge_strength_counts(g: Graph, u: int, v: int) -> Tuple[int, int, int]:
    """
    (gamma3, gamma4, gamma_max) for edge {u, v}.

    W is the common neighbourhood, M_u and M_v the private ones. gamma4 counts
    edges between M_u and M_v, between W and either side, and inside W (once).
    """
    g.require_edge(u, v)
    sets = g.neighbor_sets
    if len(sets[u]) > len(sets[v]):
        u, v = v, u
    nu, nv = sets[u], sets[v]
    common = nu & nv
    w = len(common)
    m_u = len(nu) - 1 - w
    m_v = len(nv) - 1 - w

    # Ordered pairs (x, y), x ~ u, y ~ v, x ~ y, excluding u and v themselves.
    # Pairs inside W appear in both orders.
    pairs = 0
    for x in nu:
        if x != v:
            pairs += len(sets[x] & nv) - 1
    inside_w = sum(len(sets[x] & common) for x in common) // 2
    gamma4 = pairs - inside_w
    gamma_max = w + m_u * m_v + w * m_u + w * m_v + w * (w - 1) // 2
    return w, gamma4, gamma_max


def edge_strength(g: Graph, u: int, v: int) -> float:
    """(gamma3 + gamma4) / gamma_max, 0 when no such cycle is possible."""
    gamma3, gamma4, gamma_max = edge_strength_counts(g, u, v)
    if gamma_max == 0:
        return 0.0
    return (gamma3 + gamma4) / gamma_max


def strength_vector(g: Graph) -> MetricVector:
    """Mean strength of incident edges; 0 for isolated nodes."""
    incident: List[List[float]] = [[] for _ in range(g.node_count)]
    for u, v in g.edges():
        s = edge_strength(g, u, v)
        incident[u].append(s)
        incident[v].append(s)
    values = tuple(math.fsum(ss) / len(ss) if ss else 0.0 for ss in incident)
    return MetricVector(MetricName.STRENGTH, values)


# ----------------------------------------------------------------------
# Betweenness (Brandes accumulation)
# ----------------------------------------------------------------------


def _brandes_block(g: Graph, sources: range, exact: bool = False) -> List[Number]:
    adjacency = g.adjacency
    n = g.node_count
    zero: Number = Fraction(0) if exact else 0.0
    partial: List[Number] = [zero] * n
    for s in sources:
        stack: List[int] = []
        preds: List[List[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[s] = 1
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v] + 1
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta: List[Number] = [zero] * n
        while stack:
            w = stack.pop()
            if exact:
                coeff: Number = (1 + delta[w]) / Fraction(sigma[w])
            else:
                coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                partial[w] += delta[w]
    return partial


def _brandes_block_exact(g: Graph, sources: range) -> List[Number]:
    return _brandes_block(g, sources, exact=True)


def _pair_normalizer(n: int) -> int:
    """Unordered pairs not containing a given node: (n-1)(n-2)/2."""
    return (n - 1) * (n - 2) // 2


def betweenness_vector(
    g: Graph,
    normalized: bool = False,
    exact: bool = False,
    config: Optional[NetlexConfig] = None,
) -> MetricVector:
    """
    Sum over unordered pairs {u, w} not containing v of the share of shortest
    u-w paths through v. Normalized values divide by (n-1)(n-2)/2.

    With ``exact`` the accumulation runs on Fractions and the vector holds
    exact rationals.
    """
    cfg = config or NetlexConfig()
    n = g.node_count
    blocks = source_blocks(n, cfg.betweenness_block_size)
    fn = _brandes_block_exact if exact else _brandes_block
    parts = map_blocks(fn, g, blocks, cfg.max_workers)

    zero: Number = Fraction(0) if exact else 0.0
    totals: List[Number] = [zero] * n
    for part in parts:
        for v in range(n):
            totals[v] += part[v]
    # Each unordered pair was accumulated from both endpoints.
    values: List[Number] = [t / 2 for t in totals]

    normalization = Normalization.RAW
    if normalized:
        values = _normalize_betweenness(values, n)
        normalization = Normalization.NORMALIZED_01
    return MetricVector(MetricName.BETWEENNESS, tuple(values), normalization)


def _normalize_betweenness(values: List[Number], n: int) -> List[Number]:
    pairs = _pair_normalizer(n)
    if pairs == 0:
        return [type(v)(0) for v in values]
    return [_clamp01(v / pairs) for v in values]


# ----------------------------------------------------------------------
# Eccentricity and closeness
# ----------------------------------------------------------------------


def eccentricity_vector(g: Graph, config: Optional[NetlexConfig] = None) -> MetricVector:
    """1 / max finite d(v, u); 0 for isolated nodes."""
    cfg = config or NetlexConfig()
    profile = distance_profile(g, cfg.path_block_size, cfg.max_workers)
    values = tuple(1.0 / int(m) if m > 0 else 0.0 for m in profile.max_distance)
    return MetricVector(MetricName.ECCENTRICITY, values)


def closeness_vector(g: Graph, config: Optional[NetlexConfig] = None) -> MetricVector:
    """1 / sum of finite d(v, u); 0 for isolated nodes."""
    cfg = config or NetlexConfig()
    profile = distance_profile(g, cfg.path_block_size, cfg.max_workers)
    values = tuple(1.0 / int(s) if s > 0 else 0.0 for s in profile.distance_sum)
    return MetricVector(MetricName.CLOSENESS, values)


# ----------------------------------------------------------------------
# Normalization and dispatch
# ----------------------------------------------------------------------


def _clamp01(value: Number) -> Number:
    if value < 0:
        return type(value)(0)
    if value > 1:
        return type(value)(1)
    return value


def normalize_01(m: MetricVector, g: Graph) -> MetricVector:
    """
    Map a raw vector into [0, 1]: degree / (n-1), betweenness in its
    normalized form, closeness * (n-1); local-cc, strength and eccentricity
    already lie in [0, 1]. Results are clamped against rounding.
    """
    if m.is_normalized:
        return m
    n = g.node_count
    if n < 2:
        raise TooFewNodesError(f"normalizing {m.metric.value}", 2, n)
    if m.metric is MetricName.DEGREE:
        values = [v / (n - 1) for v in m.values]
    elif m.metric is MetricName.BETWEENNESS:
        return m.with_values(_normalize_betweenness(list(m.values), n), Normalization.NORMALIZED_01)
    elif m.metric is MetricName.CLOSENESS:
        values = [v * (n - 1) for v in m.values]
    else:
        values = list(m.values)
    return m.with_values([_clamp01(v) for v in values], Normalization.NORMALIZED_01)


_RAW_METRICS: Dict[MetricName, Callable[[Graph, NetlexConfig], MetricVector]] = {
    MetricName.DEGREE: lambda g, cfg: degree_vector(g),
    MetricName.LOCAL_CC: lambda g, cfg: local_clustering_vector(g),
    MetricName.STRENGTH: lambda g, cfg: strength_vector(g),
    MetricName.BETWEENNESS: lambda g, cfg: betweenness_vector(g, config=cfg),
    MetricName.ECCENTRICITY: lambda g, cfg: eccentricity_vector(g, cfg),
    MetricName.CLOSENESS: lambda g, cfg: closeness_vector(g, cfg),
}


def compute_metric(
    g: Graph,
    metric: MetricName,
    normalized: bool = False,
    config: Optional[NetlexConfig] = None,
) -> MetricVector:
    """Compute ``metric`` for every node, optionally mapped into [0, 1]."""
    cfg = config or NetlexConfig()
    vector = _RAW_METRICS[metric](g, cfg)
    return normalize_01(vector, g) if normalized else vector
