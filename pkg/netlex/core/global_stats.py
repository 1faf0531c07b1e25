"""
Graph-level statistics: density, highest degree, diameter, girth, global
clustering, average path length and the power-law exponent of the degree
histogram, plus a qualitative structural profile built from them.
"""

import math
from collections import Counter, deque
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np
from loguru import logger

from netlex.core.components import connected_components
from netlex.core.paths import distance_profile
from netlex.models.config import NetlexConfig
from netlex.models.exceptions import (
    EmptyGraphError,
    InsufficientSupportError,
    NoReachablePairsError,
    NoTriplesError,
    TooFewNodesError,
)
from netlex.models.graph import Graph
from netlex.models.stats import CCGMode, GlobalStats, StructuralProfile


def _require_nodes(g: Graph, operation: str, minimum: int = 1) -> None:
    if g.node_count == 0:
        raise EmptyGraphError(operation)
    if g.node_count < minimum:
        raise TooFewNodesError(operation, minimum, g.node_count)


def density(g: Graph) -> Fraction:
    """Edges per node, exactly."""
    _require_nodes(g, "density")
    return Fraction(g.edge_count, g.node_count)


def highest_degree(g: Graph) -> int:
    _require_nodes(g, "highest_degree")
    return max(len(neigh) for neigh in g.adjacency)


def diameter(g: Graph, config: Optional[NetlexConfig] = None) -> int:
    """Longest finite shortest path; on disconnected graphs the maximum within components."""
    _require_nodes(g, "diameter", 2)
    cfg = config or NetlexConfig()
    return distance_profile(g, cfg.path_block_size, cfg.max_workers).diameter


def average_path_length(g: Graph, config: Optional[NetlexConfig] = None) -> float:
    """Mean d(u, v) over unordered pairs joined by a path."""
    _require_nodes(g, "average_path_length", 2)
    cfg = config or NetlexConfig()
    profile = distance_profile(g, cfg.path_block_size, cfg.max_workers)
    pairs = profile.reachable_pairs
    if pairs == 0:
        raise NoReachablePairsError()
    return profile.total_distance / pairs


# ----------------------------------------------------------------------
# Triangles and clustering
# ----------------------------------------------------------------------


def node_triangle_counts(g: Graph) -> List[int]:
    """Edges among the neighbours of each node (triangles through it)."""
    sets = g.neighbor_sets
    doubled = [0] * g.node_count
    for u, v in g.edges():
        common = len(sets[u] & sets[v])
        if common:
            doubled[u] += common
            doubled[v] += common
    return [t // 2 for t in doubled]


def triangle_count(g: Graph) -> int:
    return sum(node_triangle_counts(g)) // 3


def connected_triples(g: Graph) -> int:
    """Paths of length two, counted by their centre node."""
    return sum(k * (k - 1) // 2 for k in g.degrees())


def has_triangle(g: Graph) -> bool:
    sets = g.neighbor_sets
    return any(not sets[u].isdisjoint(sets[v]) for u, v in g.edges())


def global_clustering(g: Graph, mode: CCGMode = CCGMode.MEAN_LOCAL) -> float:
    """Mean local clustering (degree < 2 contributes 0) or transitivity."""
    _require_nodes(g, "global_clustering")
    triangles = node_triangle_counts(g)
    if mode is CCGMode.TRANSITIVITY:
        triples = connected_triples(g)
        if triples == 0:
            raise NoTriplesError()
        return sum(triangles) / triples
    local = []
    for t, k in zip(triangles, g.degrees()):
        local.append(2 * t / (k * (k - 1)) if k >= 2 else 0.0)
    return math.fsum(local) / g.node_count


# ----------------------------------------------------------------------
# Girth
# ----------------------------------------------------------------------


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.node_count - len(connected_components(g))


def girth(g: Graph) -> Optional[int]:
    """Length of the shortest cycle, or ``None`` when the graph is a forest."""
    _require_nodes(g, "girth")
    if is_forest(g):
        return None
    if has_triangle(g):
        return 3
    best = g.node_count + 1
    adjacency = g.adjacency
    for root in range(g.node_count):
        if not adjacency[root]:
            continue
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
        if best == 4:
            break
    return best


# ----------------------------------------------------------------------
# Power law
# ----------------------------------------------------------------------


def degree_histogram(g: Graph) -> Dict[int, int]:
    """Degree -> number of nodes with that degree, sorted by degree."""
    return dict(sorted(Counter(g.degrees()).items()))


def fit_power_law_alpha(degree_histogram: Mapping[int, int]) -> float:
    """
    Exponent of a least-squares line through log(count) against log(degree).

    Only degrees >= 1 with a non-zero count are used; the result is the
    negated slope.
    """
    points: List[Tuple[int, int]] = sorted(
        (k, c) for k, c in degree_histogram.items() if k >= 1 and c > 0
    )
    if len(points) < 2:
        raise InsufficientSupportError(len(points))
    x = np.log(np.array([k for k, _ in points], dtype=np.float64))
    y = np.log(np.array([c for _, c in points], dtype=np.float64))
    slope, _intercept = np.polyfit(x, y, 1)
    return float(-slope)


# ----------------------------------------------------------------------
# Table row
# ----------------------------------------------------------------------


def compute_global_stats(
    g: Graph,
    ccg_mode: CCGMode = CCGMode.MEAN_LOCAL,
    config: Optional[NetlexConfig] = None,
    name: Optional[str] = None,
) -> GlobalStats:
    """All basic statistics of ``g`` as one table row."""
    _require_nodes(g, "global statistics", 2)
    cfg = config or NetlexConfig()
    profile = distance_profile(g, cfg.path_block_size, cfg.max_workers)
    if profile.reachable_pairs == 0:
        raise NoReachablePairsError()

    try:
        alpha: Optional[float] = fit_power_law_alpha(degree_histogram(g))
    except InsufficientSupportError as e:
        logger.warning(f"No power-law fit for {name or g.name or 'graph'}: {e.message}")
        alpha = None

    return GlobalStats(
        name=name if name is not None else g.name,
        nodes=g.node_count,
        edges=g.edge_count,
        density=float(density(g)),
        highest_degree=highest_degree(g),
        diameter=profile.diameter,
        girth=girth(g),
        ccg=global_clustering(g, ccg_mode),
        ccg_mode=ccg_mode,
        apl=profile.total_distance / profile.reachable_pairs,
        alpha=alpha,
    )


def structural_profile(stats: GlobalStats) -> StructuralProfile:
    """
    Read a stats row the way social-network studies usually do.

    alpha in [1.5, 3] reads as scale free; below 1.5 the degree histogram
    decays roughly linearly. Small world means clustering at least three
    times the Erdős–Rényi expectation <k>/(n-1) with a path length no more
    than twice ln n / ln <k>.
    """
    n = stats.nodes
    mean_degree = 2 * stats.edges / n if n else 0.0
    random_ccg = mean_degree / (n - 1) if n > 1 else 0.0
    random_apl = math.log(n) / math.log(mean_degree) if mean_degree > 1 and n > 1 else None
    notes: List[str] = []

    scale_free = linear_decay = None
    if stats.alpha is not None:
        scale_free = 1.5 <= stats.alpha <= 3.0
        linear_decay = stats.alpha < 1.5
        if linear_decay:
            notes.append(f"alpha {stats.alpha:.3f} < 1.5: linear decay, not scale free")

    clustering_ratio = stats.ccg / random_ccg if random_ccg > 0 else None
    path_ratio = stats.apl / random_apl if random_apl else None
    small_world = bool(
        clustering_ratio is not None
        and path_ratio is not None
        and clustering_ratio >= 3.0
        and path_ratio <= 2.0
    )
    if small_world:
        notes.append("high clustering with short paths: small world")

    return StructuralProfile(
        name=stats.name,
        scale_free=scale_free,
        linear_decay=linear_decay,
        random_ccg=random_ccg,
        random_apl=random_apl,
        clustering_ratio=clustering_ratio,
        path_ratio=path_ratio,
        small_world=small_world,
        notes=notes,
    )
