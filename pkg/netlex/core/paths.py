"""
All-pairs shortest-path profile for distance-based statistics.

One sparse BFS sweep (scipy ``csgraph``) per block of sources yields, for
every node, the maximum finite distance, the sum of finite distances and the
number of reachable nodes. Diameter, average path length, eccentricity and
closeness are all read off this profile. Every quantity is an integer, so the
profile is identical for any block size or worker count.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import shortest_path

from netlex.core.parallel import map_blocks, source_blocks
from netlex.models.graph import Graph

# Upper bound on distance-matrix cells materialised per block (float64).
MAX_BLOCK_CELLS = 1 << 24


@dataclass(frozen=True)
class DistanceProfile:
    """Per-node reductions of the distance matrix."""

    max_distance: np.ndarray   # int64, 0 for isolated nodes
    distance_sum: np.ndarray   # int64, over reachable nodes only
    reachable: np.ndarray      # int64, reachable nodes excluding self

    @property
    def diameter(self) -> int:
        return int(self.max_distance.max()) if self.max_distance.size else 0

    @property
    def reachable_pairs(self) -> int:
        """Unordered pairs of distinct nodes joined by a path."""
        return int(self.reachable.sum()) // 2

    @property
    def total_distance(self) -> int:
        """Sum of d(u, v) over unordered reachable pairs."""
        return int(self.distance_sum.sum()) // 2


@lru_cache(maxsize=8)
def adjacency_matrix(g: Graph) -> csr_array:
    """Unit-weight CSR adjacency of ``g``."""
    degrees = np.fromiter((len(neigh) for neigh in g.adjacency), dtype=np.int64, count=g.node_count)
    indptr = np.zeros(g.node_count + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    indices = np.fromiter(
        (w for neigh in g.adjacency for w in neigh), dtype=np.int32, count=int(indptr[-1])
    )
    data = np.ones(indices.shape[0], dtype=np.float64)
    return csr_array((data, indices, indptr), shape=(g.node_count, g.node_count))


def distance_rows(g: Graph, sources: range) -> np.ndarray:
    """Hop distances from each source (rows) to every node; -1 marks unreachable."""
    if len(sources) == 0:
        return np.zeros((0, g.node_count), dtype=np.int64)
    dist = shortest_path(
        adjacency_matrix(g),
        method="D",
        directed=False,
        unweighted=True,
        indices=np.arange(sources.start, sources.stop, dtype=np.int64),
    )
    dist = np.atleast_2d(dist)
    unreachable = ~np.isfinite(dist)
    rows = np.where(unreachable, -1, dist).astype(np.int64)
    return rows


def _profile_block(g: Graph, sources: range) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows = distance_rows(g, sources)
    finite = rows > 0
    max_d = np.where(finite, rows, 0).max(axis=1) if rows.shape[1] else np.zeros(len(sources), np.int64)
    sums = np.where(finite, rows, 0).sum(axis=1, dtype=np.int64)
    reach = finite.sum(axis=1, dtype=np.int64)
    return max_d.astype(np.int64), sums, reach


def effective_block_size(node_count: int, block_size: int) -> int:
    """Cap rows per block so a block never exceeds ``MAX_BLOCK_CELLS`` cells."""
    if node_count == 0:
        return max(1, block_size)
    return max(1, min(block_size, MAX_BLOCK_CELLS // node_count))


@lru_cache(maxsize=8)
def distance_profile(g: Graph, block_size: int = 256, workers: int = 1) -> DistanceProfile:
    """Distance reductions for every node of ``g``."""
    n = g.node_count
    blocks = source_blocks(n, effective_block_size(n, block_size))
    parts = map_blocks(_profile_block, g, blocks, workers)
    if parts:
        max_d = np.concatenate([p[0] for p in parts])
        sums = np.concatenate([p[1] for p in parts])
        reach = np.concatenate([p[2] for p in parts])
    else:
        max_d = sums = reach = np.zeros(0, dtype=np.int64)
    for array in (max_d, sums, reach):
        array.setflags(write=False)
    return DistanceProfile(max_d, sums, reach)
