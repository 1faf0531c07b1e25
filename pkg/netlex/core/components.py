"""
Breadth-first search and connected-component utilities.
"""

from collections import deque
from typing import List, Optional

from loguru import logger

from netlex.models.exceptions import EmptyGraphError, NodeNotFoundError
from netlex.models.graph import Graph

# Distances use ``None`` for nodes the source cannot reach.
UNREACHABLE = None


def bfs_distances(g: Graph, source: int) -> List[Optional[int]]:
    """Hop distance from ``source`` to every node; ``UNREACHABLE`` where no path exists."""
    if not 0 <= source < g.node_count:
        raise NodeNotFoundError(source, g.node_count)
    dist: List[Optional[int]] = [UNREACHABLE] * g.node_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1  # type: ignore[operator]
        for w in adjacency[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def connected_components(g: Graph) -> List[List[int]]:
    """Components as sorted node lists, largest first, ties by smallest member."""
    seen = [False] * g.node_count
    components: List[List[int]] = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        members.sort()
        components.append(members)
    components.sort(key=lambda c: (-len(c), c[0]))
    return components


def is_connected(g: Graph) -> bool:
    return g.node_count > 0 and len(connected_components(g)[0]) == g.node_count


def largest_connected_component(g: Graph) -> Graph:
    """Induced subgraph on the biggest component, densely reindexed, labels kept."""
    if g.node_count == 0:
        raise EmptyGraphError("largest_connected_component")
    components = connected_components(g)
    largest = components[0]
    if len(largest) == g.node_count:
        return g
    logger.info(
        f"Largest component of {g.name or 'graph'}: {len(largest)} of {g.node_count} nodes "
        f"({len(components)} components)"
    )
    return g.induced_subgraph(largest)
