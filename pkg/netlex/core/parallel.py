"""
Fixed-block parallel map over source nodes.

Sources are cut into blocks whose boundaries depend only on the block size,
never on the worker count, and results come back in block order. Reductions
over blocks therefore add the same partial results in the same order whether
one process or many did the work.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from netlex.models.graph import Graph

T = TypeVar("T")
BlockFn = Callable[[Graph, range], T]

_worker_graph: Optional[Graph] = None


def _init_worker(g: Graph) -> None:
    global _worker_graph
    _worker_graph = g


def _run_block(task: Tuple[BlockFn, range]) -> Any:
    fn, block = task
    assert _worker_graph is not None
    return fn(_worker_graph, block)


def source_blocks(node_count: int, block_size: int) -> List[range]:
    """Contiguous ranges of at most ``block_size`` sources covering ``[0, node_count)``."""
    size = max(1, block_size)
    return [range(start, min(start + size, node_count)) for start in range(0, node_count, size)]


def map_blocks(fn: BlockFn, g: Graph, blocks: Sequence[range], workers: int = 1) -> List[T]:
    """Apply ``fn(g, block)`` to every block; results are ordered like ``blocks``."""
    if workers <= 1 or len(blocks) <= 1:
        return [fn(g, block) for block in blocks]
    workers = min(workers, len(blocks))
    logger.debug(f"Mapping {len(blocks)} source blocks over {workers} worker processes")
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(g,)
    ) as pool:
        return list(pool.map(_run_block, [(fn, block) for block in blocks]))
