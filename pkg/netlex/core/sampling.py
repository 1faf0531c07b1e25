"""
Node, link and snowball samplers and the repeated-sampling protocol.

Every sampler is a pure function of (graph, config): all randomness comes
from ``numpy.random.default_rng(config.rng_seed)``. Sample ``i`` of a
repeated run uses seed ``rng_seed + i``.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np
from loguru import logger

from netlex.models.exceptions import ComputationError, SampleExhaustedError, SamplingError
from netlex.models.graph import Graph
from netlex.models.sampling import (
    ExhaustionEvent,
    ExhaustionPolicy,
    SampleRun,
    SamplerConfig,
    SamplingMethod,
)


@dataclass
class SampleDraw:
    """A sample plus the exhaustion events that fired while drawing it."""

    graph: Graph
    events: List[ExhaustionEvent] = field(default_factory=list)


def _require_method(cfg: SamplerConfig, method: SamplingMethod) -> None:
    if cfg.method is not method:
        raise SamplingError(f"config method is '{cfg.method.value}', expected '{method.value}'")


def _require_size(g: Graph, cfg: SamplerConfig) -> None:
    if cfg.target_size > g.node_count:
        raise SampleExhaustedError(
            f"target size {cfg.target_size} exceeds the {g.node_count} nodes of the source",
            component_size=g.node_count,
        )


def _sample_name(g: Graph, cfg: SamplerConfig) -> str:
    return f"{g.name or 'graph'}-{cfg.method.value}-{cfg.rng_seed}"


# ----------------------------------------------------------------------
# Node sampling
# ----------------------------------------------------------------------


def draw_node_sample(g: Graph, cfg: SamplerConfig) -> SampleDraw:
    _require_method(cfg, SamplingMethod.NODE)
    _require_size(g, cfg)
    rng = np.random.default_rng(cfg.rng_seed)
    chosen = rng.choice(g.node_count, size=cfg.target_size, replace=False)
    nodes = sorted(int(u) for u in chosen)
    return SampleDraw(g.induced_subgraph(nodes, name=_sample_name(g, cfg)))


def node_sample(g: Graph, cfg: SamplerConfig) -> Graph:
    """Induced subgraph on ``target_size`` uniformly drawn nodes."""
    return draw_node_sample(g, cfg).graph


# ----------------------------------------------------------------------
# Link sampling
# ----------------------------------------------------------------------


def draw_link_sample(g: Graph, cfg: SamplerConfig, sample_index: int = 0) -> SampleDraw:
    _require_method(cfg, SamplingMethod.LINK)
    if cfg.target_size < 2:
        raise SamplingError(
            f"link sampling needs a target size of at least 2, got {cfg.target_size}",
            ["Every drawn edge adds two nodes; use --size 2 or more"],
        )
    if g.edge_count == 0:
        raise SamplingError("link sampling needs at least one edge")
    rng = np.random.default_rng(cfg.rng_seed)
    edges = list(g.edges())
    collected: Dict[int, None] = {}
    drawn: List[tuple] = []
    for i in rng.permutation(len(edges)):
        u, v = edges[int(i)]
        new = (u not in collected) + (v not in collected)
        if len(collected) + new > cfg.target_size:
            break
        collected.setdefault(u)
        collected.setdefault(v)
        drawn.append((u, v))

    events: List[ExhaustionEvent] = []
    if len(collected) < cfg.target_size - 1:
        detail = (
            f"edges exhausted with {len(collected)} of {cfg.target_size} nodes collected"
        )
        if cfg.on_exhaustion is ExhaustionPolicy.ERROR:
            raise SampleExhaustedError(detail, component_size=len(collected))
        logger.warning(f"Link sample {sample_index}: {detail}")
        events.append(
            ExhaustionEvent(
                sample_index=sample_index, kind="short", detail=detail, collected=len(collected)
            )
        )
    return SampleDraw(g.edge_subgraph(drawn, name=_sample_name(g, cfg)), events)


def link_sample(g: Graph, cfg: SamplerConfig) -> Graph:
    """Uniformly drawn edges and their endpoints, stopping before the node budget is exceeded."""
    return draw_link_sample(g, cfg).graph


# ----------------------------------------------------------------------
# Snowball sampling
# ----------------------------------------------------------------------


def draw_snowball_sample(
    g: Graph,
    cfg: SamplerConfig,
    seed_node: Optional[int] = None,
    sample_index: int = 0,
) -> SampleDraw:
    _require_method(cfg, SamplingMethod.SNOWBALL)
    _require_size(g, cfg)
    rng = np.random.default_rng(cfg.rng_seed)
    adjacency = g.adjacency
    target = cfg.target_size

    start = int(rng.integers(g.node_count)) if seed_node is None else seed_node
    g.neighbors(start)  # range check
    visited = {start}
    collected = [start]
    level = [start]
    events: List[ExhaustionEvent] = []

    while len(collected) < target:
        frontier: List[int] = []
        for u in level:
            for w in adjacency[u]:
                if w not in visited:
                    visited.add(w)
                    frontier.append(w)
        if not frontier:
            detail = (
                f"component of seed node {start} exhausted after {len(collected)} "
                f"of {target} nodes"
            )
            if cfg.on_exhaustion is ExhaustionPolicy.ERROR:
                raise SampleExhaustedError(
                    f"{detail} (component size {len(collected)})", component_size=len(collected)
                )
            remaining = [u for u in range(g.node_count) if u not in visited]
            start = int(remaining[int(rng.integers(len(remaining)))])
            logger.debug(f"Snowball sample {sample_index}: {detail}; reseeding at {start}")
            events.append(
                ExhaustionEvent(
                    sample_index=sample_index, kind="reseed", detail=detail, collected=len(collected)
                )
            )
            visited.add(start)
            collected.append(start)
            level = [start]
            continue
        shuffled = [frontier[int(i)] for i in rng.permutation(len(frontier))]
        take = shuffled[: target - len(collected)]
        collected.extend(take)
        level = take

    return SampleDraw(g.induced_subgraph(sorted(collected), name=_sample_name(g, cfg)), events)


def snowball_sample(g: Graph, cfg: SamplerConfig, seed_node: Optional[int] = None) -> Graph:
    """BFS from a uniform seed node with shuffled levels; induced subgraph on the collected nodes."""
    return draw_snowball_sample(g, cfg, seed_node=seed_node).graph


# ----------------------------------------------------------------------
# Repeated sampling
# ----------------------------------------------------------------------


def draw_sample(g: Graph, cfg: SamplerConfig, sample_index: int = 0) -> SampleDraw:
    """Dispatch on ``cfg.method``."""
    if cfg.method is SamplingMethod.NODE:
        return draw_node_sample(g, cfg)
    if cfg.method is SamplingMethod.LINK:
        return draw_link_sample(g, cfg, sample_index)
    return draw_snowball_sample(g, cfg, sample_index=sample_index)


def _draw_indexed(args: tuple) -> SampleDraw:
    g, cfg, index = args
    try:
        return draw_sample(g, cfg.for_sample(index), index)
    except ComputationError as e:
        raise e.with_context(sample_index=index)


def run_repeated(g: Graph, cfg: SamplerConfig, count: int, workers: int = 1) -> SampleRun:
    """``count`` independent samples with seeds rng_seed, rng_seed + 1, ..., ordered by index."""
    if count < 1:
        raise SamplingError(f"sample count must be >= 1, got {count}")
    tasks = [(g, cfg, i) for i in range(count)]
    if workers <= 1 or count == 1:
        draws = [_draw_indexed(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, count)) as pool:
            draws = list(pool.map(_draw_indexed, tasks))

    run = SampleRun(
        source=g.name,
        source_nodes=g.node_count,
        source_edges=g.edge_count,
        config=cfg,
        samples=[d.graph for d in draws],
        exhaustion_events=[event for d in draws for event in d.events],
    )
    logger.info(
        f"Drew {count} {cfg.method.value} samples of {cfg.target_size} nodes from "
        f"{g.name or 'graph'} (seed {cfg.rng_seed})"
    )
    return run


SAMPLERS: Dict[SamplingMethod, Callable[[Graph, SamplerConfig], Graph]] = {
    SamplingMethod.NODE: node_sample,
    SamplingMethod.LINK: link_sample,
    SamplingMethod.SNOWBALL: snowball_sample,
}
