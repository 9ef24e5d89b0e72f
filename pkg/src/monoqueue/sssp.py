"""
Label-setting shortest paths over any monotone queue, plus the checks
used to trust the answers.
"""

import logging
import time
from enum import Enum
from typing import Iterator, List, NamedTuple, Optional, Union

from .backends import make_queue
from .exceptions import ValidationError
from .graph import Graph
from .models import Backend, OpCounters, QueueConfig
from .utils import dump_lines

logger = logging.getLogger(__name__)

UNREACHABLE = None
NO_PARENT = None


class SsspResult(NamedTuple):
    dist: List[Optional[int]]
    parent: List[Optional[int]]
    counters: OpCounters
    wall_time: int
    order: List[int]
    max_placements: int = 0


def _check_source(graph: Graph, source: int):
    if not isinstance(source, int) or not 0 <= source < graph.n:
        raise ValidationError("source outside [0, n)", {"source": source, "n": graph.n})


def dijkstra(
    graph: Graph,
    source: int,
    backend: Union[Backend, str] = Backend.DIAL,
    config: Optional[QueueConfig] = None,
) -> SsspResult:
    """
    Single-source shortest paths with lazy insertion.

    A vertex enters the queue when its label first becomes finite and is
    improved by decrease-key afterwards. The queue is sized from the graph:
    capacity n, C the maximum arc weight and max_key n*C. ``wall_time`` is
    in nanoseconds and covers the solve only.
    """
    _check_source(graph, source)
    base = config or QueueConfig(capacity_n=graph.n, max_key=0)
    queue = make_queue(backend, base.for_graph(graph))
    offsets, targets, weights = graph.adjacency()

    n = graph.n
    dist: List[Optional[int]] = [UNREACHABLE] * n
    parent: List[Optional[int]] = [NO_PARENT] * n
    done = [False] * n
    order: List[int] = []

    start = time.perf_counter_ns()
    dist[source] = 0
    queue.insert(source, 0)
    while True:
        element = queue.extract_min()
        if element is None:
            break
        u, du = element
        done[u] = True
        order.append(u)
        for a in range(offsets[u], offsets[u + 1]):
            v = targets[a]
            if done[v]:
                continue
            label = du + weights[a]
            current = dist[v]
            if current is None:
                dist[v] = label
                parent[v] = u
                queue.insert(v, label)
            elif label < current:
                dist[v] = label
                parent[v] = u
                queue.decrease_key(v, label)
    wall_time = time.perf_counter_ns() - start

    logger.debug(
        f"dijkstra[{queue.name}] n={n} m={graph.m} settled={len(order)} in {wall_time} ns"
    )
    return SsspResult(
        dist, parent, queue.counters.snapshot(), wall_time, order, queue.max_placements
    )


def bellman_ford(graph: Graph, source: int) -> SsspResult:
    """Exact distances by at most n-1 relaxation rounds, stopping early when stable."""
    _check_source(graph, source)
    arcs = list(graph.arcs())
    dist: List[Optional[int]] = [UNREACHABLE] * graph.n
    parent: List[Optional[int]] = [NO_PARENT] * graph.n
    dist[source] = 0

    start = time.perf_counter_ns()
    for _ in range(max(graph.n - 1, 0)):
        changed = False
        for u, v, w in arcs:
            du = dist[u]
            if du is None:
                continue
            dv = dist[v]
            if dv is None or du + w < dv:
                dist[v] = du + w
                parent[v] = u
                changed = True
        if not changed:
            break
    wall_time = time.perf_counter_ns() - start
    return SsspResult(dist, parent, OpCounters(), wall_time, [])


class ViolationKind(str, Enum):
    SOURCE = "source"
    PARENT = "parent"
    SLACK = "slack"
    SHAPE = "shape"


class Violation(NamedTuple):
    kind: ViolationKind
    vertex: int
    message: str

    def __str__(self):
        return f"{self.kind.value} at vertex {self.vertex + 1}: {self.message}"


def verify(graph: Graph, source: int, result: SsspResult) -> List[Violation]:
    """
    Check a result against the shortest-path tree conditions.

    Source at zero, every reachable vertex explained by its parent arc, and
    no arc that could still shorten a label. With non-negative weights
    these together mean the distances are exact.
    """
    dist, parent = result.dist, result.parent
    if len(dist) != graph.n or len(parent) != graph.n:
        return [Violation(ViolationKind.SHAPE, 0, f"expected {graph.n} entries")]

    violations = []
    if dist[source] != 0:
        violations.append(Violation(ViolationKind.SOURCE, source, f"dist {dist[source]} != 0"))
    if parent[source] is not NO_PARENT:
        violations.append(Violation(ViolationKind.SOURCE, source, "source has a parent"))

    best_parent_arc = {}
    for u, v, w in graph.arcs():
        du, dv = dist[u], dist[v]
        if du is None:
            continue
        if dv is None or du + w < dv:
            violations.append(
                Violation(ViolationKind.SLACK, v, f"arc from {u + 1} offers {du + w} < {dv}")
            )
        if parent[v] == u and dv is not None:
            best = best_parent_arc.get(v)
            if best is None or w < best:
                best_parent_arc[v] = w

    for v in range(graph.n):
        if v == source:
            continue
        p, dv = parent[v], dist[v]
        if dv is None:
            if p is not NO_PARENT:
                violations.append(Violation(ViolationKind.PARENT, v, "unreachable with a parent"))
            continue
        if p is NO_PARENT:
            violations.append(Violation(ViolationKind.PARENT, v, "reachable without a parent"))
            continue
        w = best_parent_arc.get(v)
        if w is None or dist[p] is None or dist[p] + w != dv:
            violations.append(
                Violation(ViolationKind.PARENT, v, f"dist {dv} not explained by parent {p + 1}")
            )
    return violations


def format_dump(dist: List[Optional[int]]) -> str:
    return "".join(f"{line}\n" for line in dump_lines(dist))


def iter_settled(result: SsspResult) -> Iterator[int]:
    """Distances in settling order; non-decreasing for a label-setting run."""
    for v in result.order:
        yield result.dist[v]
