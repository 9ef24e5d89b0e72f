from .backends import make_queue
from .base import MonotoneQueue
from .exceptions import MonoqueueError, QueueError
from .graph import Graph, parse_dimacs, read_dimacs, write_dimacs
from .models import Backend, Element, OpCounters, QueueConfig
from .sssp import UNREACHABLE, SsspResult, bellman_ford, dijkstra, verify

__all__ = [
    "Backend",
    "Element",
    "Graph",
    "MonoqueueError",
    "MonotoneQueue",
    "OpCounters",
    "QueueConfig",
    "QueueError",
    "SsspResult",
    "UNREACHABLE",
    "bellman_ford",
    "dijkstra",
    "make_queue",
    "parse_dimacs",
    "read_dimacs",
    "verify",
    "write_dimacs",
]
