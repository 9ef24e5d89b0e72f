"""
Directed graphs in compressed adjacency form, the DIMACS .gr codec and
seeded instance generators.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

from .exceptions import ParseError, ValidationError
from .models import validate_min

logger = logging.getLogger(__name__)


class Graph:
    """
    Immutable directed graph with non-negative integer arc weights.

    Arcs of vertex u are ``targets[offsets[u]:offsets[u+1]]`` with matching
    ``weights``. Self-loops are rejected.
    """

    def __init__(self, n: int, offsets, targets, weights):
        self.n = n
        self.offsets = _frozen(offsets)
        self.targets = _frozen(targets)
        self.weights = _frozen(weights)
        self.validate()

    def validate(self):
        validate_min(self.n, 0, "n")
        offsets, targets, weights = self.offsets, self.targets, self.weights
        if offsets.shape != (self.n + 1,):
            raise ValidationError("offsets must have n + 1 entries", {"n": self.n})
        if offsets[0] != 0 or np.any(np.diff(offsets) < 0):
            raise ValidationError("offsets must start at 0 and be non-decreasing")
        if offsets[-1] != len(targets) or len(targets) != len(weights):
            raise ValidationError(
                "offsets, targets and weights disagree on the arc count",
                {"offsets": int(offsets[-1]), "targets": len(targets), "weights": len(weights)},
            )
        if len(targets) and (targets.min() < 0 or targets.max() >= self.n):
            raise ValidationError("arc target outside [0, n)")
        if len(weights) and weights.min() < 0:
            raise ValidationError("arc weights must be non-negative")
        tails = np.repeat(np.arange(self.n), np.diff(offsets))
        loops = np.flatnonzero(tails == targets)
        if len(loops):
            raise ValidationError("self-loops are not allowed", {"vertex": int(tails[loops[0]])})

    @classmethod
    def from_arcs(cls, n: int, tails, heads, weights) -> "Graph":
        """Build from parallel arc arrays; arcs of one tail keep their input order."""
        tails = np.asarray(tails, dtype=np.int64)
        heads = np.asarray(heads, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.int64)
        if len(tails) and (tails.min() < 0 or tails.max() >= n):
            raise ValidationError("arc tail outside [0, n)")
        order = np.argsort(tails, kind="stable")
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(tails, minlength=n), out=offsets[1:])
        return cls(n, offsets, heads[order], weights[order])

    @property
    def m(self) -> int:
        return len(self.targets)

    @property
    def C(self) -> int:
        """Maximum arc weight, 0 without arcs."""
        return int(self.weights.max()) if self.m else 0

    @property
    def min_weight(self) -> Optional[int]:
        return int(self.weights.min()) if self.m else None

    def arcs(self) -> Iterator[Tuple[int, int, int]]:
        """(tail, head, weight) triples in adjacency order."""
        offsets, targets, weights = self.adjacency()
        for u in range(self.n):
            for a in range(offsets[u], offsets[u + 1]):
                yield u, targets[a], weights[a]

    def adjacency(self) -> Tuple[List[int], List[int], List[int]]:
        """Plain-int copies of the adjacency arrays for tight Python loops."""
        return self.offsets.tolist(), self.targets.tolist(), self.weights.tolist()

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    def __repr__(self):
        return f"<Graph n={self.n} m={self.m} C={self.C}>"


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=np.int64)
    array.setflags(write=False)
    return array


# ============== DIMACS ==============


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS shortest-path text ("c", "p sp n m" and "a u v w" lines)."""
    n = m = None
    problem_line = 0
    tails: List[int] = []
    heads: List[int] = []
    weights: List[int] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", number)
            if len(fields) != 4 or fields[1] != "sp":
                raise ParseError("problem line must read 'p sp <n> <m>'", number)
            n, m = _ints(fields[2:], number)
            if n < 1 or m < 0:
                raise ParseError("problem line needs n >= 1 and m >= 0", number)
            problem_line = number
        elif tag == "a":
            if n is None:
                raise ParseError("arc before problem line", number)
            if len(fields) != 4:
                raise ParseError("arc line must read 'a <u> <v> <w>'", number)
            u, v, w = _ints(fields[1:], number)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id outside [1, {n}]", number)
            if w < 0:
                raise ParseError("negative arc weight", number)
            if u == v:
                raise ParseError("self-loop", number)
            if len(tails) == m:
                raise ParseError(f"more than {m} arcs", number)
            tails.append(u - 1)
            heads.append(v - 1)
            weights.append(w)
        else:
            raise ParseError(f"unknown line type {tag!r}", number)

    if n is None:
        raise ParseError("missing problem line")
    if len(tails) != m:
        raise ParseError(f"expected {m} arcs, found {len(tails)}", problem_line)

    graph = Graph.from_arcs(n, tails, heads, weights)
    logger.debug(f"Parsed DIMACS graph n={graph.n} m={graph.m} C={graph.C}")
    return graph


def _ints(fields: List[str], number: int) -> List[int]:
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", number)


def format_dimacs(graph: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p sp {graph.n} {graph.m}")
    lines.extend(f"a {u + 1} {v + 1} {w}" for u, v, w in graph.arcs())
    return "\n".join(lines) + "\n"


def read_dimacs(path: Union[str, Path]) -> Graph:
    return parse_dimacs(Path(path).read_text(encoding="utf-8"))


def write_dimacs(graph: Graph, path: Union[str, Path], comment: Optional[str] = None) -> None:
    Path(path).write_text(format_dimacs(graph, comment), encoding="utf-8")
    logger.info(f"Wrote {graph!r} to {path}")


# ============== GENERATORS ==============


def _check_weights(w_min: int, w_max: int):
    validate_min(w_min, 0, "w_min")
    validate_min(w_max, 0, "w_max")
    if w_max < w_min:
        raise ValidationError("w_max must be at least w_min", {"w_min": w_min, "w_max": w_max})


def gen_random(n: int, m: int, w_min: int = 1, w_max: int = 16, seed: int = 0) -> Graph:
    """m distinct non-loop arcs drawn uniformly, weights uniform in [w_min, w_max]."""
    validate_min(n, 1, "n")
    validate_min(m, 0, "m")
    _check_weights(w_min, w_max)
    slots = n * (n - 1)
    if m > slots:
        raise ValidationError("m exceeds n * (n - 1)", {"n": n, "m": m})
    rng = np.random.default_rng(seed)
    picks = np.sort(rng.choice(slots, size=m, replace=False)) if m else np.zeros(0, np.int64)
    tails = picks // max(n - 1, 1)
    heads = picks % max(n - 1, 1)
    heads = heads + (heads >= tails)
    weights = rng.integers(w_min, w_max, size=m, endpoint=True)
    return Graph.from_arcs(n, tails, heads, weights)


def gen_grid(rows: int, cols: int, w_max: int = 16, seed: int = 0, w_min: int = 1) -> Graph:
    """rows x cols grid with arcs to the right and downward neighbours."""
    validate_min(rows, 1, "rows")
    validate_min(cols, 1, "cols")
    _check_weights(w_min, w_max)
    ids = np.arange(rows * cols).reshape(rows, cols)
    right_tails, right_heads = ids[:, :-1].ravel(), ids[:, 1:].ravel()
    down_tails, down_heads = ids[:-1, :].ravel(), ids[1:, :].ravel()
    tails = np.concatenate([right_tails, down_tails])
    heads = np.concatenate([right_heads, down_heads])
    rng = np.random.default_rng(seed)
    weights = rng.integers(w_min, w_max, size=len(tails), endpoint=True)
    return Graph.from_arcs(rows * cols, tails, heads, weights)


def gen_path(n: int, w: int, seed: int = 0) -> Graph:
    """Single path 0 -> 1 -> ... -> n-1 with constant weight w."""
    validate_min(n, 1, "n")
    validate_min(w, 0, "w")
    tails = np.arange(n - 1)
    return Graph.from_arcs(n, tails, tails + 1, np.full(n - 1, w))
