"""
Value models for queue configuration, instrumentation and benchmarking.
"""

import json
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, NamedTuple, Optional, Union

from .exceptions import ConfigurationError, ValidationError
from .utils import ceil_root

if TYPE_CHECKING:
    from .graph import Graph

MAX_WORD = 2**64 - 1

# ============== VALIDATION UTILITIES ==============


def validate_min(value: Optional[int], minimum: int, field_name: str):
    """Validate an integer lower bound."""
    if value is None:
        return
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{field_name} must be an integer", {field_name: value})
    if value < minimum:
        raise ValidationError(
            f"{field_name} must be at least {minimum}", {field_name: value}
        )


def validate_word(value: Optional[int], field_name: str):
    """Validate that a value fits an unsigned 64-bit machine word."""
    validate_min(value, 0, field_name)
    if value is not None and value > MAX_WORD:
        raise ValidationError(
            f"{field_name} must fit in 64 bits", {field_name: value}
        )


# ============== ENUMS ==============


class Backend(str, Enum):
    DIAL = "dial"
    MLB = "mlb"
    RADIX1 = "radix1"
    RADIX2 = "radix2"
    HOT = "hot"
    BINARY_HEAP = "binary-heap"
    ARRAY = "array"


# ============== BASE MODEL CLASS ==============


class BaseModel:
    """Base class for all models with serialization and validation."""

    def to_dict(self, exclude_none: bool = False) -> Dict[str, Any]:
        """Convert model to dictionary."""
        result = {}
        for key, value in self.__dict__.items():
            if key.startswith("_"):
                continue
            if exclude_none and value is None:
                continue

            if isinstance(value, BaseModel):
                result[key] = value.to_dict(exclude_none)
            elif isinstance(value, list):
                result[key] = [
                    item.to_dict(exclude_none) if isinstance(item, BaseModel) else item
                    for item in value
                ]
            elif isinstance(value, Enum):
                result[key] = value.value
            else:
                result[key] = value

        return result

    def to_json(self, exclude_none: bool = False, indent: Optional[int] = None) -> str:
        """Convert model to JSON string."""
        return json.dumps(self.to_dict(exclude_none), indent=indent, default=str)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]):
        """Create a validated instance, ignoring keys the constructor does not take."""
        code = cls.__init__.__code__
        valid_attrs = code.co_varnames[1 : code.co_argcount]
        instance = cls(**{k: v for k, v in data.items() if k in valid_attrs})
        instance.validate()
        return instance

    def validate(self):
        """Validate model data. Should be overridden by subclasses."""
        pass

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __repr__(self):
        fields = ", ".join(f"{k}={v!r}" for k, v in self.to_dict().items())
        return f"{type(self).__name__}({fields})"

    def __str__(self):
        return self.to_json(exclude_none=True)


# ============== QUEUE MODELS ==============


class Element(NamedTuple):
    """An (id, key) pair; id is a dense vertex handle, key a non-negative label."""

    id: int
    key: int


class OpCounters(BaseModel):
    """Operation tallies of one queue; all fields only ever grow."""

    def __init__(
        self,
        inserts: int = 0,
        extracts: int = 0,
        decreases: int = 0,
        removes: int = 0,
        empty_scan_steps: int = 0,
        expansions: int = 0,
        element_moves: int = 0,
        heap_ops: int = 0,
    ):
        self.inserts = inserts
        self.extracts = extracts
        self.decreases = decreases
        self.removes = removes
        self.empty_scan_steps = empty_scan_steps
        self.expansions = expansions
        self.element_moves = element_moves
        self.heap_ops = heap_ops

    def validate(self):
        for name, value in self.to_dict().items():
            validate_min(value, 0, name)

    def snapshot(self) -> "OpCounters":
        return OpCounters(**self.to_dict())

    @property
    def scan_work(self) -> int:
        """Empty scans plus expansions, the extract-min work of bucket structures."""
        return self.empty_scan_steps + self.expansions


class QueueConfig(BaseModel):
    """Construction parameters shared by all queue backends."""

    def __init__(
        self,
        capacity_n: int,
        max_key: int,
        C: int = 1,
        k: int = 2,
        delta: int = 4,
        hot_threshold: Optional[int] = None,
        width_multiplier: int = 1,
    ):
        self.capacity_n = capacity_n
        self.max_key = max_key
        self.C = C
        self.k = k
        self.delta = delta
        self.hot_threshold = hot_threshold
        self.width_multiplier = width_multiplier

    def validate(self):
        validate_min(self.capacity_n, 0, "capacity_n")
        validate_word(self.max_key, "max_key")
        validate_min(self.C, 1, "C")
        validate_min(self.k, 1, "k")
        validate_min(self.delta, 2, "delta")
        validate_min(self.hot_threshold, 0, "hot_threshold")
        validate_min(self.width_multiplier, 1, "width_multiplier")

    @property
    def threshold(self) -> int:
        """Hot-queue threshold t; defaults to max(2, ceil(C^(1/k)))."""
        if self.hot_threshold is not None:
            return self.hot_threshold
        return default_threshold(self.C, self.k)

    def for_graph(self, graph: "Graph") -> "QueueConfig":
        """Copy sized for a graph: capacity n, C = max weight, max_key = n*C."""
        p = self.width_multiplier
        if p > 1 and (graph.min_weight is None or p > graph.min_weight):
            raise ConfigurationError(
                "width multiplier must not exceed the minimum arc weight",
                {"p": p, "min_weight": graph.min_weight},
            )
        C = max(graph.C, 1)
        config = QueueConfig(
            capacity_n=graph.n,
            max_key=max(graph.n * C, C),
            C=C,
            k=self.k,
            delta=self.delta,
            hot_threshold=self.hot_threshold,
            width_multiplier=p,
        )
        config.validate()
        return config


def default_threshold(C: int, k: int) -> int:
    return max(2, ceil_root(C, k))


# ============== BENCHMARK MODELS ==============

BENCH_HEADER = [
    "instance",
    "n",
    "m",
    "C",
    "backend",
    "k",
    "delta",
    "t",
    "p",
    "rep",
    "wall_ns",
    "inserts",
    "extracts",
    "decreases",
    "empty_scans",
    "expansions",
    "moves",
    "heap_ops",
    "dist_checksum",
]


class BenchRow(BaseModel):
    """One measured (instance, backend configuration, repetition) run."""

    def __init__(
        self,
        instance: str,
        n: int,
        m: int,
        C: int,
        backend: Backend,
        rep: int,
        wall_ns: int,
        counters: OpCounters,
        dist_checksum: str,
        k: Optional[int] = None,
        delta: Optional[int] = None,
        t: Optional[int] = None,
        p: Optional[int] = None,
    ):
        self.instance = instance
        self.n = n
        self.m = m
        self.C = C
        self.backend = backend
        self.k = k
        self.delta = delta
        self.t = t
        self.p = p
        self.rep = rep
        self.wall_ns = wall_ns
        self.counters = counters
        self.dist_checksum = dist_checksum

    def validate(self):
        validate_min(self.n, 0, "n")
        validate_min(self.m, 0, "m")
        validate_min(self.rep, 0, "rep")
        if not self.dist_checksum:
            raise ValidationError("dist_checksum is required")

    def budget_violations(self) -> List[str]:
        """Per-run counter budgets: inserts <= n, extracts <= n, decreases <= m."""
        c = self.counters
        problems = []
        if c.inserts > self.n:
            problems.append(f"inserts {c.inserts} > n {self.n}")
        if c.extracts > self.n:
            problems.append(f"extracts {c.extracts} > n {self.n}")
        if c.decreases > self.m:
            problems.append(f"decreases {c.decreases} > m {self.m}")
        return problems

    def to_csv_row(self) -> Dict[str, Any]:
        c = self.counters
        row = {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "C": self.C,
            "backend": self.backend.value,
            "k": self.k,
            "delta": self.delta,
            "t": self.t,
            "p": self.p,
            "rep": self.rep,
            "wall_ns": self.wall_ns,
            "inserts": c.inserts,
            "extracts": c.extracts,
            "decreases": c.decreases,
            "empty_scans": c.empty_scan_steps,
            "expansions": c.expansions,
            "moves": c.element_moves,
            "heap_ops": c.heap_ops,
            "dist_checksum": self.dist_checksum,
        }
        return {key: "" if value is None else value for key, value in row.items()}


class InstanceSpec(BaseModel):
    """A benchmark instance: a generator recipe or a DIMACS file."""

    KINDS = ("path", "grid", "random", "file")

    def __init__(self, kind: str, params: Optional[Dict[str, Any]] = None):
        self.kind = kind
        self.params = params or {}

    def validate(self):
        if self.kind not in self.KINDS:
            raise ValidationError(
                f"instance kind must be one of {list(self.KINDS)}", {"kind": self.kind}
            )
        if self.kind == "file" and not self.params.get("path"):
            raise ValidationError("file instance needs a path")

    @property
    def name(self) -> str:
        if self.kind == "file":
            return str(self.params["path"])
        parts = [f"{k}{v}" for k, v in sorted(self.params.items())]
        return "-".join([self.kind, *parts])


MIN_WEIGHT = "min"


class BackendSpec(BaseModel):
    """One backend with concrete parameters; p may be "min" (graph minimum weight)."""

    def __init__(
        self,
        backend: Backend,
        k: Optional[int] = None,
        delta: Optional[int] = None,
        t: Optional[int] = None,
        p: Union[int, str, None] = None,
    ):
        self.backend = Backend(backend)
        self.k = k
        self.delta = delta
        self.t = t
        self.p = p

    def validate(self):
        validate_min(self.k, 1, "k")
        validate_min(self.delta, 2, "delta")
        validate_min(self.t, 0, "t")
        if self.p != MIN_WEIGHT:
            validate_min(self.p, 1, "p")

    def resolve_p(self, graph: "Graph") -> int:
        if self.p == MIN_WEIGHT:
            return max(graph.min_weight or 1, 1)
        return self.p or 1

    def queue_config(self, graph: "Graph") -> QueueConfig:
        base = QueueConfig(
            capacity_n=graph.n,
            max_key=0,
            k=self.k or 2,
            delta=self.delta or 4,
            hot_threshold=self.t,
            width_multiplier=self.resolve_p(graph),
        )
        return base.for_graph(graph)

    @property
    def label(self) -> str:
        parts = [self.backend.value]
        for name in ("k", "delta", "t", "p"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        return ":".join(parts)


class BenchConfig(BaseModel):
    """A benchmark matrix: instances x backend specs x repetitions."""

    def __init__(
        self,
        instances: Optional[List[InstanceSpec]] = None,
        backends: Optional[List[BackendSpec]] = None,
        source: Union[int, str] = 1,
        repetitions: int = 1,
        output: str = "bench.csv",
        threads: int = 1,
        verify: bool = False,
    ):
        self.instances = instances or []
        self.backends = backends or []
        self.source = source
        self.repetitions = repetitions
        self.output = output
        self.threads = threads
        self.verify = verify

    def validate(self):
        if not self.instances:
            raise ValidationError("at least one instance is required")
        if not self.backends:
            raise ValidationError("at least one backend is required")
        for spec in self.instances:
            spec.validate()
        for spec in self.backends:
            spec.validate()
        validate_min(self.repetitions, 1, "repetitions")
        validate_min(self.threads, 1, "threads")
        if self.source != "random":
            validate_min(self.source, 1, "source")
