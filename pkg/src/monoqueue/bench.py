"""
Benchmark matrices: instances x backend configurations x repetitions.

The configuration is flat ``key = value`` text::

    # two instances, three backends
    instance = path n=2000 w=64
    instance = random n=200 m=2000 w_max=16 seed=7
    backends = dial, mlb, hot
    k = 2, 3
    t = default, 4
    p = 1, min
    repetitions = 2
    output = bench.csv
"""

import csv
import logging
import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .exceptions import ConfigurationError, ParseError, ValidationError, VerificationError
from .graph import Graph, gen_grid, gen_path, gen_random, read_dimacs
from .models import (
    BENCH_HEADER,
    MIN_WEIGHT,
    Backend,
    BackendSpec,
    BenchConfig,
    BenchRow,
    InstanceSpec,
)
from .sssp import dijkstra, verify
from .utils import dist_checksum

logger = logging.getLogger(__name__)

THREADS_ENV = "MONOQUEUE_THREADS"
RANDOM_SOURCE = "random"

LIST_KEYS = ("backends", "k", "delta", "t", "p")
SCALAR_KEYS = ("source", "repetitions", "output", "threads", "verify")


# ============== CONFIG PARSING ==============


def parse_bench_config(text: str, base_dir: Union[str, Path, None] = None) -> BenchConfig:
    """Parse bench config text; relative file instances resolve against ``base_dir``."""
    instances: List[InstanceSpec] = []
    lists: Dict[str, List[str]] = {}
    scalars: Dict[str, str] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", number)
        key, value = (part.strip() for part in line.split("=", 1))
        if not value:
            raise ParseError(f"missing value for {key!r}", number)
        if key == "instance":
            instances.append(_parse_instance(value, number, base_dir))
        elif key in LIST_KEYS:
            lists[key] = [item.strip() for item in value.split(",") if item.strip()]
        elif key in SCALAR_KEYS:
            scalars[key] = value
        else:
            raise ParseError(f"unknown key {key!r}", number)

    try:
        backends = [Backend(name) for name in lists.get("backends", [])]
    except ValueError as e:
        raise ConfigurationError(str(e), {"choices": [b.value for b in Backend]})

    config = BenchConfig(
        instances=instances,
        backends=expand_matrix(
            backends,
            ks=[_int(v, "k") for v in lists.get("k", ["2"])],
            deltas=[_int(v, "delta") for v in lists.get("delta", ["4"])],
            ts=[None if v == "default" else _int(v, "t") for v in lists.get("t", ["default"])],
            ps=[MIN_WEIGHT if v == MIN_WEIGHT else _int(v, "p") for v in lists.get("p", ["1"])],
        ),
        source=_source(scalars.get("source", "1")),
        repetitions=_int(scalars.get("repetitions", "1"), "repetitions"),
        output=scalars.get("output", "bench.csv"),
        threads=_int(scalars.get("threads", "1"), "threads"),
        verify=_flag(scalars.get("verify", "false")),
    )
    config.validate()
    return config


def load_bench_config(path: Union[str, Path]) -> BenchConfig:
    path = Path(path)
    return parse_bench_config(path.read_text(encoding="utf-8"), path.parent)


def _parse_instance(value: str, number: int, base_dir) -> InstanceSpec:
    kind, *tokens = value.split()
    params = {}
    for token in tokens:
        name, sep, raw = token.partition("=")
        if not sep or not name or not raw:
            raise ParseError(f"instance parameter {token!r} is not name=value", number)
        if kind == "file" and name == "path":
            resolved = Path(raw)
            if base_dir is not None and not resolved.is_absolute():
                resolved = Path(base_dir) / resolved
            params[name] = str(resolved)
            continue
        try:
            params[name] = int(raw)
        except ValueError:
            raise ParseError(f"instance parameter {name!r} must be an integer", number)
    spec = InstanceSpec(kind, params)
    try:
        spec.validate()
    except ValidationError as e:
        raise ParseError(e.message, number)
    return spec


def _int(value: str, name: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer", {name: value})


def _flag(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError("verify must be true or false", {"verify": value})


def _source(value: str) -> Union[int, str]:
    return RANDOM_SOURCE if value == RANDOM_SOURCE else _int(value, "source")


def expand_matrix(
    backends: List[Backend],
    ks: List[int],
    deltas: List[int],
    ts: List[Optional[int]],
    ps: List[Union[int, str]],
) -> List[BackendSpec]:
    """One spec per backend and each parameter combination that backend uses."""
    specs = []
    for backend in backends:
        if backend == Backend.MLB:
            specs.extend(BackendSpec(backend, k=k, p=p) for k in ks for p in ps)
        elif backend == Backend.HOT:
            specs.extend(BackendSpec(backend, k=k, t=t, p=p) for k in ks for t in ts for p in ps)
        elif backend == Backend.RADIX2:
            specs.extend(BackendSpec(backend, delta=delta) for delta in deltas)
        else:
            specs.append(BackendSpec(backend))
    return specs


# ============== RUNNING ==============


def resolve_threads(config: BenchConfig) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return config.threads
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        raise ConfigurationError(f"{THREADS_ENV} must be a positive integer", {THREADS_ENV: raw})
    return threads


def build_instance(spec: InstanceSpec) -> Graph:
    generators = {"path": gen_path, "grid": gen_grid, "random": gen_random}
    if spec.kind == "file":
        return read_dimacs(spec.params["path"])
    try:
        return generators[spec.kind](**spec.params)
    except TypeError as e:
        raise ConfigurationError(f"bad parameters for {spec.kind} instance: {e}", spec.params)


def pick_source(config: BenchConfig, graph: Graph, index: int) -> int:
    """0-based source; a random source is seeded by the instance position."""
    if config.source == RANDOM_SOURCE:
        return int(np.random.default_rng(index).integers(graph.n))
    if config.source > graph.n:
        raise ConfigurationError("source outside the graph", {"source": config.source, "n": graph.n})
    return config.source - 1


def run_one(
    name: str, graph: Graph, source: int, spec: BackendSpec, rep: int, check: bool = False
) -> BenchRow:
    queue_config = spec.queue_config(graph)
    result = dijkstra(graph, source, spec.backend, queue_config)
    if check:
        violations = verify(graph, source, result)
        if violations:
            raise VerificationError(f"{spec.label} on {name} failed verification", violations)
    tuned = spec.backend in (Backend.MLB, Backend.HOT)
    row = BenchRow(
        instance=name,
        n=graph.n,
        m=graph.m,
        C=graph.C,
        backend=spec.backend,
        rep=rep,
        wall_ns=result.wall_time,
        counters=result.counters,
        dist_checksum=dist_checksum(result.dist),
        k=queue_config.k if tuned else None,
        delta=queue_config.delta if spec.backend == Backend.RADIX2 else None,
        t=queue_config.threshold if spec.backend == Backend.HOT else None,
        p=queue_config.width_multiplier if tuned else None,
    )
    logger.info(f"{name} {spec.label} rep={rep}: {result.wall_time} ns")
    return row


def run_bench(config: BenchConfig, threads: Optional[int] = None) -> List[BenchRow]:
    """Run the whole matrix; rows come back in (instance, backend, rep) order."""
    config.validate()
    graphs: List[Tuple[str, Graph, int]] = []
    for index, spec in enumerate(config.instances):
        graph = build_instance(spec)
        graphs.append((spec.name, graph, pick_source(config, graph, index)))
        logger.info(f"Loaded instance {spec.name}: {graph!r}")

    tasks = [
        (name, graph, source, spec, rep)
        for name, graph, source in graphs
        for spec in config.backends
        for rep in range(config.repetitions)
    ]
    workers = threads or resolve_threads(config)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda task: run_one(*task, check=config.verify), tasks))

    check_rows(rows)
    return rows


def check_rows(rows: List[BenchRow]) -> None:
    """Counter budgets per row and one distance checksum per instance."""
    problems = []
    checksums = defaultdict(set)
    for row in rows:
        checksums[row.instance].add(row.dist_checksum)
        for budget in row.budget_violations():
            problems.append(f"{row.instance} {row.backend.value} rep={row.rep}: {budget}")
    for instance, seen in sorted(checksums.items()):
        if len(seen) > 1:
            by_backend = sorted({(r.backend.value, r.dist_checksum) for r in rows if r.instance == instance})
            problems.append(f"{instance}: backends disagree on distances {by_backend}")
    if problems:
        for problem in problems:
            logger.warning(problem)
        raise VerificationError("benchmark results are inconsistent", problems)


def write_csv(rows: List[BenchRow], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=BENCH_HEADER, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv_row())
    logger.info(f"Wrote {len(rows)} rows to {path}")
