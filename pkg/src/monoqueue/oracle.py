"""
Reference queue and monotone workload generation for equivalence testing.
"""

import heapq
import random
from typing import Callable, List, NamedTuple, Optional, Tuple

from .base import MonotoneQueue
from .exceptions import VerificationError
from .models import Element, QueueConfig

INSERT = "insert"
DECREASE = "decrease"
EXTRACT = "extract"
REMOVE = "remove"


class OracleQueue(MonotoneQueue):
    """
    Sorted multiset keyed by (key, id), built on heapq with lazy deletion.

    Ties are extracted in id order, which makes it a deterministic oracle
    for the extracted key sequence of any backend.
    """

    name = "oracle"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self._entries: List[Tuple[int, int]] = []

    def _insert(self, item_id: int, key: int) -> None:
        heapq.heappush(self._entries, (key, item_id))

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        heapq.heappush(self._entries, (new_key, item_id))

    def _remove(self, item_id: int, key: int) -> None:
        pass

    def _extract(self) -> Element:
        entries = self._entries
        while True:
            key, item_id = heapq.heappop(entries)
            if self._key[item_id] == key:
                return Element(item_id, key)

    # Short aliases used by the property tests

    def o_insert(self, item_id: int, key: int) -> None:
        self.insert(item_id, key)

    def o_decrease(self, item_id: int, new_key: int) -> None:
        self.decrease_key(item_id, new_key)

    def o_extract(self) -> Optional[Element]:
        return self.extract_min()


class Op(NamedTuple):
    kind: str
    id: int = -1
    key: int = 0


class Workload(NamedTuple):
    """A balanced operation sequence with the sizes a queue needs to run it."""

    ops: List[Op]
    expected: List[int]
    capacity_n: int
    max_key: int
    span: int

    def config(self, **params) -> QueueConfig:
        return QueueConfig(
            capacity_n=self.capacity_n, max_key=self.max_key, C=max(self.span, 1), **params
        )


def monotone_workload(
    seed: int,
    n_ops: int,
    span: int,
    insert_weight: float = 0.45,
    decrease_weight: float = 0.25,
    remove_weight: float = 0.0,
) -> Workload:
    """
    Random balanced monotone sequence of roughly ``n_ops`` operations.

    Inserted keys lie in [last_min, last_min + span], so every queued key
    stays within ``span`` of the last extracted minimum and the sequence is
    valid for windowed backends with C = span. Every id is used once. The
    queue is drained at the end. ``expected`` is the extracted key sequence
    produced by the oracle.
    """
    rng = random.Random(seed)
    oracle_config = QueueConfig(capacity_n=n_ops + 1, max_key=2**63, C=max(span, 1))
    oracle = OracleQueue(oracle_config)
    ops: List[Op] = []
    expected: List[int] = []
    next_id = 0
    max_key = 0

    live: List[int] = []
    slot = {}

    def forget(item_id: int) -> None:
        index = slot.pop(item_id)
        last = live.pop()
        if last != item_id:
            live[index] = last
            slot[last] = index

    def extract():
        element = oracle.extract_min()
        ops.append(Op(EXTRACT))
        if element is not None:
            expected.append(element.key)
            forget(element.id)

    while len(ops) < n_ops:
        roll = rng.random()
        if roll < insert_weight or not len(oracle):
            key = oracle.last_min + rng.randint(0, span)
            oracle.insert(next_id, key)
            ops.append(Op(INSERT, next_id, key))
            slot[next_id] = len(live)
            live.append(next_id)
            max_key = max(max_key, key)
            next_id += 1
            continue
        roll -= insert_weight
        if roll < decrease_weight + remove_weight:
            victim = rng.choice(live)
            current = oracle.key_of(victim)
            # ids tied with the last minimum may already be gone from another backend
            if current > oracle.last_min:
                if roll < decrease_weight:
                    key = rng.randint(oracle.last_min, current - 1)
                    oracle.decrease_key(victim, key)
                    ops.append(Op(DECREASE, victim, key))
                else:
                    oracle.remove(victim)
                    ops.append(Op(REMOVE, victim))
                    forget(victim)
                continue
        extract()

    while len(oracle):
        extract()

    return Workload(ops, expected, next_id, max(max_key, span), span)


def replay(
    queue: MonotoneQueue,
    ops: List[Op],
    audit: bool = False,
    on_step: Optional[Callable[[MonotoneQueue, Op], None]] = None,
) -> List[int]:
    """
    Run an operation sequence on any backend and return the extracted keys.

    With ``audit`` the queue invariants are checked after every operation
    and the first inconsistency raises VerificationError.
    """
    keys: List[int] = []
    for step, op in enumerate(ops):
        if op.kind == INSERT:
            queue.insert(op.id, op.key)
        elif op.kind == DECREASE:
            queue.decrease_key(op.id, op.key)
        elif op.kind == REMOVE:
            queue.remove(op.id)
        else:
            element = queue.extract_min()
            if element is not None:
                keys.append(element.key)
        if audit:
            problems = queue.audit()
            if problems:
                raise VerificationError(
                    f"{queue.name} inconsistent after step {step} ({op.kind})", problems
                )
        if on_step is not None:
            on_step(queue, op)
    return keys
