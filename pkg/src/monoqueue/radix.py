"""
Radix heaps: buckets of exponentially growing width with movable bounds.

Bucket i holds keys y with U[i-1] < y <= U[i], where U[0] is one below the
last extracted minimum. Extract-min empties the first non-empty bucket,
re-anchors the bounds of the buckets below it at the minimum found and
pushes the remaining elements down. An element therefore only ever moves
to lower buckets.
"""

from typing import List, Optional, Set, Tuple

from .base import MonotoneQueue
from .models import Element, QueueConfig
from .utils import ceil_div, ceil_log


class RadixHeap(MonotoneQueue):
    """One-level radix heap with widths 1, 1, 2, 4, ..., max_key + 1."""

    name = "radix1"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self.C = config.C
        self.k = ceil_log(2, config.C + 1) + 2
        self.widths = [0, 1] + [2 ** (i - 2) for i in range(2, self.k)] + [config.max_key + 1]
        self.upper = [-1] + [2 ** (i - 1) - 1 for i in range(1, self.k)] + [config.max_key + 1]
        self.buckets: List[Set[int]] = [set() for _ in range(self.k + 1)]
        self._where: List[Optional[int]] = [None] * config.capacity_n
        self._transient: List[int] = []

    def _scan(self, key: int, start: int) -> int:
        """Bucket for ``key`` searching down from bucket ``start``."""
        i = start - 1
        upper = self.upper
        while i > 0 and upper[i] >= key:
            i -= 1
        return i + 1

    def _place(self, item_id: int, key: int, start: int) -> int:
        bucket = self._scan(key, start)
        self.buckets[bucket].add(item_id)
        self._where[item_id] = bucket
        return bucket

    def _insert(self, item_id: int, key: int) -> None:
        self._place(item_id, key, self.k)

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        current = self._where[item_id]
        self.buckets[current].discard(item_id)
        if self._place(item_id, new_key, current) != current:
            self._relocated(item_id)

    def _remove(self, item_id: int, key: int) -> None:
        self.buckets[self._where[item_id]].discard(item_id)
        self._where[item_id] = None

    def _first_nonempty(self) -> int:
        j = 1
        steps = 0
        while not self.buckets[j]:
            j += 1
            steps += 1
        self.counters.empty_scan_steps += steps
        return j

    def _extract(self) -> Element:
        j = self._first_nonempty()
        bucket = self.buckets[j]
        if j == 1:
            item_id = bucket.pop()
            self._where[item_id] = None
            return Element(item_id, self._key[item_id])

        transient = self._transient
        transient.extend(bucket)
        bucket.clear()
        key_of = self._key
        x = min(transient, key=lambda i: (key_of[i], i))
        kx = key_of[x]

        upper = self.upper
        upper[0] = kx - 1
        upper[1] = kx
        for i in range(2, j):
            upper[i] = min(upper[i - 1] + self.widths[i], upper[j])

        for item_id in transient:
            if item_id != x and self._place(item_id, key_of[item_id], j) != j:
                self._relocated(item_id)
        transient.clear()
        self._where[x] = None
        return Element(x, kx)

    def _audit(self) -> List[str]:
        problems = []
        if self.upper[0] >= self.last_min and len(self):
            problems.append(f"U[0]={self.upper[0]} not below last_min {self.last_min}")
        placed = 0
        for i in range(1, self.k + 1):
            placed += len(self.buckets[i])
            for item_id in self.buckets[i]:
                problems.extend(self._audit_member(item_id, i))
        one = {self._key[i] for i in self.buckets[1]}
        if len(one) > 1:
            problems.append(f"bucket 1 holds keys {sorted(one)}")
        if placed != len(self):
            problems.append(f"buckets hold {placed} of {len(self)} elements")
        return problems

    def _audit_member(self, item_id: int, i: int) -> List[str]:
        key = self._key[item_id]
        if key is None:
            return [f"bucket {i} holds absent id {item_id}"]
        if self._where[item_id] != i:
            return [f"id {item_id} recorded in bucket {self._where[item_id]}, found in {i}"]
        if not self.upper[i - 1] < key <= self.upper[i]:
            return [f"id {item_id} key {key} outside bucket {i} range"]
        return []


class RadixHeap2(RadixHeap):
    """
    Two-level radix heap: k = ceil(log_delta(C+1)) + 1 buckets of width
    delta**i, each split into delta inner buckets. Extract-min redistributes
    only the first non-empty inner bucket.
    """

    name = "radix2"

    def __init__(self, config: QueueConfig):
        MonotoneQueue.__init__(self, config)
        delta = config.delta
        self.C = config.C
        self.delta = delta
        self.k = ceil_log(delta, config.C + 1) + 1
        self.widths = [0] + [delta**i for i in range(1, self.k)] + [config.max_key + 1]
        self.upper = [-1]
        for i in range(1, self.k):
            self.upper.append(self.upper[-1] + delta**i)
        self.upper.append(config.max_key + 1)
        self.anchor = [0] + self.upper[: self.k]
        self.inner_width = [0] + [delta ** (i - 1) for i in range(1, self.k + 1)]
        self.buckets: List[List[Set[int]]] = [
            [set() for _ in range(delta + 1)] for _ in range(self.k + 1)
        ]
        self.nonempty = [0] * (self.k + 1)
        self._where: List[Optional[Tuple[int, int]]] = [None] * config.capacity_n
        self._transient: List[int] = []

    def inner_index(self, key: int, i: int) -> int:
        """
        Inner bucket of ``key`` within bucket i, clamped to [1, delta].

        Inner buckets are counted from ``anchor[i]``, the value U[i-1] held
        when bucket i was last re-based, not from the live U[i-1]. Keys in
        (anchor, anchor + w] go to inner bucket 1 for inner width w.
        """
        q = ceil_div(key - self.anchor[i], self.inner_width[i])
        return max(1, min(self.delta, q))

    def _add(self, item_id: int, i: int, q: int) -> None:
        inner = self.buckets[i][q]
        if not inner:
            self.nonempty[i] += 1
        inner.add(item_id)
        self._where[item_id] = (i, q)

    def _discard(self, item_id: int) -> Tuple[int, int]:
        i, q = self._where[item_id]
        inner = self.buckets[i][q]
        inner.discard(item_id)
        if not inner:
            self.nonempty[i] -= 1
        self._where[item_id] = None
        return i, q

    def _place(self, item_id: int, key: int, start: int) -> int:
        i = self._scan(key, start)
        self._add(item_id, i, self.inner_index(key, i))
        return i

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        current, _ = self._discard(item_id)
        if self._place(item_id, new_key, current) != current:
            self._relocated(item_id)

    def _remove(self, item_id: int, key: int) -> None:
        self._discard(item_id)

    def _extract(self) -> Element:
        j = 1
        steps = 0
        while not self.nonempty[j]:
            j += 1
            steps += 1
        row = self.buckets[j]
        q = 1
        while not row[q]:
            q += 1
            steps += 1
        self.counters.empty_scan_steps += steps

        if j == 1:
            item_id = next(iter(row[q]))
            self._discard(item_id)
            return Element(item_id, self._key[item_id])

        key_of = self._key
        transient = self._transient
        transient.extend(row[q])
        for item_id in transient:
            self._discard(item_id)
        x = min(transient, key=lambda i: (key_of[i], i))
        kx = key_of[x]

        if q == self.delta:
            hi = self.upper[j]
        else:
            hi = min(self.anchor[j] + q * self.inner_width[j], self.upper[j])
        upper = self.upper
        upper[0] = kx - 1
        for i in range(1, j):
            self.anchor[i] = upper[i - 1]
            upper[i] = min(upper[i - 1] + self.widths[i], hi)

        for item_id in transient:
            if item_id != x and self._place(item_id, key_of[item_id], j) != j:
                self._relocated(item_id)
        transient.clear()
        return Element(x, kx)

    def _audit(self) -> List[str]:
        problems = []
        placed = 0
        for i in range(1, self.k + 1):
            filled = 0
            for q in range(1, self.delta + 1):
                inner = self.buckets[i][q]
                if inner:
                    filled += 1
                placed += len(inner)
                for item_id in inner:
                    problems.extend(self._audit_inner(item_id, i, q))
            if filled != self.nonempty[i]:
                problems.append(f"bucket {i} non-empty count {self.nonempty[i]} != {filled}")
        if placed != len(self):
            problems.append(f"buckets hold {placed} of {len(self)} elements")
        return problems

    def _audit_inner(self, item_id: int, i: int, q: int) -> List[str]:
        key = self._key[item_id]
        if key is None:
            return [f"bucket ({i}, {q}) holds absent id {item_id}"]
        if self._where[item_id] != (i, q):
            return [f"id {item_id} recorded in {self._where[item_id]}, found in ({i}, {q})"]
        if not self.upper[i - 1] < key <= self.upper[i]:
            return [f"id {item_id} key {key} outside bucket {i} range"]
        if self.inner_index(key, i) != q:
            return [f"id {item_id} key {key} in inner bucket {q} of bucket {i}"]
        return []
