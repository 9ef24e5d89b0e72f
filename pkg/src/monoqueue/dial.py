from typing import List, Set

from .base import MonotoneQueue
from .exceptions import WindowViolation
from .models import Element, QueueConfig


class DialQueue(MonotoneQueue):
    """
    One-level bucket queue with C+1 circular buckets.

    A key y lives in bucket y mod (C+1). All stored keys stay within
    [last_min, last_min + C], so one cyclic pass over the buckets from the
    active index meets keys in increasing order.
    """

    name = "dial"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self.C = config.C
        self.buckets: List[Set[int]] = [set() for _ in range(config.C + 1)]
        self.alpha = 0

    def _bucket(self, key: int) -> int:
        return key % (self.C + 1)

    def _insert(self, item_id: int, key: int) -> None:
        if key > self.last_min + self.C:
            raise WindowViolation(
                "key beyond last_min + C", item_id, key, last_min=self.last_min, C=self.C
            )
        self.buckets[self._bucket(key)].add(item_id)

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        old, new = self._bucket(old_key), self._bucket(new_key)
        if old != new:
            self.buckets[old].discard(item_id)
            self.buckets[new].add(item_id)
            self._relocated(item_id)

    def _remove(self, item_id: int, key: int) -> None:
        self.buckets[self._bucket(key)].discard(item_id)

    def _extract(self) -> Element:
        buckets = self.buckets
        size = len(buckets)
        alpha = self.alpha
        steps = 0
        while not buckets[alpha]:
            alpha = (alpha + 1) % size
            steps += 1
        self.alpha = alpha
        self.counters.empty_scan_steps += steps
        item_id = buckets[alpha].pop()
        return Element(item_id, self._key[item_id])

    def _audit(self) -> List[str]:
        problems = []
        placed = 0
        for index, bucket in enumerate(self.buckets):
            placed += len(bucket)
            for item_id in bucket:
                key = self._key[item_id]
                if key is None:
                    problems.append(f"bucket {index} holds absent id {item_id}")
                elif self._bucket(key) != index:
                    problems.append(f"id {item_id} key {key} in bucket {index}")
                elif key > self.last_min + self.C:
                    problems.append(f"id {item_id} key {key} outside window")
        if placed != len(self):
            problems.append(f"buckets hold {placed} of {len(self)} elements")
        return problems
