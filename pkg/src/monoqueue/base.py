from abc import ABC, abstractmethod
from typing import List, Optional

from .exceptions import (
    DuplicateId,
    KeyOutOfRange,
    MonotonicityViolation,
    NotADecrease,
    UnknownId,
)
from .models import Element, OpCounters, QueueConfig


class MonotoneQueue(ABC):
    """
    Contract shared by every monotone priority queue backend.

    The public methods check the monotone discipline and keep the
    operation counters; subclasses only implement the ``_insert``,
    ``_decrease``, ``_extract`` and ``_remove`` hooks. Keys are stored
    per id, ids are dense integers in ``[0, capacity_n)``. Tie order among
    equal keys is backend-defined.
    """

    name = ""

    def __init__(self, config: QueueConfig):
        config.validate()
        self.config = config
        self.capacity_n = config.capacity_n
        self.max_key = config.max_key
        self.counters = OpCounters()
        self.last_min = 0
        self.max_placements = 0
        self._key: List[Optional[int]] = [None] * config.capacity_n
        self._placements = [0] * config.capacity_n
        self._count = 0

    def __len__(self) -> int:
        return self._count

    def __contains__(self, item_id: int) -> bool:
        return 0 <= item_id < self.capacity_n and self._key[item_id] is not None

    def key_of(self, item_id: int) -> int:
        self._require(item_id)
        return self._key[item_id]

    def items(self) -> List[Element]:
        """All stored elements, in id order."""
        return [Element(i, key) for i, key in enumerate(self._key) if key is not None]

    # Checked operations

    def insert(self, item_id: int, key: int) -> None:
        """Add (item_id, key); key must lie in [last_min, max_key]."""
        if not 0 <= item_id < self.capacity_n:
            raise UnknownId("id outside queue capacity", item_id, key)
        if self._key[item_id] is not None:
            raise DuplicateId("id already queued", item_id, key)
        if key < 0 or key > self.max_key:
            raise KeyOutOfRange("key outside [0, max_key]", item_id, key, max_key=self.max_key)
        if key < self.last_min:
            raise MonotonicityViolation(
                "key below last extracted minimum", item_id, key, last_min=self.last_min
            )
        # hooks may cascade and read the stored key of the id being placed
        self._key[item_id] = key
        try:
            self._insert(item_id, key)
        except Exception:
            self._key[item_id] = None
            raise
        self._placements[item_id] = 1
        if self.max_placements < 1:
            self.max_placements = 1
        self._count += 1
        self.counters.inserts += 1

    def decrease_key(self, item_id: int, new_key: int) -> None:
        """Lower the key of a queued id; an equal key is a no-op."""
        current = self._require(item_id, new_key)
        if new_key == current:
            return
        if new_key > current:
            raise NotADecrease("new key above current key", item_id, new_key, current=current)
        if new_key < self.last_min:
            raise MonotonicityViolation(
                "key below last extracted minimum", item_id, new_key, last_min=self.last_min
            )
        self._key[item_id] = new_key
        try:
            self._decrease(item_id, current, new_key)
        except Exception:
            self._key[item_id] = current
            raise
        self.counters.decreases += 1

    def extract_min(self) -> Optional[Element]:
        """Remove and return an element of minimum key, or None when empty."""
        if self._count == 0:
            return None
        element = self._extract()
        self._key[element.id] = None
        self._count -= 1
        self.last_min = element.key
        self.counters.extracts += 1
        return element

    def remove(self, item_id: int) -> int:
        """Delete a queued id regardless of its key; returns that key."""
        key = self._require(item_id)
        self._remove(item_id, key)
        self._key[item_id] = None
        self._count -= 1
        self.counters.removes += 1
        return key

    # Backend hooks

    @abstractmethod
    def _insert(self, item_id: int, key: int) -> None: ...

    @abstractmethod
    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None: ...

    @abstractmethod
    def _extract(self) -> Element: ...

    @abstractmethod
    def _remove(self, item_id: int, key: int) -> None: ...

    # Instrumentation

    def _relocated(self, item_id: int, new_placement: bool = True) -> None:
        """Record that an element moved to another bucket."""
        self.counters.element_moves += 1
        if new_placement:
            placed = self._placements[item_id] + 1
            self._placements[item_id] = placed
            if placed > self.max_placements:
                self.max_placements = placed

    def audit(self) -> List[str]:
        """Invariant violations of the current state; empty when consistent."""
        problems = []
        stored = sum(1 for key in self._key if key is not None)
        if stored != self._count:
            problems.append(f"count {self._count} but {stored} keys stored")
        floor = self.key_floor
        for item_id, key in enumerate(self._key):
            if key is not None and key < floor:
                problems.append(f"id {item_id} key {key} below floor {floor}")
        problems.extend(self._audit())
        return problems

    def _audit(self) -> List[str]:
        return []

    @property
    def key_floor(self) -> int:
        """Smallest key a stored element may have."""
        return self.last_min

    def _require(self, item_id: int, key: Optional[int] = None) -> int:
        if not 0 <= item_id < self.capacity_n or self._key[item_id] is None:
            raise UnknownId("id not queued", item_id, key)
        return self._key[item_id]

    def __repr__(self):
        return f"<{type(self).__name__} n={self._count} last_min={self.last_min}>"
