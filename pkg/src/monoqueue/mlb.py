"""
k-level bucket queue.

Level i has d buckets of width d**i (in scaled keys y = key // p). Level
k-1 is circular; every lower level i covers exactly the range of the
active bucket of level i+1, so the lowest level holding a key is found by
walking down from the top. Extract-min works on level 0 only; when it is
empty the lowest non-empty bucket above is expanded into finer buckets.
"""

from typing import List, Optional, Set, Tuple

from .base import MonotoneQueue
from .exceptions import WindowViolation
from .models import Element, QueueConfig
from .utils import ceil_div, ceil_root

Slot = Tuple[int, int]


class MultiLevelBucketQueue(MonotoneQueue):
    name = "mlb"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self.k = config.k
        self.p = config.width_multiplier
        self.span = ceil_div(config.C, self.p)
        self.d = ceil_root(self.span + 1, self.k)
        self.top = self.k - 1
        self.widths = [self.d**i for i in range(self.k + 1)]
        self.levels: List[List[Set[int]]] = [
            [set() for _ in range(self.d)] for _ in range(self.k)
        ]
        self.level_count = [0] * self.k
        self.alpha = [0] * self.k
        self.lower = [0] * self.k
        self._slot: List[Optional[Slot]] = [None] * config.capacity_n

    @property
    def key_floor(self) -> int:
        return (self.last_min // self.p) * self.p

    @property
    def window(self) -> int:
        """Number of distinct scaled keys the structure can hold at once."""
        return self.widths[self.k]

    # Slot arithmetic

    def level_range(self, level: int) -> Tuple[int, int]:
        """Scaled key range of a non-top level."""
        lo = self.lower[level]
        return lo, lo + self.widths[level + 1] - 1

    def bucket_range(self, level: int, j: int) -> Tuple[int, int]:
        """Scaled key range of bucket j in the current cycle of its level."""
        width = self.widths[level]
        lo = self.lower[level] + j * width
        return lo, lo + width - 1

    def active_range(self, level: int) -> Tuple[int, int]:
        return self.bucket_range(level, self.alpha[level])

    def find_slot(self, y: int, ceiling: Optional[int] = None) -> Slot:
        """Lowest level at or below ``ceiling`` whose range holds y, and the bucket there."""
        level = self.top if ceiling is None else ceiling
        while level > 0:
            lo, hi = self.level_range(level - 1)
            if not lo <= y <= hi:
                break
            level -= 1
        return level, self._index(y, level)

    def _index(self, y: int, level: int) -> int:
        if level == self.top:
            return (y // self.widths[level]) % self.d
        return (y - self.lower[level]) // self.widths[level]

    def _scaled(self, key: int) -> int:
        return key // self.p

    # Bucket bookkeeping

    def _put(self, item_id: int, slot: Slot) -> None:
        level, j = slot
        self.levels[level][j].add(item_id)
        self.level_count[level] += 1
        self._slot[item_id] = slot

    def _take(self, item_id: int) -> Slot:
        slot = self._slot[item_id]
        level, j = slot
        self.levels[level][j].discard(item_id)
        self.level_count[level] -= 1
        self._slot[item_id] = None
        return slot

    def _check_window(self, item_id: int, key: int) -> None:
        if self._scaled(key) - self._scaled(self.last_min) > self.window - 1:
            raise WindowViolation(
                "scaled key beyond the bucket window",
                item_id,
                key,
                last_min=self.last_min,
                window=self.window,
            )

    # Queue hooks

    def _insert(self, item_id: int, key: int) -> None:
        self._check_window(item_id, key)
        self._put(item_id, self.find_slot(self._scaled(key)))

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        current = self._slot[item_id]
        target = self.find_slot(self._scaled(new_key), current[0])
        if target != current:
            self._take(item_id)
            self._put(item_id, target)
            self._relocated(item_id, target[0] != current[0])

    def _remove(self, item_id: int, key: int) -> None:
        self._take(item_id)

    def _extract(self) -> Element:
        if self.level_count[0] == 0:
            self._expand()
        return self._pop_bottom()

    def _pop_bottom(self) -> Element:
        row = self.levels[0]
        j = self.alpha[0]
        steps = 0
        while not row[j]:
            j += 1
            steps += 1
            if j == self.d:
                # only reachable when level 0 is also the circular top level
                j = 0
                self.lower[0] += self.d
        self.alpha[0] = j
        self.counters.empty_scan_steps += steps
        item_id = next(iter(row[j]))
        self._take(item_id)
        return Element(item_id, self._key[item_id])

    # Expansion

    def _expand(self) -> None:
        level = 1
        while self.level_count[level] == 0:
            level += 1
        self._cascade(level, self._advance(level))

    def _advance(self, level: int) -> int:
        """Move the active index of ``level`` to its next non-empty bucket."""
        row = self.levels[level]
        j = self.alpha[level]
        steps = 0
        while True:
            j += 1
            if j == self.d:
                j = 0
                self.lower[level] += self.widths[self.k]
            if row[j]:
                break
            steps += 1
        self.counters.empty_scan_steps += steps
        self.alpha[level] = j
        self._rebase_below(level)
        return j

    def _rebase_below(self, level: int) -> None:
        for i in range(level - 1, -1, -1):
            self.lower[i] = self.lower[i + 1] + self.alpha[i + 1] * self.widths[i + 1]
            self.alpha[i] = 0

    def _divert(self, level: int, j: int) -> bool:
        """Hook letting a subclass take over a bucket instead of expanding it."""
        return False

    def _cascade(
        self, level: int, j: int, divert: bool = True, floor: Optional[int] = None
    ) -> None:
        """
        Distribute bucket (level, j) downward until level 0 is non-empty.

        Inside an extraction the active index of each level becomes the
        lowest bucket used, since the minimum is popped from there next.
        Outside one, pass the scaled last minimum as ``floor``: the active
        index then stays on the bucket holding it, and the cascade stops
        at the first level where that bucket is empty.
        """
        while level > 0:
            if divert and self._divert(level, j):
                return
            below = level - 1
            bucket = self.levels[level][j]
            self.levels[level][j] = set()
            self.level_count[level] -= len(bucket)
            base = self.lower[below]
            width = self.widths[below]
            lowest = self.d
            for item_id in bucket:
                index = (self._scaled(self._key[item_id]) - base) // width
                self._put(item_id, (below, index))
                self._relocated(item_id)
                if index < lowest:
                    lowest = index
            self.counters.expansions += 1
            active = lowest
            if floor is not None:
                active = max(0, min(lowest, (floor - base) // width))
            self.alpha[below] = active
            if below > 0:
                self._rebase_below(below)
            if active != lowest:
                return
            level, j = below, lowest

    # Invariants

    def nesting_violations(self) -> List[str]:
        """Each level below the top must span the active bucket of the level above."""
        problems = []
        for i in range(1, self.k):
            expected = self.level_range(i - 1)
            actual = self.active_range(i)
            if actual != expected:
                problems.append(f"level {i} active range {actual} != level {i - 1} range {expected}")
        if self.lower[self.top] % self.widths[self.k]:
            problems.append(f"top lower bound {self.lower[self.top]} not cycle aligned")
        return problems

    def _exempt(self, level: int, j: int) -> bool:
        return False

    def _audit(self) -> List[str]:
        problems = self.nesting_violations()
        ybase = self._scaled(self.last_min)
        for level in range(self.k):
            row = self.levels[level]
            if sum(len(bucket) for bucket in row) != self.level_count[level]:
                problems.append(f"level {level} count {self.level_count[level]} is stale")
            for j, bucket in enumerate(row):
                if (
                    bucket
                    and 0 < level < self.top
                    and j == self.alpha[level]
                    and not self._exempt(level, j)
                ):
                    problems.append(f"active bucket ({level}, {j}) not expanded")
                if bucket and level < self.top and j < self.alpha[level]:
                    # the scan never returns to these buckets
                    problems.append(f"bucket ({level}, {j}) below active index {self.alpha[level]}")
                for item_id in bucket:
                    problems.extend(self._audit_member(item_id, level, j, ybase))
        placed = sum(self.level_count)
        if placed != len(self):
            problems.append(f"levels hold {placed} of {len(self)} elements")
        return problems

    def _audit_member(self, item_id: int, level: int, j: int, ybase: int) -> List[str]:
        key = self._key[item_id]
        if key is None:
            return [f"bucket ({level}, {j}) holds absent id {item_id}"]
        if self._slot[item_id] != (level, j):
            return [f"id {item_id} slot {self._slot[item_id]} != ({level}, {j})"]
        y = self._scaled(key)
        if y - ybase > self.window - 1:
            return [f"id {item_id} scaled key {y} outside window"]
        lo, hi = self.bucket_range(level, j)
        if level == self.top and j <= self.alpha[level] and y > hi:
            lo, hi = lo + self.window, hi + self.window
        if not lo <= y <= hi:
            return [f"id {item_id} scaled key {y} outside bucket ({level}, {j}) range [{lo}, {hi}]"]
        return []
