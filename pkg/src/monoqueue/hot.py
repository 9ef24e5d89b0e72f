from typing import List, Optional, Tuple

from .heap import IndexedHeap
from .mlb import MultiLevelBucketQueue, Slot
from .models import Element, QueueConfig


class HotQueue(MultiLevelBucketQueue):
    """
    Heap-on-top queue: a k-level bucket queue that does not expand small buckets.

    When the bucket chosen for expansion holds at most ``t`` elements it
    becomes the hot bucket and its elements are mirrored into a binary
    heap. Extract-min then pops the heap and drops the twin from the
    bucket. Levels below the hot bucket stay empty while it is hot. If the
    hot bucket grows past ``t`` the heap is cleared and the bucket is
    expanded as usual.
    """

    name = "hot"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self.t = config.threshold
        self.heap = IndexedHeap(config.capacity_n)
        self.hot: Optional[Slot] = None
        self.hot_range: Optional[Tuple[int, int]] = None

    def _in_hot_range(self, y: int) -> bool:
        return self.hot is not None and self.hot_range[0] <= y <= self.hot_range[1]

    def _divert(self, level: int, j: int) -> bool:
        bucket = self.levels[level][j]
        if len(bucket) > self.t:
            return False
        self.hot = (level, j)
        self.hot_range = self.bucket_range(level, j)
        for item_id in bucket:
            self._heap_push(item_id, self._key[item_id])
        return True

    def _heap_push(self, item_id: int, key: int) -> None:
        self.heap.push(item_id, key)
        self.counters.heap_ops += 1

    def _join_hot(self, item_id: int, key: int) -> None:
        self._put(item_id, self.hot)
        self._heap_push(item_id, key)
        if len(self.levels[self.hot[0]][self.hot[1]]) > self.t:
            self._cool()

    def _cool(self) -> None:
        level, j = self.hot
        self.heap.clear()
        self.hot = None
        self.hot_range = None
        self._cascade(level, j, divert=False, floor=self._scaled(self.last_min))

    def _leave_hot(self, item_id: int) -> None:
        self.heap.remove(item_id)
        self.counters.heap_ops += 1
        level, j = self._take(item_id)
        if not self.levels[level][j]:
            self.hot = None
            self.hot_range = None

    def _insert(self, item_id: int, key: int) -> None:
        self._check_window(item_id, key)
        y = self._scaled(key)
        if self._in_hot_range(y):
            self._join_hot(item_id, key)
            return
        slot = self.find_slot(y)
        if slot == self.hot:
            # next-cycle key aimed at a hot top-level bucket
            self._cool()
            slot = self.find_slot(y)
        self._put(item_id, slot)

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        if item_id in self.heap:
            self.heap.decrease(item_id, new_key)
            self.counters.heap_ops += 1
            return
        y = self._scaled(new_key)
        if self._in_hot_range(y):
            level = self._take(item_id)[0]
            self._relocated(item_id, level != self.hot[0])
            self._join_hot(item_id, new_key)
            return
        # a decrease stays within the window, so it never lands in the hot
        # bucket outside the hot range
        current = self._slot[item_id]
        target = self.find_slot(y, current[0])
        if target != current:
            self._take(item_id)
            self._put(item_id, target)
            self._relocated(item_id, target[0] != current[0])

    def _remove(self, item_id: int, key: int) -> None:
        if item_id in self.heap:
            self._leave_hot(item_id)
        else:
            self._take(item_id)

    def _extract(self) -> Element:
        if self.hot is None and self.level_count[0] == 0:
            self._expand()
        if self.hot is not None:
            item_id, key = self.heap.peek()
            self._leave_hot(item_id)
            return Element(item_id, key)
        return self._pop_bottom()

    def _exempt(self, level: int, j: int) -> bool:
        return (level, j) == self.hot

    def _audit(self) -> List[str]:
        problems = super()._audit()
        if self.hot is None:
            if len(self.heap):
                problems.append(f"heap holds {len(self.heap)} elements while no bucket is hot")
            return problems
        level, j = self.hot
        bucket = self.levels[level][j]
        if set(self.heap.ids()) != bucket:
            problems.append(f"heap ids differ from hot bucket ({level}, {j})")
        for item_id in self.heap.ids():
            if self.heap.key_of(item_id) != self._key[item_id]:
                problems.append(f"heap key of id {item_id} is stale")
        if len(self.heap) > self.t:
            problems.append(f"heap size {len(self.heap)} above threshold {self.t}")
        if j != self.alpha[level]:
            problems.append(f"hot bucket ({level}, {j}) is not active")
        if any(self.level_count[i] for i in range(level)):
            problems.append(f"levels below hot level {level} are not empty")
        if self.hot_range != self.bucket_range(level, j):
            problems.append(f"hot range {self.hot_range} is stale")
        return problems
