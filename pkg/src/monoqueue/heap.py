from typing import List, Optional, Tuple

from .base import MonotoneQueue
from .models import Element, QueueConfig


class IndexedHeap:
    """
    Binary min-heap over dense integer ids with a position index.

    Entries are ordered by (key, id). The position index gives O(1)
    locate, so decrease and remove of an arbitrary id are O(log n).
    """

    __slots__ = ("_heap", "_pos", "_key")

    def __init__(self, capacity: int):
        self._heap: List[int] = []
        self._pos = [-1] * capacity
        self._key = [0] * capacity

    def __len__(self) -> int:
        return len(self._heap)

    def __contains__(self, item_id: int) -> bool:
        return self._pos[item_id] >= 0

    def key_of(self, item_id: int) -> int:
        return self._key[item_id]

    def keys(self) -> List[int]:
        return [self._key[i] for i in self._heap]

    def ids(self) -> List[int]:
        return list(self._heap)

    def peek(self) -> Optional[Tuple[int, int]]:
        if not self._heap:
            return None
        top = self._heap[0]
        return top, self._key[top]

    def push(self, item_id: int, key: int) -> None:
        if self._pos[item_id] >= 0:
            raise KeyError(f"id {item_id} already in heap")
        self._key[item_id] = key
        self._heap.append(item_id)
        self._pos[item_id] = len(self._heap) - 1
        self._sift_up(len(self._heap) - 1)

    def pop(self) -> Tuple[int, int]:
        if not self._heap:
            raise IndexError("pop from empty heap")
        top = self._heap[0]
        self._delete_at(0)
        return top, self._key[top]

    def decrease(self, item_id: int, key: int) -> None:
        index = self._pos[item_id]
        if index < 0:
            raise KeyError(f"id {item_id} not in heap")
        self._key[item_id] = key
        self._sift_up(index)

    def remove(self, item_id: int) -> None:
        index = self._pos[item_id]
        if index < 0:
            raise KeyError(f"id {item_id} not in heap")
        self._delete_at(index)

    def clear(self) -> None:
        for item_id in self._heap:
            self._pos[item_id] = -1
        self._heap.clear()

    def _delete_at(self, index: int) -> None:
        heap = self._heap
        gone = heap[index]
        last = heap.pop()
        self._pos[gone] = -1
        if index < len(heap):
            heap[index] = last
            self._pos[last] = index
            self._sift_up(index)
            self._sift_down(self._pos[last])

    def _less(self, a: int, b: int) -> bool:
        ka, kb = self._key[a], self._key[b]
        return ka < kb or (ka == kb and a < b)

    def _sift_up(self, index: int) -> None:
        heap, pos = self._heap, self._pos
        item = heap[index]
        while index > 0:
            parent = (index - 1) // 2
            above = heap[parent]
            if not self._less(item, above):
                break
            heap[index] = above
            pos[above] = index
            index = parent
        heap[index] = item
        pos[item] = index

    def _sift_down(self, index: int) -> None:
        heap, pos = self._heap, self._pos
        size = len(heap)
        item = heap[index]
        while True:
            child = 2 * index + 1
            if child >= size:
                break
            right = child + 1
            if right < size and self._less(heap[right], heap[child]):
                child = right
            below = heap[child]
            if not self._less(below, item):
                break
            heap[index] = below
            pos[below] = index
            index = child
        heap[index] = item
        pos[item] = index


class BinaryHeapQueue(MonotoneQueue):
    """Comparison-based reference backend; every heap call counts as one heap op."""

    name = "binary-heap"

    def __init__(self, config: QueueConfig):
        super().__init__(config)
        self.heap = IndexedHeap(config.capacity_n)

    def _insert(self, item_id: int, key: int) -> None:
        self.heap.push(item_id, key)
        self.counters.heap_ops += 1

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        self.heap.decrease(item_id, new_key)
        self.counters.heap_ops += 1

    def _extract(self) -> Element:
        self.counters.heap_ops += 1
        return Element(*self.heap.pop())

    def _remove(self, item_id: int, key: int) -> None:
        self.heap.remove(item_id)
        self.counters.heap_ops += 1

    def _audit(self) -> List[str]:
        problems = []
        if len(self.heap) != len(self):
            problems.append(f"heap holds {len(self.heap)} of {len(self)} elements")
        ids = self.heap.ids()
        for index in range(1, len(ids)):
            parent = ids[(index - 1) // 2]
            if self.heap._less(ids[index], parent):
                problems.append(f"heap order broken at position {index}")
        return problems


class ArrayQueue(MonotoneQueue):
    """
    Unsorted array of labels indexed by id, as in the original O(n^2)
    Dijkstra: constant-time insert and decrease, extract-min scans every
    slot. Slots of absent ids count as empty scan steps.
    """

    name = "array"

    def _insert(self, item_id: int, key: int) -> None:
        pass

    def _decrease(self, item_id: int, old_key: int, new_key: int) -> None:
        pass

    def _remove(self, item_id: int, key: int) -> None:
        pass

    def _extract(self) -> Element:
        best_id, best_key = -1, None
        empty = 0
        for item_id, key in enumerate(self._key):
            if key is None:
                empty += 1
            elif best_key is None or key < best_key:
                best_id, best_key = item_id, key
        self.counters.empty_scan_steps += empty
        return Element(best_id, best_key)
