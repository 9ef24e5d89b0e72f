import pytest

from monoqueue.models import QueueConfig
from monoqueue.oracle import monotone_workload, replay
from monoqueue.radix import RadixHeap, RadixHeap2

M = 1000


def radix1(C=15, capacity_n=8):
    return RadixHeap(QueueConfig(capacity_n=capacity_n, max_key=M, C=C))


def radix2(C=15, delta=4, capacity_n=8):
    return RadixHeap2(QueueConfig(capacity_n=capacity_n, max_key=M, C=C, delta=delta))


@pytest.mark.parametrize(
    "C, k, bounds",
    [(15, 6, [0, 1, 3, 7, 15, M + 1]), (1, 3, [0, 1, M + 1])],
)
def test_initial_bounds(C, k, bounds):
    q = radix1(C)
    assert q.k == k
    assert q.upper[1:] == bounds
    assert q.upper[0] == -1


def test_bucket_count_grows_with_log():
    assert radix1(16).k == 7


@pytest.mark.parametrize("C", [1, 2, 15, 16, 255, 1000])
def test_lower_buckets_cover_each_width(C):
    q = radix1(C)
    assert q.widths[1:] == [1] + [2 ** (i - 2) for i in range(2, q.k)] + [M + 1]
    for i in range(2, q.k + 1):
        assert sum(q.widths[1:i]) >= min(q.widths[i], C + 1)


def test_insert_scans_bounds():
    q = radix1()
    q.insert(0, 5)
    q.insert(1, 0)
    assert q._where[0] == 4
    assert q._where[1] == 1


def test_decrease_rescans_downward():
    q = radix1()
    q.insert(0, 5)
    q.decrease_key(0, 2)
    assert q._where[0] == 3
    assert q.counters.element_moves == 1


def test_extract_redistributes():
    q = radix1()
    q.insert(0, 5)
    q.insert(1, 6)
    assert tuple(q.extract_min()) == (0, 5)
    assert q.upper == [4, 5, 6, 7, 7, 15, M + 1]
    assert q._where[1] == 2
    assert q.counters.element_moves == 1
    assert q.counters.empty_scan_steps == 3
    assert q.audit() == []


def test_extract_single_element():
    q = radix1()
    q.insert(0, 12)
    assert tuple(q.extract_min()) == (0, 12)
    assert len(q) == 0
    assert q.extract_min() is None


def test_bucket_one_needs_no_redistribution():
    q = radix1()
    q.insert(0, 4)
    q.insert(1, 4)
    q.insert(2, 5)
    assert q.extract_min().key == 4
    assert q._where[1] == 1
    bounds = list(q.upper)
    moves = q.counters.element_moves
    assert q.extract_min().key == 4
    assert q.upper == bounds
    assert q.counters.element_moves == moves


# Two-level


@pytest.mark.parametrize(
    "C, delta, k, bounds",
    [(15, 4, 3, [3, 19, M + 1]), (3, 4, 2, [3, M + 1]), (15, 2, 5, [1, 5, 13, 29, M + 1])],
)
def test_two_level_bounds(C, delta, k, bounds):
    q = radix2(C, delta)
    assert q.k == k
    assert q.upper[1:] == bounds


def test_two_level_widths():
    q = radix2(15, 2)
    assert q.widths[1 : q.k] == [2, 4, 8, 16]
    assert radix1(15).widths[1:5] == [1, 1, 2, 4]


def test_two_level_inner_index():
    q = radix2()
    q.insert(0, 9)
    q.insert(1, 3)
    q.insert(2, 0)
    assert q._where[0] == (2, 2)
    assert q._where[1] == (1, 4)
    assert q._where[2] == (1, 1)
    assert q.nonempty[1:] == [2, 1, 0]


def test_two_level_singleton_inner_bucket():
    q = radix2()
    q.insert(0, 9)
    assert tuple(q.extract_min()) == (0, 9)
    assert q.counters.element_moves == 0


def test_two_level_redistributes_one_inner_bucket():
    q = radix2()
    for item_id, key in enumerate([9, 10, 15]):
        q.insert(item_id, key)
    assert q._where[2] == (2, 3)
    assert tuple(q.extract_min()) == (0, 9)
    assert q.upper[:2] == [8, 11]
    assert q._where[1] == (1, 2)
    assert q._where[2] == (2, 3)
    assert q.counters.element_moves == 1
    assert q.audit() == []
    assert [q.extract_min().key for _ in range(2)] == [10, 15]


def test_two_level_decrease_within_bucket():
    q = radix2()
    q.insert(0, 18)
    q.decrease_key(0, 9)
    assert q._where[0] == (2, 2)
    assert q.counters.element_moves == 0
    assert q.audit() == []


@pytest.mark.parametrize("make, kwargs", [(RadixHeap, {}), (RadixHeap2, {"delta": 2}), (RadixHeap2, {"delta": 4})])
@pytest.mark.parametrize("seed", range(4))
def test_bucket_index_only_descends(make, kwargs, seed):
    workload = monotone_workload(seed, 2000, span=500, remove_weight=0.05)
    q = make(workload.config(**kwargs))
    assert replay(q, workload.ops, audit=True) == workload.expected
    assert q.max_placements <= q.k
