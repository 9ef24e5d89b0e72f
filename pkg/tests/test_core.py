import pytest

from monoqueue.backends import make_queue
from monoqueue.exceptions import (
    ConfigurationError,
    DuplicateId,
    KeyOutOfRange,
    MonotonicityViolation,
    NotADecrease,
    QueueErrorKind,
    UnknownId,
    ValidationError,
)
from monoqueue.graph import gen_path
from monoqueue.models import Backend, OpCounters, QueueConfig, default_threshold
from monoqueue.oracle import OracleQueue
from monoqueue.utils import ceil_log, ceil_root, dist_checksum, dump_lines

from conftest import QUEUE_CONFIGS, config_id


@pytest.fixture(params=QUEUE_CONFIGS, ids=config_id)
def queue(request):
    backend, params = request.param
    return make_queue(backend, QueueConfig(capacity_n=16, max_key=1000, C=16, **params))


def test_insert_first_element(queue):
    queue.insert(0, 0)
    assert len(queue) == 1
    assert 0 in queue
    assert queue.counters.inserts == 1


def test_insert_below_last_minimum(queue):
    queue.insert(0, 5)
    assert queue.extract_min().key == 5
    with pytest.raises(MonotonicityViolation) as info:
        queue.insert(3, 4)
    assert info.value.item_id == 3
    assert info.value.key == 4
    assert info.value.kind == QueueErrorKind.MONOTONICITY_VIOLATION


def test_insert_duplicate_id(queue):
    queue.insert(1, 7)
    with pytest.raises(DuplicateId):
        queue.insert(1, 7)
    assert len(queue) == 1


def test_insert_key_above_max_key(queue):
    with pytest.raises(KeyOutOfRange):
        queue.insert(1, 1001)


def test_insert_id_outside_capacity(queue):
    with pytest.raises(UnknownId):
        queue.insert(16, 1)


def test_decrease_key(queue):
    queue.insert(2, 9)
    queue.decrease_key(2, 4)
    assert queue.key_of(2) == 4
    assert queue.counters.decreases == 1
    assert tuple(queue.extract_min()) == (2, 4)


def test_decrease_absent_id(queue):
    with pytest.raises(UnknownId):
        queue.decrease_key(7, 1)


def test_decrease_to_equal_key_is_noop(queue):
    queue.insert(2, 4)
    queue.decrease_key(2, 4)
    assert queue.counters.decreases == 0
    assert queue.key_of(2) == 4


def test_decrease_rejects_increase(queue):
    queue.insert(2, 4)
    with pytest.raises(NotADecrease):
        queue.decrease_key(2, 6)


def test_decrease_below_last_minimum(queue):
    queue.insert(0, 3)
    queue.insert(1, 8)
    queue.extract_min()
    with pytest.raises(MonotonicityViolation):
        queue.decrease_key(1, 2)


def test_extract_tie(queue):
    for item_id, key in [(0, 3), (1, 3), (2, 8)]:
        queue.insert(item_id, key)
    element = queue.extract_min()
    assert element.key == 3
    assert element.id in (0, 1)


def test_extract_empty(queue):
    assert queue.extract_min() is None
    assert queue.counters.empty_scan_steps == 0
    assert queue.counters.extracts == 0


def test_extract_sorted(queue):
    for item_id, key in enumerate([5, 2, 9]):
        queue.insert(item_id, key)
    assert [queue.extract_min().key for _ in range(3)] == [2, 5, 9]
    assert queue.extract_min() is None


def test_remove(queue):
    queue.insert(0, 5)
    queue.insert(1, 7)
    assert queue.remove(0) == 5
    assert 0 not in queue
    assert tuple(queue.extract_min()) == (1, 7)
    assert queue.counters.removes == 1
    with pytest.raises(UnknownId):
        queue.remove(0)


def test_balanced_sequence_counts(queue):
    for item_id, key in enumerate([4, 1, 12, 7, 7]):
        queue.insert(item_id, key)
    while queue.extract_min() is not None:
        pass
    assert len(queue) == 0
    assert queue.counters.inserts == queue.counters.extracts == 5
    assert queue.audit() == []


def test_counters_snapshot_is_independent(queue):
    queue.insert(0, 1)
    snapshot = queue.counters.snapshot()
    queue.extract_min()
    assert snapshot.extracts == 0
    assert queue.counters.extracts == 1


# Oracle


def oracle(capacity_n=8):
    return OracleQueue(QueueConfig(capacity_n=capacity_n, max_key=100))


def test_oracle_breaks_ties_by_id():
    q = oracle()
    q.o_insert(1, 1)
    q.o_insert(0, 1)
    assert tuple(q.o_extract()) == (0, 1)
    assert tuple(q.o_extract()) == (1, 1)


def test_oracle_decrease_then_extract():
    q = oracle()
    q.o_insert(0, 5)
    q.o_insert(2, 9)
    q.o_decrease(2, 3)
    assert tuple(q.o_extract()) == (2, 3)
    assert tuple(q.o_extract()) == (0, 5)
    assert q.o_extract() is None


def test_oracle_skips_removed():
    q = oracle()
    q.insert(0, 2)
    q.insert(1, 3)
    q.remove(0)
    assert tuple(q.extract_min()) == (1, 3)
    assert q.extract_min() is None


# Models


def test_queue_config_validation():
    with pytest.raises(ValidationError):
        QueueConfig(capacity_n=1, max_key=10, C=0).validate()
    with pytest.raises(ValidationError):
        QueueConfig(capacity_n=1, max_key=10, delta=1).validate()
    with pytest.raises(ValidationError):
        QueueConfig(capacity_n=1, max_key=2**64).validate()
    with pytest.raises(ValidationError):
        QueueConfig(capacity_n=1, max_key=10, width_multiplier=0).validate()
    QueueConfig(capacity_n=1, max_key=2**64 - 1).validate()


def test_queue_config_from_dict_ignores_unknown_keys():
    config = QueueConfig.from_dict({"capacity_n": 4, "max_key": 10, "k": 3, "colour": "red"})
    assert config.k == 3
    assert config.to_dict()["capacity_n"] == 4
    assert "colour" not in config.to_dict()


def test_default_threshold():
    assert default_threshold(15, 2) == 4
    assert default_threshold(1, 2) == 2
    assert QueueConfig(capacity_n=1, max_key=1, C=100, k=3).threshold == 5
    assert QueueConfig(capacity_n=1, max_key=1, hot_threshold=0).threshold == 0


def test_config_for_graph():
    graph = gen_path(4, 6)
    config = QueueConfig(capacity_n=0, max_key=0, k=3).for_graph(graph)
    assert (config.capacity_n, config.C, config.max_key, config.k) == (4, 6, 24, 3)


def test_config_for_graph_rejects_wide_multiplier():
    graph = gen_path(4, 2)
    with pytest.raises(ConfigurationError):
        QueueConfig(capacity_n=0, max_key=0, width_multiplier=3).for_graph(graph)


def test_wide_multiplier_needs_bucket_backend():
    config = QueueConfig(capacity_n=2, max_key=10, width_multiplier=2)
    with pytest.raises(ConfigurationError):
        make_queue(Backend.RADIX1, config)
    assert make_queue("mlb", config).p == 2


def test_unknown_backend():
    with pytest.raises(ConfigurationError):
        make_queue("fibonacci", QueueConfig(capacity_n=1, max_key=1))


def test_op_counters_scan_work():
    counters = OpCounters(empty_scan_steps=4, expansions=3)
    assert counters.scan_work == 7
    assert counters == OpCounters.from_dict(counters.to_dict())


# Utilities


@pytest.mark.parametrize(
    "value, k, expected",
    [(1, 3, 1), (16, 2, 4), (17, 2, 5), (101, 3, 5), (16, 1, 16), (2**64, 2, 2**32), (2**64 + 1, 2, 2**32 + 1)],
)
def test_ceil_root(value, k, expected):
    assert ceil_root(value, k) == expected


@pytest.mark.parametrize(
    "base, value, expected", [(2, 1, 0), (2, 16, 4), (2, 17, 5), (4, 16, 2), (4, 4, 1), (4, 17, 3)]
)
def test_ceil_log(base, value, expected):
    assert ceil_log(base, value) == expected


def test_dump_and_checksum():
    assert list(dump_lines([0, 3, None])) == ["d 1 0", "d 2 3", "d 3 UNREACHABLE"]
    assert dist_checksum([0, 3, None]) == dist_checksum([0, 3, None])
    assert dist_checksum([0, 3, None]) != dist_checksum([0, 4, None])
    assert len(dist_checksum([0])) == 16
