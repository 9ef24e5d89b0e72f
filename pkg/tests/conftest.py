import pytest

from monoqueue.graph import Graph
from monoqueue.models import Backend

TRIANGLE_GR = """c s=1 a=2 b=3
p sp 3 3
a 1 2 2
a 1 3 5
a 2 3 1
"""

# (backend, QueueConfig keyword arguments)
QUEUE_CONFIGS = [
    (Backend.DIAL, {}),
    (Backend.MLB, {"k": 1}),
    (Backend.MLB, {"k": 2}),
    (Backend.MLB, {"k": 3}),
    (Backend.RADIX1, {}),
    (Backend.RADIX2, {"delta": 2}),
    (Backend.RADIX2, {"delta": 4}),
    (Backend.HOT, {"hot_threshold": 0}),
    (Backend.HOT, {}),
    (Backend.HOT, {"k": 3, "hot_threshold": 1}),
    (Backend.BINARY_HEAP, {}),
    (Backend.ARRAY, {}),
]


def config_id(entry):
    backend, params = entry
    return ":".join([backend.value] + [f"{k}={v}" for k, v in sorted(params.items())])


@pytest.fixture
def triangle():
    return Graph.from_arcs(3, [0, 0, 1], [1, 2, 2], [2, 5, 1])


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.gr"
    path.write_text(TRIANGLE_GR, encoding="utf-8")
    return path
