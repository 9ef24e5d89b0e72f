from typing import Dict, Type, Union

from .base import MonotoneQueue
from .dial import DialQueue
from .exceptions import ConfigurationError
from .heap import ArrayQueue, BinaryHeapQueue
from .hot import HotQueue
from .mlb import MultiLevelBucketQueue
from .models import Backend, QueueConfig
from .radix import RadixHeap, RadixHeap2

BACKENDS: Dict[Backend, Type[MonotoneQueue]] = {
    Backend.DIAL: DialQueue,
    Backend.MLB: MultiLevelBucketQueue,
    Backend.RADIX1: RadixHeap,
    Backend.RADIX2: RadixHeap2,
    Backend.HOT: HotQueue,
    Backend.BINARY_HEAP: BinaryHeapQueue,
    Backend.ARRAY: ArrayQueue,
}

# Backends whose buckets honour the wide-bucket multiplier p.
SCALED_BACKENDS = frozenset({Backend.MLB, Backend.HOT})


def make_queue(backend: Union[Backend, str], config: QueueConfig) -> MonotoneQueue:
    """Build an empty queue of the named backend."""
    try:
        backend = Backend(backend)
    except ValueError:
        raise ConfigurationError(
            "unknown backend", {"backend": backend, "choices": [b.value for b in Backend]}
        )
    if config.width_multiplier > 1 and backend not in SCALED_BACKENDS:
        raise ConfigurationError(
            "width multiplier is only supported by bucket backends",
            {"backend": backend.value, "p": config.width_multiplier},
        )
    return BACKENDS[backend](config)
