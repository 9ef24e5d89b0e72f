import hashlib
from typing import Iterable, Optional, Sequence


def ceil_root(value: int, k: int) -> int:
    """Smallest integer d >= 1 with d**k >= value."""
    if k < 1:
        raise ValueError("k must be positive")
    if value <= 1:
        return 1
    lo, hi = 1, 1 << ceil_div(value.bit_length(), k)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= value:
            hi = mid
        else:
            lo = mid + 1
    return lo


def ceil_log(base: int, value: int) -> int:
    """Smallest integer e >= 0 with base**e >= value."""
    if base < 2:
        raise ValueError("base must be at least 2")
    e, power = 0, 1
    while power < value:
        power *= base
        e += 1
    return e


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def format_distance(value: Optional[int]) -> str:
    return "UNREACHABLE" if value is None else str(value)


def dump_lines(dist: Sequence[Optional[int]]) -> Iterable[str]:
    """Result dump lines, "d <vertex-1-based> <dist|UNREACHABLE>"."""
    for v, value in enumerate(dist):
        yield f"d {v + 1} {format_distance(value)}"


def dist_checksum(dist: Sequence[Optional[int]]) -> str:
    """Short SHA-256 digest of the result dump of a distance array."""
    digest = hashlib.sha256()
    for line in dump_lines(dist):
        digest.update(line.encode("utf-8"))
        digest.update(b"\n")
    return digest.hexdigest()[:16]
