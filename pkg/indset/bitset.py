"""Integer-backed vertex sets: bit v of a mask stands for vertex v."""

from typing import Iterable, Iterator


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    """Create a mask from vertex ids."""
    result = 0
    for v in vertices:
        result |= 1 << v
    return result


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    """Index of the lowest set bit; `mask` must be nonzero."""
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_submasks(allowed: int) -> Iterator[int]:
    """Yield every submask of `allowed` in increasing numeric order, starting with 0."""
    sub = 0
    while True:
        yield sub
        sub = (sub - allowed) & allowed
        if sub == 0:
            return
