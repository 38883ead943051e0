"""Int-backed bitset helpers.

Vertex sets are represented internally as Python ints (bit i = vertex i).
All hot loops in the package work on these masks; the public API converts
to and from frozensets at the boundary.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def bits_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1
