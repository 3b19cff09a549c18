"""Subsets of a small finite carrier, stored as Python ints (bit i set = element i)."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_tuple(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def full(n: int) -> int:
    return (1 << n) - 1


def contains(mask: int, i: int) -> bool:
    return (mask >> i) & 1 == 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def sort_key(mask: int) -> tuple[int, int]:
    """Canonical order on subsets: by cardinality, then by integer value.

    Ordering by cardinality first makes any sorted family of sets a linear
    extension of inclusion.
    """
    return (mask.bit_count(), mask)


def canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=sort_key))


def all_subsets(mask: int) -> Iterator[int]:
    """Every submask of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
