"""Bitmask helpers for subsets of {1, ..., m}.

Subsets are stored as Python ints: element i corresponds to bit i-1.
"""

from __future__ import annotations

from math import comb


def mask_from_elements(elements, m: int) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= m:
            raise ValueError(f"element {e} outside ground set [1, {m}]")
        mask |= 1 << (e - 1)
    return mask


def elements_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int):
    """Yield 0-based bit positions set in mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def sperner_number(m: int) -> int:
    """Size of the largest antichain in the subset lattice of an m-set."""
    if m < 1:
        raise ValueError("ground set must be nonempty")
    return comb(m, m // 2)


def min_ground_for_antichain(size: int) -> int:
    """Smallest d with an antichain of `size` distinct nonempty subsets of [d]."""
    d = 1
    while sperner_number(d) < size:
        d += 1
    return d
