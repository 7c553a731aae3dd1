"""Mutually unbiased bases for prime dimensions."""

from __future__ import annotations

import math

import numpy as np

from .states import StateSet

__all__ = ["mub_states", "is_prime"]


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    f = 2
    while f * f <= x:
        if x % f == 0:
            return False
        f += 1
    return True


def mub_states(m: int) -> StateSet:
    """m+1 mutually unbiased bases of C^m, flattened to m(m+1) states.

    Requires m prime (prime-power ground fields are out of scope).  The
    computational basis comes first; cross-basis overlaps are exactly 1/m up
    to float roundoff, intra-basis overlaps are 0.
    """
    if not is_prime(m):
        raise ValueError(f"m = {m} is not prime; only prime dimensions are built")
    bases = [np.eye(m, dtype=np.complex128)]
    if m == 2:
        s = 1 / math.sqrt(2)
        bases.append(np.array([[s, s], [s, -s]], dtype=np.complex128))
        bases.append(np.array([[s, 1j * s], [s, -1j * s]], dtype=np.complex128))
    else:
        w = np.exp(2j * np.pi / m)
        a = np.arange(m)
        for t in range(m):
            rows = [w ** ((t * a * a + s * a) % m) / math.sqrt(m)
                    for s in range(m)]
            bases.append(np.array(rows, dtype=np.complex128))
    return StateSet(np.vstack(bases))
