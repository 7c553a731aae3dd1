"""Lower bounds on the minimax pairwise overlap of n lines in C^m."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["PackingBoundSet", "packing_bounds", "simplex_bound", "fejes_toth_bound"]


def simplex_bound(n: int, m: int) -> float:
    return (n - m) / (m * (n - 1)) if n > 1 else 0.0


def fejes_toth_bound(n: int) -> float:
    """Sphere-packing bound for qubit state sets (m = 2), n >= 3."""
    if n < 3:
        return 0.0
    x = math.pi * n / (6 * (n - 2))
    return 0.25 / math.sin(x) ** 2


@dataclass(frozen=True)
class PackingBoundSet:
    n: int
    m: int
    simplex: float
    orthoplex: float | None          # 1/m, applicable only for n > m^2
    orthoplex_tight_possible: bool   # equality possible only for n <= 2(m^2-1)
    fejes_toth: float | None         # m = 2 only
    delta2_lower: float
    delta2_upper: float


def packing_bounds(n: int, m: int) -> PackingBoundSet:
    """All applicable overlap bounds for n pure states in dimension m."""
    if m < 2:
        raise ValueError("need m >= 2")
    if n < m:
        raise ValueError("need n >= m")
    simp = simplex_bound(n, m)
    ortho = 1.0 / m if n > m * m else None
    ft = fejes_toth_bound(n) if m == 2 and n >= 3 else None
    lower = simp if ortho is None else max(simp, ortho)
    return PackingBoundSet(
        n=n,
        m=m,
        simplex=simp,
        orthoplex=ortho,
        orthoplex_tight_possible=n <= 2 * (m * m - 1),
        fejes_toth=ft,
        delta2_lower=lower,
        delta2_upper=1.0 / m,
    )
