"""Strategy constructors from combinatorial objects.

Constant-weight-code families give one-way strategies; complement pairings,
the relay/halving block construction, and product-intersection family pairs
give strategies for the simultaneous-message model.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .bits import iter_bits, popcount
from .families import SubsetFamily
from .strategies import ClassicalStrategy, one_way_strategy_from_supports

__all__ = [
    "CwcParams",
    "PairFamilyParams",
    "CwcCapacity",
    "strategy_from_cwc",
    "cwc_capacity",
    "cwc_search",
    "complement_pair_strategy",
    "halving_construction",
    "smp_strategy_from_pair",
    "search_pair_capacity",
    "PairSearchResult",
    "pair_capacity_example_8_5",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CwcParams:
    m: int
    k: int
    j: int

    def __post_init__(self):
        if not 1 <= self.j < self.k <= self.m:
            raise ValueError("need 1 <= j < k <= m")


@dataclass(frozen=True)
class PairFamilyParams:
    m: int
    k1: int
    k2: int
    j: int

    def __post_init__(self):
        if min(self.k1, self.k2) < 1 or self.j > self.k1 * self.k2:
            raise ValueError("need k1, k2 >= 1 and j <= k1*k2")


def is_prime_power(x: int) -> bool:
    if x < 2:
        return False
    for p in range(2, x + 1):
        if p * p > x:
            return True  # x itself is prime
        if x % p == 0:
            while x % p == 0:
                x //= p
            return x == 1
    return False


@dataclass(frozen=True)
class CwcCapacity:
    value: int | None  # None means unknown
    provenance: str

    @property
    def known(self) -> bool:
        return self.value is not None


# sparse literature values for A(m, 2(k-j), k) outside the closed forms,
# keyed (m, k, j); kept minimal and sourced from standard constructions
_LITERATURE_N = {
    (13, 4, 1): (13, "projective plane of order 3"),
}


def cwc_capacity(m: int, k: int, j: int) -> CwcCapacity:
    """Largest family of k-subsets of [m] with pairwise intersections <= j.

    Consults closed forms first, then bundled literature values; otherwise
    reports unknown.  Equals the constant-weight-code number A(m, 2(k-j), k).
    """
    if k > m:
        return CwcCapacity(0, "void: k exceeds m")
    if j >= k:
        return CwcCapacity(None, "invalid: j must be < k")
    if k == m:
        return CwcCapacity(1, "single full set")
    if j == k - 1:
        return CwcCapacity(comb(m, k), "closed form: all k-subsets")
    if k == 3 and j == 1:
        base = (m * ((m - 1) // 2)) // 3
        if m % 6 == 5:
            base -= 1
        return CwcCapacity(base, "closed form: weight-3 packing number")
    if j == 1 and k * k == m and is_prime_power(k):
        return CwcCapacity(k * (k + 1), "closed form: affine-plane packing")
    lit = _LITERATURE_N.get((m, k, j))
    if lit:
        return CwcCapacity(lit[0], f"literature: {lit[1]}")
    return CwcCapacity(None, "unknown")


def cwc_search(m: int, k: int, j: int, max_nodes: int = 20_000_000):
    """Exhaustive max-clique search over k-subsets with pairwise |∩| <= j.

    Independent of cwc_capacity's closed forms; used as its cross-check.
    Returns (size, family, exact).
    """
    verts = [s for s in range(1, 1 << m) if popcount(s) == k]
    nv = len(verts)
    compat = []
    for i, a in enumerate(verts):
        row = 0
        for t, b in enumerate(verts):
            if t != i and popcount(a & b) <= j:
                row |= 1 << t
        compat.append(row)
    best: list[int] = []
    nodes = 0
    exact = True

    def grow(cur: list[int], allowed: int, floor_idx: int):
        nonlocal best, nodes, exact
        nodes += 1
        if nodes > max_nodes:
            exact = False
            return
        if len(cur) > len(best):
            best = list(cur)
        cand = allowed
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            if len(cur) + 1 + popcount(cand) <= len(best):
                return
            cur.append(verts[i])
            grow(cur, cand & compat[i], i + 1)
            cur.pop()
            if not exact:
                return

    grow([], (1 << nv) - 1, 0)
    fam = SubsetFamily(m, tuple(best)) if best else None
    return len(best), fam, exact


def strategy_from_cwc(family: SubsetFamily, k: int, j: int) -> ClassicalStrategy:
    """Uniform one-way strategy from a constant-weight, bounded-overlap family.

    Every support has size k and pairwise intersections at most j, giving a
    worst-case error of exactly (max pairwise intersection)/k <= j/k.
    """
    for i, s in enumerate(family.sets):
        if popcount(s) != k:
            raise ValueError(f"member {i} has weight {popcount(s)}, want {k}")
    for x, y in itertools.combinations(range(len(family)), 2):
        inter = popcount(family.sets[x] & family.sets[y])
        if inter > j:
            raise ValueError(
                f"members {x} and {y} intersect in {inter} > {j} elements")
    return one_way_strategy_from_supports(family)


def complement_pair_strategy(m: int) -> ClassicalStrategy:
    """Middle-layer supports for one sender, their complements for the other.

    n = C(m, floor(m/2)); worst-case error 1 - 1/(floor(m/2)*ceil(m/2)).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    w = m // 2
    full = (1 << m) - 1
    alice = [s for s in range(1, 1 << m) if popcount(s) == w]
    bob = [full & ~s for s in alice]
    n = len(alice)
    r = [[_ZERO] * m for _ in range(m)]
    for z in range(n):
        for a in iter_bits(alice[z]):
            for b in iter_bits(bob[z]):
                r[a][b] = _ONE

    def uniform(masks):
        rows = []
        for mask in masks:
            wt = popcount(mask)
            row = [_ZERO] * m
            for i in iter_bits(mask):
                row[i] = Fraction(1, wt)
            rows.append(tuple(row))
        return tuple(rows)

    return ClassicalStrategy(n, m, m, uniform(alice), uniform(bob),
                             tuple(tuple(row) for row in r))


def halving_construction(base: ClassicalStrategy) -> ClassicalStrategy:
    """Convert a one-way strategy into a both-sides-compressed one.

    Alice fingerprints the first half of a doubled message set and relays the
    second; Bob does the opposite; the referee rejects across halves.  The
    worst-case error equals the base strategy's.
    """
    n, m = base.n, base.m_a
    if base.m_b != n:
        raise ValueError("base must be one-way (m_b == n)")
    for y in range(n):
        if any(base.q[y][b] != (1 if b == y else 0) for b in range(n)):
            raise ValueError("base must relay: q must be the identity")
    n2, m2 = 2 * n, m + n
    p = []
    q = []
    for x in range(n):  # first half: Alice fingerprints, Bob relays
        p.append(tuple(base.p[x]) + (_ZERO,) * n)
        q.append(tuple([_ZERO] * m) + tuple(
            _ONE if b == x else _ZERO for b in range(n)))
    for x in range(n):  # second half: Alice relays, Bob fingerprints
        p.append(tuple([_ZERO] * m) + tuple(
            _ONE if a == x else _ZERO for a in range(n)))
        q.append(tuple(base.p[x]) + (_ZERO,) * n)
    r = [[_ZERO] * m2 for _ in range(m2)]
    for a in range(m):
        for y in range(n):
            if base.r[a][y] != 0:
                r[a][m + y] = base.r[a][y]   # Alice fingerprint vs Bob relay
                r[m + y][a] = base.r[a][y]   # Alice relay vs Bob fingerprint
    return ClassicalStrategy(n2, m2, m2, tuple(p), tuple(q),
                             tuple(tuple(row) for row in r))


def _product_mask(a: int, b: int, m: int) -> int:
    """Bitmask over m*m cells of the rectangle a x b."""
    out = 0
    for i in iter_bits(a):
        row = b << (i * m)
        out |= row
    return out


def smp_strategy_from_pair(fp: SubsetFamily, fq: SubsetFamily,
                           k1: int, k2: int):
    """Uniform SMP strategy from a labeled family pair; recomputes the
    product-intersection level j rather than trusting the caller.

    Returns (strategy, j); the strategy's worst-case error is j/(k1*k2).
    """
    if len(fp) != len(fq):
        raise ValueError("family sizes differ")
    n = len(fp)
    m1, m2 = fp.m, fq.m
    for fam, k, name in ((fp, k1, "fp"), (fq, k2, "fq")):
        for i, s in enumerate(fam.sets):
            if popcount(s) != k:
                raise ValueError(f"{name} member {i} has weight {popcount(s)}, want {k}")
    m = max(m1, m2)
    union = 0
    rects = []
    for z in range(n):
        rect = _product_mask(fp.sets[z], fq.sets[z], m)
        rects.append(rect)
        union |= rect
    j = 0
    for x in range(n):
        for y in range(n):
            if x != y:
                cross = _product_mask(fp.sets[x], fq.sets[y], m)
                j = max(j, popcount(cross & union))
    r = [[_ZERO] * m2 for _ in range(m1)]
    for z in range(n):
        for a in iter_bits(fp.sets[z]):
            for b in iter_bits(fq.sets[z]):
                r[a][b] = _ONE

    def uniform(fam, k, width):
        rows = []
        for mask in fam.sets:
            row = [_ZERO] * width
            for i in iter_bits(mask):
                row[i] = Fraction(1, k)
            rows.append(tuple(row))
        return tuple(rows)

    strat = ClassicalStrategy(n, m1, m2, uniform(fp, k1, m1),
                              uniform(fq, k2, m2),
                              tuple(tuple(row) for row in r))
    return strat, j


def pair_capacity_example_8_5():
    """The known optimal 8-message pair over [5] with k1 = k2 = 2, j = 3."""
    fp = SubsetFamily.from_elements(5, [
        (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (1, 2), (3, 4)])
    fq = SubsetFamily.from_elements(5, [
        (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (1, 2)])
    return fp, fq


@dataclass
class PairSearchResult:
    n: int
    fp: SubsetFamily | None
    fq: SubsetFamily | None
    exact: bool
    nodes: int
    notes: list[str] = field(default_factory=list)


def _anneal_full_matching(m: int, k1: int, k2: int, j: int, seed: int,
                          restarts: int = 4, iters: int = 60_000):
    """Seeded annealing for a ceiling-sized pair: a bijection from all
    k1-subsets onto all k2-subsets meeting the coverage level.

    Only applicable when both sides have equally many subsets.  Returns the
    bijection as a list aligned with the ascending k1-subset order, or None.
    """
    import math
    import random

    a_sets = [s for s in range(1, 1 << m) if popcount(s) == k1]
    b_sets = [s for s in range(1, 1 << m) if popcount(s) == k2]
    if len(a_sets) != len(b_sets):
        return None
    n = len(a_sets)
    rect = {(a, b): _product_mask(a, b, m) for a in a_sets for b in b_sets}

    def violations(sigma):
        union = 0
        for z in range(n):
            union |= rect[(a_sets[z], sigma[z])]
        bad = 0
        for x in range(n):
            rx = a_sets[x]
            for y in range(n):
                if x != y and popcount(rect[(rx, sigma[y])] & union) > j:
                    bad += 1
        return bad

    for r in range(restarts):
        rng = random.Random(seed * 1000003 + r)
        sigma = b_sets[:]
        rng.shuffle(sigma)
        cur = violations(sigma)
        temp = 3.0
        for _ in range(iters):
            if cur == 0:
                return sigma
            i, l = rng.randrange(n), rng.randrange(n)
            if i == l:
                continue
            sigma[i], sigma[l] = sigma[l], sigma[i]
            new = violations(sigma)
            if new <= cur or rng.random() < math.exp(-(new - cur) / temp):
                cur = new
            else:
                sigma[i], sigma[l] = sigma[l], sigma[i]
            temp = max(0.05, temp * 0.9997)
        if cur == 0:
            return sigma
    return None


def search_pair_capacity(m: int, k1: int, k2: int, j: int,
                         max_nodes: int | None = None,
                         max_seconds: float | None = None,
                         seed: int = 0) -> PairSearchResult:
    """Search for the largest family pair with product-intersection level <= j.

    Members on each side must be distinct, so n <= min(C(m,k1), C(m,k2)).
    A seeded annealing pass first tries to hit that ceiling outright (exact
    when it succeeds); otherwise index-ordered backtracking with root
    symmetry breaking maximizes n within the budget.
    """
    if j >= k1 * k2:
        raise ValueError("need j < k1*k2 for a meaningful capacity")
    a_sets = [s for s in range(1, 1 << m) if popcount(s) == k1]
    b_sets = [s for s in range(1, 1 << m) if popcount(s) == k2]
    ceiling = min(len(a_sets), len(b_sets))

    sigma = _anneal_full_matching(m, k1, k2, j, seed)
    if sigma is not None:
        fp = SubsetFamily(m, tuple(a_sets))
        fq = SubsetFamily(m, tuple(sigma))
        _, jj = smp_strategy_from_pair(fp, fq, k1, k2)
        if jj > j:
            raise AssertionError("annealing returned an invalid pair")
        return PairSearchResult(ceiling, fp, fq, True, 0,
                                ["distinctness ceiling reached (annealing)"])
    couples = [(a, b) for a in a_sets for b in b_sets]
    rect = {}
    for a in a_sets:
        for b in b_sets:
            rect[(a, b)] = _product_mask(a, b, m)
    deadline = time.monotonic() + max_seconds if max_seconds else None
    nodes = 0
    out_of_budget = False
    notes: list[str] = []

    def ok_after_add(fam, union):
        # all ordered cross pairs must stay within the coverage level
        for x in range(len(fam)):
            ax, _ = fam[x]
            for y in range(len(fam)):
                if x == y:
                    continue
                _, by = fam[y]
                if popcount(rect[(ax, by)] & union) > j:
                    return False
        return True

    best: list[tuple[int, int]] = []
    # j >= 0 always admits disjoint singleton-style couples on each element?
    # only when k1 = k2 = 1; start from the empty family otherwise.
    if k1 == 1 and k2 == 1 and j >= 0:
        best = [(1 << i, 1 << i) for i in range(m)]

    target = len(best) + 1
    exact = True

    def descend(fam, union, used_a, used_b, start):
        nonlocal best, nodes, out_of_budget, target
        if len(fam) >= target:
            best = list(fam)
            target = len(best) + 1
        if len(best) >= ceiling:
            return True
        for idx in range(start, len(couples)):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                out_of_budget = True
                return False
            if deadline is not None and not nodes % 1024 and time.monotonic() > deadline:
                out_of_budget = True
                return False
            a, b = couples[idx]
            if a in used_a or b in used_b:
                continue
            cap = min(len(a_sets) - len(used_a), len(b_sets) - len(used_b))
            if len(fam) + cap < target:
                return False
            u2 = union | rect[(a, b)]
            fam.append((a, b))
            if ok_after_add(fam, u2):
                used_a.add(a)
                used_b.add(b)
                if descend(fam, u2, used_a, used_b, idx + 1):
                    fam.pop()
                    used_a.discard(a)
                    used_b.discard(b)
                    return True
                used_a.discard(a)
                used_b.discard(b)
            fam.pop()
            if out_of_budget:
                return False
        return False

    # root symmetry: first couple is ({1..k1}, canonical under its stabilizer)
    prefix_a = (1 << k1) - 1
    t_lo = max(0, k1 + k2 - m)
    t_hi = min(k1, k2)
    done = False
    for t in range(t_hi, t_lo - 1, -1):
        b0 = ((1 << t) - 1) | (((1 << (k2 - t)) - 1) << k1)
        u0 = rect[(prefix_a, b0)]
        if descend([(prefix_a, b0)], u0, {prefix_a}, {b0}, 0):
            done = True
            break
        if out_of_budget:
            break
    if out_of_budget:
        exact = False
        notes.append("budget exhausted")
    if len(best) >= ceiling:
        exact = True
        notes.append("distinctness ceiling reached")

    if not best:
        return PairSearchResult(0, None, None, exact, nodes, notes)
    fp = SubsetFamily(m, tuple(a for a, _ in best))
    fq = SubsetFamily(m, tuple(b for _, b in best))
    _, jj = smp_strategy_from_pair(fp, fq, k1, k2)
    if jj > j:
        raise AssertionError("pair search returned an invalid pair")
    return PairSearchResult(len(best), fp, fq, exact, nodes, notes)
