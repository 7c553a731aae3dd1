"""Extremal set-family machinery: antichains, cover-free families, and search.

A family is a labeled (ordered) list of nonempty subsets of {1..m}, stored as
bitmasks.  The cover-free test uses multiset semantics: a family fails the
(k, j) criterion iff some member X and a size-k multiset of other members
(repetition allowed) exist such that every element of X lies in at least j of
the chosen members, counted with multiplicity.  With k = j = 1 this reduces to
the antichain condition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .bits import (
    elements_from_mask,
    is_subset,
    iter_bits,
    mask_from_elements,
    min_ground_for_antichain,
    popcount,
    sperner_number,
)

__all__ = [
    "SubsetFamily",
    "CoverParams",
    "AntichainReport",
    "CoverFreeReport",
    "CoverFreeSearchResult",
    "is_antichain",
    "is_cover_free",
    "sperner_number",
    "search_largest_cover_free",
    "naive_largest_cover_free",
    "kwise_unions",
]


@dataclass(frozen=True)
class SubsetFamily:
    """Ordered family of nonempty subsets of [m], as bitmasks."""

    m: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("ground set must have m >= 1")
        full = (1 << self.m) - 1
        for s in self.sets:
            if s == 0:
                raise ValueError("family members must be nonempty")
            if s & ~full:
                raise ValueError(f"member {bin(s)} exceeds ground set [1, {self.m}]")
        object.__setattr__(self, "sets", tuple(self.sets))

    def __len__(self) -> int:
        return len(self.sets)

    @classmethod
    def from_elements(cls, m: int, sets) -> "SubsetFamily":
        return cls(m, tuple(mask_from_elements(s, m) for s in sets))

    @classmethod
    def layer(cls, m: int, w: int) -> "SubsetFamily":
        """All w-subsets of [m] in ascending mask order."""
        return cls(m, tuple(s for s in range(1, 1 << m) if popcount(s) == w))

    @classmethod
    def middle_layer(cls, m: int) -> "SubsetFamily":
        return cls.layer(m, m // 2)

    def as_elements(self) -> list[tuple[int, ...]]:
        return [elements_from_mask(s) for s in self.sets]

    def weights(self) -> tuple[int, ...]:
        return tuple(popcount(s) for s in self.sets)


@dataclass(frozen=True)
class CoverParams:
    """k coverers, j-fold copies; stored gcd-reduced with k >= j >= 1."""

    k: int
    j: int = 1

    def __post_init__(self):
        if self.j < 1 or self.k < self.j:
            raise ValueError("need k >= j >= 1")
        g = gcd(self.k, self.j)
        object.__setattr__(self, "k", self.k // g)
        object.__setattr__(self, "j", self.j // g)

    @property
    def q(self) -> Fraction:
        return Fraction(self.k, self.j)

    def __str__(self) -> str:
        return str(self.k) if self.j == 1 else f"{self.k}/{self.j}"


@dataclass(frozen=True)
class AntichainReport:
    ok: bool
    witness: tuple[int, int] | None = None  # 0-based (x, y) with sets[x] <= sets[y]
    duplicate: bool = False

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CoverFreeReport:
    ok: bool
    witness: tuple[int, tuple[int, ...]] | None = None  # (x, chosen indices w/ mult)
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.ok


def is_antichain(family: SubsetFamily) -> AntichainReport:
    """True iff no member is contained in (or equal to) another member."""
    sets = family.sets
    n = len(sets)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if sets[x] == sets[y]:
                return AntichainReport(False, (x, y), duplicate=True)
            if is_subset(sets[x], sets[y]):
                return AntichainReport(False, (x, y))
    return AntichainReport(True)


def _cover_violation_for(sets, x: int, k: int, j: int):
    """Find a size-<=k multiset of indices != x that j-covers sets[x], or None.

    Padding a smaller multiset with repeats never lowers coverage, so a
    multiset of size <= k suffices to witness a size-k violation.
    """
    X = sets[x]
    w = popcount(X)
    others = [(i, sets[i] & X) for i in range(len(sets)) if i != x]
    others = [(i, inter) for i, inter in others if inter]
    if not others:
        return None
    # slot bound: each pick contributes at most max|Y ∩ X| coverage slots
    if k * max(popcount(inter) for _, inter in others) < j * w:
        return None
    others.sort(key=lambda t: -popcount(t[1]))
    elems = list(iter_bits(X))
    need = {e: j for e in elems}

    def dfs(start: int, budget: int, chosen: list[int]):
        deficit = sum(need.values())
        if deficit == 0:
            return tuple(chosen)
        if budget == 0 or start >= len(others):
            return None
        cap = 0
        for idx in range(start, len(others)):
            c = sum(1 for e in elems if need[e] > 0 and (others[idx][1] >> e) & 1)
            cap = max(cap, c)
        if budget * cap < deficit:
            return None
        target = next(e for e in elems if need[e] > 0)
        for idx in range(start, len(others)):
            i, inter = others[idx]
            if not (inter >> target) & 1:
                continue
            hit = [e for e in elems if need[e] > 0 and (inter >> e) & 1]
            for e in hit:
                need[e] -= 1
            chosen.append(i)
            # repetition allowed: keep start at idx so the pick may recur
            found = dfs(idx, budget - 1, chosen)
            if found:
                return found
            chosen.pop()
            for e in hit:
                need[e] += 1
        return None

    got = dfs(0, k, [])
    if got is None:
        return None
    return tuple(sorted(got + (got[0],) * (k - len(got))))


def is_cover_free(family: SubsetFamily, params: CoverParams) -> CoverFreeReport:
    """Multiset (k, j) cover-free test; witness is (x, chosen indices)."""
    sets = family.sets
    if len(sets) <= 1:
        return CoverFreeReport(True, vacuous=True)
    for x in range(len(sets)):
        hit = _cover_violation_for(sets, x, params.k, params.j)
        if hit is not None:
            return CoverFreeReport(False, (x, hit))
    return CoverFreeReport(True)


def _extension_ok(sets: list[int], d: int, k: int, j: int) -> bool:
    """Whether appending mask d keeps a known-good family (k, j) cover-free."""
    trial = sets + [d]
    for x in range(len(trial)):
        if _cover_violation_for(trial, x, k, j) is not None:
            return False
    return True


def kwise_unions(family: SubsetFamily, k: int) -> list[int]:
    """Unions of all k-subsets of distinct members (antichain cross-checks)."""
    from itertools import combinations

    out = []
    for combo in combinations(family.sets, k):
        u = 0
        for s in combo:
            u |= s
        out.append(u)
    return out


# ---------------------------------------------------------------------------
# search for the largest (k, j)-cover-free family
# ---------------------------------------------------------------------------


@dataclass
class CoverFreeSearchResult:
    m: int
    params: CoverParams
    size: int
    family: SubsetFamily
    exact: bool
    nodes: int
    notes: list[str] = field(default_factory=list)


class _Budget:
    def __init__(self, max_nodes=None, max_seconds=None):
        self.max_nodes = max_nodes
        self.deadline = time.monotonic() + max_seconds if max_seconds else None
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = True
        elif self.deadline is not None and not self.nodes % 2048:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return self.exhausted


class _Tables:
    """Bitset tables over a fixed candidate universe.

    Each table entry is an int whose bit i refers to universe[i]; candidate
    filtering is then a couple of big-int AND/OR operations per constraint.
    """

    def __init__(self, m: int, universe: list[int]):
        self.m = m
        self.universe = universe
        n = len(universe)
        self.all = (1 << n) - 1
        size = 1 << m
        subs = [0] * size
        sups = [0] * size
        for i, s in enumerate(universe):
            subs[s] |= 1 << i
            sups[s] |= 1 << i
        # subsets_of[u]: members contained in u (subset-sum transform)
        for b in range(m):
            step = 1 << b
            for u in range(size):
                if u & step:
                    subs[u] |= subs[u ^ step]
        # supersets_of[v]: members containing v
        for b in range(m):
            step = 1 << b
            for u in range(size - 1, -1, -1):
                if not u & step:
                    sups[u] |= sups[u | step]
        self.subsets_of = subs
        self.supersets_of = sups
        self.comparable = [
            (subs[s] | sups[s]) & ~(1 << i) for i, s in enumerate(universe)
        ]


def _filter_new_member(tbl: _Tables, fam: list[int], ci: int, alive: int,
                       k: int, j: int) -> int:
    """Drop candidates conflicting with family + universe[ci].

    Exact for j = 1 with k in {1, 2, 3} and for (k, j) = (3, 2); these cover
    every search the tool runs with the fast path.
    """
    c = tbl.universe[ci]
    subs, sups = tbl.subsets_of, tbl.supersets_of
    dead = tbl.comparable[ci]
    if j == 1 and k >= 2:
        for y in fam:
            dead |= subs[c | y]            # d ⊆ c ∪ y
            dead |= sups[c & ~y]           # c ⊆ d ∪ y
            dead |= sups[y & ~c]           # y ⊆ c ∪ d
        if k >= 3:
            nf = len(fam)
            for a in range(nf):
                ya = fam[a]
                for b in range(a + 1, nf):
                    yb = fam[b]
                    dead |= subs[c | ya | yb]           # d ⊆ c∪ya∪yb
                    dead |= sups[c & ~(ya | yb)]        # c ⊆ d∪ya∪yb
                    dead |= sups[ya & ~(c | yb)]        # ya ⊆ c∪d∪yb
                    dead |= sups[yb & ~(c | ya)]        # yb ⊆ c∪d∪ya
    elif (k, j) == (3, 2):
        # x twice-covered by a multiset of three others; containment cases
        # reduce to the comparability mask, leaving the distinct-pair checks
        nf = len(fam)
        for a in range(nf):
            ya = fam[a]
            for b in range(a + 1, nf):
                yb = fam[b]
                dead |= subs[(c & (ya | yb)) | (ya & yb)]   # X = d, {c,ya,yb}
                w = c & ~(ya & yb)                          # X = c, {d,ya,yb}
                if is_subset(w, ya | yb):
                    dead |= sups[w]
            for b in range(nf):
                if a == b:
                    continue
                z = fam[b]
                w = ya & ~(c & z)                           # X = ya, {c,d,z}
                if is_subset(w, c | z):
                    dead |= sups[w]
    elif k == 1:
        pass  # antichain only: comparability mask suffices
    else:
        raise NotImplementedError(f"no fast filter for k={k}, j={j}")
    return alive & ~dead


_FAST_PARAMS = {(1, 1), (2, 1), (3, 1), (3, 2)}


def _universe_for_target(m: int, params: CoverParams, target: int,
                         known: dict | None, notes: list[str]) -> list[int]:
    """Candidate masks usable by any member of a size >= target family."""
    k, j = params.k, params.j
    masks = list(range(1, 1 << m))
    if target <= 2:
        return sorted(masks, key=lambda s: (popcount(s), s))
    if j == 1 and k == 2 and target >= 3:
        # the difference sets {Y \ X} over the other members are distinct,
        # nonempty, and form an antichain on the m-|X| points outside X
        wmax = m - min_ground_for_antichain(target - 1)
        masks = [s for s in masks if popcount(s) <= wmax]
        notes.append(f"target {target}: weight cap {wmax}")
    if j == 1 and k >= 3 and known is not None:
        # differences must themselves be (k-1)-cover-free
        caps = [w for w in range(1, m)
                if known.get((m - w, k - 1, 1), None) is not None
                and known[(m - w, k - 1, 1)] < target - 1]
        if caps:
            wmax = min(caps) - 1
            masks = [s for s in masks if popcount(s) <= wmax]
            notes.append(f"target {target}: weight cap {wmax} via T(., {k - 1})")
    if known is not None:
        t_prev = known.get((m - 1, k, j))
        if t_prev is not None and 1 + t_prev < target:
            # a singleton member bans its element from every other member
            masks = [s for s in masks if popcount(s) >= 2]
            notes.append(f"target {target}: singletons excluded")
            if j == 1 and k == 2:
                # a 2-set member forces all others off one of its elements
                masks = [s for s in masks if popcount(s) >= 3]
                notes.append(f"target {target}: 2-sets excluded")
    return sorted(masks, key=lambda s: (popcount(s), s))


def _prefix_roots(universe: list[int]) -> list[int]:
    """Lexicographically minimal first members under ground permutations."""
    roots = []
    for w in sorted({popcount(s) for s in universe}):
        pref = (1 << w) - 1
        if pref in universe:
            roots.append(pref)
    return roots


def search_largest_cover_free(
    m: int,
    params: CoverParams,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    known: dict | None = None,
    m_cap: int = 10,
) -> CoverFreeSearchResult:
    """Branch-and-bound for the largest (k, j)-cover-free family in 2^[m].

    Runs a decision search per target size over a target-filtered candidate
    universe, with symmetry breaking at the root (the first member is always
    a prefix set {1..w}).  `known` may carry exact values for smaller ground
    sets, keyed (m', k', j'), enabling weight-exclusion pruning.  exact=False
    means the budget ran out and the result is only a lower bound.

    Ground sets beyond `m_cap` are rejected: root-only symmetry breaking is
    not enough up there, so published values are bundled instead.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > m_cap:
        raise ValueError(f"m = {m} exceeds the search cap {m_cap}; "
                         "use bundled table values instead")
    k, j = params.k, params.j
    notes: list[str] = []
    budget = _Budget(max_nodes, max_seconds)

    # disjoint singletons are cover-free for every (k, j): starting bound
    best_masks = [1 << i for i in range(m)]
    best = m
    fast = (k, j) in _FAST_PARAMS

    exact = False
    while True:
        target = best + 1
        if target > sperner_number(m):
            # repetition makes every cover-free family an antichain
            exact = True
            notes.append("Sperner ceiling reached")
            break
        universe = _universe_for_target(m, params, target, known, notes)
        if len(universe) < target:
            exact = True
            break
        found: list[int] | None = None
        tbl = _Tables(m, universe) if fast else None

        def descend_fast(fam: list[int], alive: int) -> bool:
            nonlocal found
            if budget.tick():
                return False
            if len(fam) >= target:
                found = list(fam)
                return True
            cand = alive
            while cand:
                if len(fam) + 1 + popcount(cand) < target:
                    return False
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                alive2 = _filter_new_member(tbl, fam, i, cand, k, j)
                if len(fam) + 1 + popcount(alive2) >= target:
                    fam.append(tbl.universe[i])
                    if descend_fast(fam, alive2):
                        return True
                    fam.pop()
                if budget.exhausted:
                    return False
            return False

        def descend_slow(fam: list[int], start: int) -> bool:
            nonlocal found
            if budget.tick():
                return False
            if len(fam) >= target:
                found = list(fam)
                return True
            for idx in range(start, len(universe)):
                if len(fam) + (len(universe) - idx) < target:
                    return False
                if _extension_ok(fam, universe[idx], k, j):
                    fam.append(universe[idx])
                    if descend_slow(fam, idx + 1):
                        return True
                    fam.pop()
                if budget.exhausted:
                    return False
            return False

        hit = False
        for root in _prefix_roots(universe):
            ri = universe.index(root)
            if fast:
                alive0 = tbl.all & ~((1 << (ri + 1)) - 1)
                alive0 = _filter_new_member(tbl, [], ri, alive0, k, j)
                if 1 + popcount(alive0) >= target and descend_fast([root], alive0):
                    hit = True
                    break
            else:
                if descend_slow([root], ri + 1):
                    hit = True
                    break
            if budget.exhausted:
                break
        if hit and found:
            best_masks = found
            best = len(found)
            continue
        if budget.exhausted:
            notes.append(f"budget exhausted at target {target}")
            exact = False
        else:
            exact = True
        break

    fam = SubsetFamily(m, tuple(sorted(best_masks, key=lambda s: (popcount(s), s))))
    if not is_cover_free(fam, params):
        raise AssertionError("search produced a non-cover-free family")
    return CoverFreeSearchResult(m, params, best, fam, exact, budget.nodes, notes)


def naive_largest_cover_free(m: int, params: CoverParams) -> CoverFreeSearchResult:
    """Plain exhaustive DFS oracle, no symmetry or weight pruning (small m)."""
    masks = list(range(1, 1 << m))
    best: list[int] = []
    nodes = 0
    k, j = params.k, params.j

    def dfs(fam: list[int], start: int):
        nonlocal best, nodes
        nodes += 1
        if len(fam) > len(best):
            best = list(fam)
        for idx in range(start, len(masks)):
            if _extension_ok(fam, masks[idx], k, j):
                fam.append(masks[idx])
                dfs(fam, idx + 1)
                fam.pop()

    dfs([], 0)
    fam = SubsetFamily(m, tuple(best))
    return CoverFreeSearchResult(m, params, len(best), fam, True, nodes)
