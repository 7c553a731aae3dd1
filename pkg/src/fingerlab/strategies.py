"""Exact evaluation and optimization of classical fingerprinting strategies.

A strategy is the triple (p, q, r): row-stochastic matrices p (n x m_a) and
q (n x m_b) giving each sender's fingerprint distribution per message, and
the referee's accept matrix r (m_a x m_b).  All entries are Fractions and all
derived quantities (accept probabilities, error reports, optima) stay exact.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .bits import iter_bits, popcount, sperner_number
from .families import SubsetFamily, is_antichain
from .simplex import LinearProgram, solve_lp

__all__ = [
    "ClassicalStrategy",
    "ErrorReport",
    "SupportPair",
    "MalformedStrategyError",
    "evaluate_p1",
    "error_report",
    "binary_completion",
    "optimal_average_error",
    "optimize_supports_one_way",
    "brute_force_min_average",
    "brute_force_min_wce",
    "WceSearchResult",
    "identity_strategy",
    "one_way_strategy_from_supports",
    "support_pair",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MalformedStrategyError(ValueError):
    pass


def _check_stochastic(rows, width, name):
    out = []
    for i, row in enumerate(rows):
        row = tuple(Fraction(v) for v in row)
        if len(row) != width:
            raise MalformedStrategyError(f"{name} row {i} has length {len(row)}, want {width}")
        if any(v < 0 or v > 1 for v in row):
            raise MalformedStrategyError(f"{name} row {i} has entries outside [0, 1]")
        if sum(row) != 1:
            raise MalformedStrategyError(f"{name} row {i} sums to {sum(row)}, not 1")
        out.append(row)
    return tuple(out)


@dataclass(frozen=True)
class ClassicalStrategy:
    n: int
    m_a: int
    m_b: int
    p: tuple  # n rows of length m_a
    q: tuple  # n rows of length m_b
    r: tuple  # m_a rows of length m_b

    def __post_init__(self):
        if min(self.n, self.m_a, self.m_b) < 1:
            raise MalformedStrategyError("n, m_a, m_b must all be >= 1")
        object.__setattr__(self, "p", _check_stochastic(self.p, self.m_a, "p"))
        object.__setattr__(self, "q", _check_stochastic(self.q, self.m_b, "q"))
        if len(self.p) != self.n or len(self.q) != self.n:
            raise MalformedStrategyError("p and q must have n rows")
        r = []
        for i, row in enumerate(self.r):
            row = tuple(Fraction(v) for v in row)
            if len(row) != self.m_b:
                raise MalformedStrategyError(f"r row {i} has length {len(row)}")
            if any(v < 0 or v > 1 for v in row):
                raise MalformedStrategyError("r entries must lie in [0, 1]")
            r.append(row)
        if len(r) != self.m_a:
            raise MalformedStrategyError("r must have m_a rows")
        object.__setattr__(self, "r", tuple(r))

    @property
    def binary(self) -> bool:
        return all(v == 0 or v == 1 for row in self.r for v in row)


@dataclass(frozen=True)
class ErrorReport:
    worst_case: Fraction
    average: Fraction
    witness_pair: tuple[int, int]  # 1-based, lexicographically smallest maximizer
    one_sided: bool


@dataclass(frozen=True)
class SupportPair:
    supports_p: SubsetFamily
    supports_q: SubsetFamily


def evaluate_p1(s: ClassicalStrategy, x: int, y: int) -> Fraction:
    """Probability that the referee accepts when the messages are (x, y)."""
    if not (1 <= x <= s.n and 1 <= y <= s.n):
        raise IndexError(f"message indices ({x}, {y}) outside [1, {s.n}]")
    px, qy = s.p[x - 1], s.q[y - 1]
    total = _ZERO
    for a, pa in enumerate(px):
        if pa == 0:
            continue
        row = s.r[a]
        acc = _ZERO
        for b, qb in enumerate(qy):
            if qb != 0 and row[b] != 0:
                acc += qb * row[b]
        total += pa * acc
    return total


def error_report(s: ClassicalStrategy) -> ErrorReport:
    """Exact worst-case and average error over all message pairs."""
    n = s.n
    # rq[y][a] = sum_b q(b|y) r(a,b)
    rq = [[sum(qb * s.r[a][b] for b, qb in enumerate(s.q[y]) if qb != 0)
           for a in range(s.m_a)] for y in range(n)]
    worst = _ZERO
    witness = (1, 1)
    total = _ZERO
    one_sided = True
    for x in range(n):
        px = s.p[x]
        for y in range(n):
            p1 = sum(pa * rq[y][a] for a, pa in enumerate(px) if pa != 0)
            pe = _ONE - p1 if x == y else p1
            if x == y and p1 != 1:
                one_sided = False
            total += pe
            if pe > worst:
                worst = pe
                witness = (x + 1, y + 1)
    return ErrorReport(worst, total / (n * n), witness, one_sided)


def binary_completion(p, q, m_a: int | None = None, m_b: int | None = None) -> ClassicalStrategy:
    """Forced referee matrix: accept (a, b) iff both occur for a common message.

    The result satisfies the one-sided constraint exactly and dominates any
    other referee choice for the same (p, q) pointwise.
    """
    p = _check_stochastic(p, m_a if m_a is not None else len(p[0]), "p")
    q = _check_stochastic(q, m_b if m_b is not None else len(q[0]), "q")
    if len(p) != len(q):
        raise MalformedStrategyError("p and q must have the same number of rows")
    n = len(p)
    m_a, m_b = len(p[0]), len(q[0])
    r = [[_ZERO] * m_b for _ in range(m_a)]
    for x in range(n):
        sup_a = [a for a, v in enumerate(p[x]) if v > 0]
        sup_b = [b for b, v in enumerate(q[x]) if v > 0]
        for a in sup_a:
            for b in sup_b:
                r[a][b] = _ONE
    return ClassicalStrategy(n, m_a, m_b, p, q, tuple(tuple(row) for row in r))


def optimal_average_error(n: int, m_a: int, m_b: int) -> Fraction:
    """Minimum achievable average error of a one-sided strategy (closed form)."""
    if min(n, m_a, m_b) < 1:
        raise ValueError("n, m_a, m_b must be >= 1")
    m = min(m_a, m_b)
    k = n % m
    hi = -(-n // m)
    lo = n // m
    return Fraction(k * hi * hi + (m - k) * lo * lo - n, n * n)


def identity_strategy(n: int) -> ClassicalStrategy:
    eye = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
    return ClassicalStrategy(n, n, n, eye, eye, eye)


def support_pair(s: ClassicalStrategy) -> SupportPair:
    fp = []
    fq = []
    for x in range(s.n):
        fp.append(sum(1 << a for a, v in enumerate(s.p[x]) if v > 0))
        fq.append(sum(1 << b for b, v in enumerate(s.q[x]) if v > 0))
    return SupportPair(SubsetFamily(s.m_a, tuple(fp)), SubsetFamily(s.m_b, tuple(fq)))


def one_way_strategy_from_supports(supports: SubsetFamily, p_rows=None) -> ClassicalStrategy:
    """Binary one-way strategy: the receiver relays, r follows the supports.

    p defaults to uniform over each support set.
    """
    n = len(supports)
    m = supports.m
    if p_rows is None:
        p_rows = []
        for mask in supports.sets:
            w = popcount(mask)
            row = [_ZERO] * m
            for a in iter_bits(mask):
                row[a] = Fraction(1, w)
            p_rows.append(tuple(row))
    q = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
    r = tuple(tuple(_ONE if (supports.sets[y] >> a) & 1 else _ZERO for y in range(n))
              for a in range(m))
    return ClassicalStrategy(n, m, n, tuple(p_rows), q, r)


def optimize_supports_one_way(supports: SubsetFamily, m: int | None = None):
    """Best transition probabilities for fixed one-way supports, per message.

    For each message x the worst accept probability against y != x is
    minimized by an exact LP over the distribution on x's support set.
    Returns the assembled binary strategy and the exact optimum.
    """
    if m is not None and m != supports.m:
        raise ValueError("ground size mismatch with supports")
    m = supports.m
    n = len(supports)
    if any(s == 0 for s in supports.sets):
        raise ValueError("empty support set")
    p_rows = []
    worst = _ZERO
    for x in range(n):
        sup = list(iter_bits(supports.sets[x]))
        nv = len(sup)
        a_ub = []
        b_ub = []
        for y in range(n):
            if y == x:
                continue
            row = [_ONE if (supports.sets[y] >> a) & 1 else _ZERO for a in sup]
            a_ub.append(row + [Fraction(-1)])
            b_ub.append(_ZERO)
        lp = LinearProgram(
            c=[_ZERO] * nv + [_ONE],
            a_ub=a_ub,
            b_ub=b_ub,
            a_eq=[[_ONE] * nv + [_ZERO]],
            b_eq=[_ONE],
        )
        res = solve_lp(lp)
        if res.status != "optimal":
            raise AssertionError(f"support LP unexpectedly {res.status}")
        row = [_ZERO] * m
        for a, v in zip(sup, res.x[:nv]):
            row[a] = v
        p_rows.append(tuple(row))
        worst = max(worst, res.objective)
    return one_way_strategy_from_supports(supports, p_rows), worst


def brute_force_min_average(n: int, m_a: int, m_b: int) -> Fraction:
    """Oracle: minimum average error over deterministic one-sided strategies.

    Enumerates all fingerprint assignments for both senders; the referee
    matrix is then forced by the one-sided constraint.
    """
    best = None
    amaps = list(itertools.product(range(m_a), repeat=n))
    bmaps = list(itertools.product(range(m_b), repeat=n))
    for am in amaps:
        for bm in bmaps:
            accept = set(zip(am, bm))
            errs = 0
            for x in range(n):
                for y in range(n):
                    if x != y and (am[x], bm[y]) in accept:
                        errs += 1
            val = Fraction(errs, n * n)
            if best is None or val < best:
                best = val
                if best == 0:
                    return best
    return best


@dataclass
class WceSearchResult:
    value: Fraction
    exact: bool
    upper_bound_only: bool
    strategy: ClassicalStrategy | None
    nodes: int


def _antichain_families(n: int, m: int, cap: int | None = None):
    """Unordered families of n distinct nonempty subsets of [m] forming an
    antichain, as sorted mask tuples (stops at `cap` families if given)."""
    masks = list(range(1, 1 << m))
    out = []

    def dfs(fam, start):
        if cap is not None and len(out) >= cap:
            return
        if len(fam) == n:
            out.append(tuple(fam))
            return
        for idx in range(start, len(masks)):
            if len(fam) + (len(masks) - idx) < n:
                return
            d = masks[idx]
            if all(d & ~s and s & ~d for s in fam):
                fam.append(d)
                dfs(fam, idx + 1)
                fam.pop()

    dfs([], 0)
    return out


def _smp_strategy_from_labeled_pair(fa, fb, m_a, m_b, pa_rows=None, qb_rows=None):
    sup_a = SubsetFamily(m_a, fa)
    sup_b = SubsetFamily(m_b, fb)
    n = len(fa)
    r = [[_ZERO] * m_b for _ in range(m_a)]
    for z in range(n):
        for a in iter_bits(fa[z]):
            for b in iter_bits(fb[z]):
                r[a][b] = _ONE
    def uniform(masks, m):
        rows = []
        for mask in masks:
            w = popcount(mask)
            row = [_ZERO] * m
            for i in iter_bits(mask):
                row[i] = Fraction(1, w)
            rows.append(tuple(row))
        return tuple(rows)
    p = uniform(fa, m_a) if pa_rows is None else pa_rows
    q = uniform(fb, m_b) if qb_rows is None else qb_rows
    return ClassicalStrategy(n, m_a, m_b, p, q, tuple(tuple(row) for row in r))


def _alternate_lp_smp(fa, fb, m_a, m_b, rounds=6):
    """Alternating per-sender LPs on a fixed binary referee matrix.

    Minimizes max_{x != y} accept probability; bilinear, so the result is an
    upper bound on the true optimum for these labeled supports.
    """
    n = len(fa)
    strat = _smp_strategy_from_labeled_pair(fa, fb, m_a, m_b)
    p, q, r = list(strat.p), list(strat.q), strat.r
    best = error_report(strat).worst_case

    def optimize_side(fix_q: bool):
        nonlocal p, q
        new_rows = []
        worst = _ZERO
        for x in range(n):
            sup = list(iter_bits(fa[x])) if fix_q else list(iter_bits(fb[x]))
            nv = len(sup)
            a_ub, b_ub = [], []
            for y in range(n):
                if y == x:
                    continue
                if fix_q:
                    coef = [sum(q[y][b] * r[a][b] for b in range(m_b)) for a in sup]
                else:
                    coef = [sum(p[y][a] * r[a][b] for a in range(m_a)) for b in sup]
                a_ub.append([Fraction(c) for c in coef] + [Fraction(-1)])
                b_ub.append(_ZERO)
            lp = LinearProgram([_ZERO] * nv + [_ONE], a_ub, b_ub,
                               [[_ONE] * nv + [_ZERO]], [_ONE])
            res = solve_lp(lp)
            if res.status != "optimal":
                raise AssertionError("alternating LP failed")
            width = m_a if fix_q else m_b
            row = [_ZERO] * width
            for a, v in zip(sup, res.x[:nv]):
                row[a] = v
            new_rows.append(tuple(row))
            worst = max(worst, res.objective)
        if fix_q:
            p = new_rows
        else:
            q = new_rows
        return worst

    for _ in range(rounds):
        v1 = optimize_side(fix_q=True)
        v2 = optimize_side(fix_q=False)
        val = max(v1, v2)
        if val >= best:
            break
        best = val
    strat = ClassicalStrategy(n, m_a, m_b, tuple(p), tuple(q), r)
    rep = error_report(strat)
    return rep.worst_case, strat


def brute_force_min_wce(n: int, m_a: int, m_b: int, model: str = "one-way",
                        max_seconds: float | None = None,
                        max_nodes: int | None = None,
                        seed: int = 0) -> WceSearchResult:
    """Reference searches for the minimum worst-case error.

    one-way: exact minimum over all binary support families (LP-optimal
    transition probabilities per family).  smp: heuristic alternating-LP
    search over labeled support-family pairs; the result is an upper bound
    and is flagged as such.
    """
    deadline = time.monotonic() + max_seconds if max_seconds else None
    nodes = 0

    if model == "one-way":
        if n <= m_a:
            return WceSearchResult(_ZERO, True, False, identity_strategy(n), 1)
        if n > sperner_number(m_a):
            return WceSearchResult(_ONE, True, False, None, 1)
        best = _ONE
        best_strat = None
        exact = True
        for fam in itertools.combinations(range(1, 1 << m_a), n):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                exact = False
                break
            if deadline is not None and not nodes % 512 and time.monotonic() > deadline:
                exact = False
                break
            supports = SubsetFamily(m_a, fam)
            if not is_antichain(supports):
                continue
            strat, val = optimize_supports_one_way(supports)
            if val < best:
                best, best_strat = val, strat
                if best == 0:
                    break
        return WceSearchResult(best, exact, not exact, best_strat, nodes)

    if model != "smp":
        raise ValueError(f"unknown model {model!r}")

    if n <= min(m_a, m_b):
        return WceSearchResult(_ZERO, True, False, identity_strategy(n), 1)
    m = min(m_a, m_b)
    if n > sperner_number(m):
        return WceSearchResult(_ONE, True, True, None, 1)

    if max_nodes is None:
        max_nodes = 400
    best = _ONE
    best_strat = None
    rng = random.Random(seed)

    def out_of_budget():
        return (nodes >= max_nodes
                or (deadline is not None and time.monotonic() > deadline))

    def consider(fa, fb):
        nonlocal best, best_strat, nodes
        nodes += 1
        val, strat = _alternate_lp_smp(fa, fb, m_a, m_b)
        if val < best:
            best, best_strat = val, strat

    # start with near-middle-layer families: pair each with its aligned
    # elementwise complement (when valid) and with itself
    mid = [s for s in range(1, 1 << m_a) if popcount(s) == m_a // 2]
    full_a = (1 << m_a) - 1
    for fa in itertools.combinations(mid, n) if len(mid) >= n else ():
        comp = tuple(full_a & ~s for s in fa)
        if m_b == m_a and all(comp):
            consider(fa, comp)
        if out_of_budget() or best == 0:
            break
        consider(fa, fa)
        if out_of_budget() or best == 0:
            break

    # general phase: enumerated antichain families, random relative labelings
    if not out_of_budget() and best > 0:
        families_a = _antichain_families(n, m_a, cap=4000)
        families_b = (families_a if m_b == m_a
                      else _antichain_families(n, m_b, cap=4000))
        while not out_of_budget() and best > 0:
            fa = rng.choice(families_a)
            fb = list(rng.choice(families_b))
            rng.shuffle(fb)
            consider(fa, tuple(fb))

    return WceSearchResult(best, False, True, best_strat, nodes)
