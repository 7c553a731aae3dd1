import itertools
import random
from fractions import Fraction as F

from fingerlab.simplex import LinearProgram, solve_lp


def gauss_solve(rows, n):
    m = [row[:] for row in rows]
    for col in range(n):
        piv = next((r for r in range(col, len(m)) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        m[col] = [v / m[col][col] for v in m[col]]
        for r in range(len(m)):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def vertex_oracle(lp):
    """Minimum over all basic feasible points, or None when infeasible."""
    n = len(lp.c)
    rows = [(list(map(F, a)), F(b), "<=") for a, b in zip(lp.a_ub, lp.b_ub)]
    rows += [(list(map(F, a)), F(b), "=") for a, b in zip(lp.a_eq, lp.b_eq)]
    planes = [(a, b) for a, b, _ in rows]
    planes += [([F(int(i == j)) for j in range(n)], F(0)) for i in range(n)]
    best = None
    for combo in itertools.combinations(range(len(planes)), n):
        sys_rows = [planes[i][0][:] + [planes[i][1]] for i in combo]
        x = gauss_solve(sys_rows, n)
        if x is None or any(v < 0 for v in x):
            continue
        ok = True
        for a, b, sense in rows:
            v = sum(ai * xi for ai, xi in zip(a, x))
            if (sense == "<=" and v > b) or (sense == "=" and v != b):
                ok = False
                break
        if ok:
            val = sum(ci * xi for ci, xi in zip(map(F, lp.c), x))
            best = val if best is None else min(best, val)
    return best


def test_simple_problems():
    # min -x - y st x + y <= 1
    res = solve_lp(LinearProgram([-1, -1], [[1, 1]], [1], [], []))
    assert res.status == "optimal" and res.objective == -1

    # equality-constrained distribution
    res = solve_lp(LinearProgram([1, 2], [], [], [[1, 1]], [1]))
    assert res.objective == 1 and res.x == [F(1), F(0)]

    # infeasible
    res = solve_lp(LinearProgram([1], [[1]], [-1], [], []))
    assert res.status == "infeasible"

    # unbounded
    res = solve_lp(LinearProgram([-1], [], [], [], []))
    assert res.status == "unbounded"


def test_fuzz_against_vertex_oracle():
    rng = random.Random(20240817)
    checked = 0
    for _ in range(150):
        n = rng.randint(1, 3)
        lp = LinearProgram(
            c=[F(rng.randint(-3, 3)) for _ in range(n)],
            a_ub=[[F(rng.randint(-3, 3)) for _ in range(n)]
                  for _ in range(rng.randint(0, 3))],
            b_ub=[],
            a_eq=[[F(rng.randint(-2, 3)) for _ in range(n)]
                  for _ in range(rng.randint(0, 1))],
            b_eq=[],
        )
        lp.b_ub = [F(rng.randint(-2, 4)) for _ in lp.a_ub]
        lp.b_eq = [F(rng.randint(0, 3)) for _ in lp.a_eq]
        res = solve_lp(lp)
        oracle = vertex_oracle(lp)
        if res.status == "optimal":
            assert oracle == res.objective
            checked += 1
        elif res.status == "infeasible":
            assert oracle is None
    assert checked > 40
