"""Exact linear programming over the rationals.

Two-phase primal simplex on a dense tableau of `fractions.Fraction` entries,
with Bland's anti-cycling rule.  Intended for the desk-scale problems this
package generates (tens of variables, tens of constraints); no sparsity, no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["LinearProgram", "LpResult", "solve_lp"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class LinearProgram:
    """minimize c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0."""

    c: list
    a_ub: list
    b_ub: list
    a_eq: list
    b_eq: list


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list | None
    objective: Fraction | None


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    inv = _ONE / piv
    tab[row] = [v * inv for v in tab[row]]
    prow = tab[row]
    for r, line in enumerate(tab):
        if r != row and line[col] != 0:
            f = line[col]
            tab[r] = [a - f * b for a, b in zip(line, prow)]
    basis[row] = col


def _simplex_core(tab, basis, ncols):
    """Optimize tableau in place; last row is the (negated) objective."""
    obj = len(tab) - 1
    while True:
        col = -1
        for jj in range(ncols):
            if tab[obj][jj] < 0:
                col = jj  # Bland: first improving column
                break
        if col < 0:
            return "optimal"
        row, best = -1, None
        for r in range(obj):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[row]):
                    row, best = r, ratio
        if row < 0:
            return "unbounded"
        _pivot(tab, basis, row, col)


def solve_lp(lp: LinearProgram) -> LpResult:
    nvar = len(lp.c)
    rows = []
    senses = []
    for a, b in zip(lp.a_ub, lp.b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b)))
        senses.append("<=")
    for a, b in zip(lp.a_eq, lp.b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b)))
        senses.append("=")

    nslack = sum(1 for s in senses if s == "<=")
    # columns: x (nvar) | slack (nslack) | artificial (as needed) | rhs
    art_rows = []
    si = 0
    body = []
    for (a, b), sense in zip(rows, senses):
        line = list(a) + [_ZERO] * nslack
        if sense == "<=":
            line[nvar + si] = _ONE
            si += 1
        if b < 0:
            line = [-v for v in line]
            b = -b
            needs_art = True
        else:
            needs_art = sense == "="
            # a <= row with b >= 0 starts feasible on its slack
            if sense == "<=":
                needs_art = False
        body.append((line, Fraction(b), needs_art))
        if needs_art:
            art_rows.append(len(body) - 1)

    nart = len(art_rows)
    width = nvar + nslack + nart + 1
    tab = []
    basis = []
    ai = 0
    for r, (line, b, needs_art) in enumerate(body):
        full = line + [_ZERO] * nart + [b]
        if needs_art:
            full[nvar + nslack + ai] = _ONE
            basis.append(nvar + nslack + ai)
            ai += 1
        else:
            # slack column of this row is its basic variable
            scol = next(jj for jj in range(nvar, nvar + nslack)
                        if line[jj] == _ONE)
            basis.append(scol)
        tab.append(full)

    if nart:
        # phase 1: minimize the artificial sum
        phase = [_ZERO] * width
        for r in range(len(tab)):
            if basis[r] >= nvar + nslack:
                phase = [p - v for p, v in zip(phase, tab[r])]
        for jj in range(nvar + nslack, nvar + nslack + nart):
            phase[jj] = _ZERO
        tab.append(phase)
        status = _simplex_core(tab, basis, nvar + nslack)
        if status != "optimal" or tab[-1][-1] != 0:
            return LpResult("infeasible", None, None)
        tab.pop()
        # drive out any artificial still basic; all-zero rows are redundant
        drop_rows = []
        for r in range(len(tab)):
            if basis[r] >= nvar + nslack:
                for jj in range(nvar + nslack):
                    if tab[r][jj] != 0:
                        _pivot(tab, basis, r, jj)
                        break
                else:
                    drop_rows.append(r)
        for r in reversed(drop_rows):
            del tab[r]
            del basis[r]
        # drop artificial columns
        keep = width - nart - 1
        tab = [line[:keep] + [line[-1]] for line in tab]
        width = keep + 1

    objl = [Fraction(v) for v in lp.c] + [_ZERO] * (width - nvar - 1) + [_ZERO]
    # express objective in terms of nonbasic variables
    for r in range(len(tab)):
        f = objl[basis[r]]
        if f != 0:
            objl = [a - f * b for a, b in zip(objl, tab[r])]
    tab.append(objl)
    status = _simplex_core(tab, basis, width - 1)
    if status != "optimal":
        return LpResult(status, None, None)
    x = [_ZERO] * nvar
    for r, bcol in enumerate(basis):
        if bcol < nvar:
            x[bcol] = tab[r][-1]
    return LpResult("optimal", x, -tab[-1][-1])
