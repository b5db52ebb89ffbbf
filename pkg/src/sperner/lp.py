"""Exact rational linear feasibility for non-negative variables.

Solves: find x >= 0 with  sum_j c_ij x_j >= b_i  for every row i, where all
coefficients are integers. Phase-1 simplex with Bland's rule (no cycling)
and Edmonds-style integer pivoting, so every tableau entry stays an exact
integer and the returned solution is a vector of Fractions. No floating
point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def solve_nonnegative_feasibility(
        rows: Sequence[tuple[Sequence[int], int]],
        nvars: int) -> Optional[list[Fraction]]:
    """A solution x >= 0 of the system {c.x >= b per row}, or None.

    Rows with b <= 0 start feasible on their slack; rows with b > 0 get an
    artificial variable, and phase 1 minimizes the artificial sum.
    """
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * nvars
    art_of = {}
    nart = 0
    for i, (_, b) in enumerate(rows):
        if b > 0:
            art_of[i] = nart
            nart += 1
    ncols = nvars + m + nart + 1
    T: list[list[int]] = []
    for i, (c, b) in enumerate(rows):
        row = [0] * ncols
        if b > 0:
            # c.x - s_i + a_i = b, basis a_i
            for j, cj in enumerate(c):
                row[j] = cj
            row[nvars + i] = -1
            row[nvars + m + art_of[i]] = 1
            row[-1] = b
        else:
            # -c.x + s_i = -b >= 0, basis s_i
            for j, cj in enumerate(c):
                row[j] = -cj
            row[nvars + i] = 1
            row[-1] = -b
        T.append(row)
    basis = [nvars + m + art_of[i] if i in art_of else nvars + i for i in range(m)]
    # phase-1 objective: maximize -(sum of artificials); in tableau form the
    # reduced-cost row starts as the sum of the artificial rows
    z = [0] * ncols
    for i in art_of:
        for j in range(ncols):
            z[j] += T[i][j]
    artificial = set(nvars + m + a for a in art_of.values())
    piv = 1
    while True:
        enter = -1
        for j in range(ncols - 1):
            if j in artificial:
                continue
            if z[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        for i in range(m):
            a = T[i][enter]
            if a <= 0:
                continue
            if leave < 0:
                leave = i
            else:
                lhs = T[i][-1] * T[leave][enter]
                rhs = T[leave][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave < 0:
            # the phase-1 objective is bounded, so this cannot happen
            raise RuntimeError("phase-1 column unbounded")
        p = T[leave][enter]
        prow = T[leave]
        for i in range(m):
            if i == leave:
                continue
            a = T[i][enter]
            ri = T[i]
            T[i] = [(ri[j] * p - a * prow[j]) // piv for j in range(ncols)]
        a = z[enter]
        z = [(z[j] * p - a * prow[j]) // piv for j in range(ncols)]
        basis[leave] = enter
        piv = p
    if z[-1] != 0:
        return None
    sol = [Fraction(0)] * nvars
    for i in range(m):
        if basis[i] < nvars:
            sol[basis[i]] = Fraction(T[i][-1], piv)
    return sol
