"""Dense two-phase simplex over exact rationals.

Solves   maximize c.x  subject to  A x <= b,  x >= 0   exactly, so
feasibility and the sign of the optimum are never floating-point judgement
calls. Bland's smallest-index rule governs both pivot choices, which rules
out cycling.

Arithmetic uses integer pivoting: constraints are scaled to integers and
the tableau is kept as d * T for an integer scalar d (the previous pivot
element). One pivot on (r, c) with p = rows[r][c] maps every other row to
(p*row - row[c]*rows[r]) / d, an exact division, and leaves the pivot row
untouched with d' = p. Entries stay minor-sized instead of accumulating
gcd work, which is an order of magnitude faster than Fraction tableaus for
the small dense programs the dichotomy oracle generates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

__all__ = ["LPResult", "simplex_max", "OPTIMAL", "INFEASIBLE", "UNBOUNDED"]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    objective: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


def _scaled_int_rows(A, b):
    """Clear denominators row by row; scaling an inequality by a positive
    integer changes nothing."""
    rows = []
    rhs = []
    for arow, bv in zip(A, b):
        fr = [Fraction(v) for v in arow]
        fb = Fraction(bv)
        k = lcm(*(f.denominator for f in fr), fb.denominator)
        rows.append([int(f * k) for f in fr])
        rhs.append(int(fb * k))
    return rows, rhs


def _price_out(c_ext, rows, basis, d):
    """Physical reduced-cost row d*(c - c_B B^-1 A); integer because d*B^-1
    is the adjugate of an integer basis matrix."""
    width = len(rows[0]) if rows else len(c_ext) + 1
    obj = [d * v for v in c_ext] + [0]
    for i, bv in enumerate(basis):
        f = c_ext[bv]
        if f:
            row = rows[i]
            for j in range(width):
                obj[j] -= f * row[j]
    return obj


def _pivot(rows, obj, basis, r, c, d):
    """Integer pivot; returns the new scale divisor."""
    prow = rows[r]
    p = prow[c]
    for i in range(len(rows)):
        if i != r:
            row = rows[i]
            f = row[c]
            rows[i] = [(p * a - f * q) // d for a, q in zip(row, prow)]
    f = obj[c]
    obj[:] = [(p * a - f * q) // d for a, q in zip(obj, prow)]
    basis[r] = c
    return p


def _bland_entering(obj, n_enter):
    for j in range(n_enter):
        if obj[j] > 0:
            return j
    return None


def _bland_leaving(rows, col, basis):
    # min of rhs/entry over positive entries, compared by cross-multiplying;
    # ties go to the smallest basic variable index
    best = None
    bn = bd = None
    for i, row in enumerate(rows):
        a = row[col]
        if a > 0:
            num = row[-1]
            if (
                best is None
                or num * bd < bn * a
                or (num * bd == bn * a and basis[i] < basis[best])
            ):
                best, bn, bd = i, num, a
    return best


def _run_phase(rows, obj, basis, n_enter, d):
    """Pivot to optimality; returns (bounded, d)."""
    while True:
        col = _bland_entering(obj, n_enter)
        if col is None:
            return True, d
        row = _bland_leaving(rows, col, basis)
        if row is None:
            return False, d
        d = _pivot(rows, obj, basis, row, col, d)


def simplex_max(c, A, b) -> LPResult:
    """Maximize c.x subject to A x <= b, x >= 0 (entries coerced to Fraction)."""
    m = len(A)
    n = len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    c_frac = [Fraction(v) for v in c]
    ck = lcm(*(f.denominator for f in c_frac)) if c_frac else 1
    c_int = [int(f * ck) for f in c_frac]
    a_int, b_int = _scaled_int_rows(A, b)

    # columns: n structural | m slacks | artificials | rhs
    need_art = [i for i in range(m) if b_int[i] < 0]
    art_col = {i: n + m + k for k, i in enumerate(need_art)}
    width = n + m + len(need_art) + 1

    rows = []
    basis = []
    for i in range(m):
        row = [0] * width
        sgn = -1 if b_int[i] < 0 else 1
        for j in range(n):
            row[j] = sgn * a_int[i][j]
        row[n + i] = sgn
        row[-1] = sgn * b_int[i]
        if sgn < 0:
            row[art_col[i]] = 1
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        rows.append(row)

    d = 1
    art_cols = frozenset(art_col.values())

    if need_art:
        # phase 1: maximize -(sum of artificials); feasible iff optimum is 0
        c_phase1 = [0] * (n + m) + [-1] * len(need_art)
        obj = _price_out(c_phase1, rows, basis, d)
        bounded, d = _run_phase(rows, obj, basis, n + m, d)
        assert bounded, "phase-1 objective is bounded by construction"
        if obj[-1] != 0:
            # -objective = obj[-1]/d; nonzero means sum of artificials > 0
            return LPResult(status=INFEASIBLE)
        # drive zero-level artificials out of the basis where possible; a row
        # with no structural/slack entry left is redundant and stays parked
        for i in range(m):
            if basis[i] in art_cols:
                piv_col = next((j for j in range(n + m) if rows[i][j] != 0), None)
                if piv_col is not None:
                    d = _pivot(rows, obj, basis, i, piv_col, d)
                    if d < 0:
                        # a negative degenerate pivot flips the tableau scale;
                        # negating everything restores d > 0 with T unchanged
                        d = -d
                        obj[:] = [-v for v in obj]
                        for k in range(m):
                            rows[k] = [-v for v in rows[k]]

    # phase 2 on the structural objective; artificial columns barred
    c_phase2 = c_int + [0] * (width - 1 - n)
    obj = _price_out(c_phase2, rows, basis, d)
    bounded, d = _run_phase(rows, obj, basis, n + m, d)
    if not bounded:
        return LPResult(status=UNBOUNDED)

    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = Fraction(rows[i][-1], d)
    value = sum((cv * xv for cv, xv in zip(c_frac, x)), Fraction(0))
    return LPResult(status=OPTIMAL, objective=value, x=tuple(x))
