"""Exact rational simplex method (two phases, Bland's rule).

Problems are posed as

    maximize  c.x   subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x_j >= 0 (j not free)

Every optimal answer carries a dual vector and the solver checks strong duality
before returning it. Infeasible answers carry a Farkas certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

F = Fraction


class LPError(ValueError):
    pass


@dataclass
class LinearProgram:
    c: Sequence
    A_ub: Sequence = ()
    b_ub: Sequence = ()
    A_eq: Sequence = ()
    b_eq: Sequence = ()
    free: Sequence[int] = ()

    def __post_init__(self):
        n = len(self.c)
        for name, A, b in (("ub", self.A_ub, self.b_ub), ("eq", self.A_eq, self.b_eq)):
            if len(A) != len(b):
                raise LPError(f"{name}: {len(A)} rows but {len(b)} right-hand sides")
            for row in A:
                if len(row) != n:
                    raise LPError(f"{name}: row of length {len(row)}, expected {n}")
        for j in self.free:
            if not 0 <= j < n:
                raise LPError(f"free variable index {j} out of range")


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    x: Optional[list] = None
    dual_ub: Optional[list] = None
    dual_eq: Optional[list] = None
    farkas: Optional[tuple] = None  # (y_ub, y_eq)
    ray: Optional[list] = None
    info: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def solve_linear_system(A, b):
    """Solve the square system A y = b exactly (A assumed nonsingular)."""
    m = len(A)
    M = [[F(v) for v in row] + [F(bi)] for row, bi in zip(A, b)]
    for c in range(m):
        piv = next(r for r in range(c, m) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(m):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][m] for r in range(m)]


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, col):
        row = self.rows[r]
        p = row[col]
        if p != 1:
            inv = 1 / p
            row[:] = [v * inv for v in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[col]
                if f != 0:
                    other[:] = [a - f * b for a, b in zip(other, row)]
                    self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def run(self, cost, allowed):
        """Maximize cost.x over the current tableau. Returns None or an unbounded column."""
        while True:
            reduced = self.reduced_costs(cost)
            col = next((j for j in allowed if reduced[j] > 0), None)
            if col is None:
                return None
            best, r_best = None, None
            for r, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = self.rhs[r] / a
                    if best is None or ratio < best or (ratio == best and self.basis[r] < self.basis[r_best]):
                        best, r_best = ratio, r
            if r_best is None:
                return col
            self.pivot(r_best, col)

    def reduced_costs(self, cost):
        red = list(cost)
        for r, row in enumerate(self.rows):
            cb = cost[self.basis[r]]
            if cb != 0:
                red = [a - cb * b for a, b in zip(red, row)]
        return red


def solve_lp(lp: LinearProgram) -> LPResult:
    n = len(lp.c)
    free = set(lp.free)
    # column map: original var j -> list of (std column, sign)
    cols = []
    ncol = 0
    for j in range(n):
        if j in free:
            cols.append([(ncol, 1), (ncol + 1, -1)])
            ncol += 2
        else:
            cols.append([(ncol, 1)])
            ncol += 1
    n_x = ncol
    m_ub = len(lp.A_ub)
    m_eq = len(lp.A_eq)
    m = m_ub + m_eq
    n_std = n_x + m_ub
    std_rows, rhs, flips = [], [], []
    for i in range(m):
        src = lp.A_ub[i] if i < m_ub else lp.A_eq[i - m_ub]
        b = F(lp.b_ub[i] if i < m_ub else lp.b_eq[i - m_ub])
        row = [F(0)] * n_std
        for j in range(n):
            v = F(src[j])
            if v:
                for cj, s in cols[j]:
                    row[cj] = v * s
        if i < m_ub:
            row[n_x + i] = F(1)
        sgn = 1
        if b < 0:
            row = [-v for v in row]
            b = -b
            sgn = -1
        std_rows.append(row)
        rhs.append(b)
        flips.append(sgn)
    c_std = [F(0)] * n_std
    for j in range(n):
        for cj, s in cols[j]:
            c_std[cj] = F(lp.c[j]) * s

    # phase 1 with one artificial per row
    total = n_std + m
    rows = [r + [F(1) if i == q else F(0) for q in range(m)] for i, r in enumerate(std_rows)]
    tab = _Tableau(rows, list(rhs), [n_std + i for i in range(m)])
    cost1 = [F(0)] * n_std + [F(-1)] * m
    tab.run(cost1, range(total))
    infeas = sum(tab.rhs[r] for r in range(m) if tab.basis[r] >= n_std)
    if infeas > 0:
        # at the phase-1 optimum A'^T y >= 0 on the structural columns and b'.y < 0
        y = _row_multipliers(tab, cost1, n_std, m)
        y_orig = [v * s for v, s in zip(y, flips)]
        y_ub, y_eq = y_orig[:m_ub], y_orig[m_ub:]
        _check_farkas(lp, y_ub, y_eq)
        return LPResult("infeasible", farkas=(y_ub, y_eq))

    # drive artificials out of the basis where possible; rows that keep one
    # are redundant and stay inert (zero on every structural column)
    for r in range(m):
        if tab.basis[r] >= n_std:
            col = next((j for j in range(n_std) if tab.rows[r][j] != 0), None)
            if col is not None:
                tab.pivot(r, col)

    cost2 = c_std + [F(0)] * m
    unb = tab.run(cost2, range(n_std))
    if unb is not None:
        ray_std = [F(0)] * n_std
        ray_std[unb] = F(1)
        for r, row in enumerate(tab.rows):
            if tab.basis[r] < n_std:
                ray_std[tab.basis[r]] = -row[unb]
        ray = [sum(ray_std[cj] * s for cj, s in cols[j]) for j in range(n)]
        return LPResult("unbounded", ray=ray)

    x_std = [F(0)] * n_std
    for r, col in enumerate(tab.basis):
        if col < n_std:
            x_std[col] = tab.rhs[r]
    x = [sum(x_std[cj] * s for cj, s in cols[j]) for j in range(n)]
    value = sum(c * v for c, v in zip(c_std, x_std))

    y_std = _row_multipliers(tab, cost2, n_std, m)
    y_orig = [v * s for v, s in zip(y_std, flips)]
    y_ub, y_eq = y_orig[:m_ub], y_orig[m_ub:]
    _check_duality(lp, x, value, y_ub, y_eq)
    return LPResult("optimal", value=value, x=x, dual_ub=y_ub, dual_eq=y_eq)


def _row_multipliers(tab, cost, n_std, m):
    """y = c_B^T B^{-1}; the artificial block of the tableau holds B^{-1}."""
    y = [F(0)] * m
    for r, row in enumerate(tab.rows):
        cb = cost[tab.basis[r]]
        if cb:
            for i in range(m):
                y[i] += cb * row[n_std + i]
    return y


def _check_duality(lp, x, value, y_ub, y_eq):
    n = len(lp.c)
    assert all(v >= 0 for v in y_ub), "dual infeasible: negative multiplier on <= row"
    for j in range(n):
        aty = sum(F(row[j]) * y for row, y in zip(lp.A_ub, y_ub)) + \
            sum(F(row[j]) * y for row, y in zip(lp.A_eq, y_eq))
        if j in set(lp.free):
            assert aty == F(lp.c[j]), "dual infeasible on a free column"
        else:
            assert aty >= F(lp.c[j]), "dual infeasible"
    dual_value = sum(F(b) * y for b, y in zip(lp.b_ub, y_ub)) + \
        sum(F(b) * y for b, y in zip(lp.b_eq, y_eq))
    assert dual_value == value, "strong duality violated"


def _check_farkas(lp, y_ub, y_eq):
    n = len(lp.c)
    free = set(lp.free)
    assert all(v >= 0 for v in y_ub)
    for j in range(n):
        aty = sum(F(row[j]) * y for row, y in zip(lp.A_ub, y_ub)) + \
            sum(F(row[j]) * y for row, y in zip(lp.A_eq, y_eq))
        if j in free:
            assert aty == 0
        else:
            assert aty >= 0
    by = sum(F(b) * y for b, y in zip(lp.b_ub, y_ub)) + sum(F(b) * y for b, y in zip(lp.b_eq, y_eq))
    assert by < 0
