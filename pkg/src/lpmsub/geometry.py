"""Exact polyhedral routines on finite point configurations.

Points are tuples of rationals. Every routine works inside an affine chart: a
subset of coordinates that is injective on the affine hull of the input, so the
configuration is full-dimensional in chart coordinates.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm

import numpy as np

from .lp import LinearProgram, solve_lp

F = Fraction


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple
    labels: tuple

    def __init__(self, points, labels=None):
        pts = tuple(tuple(F(c) for c in p) for p in points)
        if not pts:
            raise ValueError("empty point configuration")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points of different dimensions")
        labs = tuple(labels) if labels is not None else tuple(range(len(pts)))
        if len(labs) != len(pts) or len(set(labs)) != len(labs):
            raise ValueError("labels must be unique, one per point")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", labs)

    def __len__(self):
        return len(self.points)

    @classmethod
    def of_matroid(cls, M, bases=None):
        bs = sorted(M.bases if bases is None else bases)
        return cls([M.indicator(b) for b in bs], bs)

    def sub(self, labels) -> "PointConfiguration":
        want = set(labels)
        idx = [i for i, l in enumerate(self.labels) if l in want]
        return PointConfiguration([self.points[i] for i in idx], [self.labels[i] for i in idx])


# --- linear algebra over Q -------------------------------------------------

def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(map(F, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows, dim):
    """Basis of {g in Q^dim : row . g = 0 for every row}."""
    if not rows:
        return [tuple(F(int(i == j)) for j in range(dim)) for i in range(dim)]
    R, piv = rref(rows)
    free = [c for c in range(dim) if c not in piv]
    basis = []
    for f in free:
        g = [F(0)] * dim
        g[f] = F(1)
        for row, p in zip(R, piv):
            g[p] = -row[f]
        basis.append(tuple(g))
    return basis


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    R, _ = rref([sub(p, base) for p in points[1:]])
    return len(R)


def chart(points):
    """Pivot coordinates of the difference vectors; projection onto them is injective."""
    if len(points) <= 1:
        return []
    base = points[0]
    _, piv = rref([sub(p, base) for p in points[1:]])
    return piv


def to_chart(points, cols):
    return [tuple(p[c] for c in cols) for p in points]


def affine_dimension(V: PointConfiguration) -> int:
    return affine_rank(list(V.points))


# --- convex hull facets by gift wrapping -----------------------------------
#
# The walks below run on integer points with primitive integer functionals;
# rational input is rescaled first (faces are invariant under scaling).

def _lcm_denominators(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, F(v).denominator)
    return out


def _integral(points):
    L = _lcm_denominators(c for p in points for c in p)
    return [tuple(int(F(c) * L) for c in p) for p in points], L


def _primitive(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    L = _lcm_denominators(v)
    iv = [int(F(x) * L) for x in v]
    g = 0
    for x in iv:
        g = gcd(g, x)
    return tuple(x // g for x in iv) if g else tuple(iv)


def _int_nullspace(rows, dim):
    return [_primitive(g) for g in nullspace(rows, dim)]


def _idot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _isub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _not_parallel(basis, a):
    for g in basis:
        if any(g[i] * a[j] != g[j] * a[i] for i in range(len(a)) for j in range(i + 1, len(a))):
            return g
    return None


def _tight(points, a, ref):
    c = _idot(a, ref)
    return frozenset(i for i, y in enumerate(points) if _idot(a, y) == c)


def _directions(points, idx):
    idx = sorted(idx)
    base = points[idx[0]]
    return [_isub(points[i], base) for i in idx[1:]]


def _initial_facet(Y, d):
    a = tuple(int(j == 0) for j in range(d))
    top = max(_idot(a, y) for y in Y)
    ref = next(y for y in Y if _idot(a, y) == top)
    T = _tight(Y, a, ref)
    while affine_rank([Y[i] for i in T]) < d - 1:
        N = _int_nullspace(_directions(Y, T), d)
        g = _not_parallel(N, a)
        vals = [(_idot(a, _isub(y, ref)), _idot(g, _isub(y, ref))) for y in Y]
        if not any(gv > 0 for _, gv in vals):
            g = tuple(-x for x in g)
            vals = [(av, -gv) for av, gv in vals]
        s = min(F(-av, gv) for av, gv in vals if gv > 0)
        a = _primitive([s.denominator * x + s.numerator * y for x, y in zip(a, g)])
        T = _tight(Y, a, ref)
    return a, T


def _simplex_facets(Y, d):
    for drop in range(d + 1):
        T = [i for i in range(d + 1) if i != drop]
        a = _int_nullspace(_directions(Y, T), d)[0]
        if _idot(a, _isub(Y[drop], Y[T[0]])) > 0:
            a = tuple(-x for x in a)
        yield frozenset(T), a


@lru_cache(maxsize=None)
def _hull_facets_full(Y: tuple):
    """Facets of conv(Y), Y a tuple of distinct integer points spanning Z^d (d >= 1).

    Returns pairs (indices of the points on the facet, outer normal).
    """
    d = len(Y[0])
    if d == 1:
        vals = [y[0] for y in Y]
        lo, hi = min(vals), max(vals)
        return (
            (frozenset(i for i, v in enumerate(vals) if v == lo), (-1,)),
            (frozenset(i for i, v in enumerate(vals) if v == hi), (1,)),
        )
    if len(Y) == d + 1:
        return tuple(_simplex_facets(Y, d))
    a, T = _initial_facet(Y, d)
    found = {T: a}
    queue = deque([T])
    while queue:
        T = queue.popleft()
        a = found[T]
        Tl = sorted(T)
        for ridge_local in hull_facet_sets([Y[i] for i in Tl]):
            R = [Tl[i] for i in ridge_local]
            ref = Y[R[0]]
            N = _int_nullspace(_directions(Y, R), d)
            h = _not_parallel(N, a)
            t = next(i for i in Tl if i not in set(R))
            if _idot(h, _isub(Y[t], ref)) < 0:
                h = tuple(-x for x in h)
            # project onto the pencil (a, h); the neighbouring facet is the other
            # boundary ray of the planar cone spanned by the projected points
            best = None
            for y in Y:
                u = _isub(y, ref)
                al = _idot(a, u)
                if al == 0:
                    continue
                be = _idot(h, u)
                if best is None or best[0] * be - best[1] * al > 0:
                    best = (al, be)
            psi = _primitive([-best[1] * x + best[0] * y for x, y in zip(a, h)])
            T2 = _tight(Y, psi, ref)
            if T2 not in found:
                found[T2] = psi
                queue.append(T2)
    return tuple(found.items())


def _chart_int(points):
    pts = [tuple(map(F, p)) for p in points]
    d = affine_rank(pts)
    cols = chart(pts) if d else []
    Y, _ = _integral(to_chart(pts, cols))
    return d, cols, Y


def hull_facet_sets(points) -> list:
    """Facets of conv(points) as frozensets of point indices (all points on each facet)."""
    d, cols, Y = _chart_int(points)
    if d == 0:
        return []
    uniq = tuple(sorted(set(Y)))
    out = []
    for T, _ in _hull_facets_full(uniq):
        members = {uniq[j] for j in T}
        out.append(frozenset(i for i, y in enumerate(Y) if y in members))
    return out


def hull_facets(V: PointConfiguration) -> list:
    """Facets as (a, b, labels) with a.x <= b on conv(V); a is in ambient coordinates."""
    pts = list(V.points)
    d, cols, Y = _chart_int(pts)
    if d == 0:
        return []
    uniq = tuple(sorted(set(Y)))
    out = []
    for T, a in _hull_facets_full(uniq):
        members = {uniq[j] for j in T}
        idx = [i for i, y in enumerate(Y) if y in members]
        full = [F(0)] * len(pts[0])
        for c, v in zip(cols, a):
            full[c] = F(v)
        b = dot(full, pts[idx[0]])
        out.append((tuple(full), b, frozenset(V.labels[i] for i in idx)))
    return out


# --- lower hull of a lifted configuration ----------------------------------

@dataclass(frozen=True)
class LowerFacet:
    c: tuple        # linear part, ambient coordinates
    c0: Fraction
    labels: frozenset

    def value(self, x):
        return dot(self.c, x) + self.c0


def lower_facets(V: PointConfiguration, heights) -> list:
    """Maximal cells of the regular subdivision: lower facets of the lifted points.

    ``heights`` maps each label to a rational. Each returned facet carries an
    affine function u with u(v) <= h(v) on every point, with equality exactly on
    the cell. Cells are found by walking across interior ridges, starting from
    the cell reached by tilting the horizontal plane through the lowest point.
    """
    pts = list(V.points)
    m = len(pts[0])
    D = _lcm_denominators(heights[l] for l in V.labels)
    H = [int(F(heights[l]) * D) for l in V.labels]
    d, cols, Y = _chart_int(pts)
    if d == 0:
        return [LowerFacet(tuple([F(0)] * m), F(min(H), D), frozenset(V.labels))]
    Lsc = _lcm_denominators(c for p in to_chart(pts, cols) for c in p)
    n_pts = len(Y)

    # an affine function is (lin, off, den): u(y) = (lin.y + off) / den, den > 0
    def slacks(lin, off, den):
        return [den * H[i] - _idot(lin, Y[i]) - off for i in range(n_pts)]

    def tilt(lin, off, den, g, ref, s):
        # u + s * (g.(y - ref)) with s = p/q
        p, q = s.numerator, s.denominator
        gr = _idot(g, ref)
        lin2 = [q * a + den * p * b for a, b in zip(lin, g)]
        off2 = q * off - den * p * gr
        den2 = q * den
        c = den2
        for v in lin2:
            c = gcd(c, v)
        c = gcd(c, off2)
        return tuple(v // c for v in lin2), off2 // c, den2 // c

    lin, off, den = tuple([0] * d), min(H), 1
    sl = slacks(lin, off, den)
    T = frozenset(i for i in range(n_pts) if sl[i] == 0)
    while affine_rank([Y[i] for i in T]) < d:
        ref = Y[min(T)]
        g = _int_nullspace(_directions(Y, T), d)[0]
        gv = [_idot(g, _isub(y, ref)) for y in Y]
        if not any(v > 0 for v in gv):
            g = tuple(-x for x in g)
            gv = [-v for v in gv]
        s = min(F(sl[i], den * gv[i]) for i in range(n_pts) if gv[i] > 0)
        lin, off, den = tilt(lin, off, den, g, ref, s)
        sl = slacks(lin, off, den)
        T = frozenset(i for i in range(n_pts) if sl[i] == 0)

    cells = {T: (lin, off, den)}
    queue = deque([T])
    while queue:
        T = queue.popleft()
        lin, off, den = cells[T]
        Tl = sorted(T)
        sl = slacks(lin, off, den)
        for ridge_local in hull_facet_sets([Y[i] for i in Tl]):
            R = [Tl[i] for i in ridge_local]
            ref = Y[R[0]]
            g = _int_nullspace(_directions(Y, R), d)[0]
            t = next(i for i in Tl if i not in set(R))
            if _idot(g, _isub(Y[t], ref)) > 0:
                g = tuple(-x for x in g)
            best = None
            for i, y in enumerate(Y):
                gv = _idot(g, _isub(y, ref))
                if gv > 0:
                    r = F(sl[i], den * gv)
                    if best is None or r < best:
                        best = r
            if best is None:
                continue  # the ridge lies on the boundary of the polytope
            nxt = tilt(lin, off, den, g, ref, best)
            sl2 = slacks(*nxt)
            T2 = frozenset(i for i in range(n_pts) if sl2[i] == 0)
            if T2 not in cells:
                cells[T2] = nxt
                queue.append(T2)

    out = []
    for T, (lin, off, den) in cells.items():
        full = [F(0)] * m
        for c, v in zip(cols, lin):
            full[c] = F(v * Lsc, den * D)
        out.append(LowerFacet(tuple(full), F(off, den * D), frozenset(V.labels[i] for i in T)))
    out.sort(key=lambda f: sorted(f.labels))
    return out


# --- LP-based membership ----------------------------------------------------

def contains_point(V: PointConfiguration, x, mode: str = "member") -> bool:
    pts = V.points
    N = len(pts)
    m = len(pts[0])
    x = [F(v) for v in x]
    if len(x) != m:
        raise ValueError("dimension mismatch")
    A_eq = [[p[j] for p in pts] for j in range(m)] + [[F(1)] * N]
    b_eq = x + [F(1)]
    if mode == "member":
        res = solve_lp(LinearProgram([0] * N, A_eq=A_eq, b_eq=b_eq))
        return res.optimal
    if mode == "relative_interior":
        # variables: lambda_1..lambda_N, t ; lambda_i >= t, t <= 1
        A_eq2 = [row + [F(0)] for row in A_eq]
        A_ub = [[F(-1) if j == i else F(0) for j in range(N)] + [F(1)] for i in range(N)]
        A_ub.append([F(0)] * N + [F(1)])
        res = solve_lp(LinearProgram([0] * N + [1], A_ub, [0] * N + [1], A_eq2, b_eq))
        return res.optimal and res.value > 0
    raise ValueError(f"unknown mode {mode!r}")


def affine_hull_equations(V: PointConfiguration) -> list:
    """Equations g.x = c cutting out the affine hull of V."""
    pts = list(V.points)
    base = pts[0]
    return [(g, dot(g, base)) for g in nullspace([sub(p, base) for p in pts[1:]], len(base))]


def max_common_interiority(configs, extra_eq=()):
    """Largest margin t <= 1 of a point x lying in every affine hull, satisfying
    the extra equations, with a.x + t <= b for every facet inequality of every
    configuration.

    Returns (t, x), or (None, None) when no such point exists even with t <= 0.
    The relative interiors share a point satisfying the equations iff t > 0.
    """
    m = len(configs[0].points[0])
    nv = m + 1
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    for V in configs:
        for g, c in affine_hull_equations(V):
            A_eq.append(list(g) + [F(0)])
            b_eq.append(c)
        for a, b, _ in hull_facets(V):
            A_ub.append(list(a) + [F(1)])
            b_ub.append(b)
    for coeffs, rhs in extra_eq:
        A_eq.append([F(v) for v in coeffs] + [F(0)])
        b_eq.append(F(rhs))
    A_ub.append([F(0)] * m + [F(1)])
    b_ub.append(F(1))
    c = [0] * m + [1]
    res = solve_lp(LinearProgram(c, A_ub, b_ub, A_eq, b_eq, free=list(range(nv))))
    if not res.optimal:
        return None, None
    return res.value, tuple(res.x[:m])


def max_common_interiority_vertices(configs, extra_eq=()):
    """Largest t such that one point is a convex combination of each configuration
    with every coefficient >= t, subject to extra affine equations on that point.

    Returns (t, point) or (None, None) when no common point exists at all. A
    positive t means the relative interiors share a point.
    """
    m = len(configs[0].points[0])
    nvars = sum(len(c.points) for c in configs) + m + 1  # lambdas, x, t
    t_col = nvars - 1
    x0 = nvars - 1 - m
    A_eq, b_eq, A_ub, b_ub = [], [], [], []
    offset = 0
    for V in configs:
        N = len(V.points)
        for j in range(m):
            row = [F(0)] * nvars
            for i, p in enumerate(V.points):
                row[offset + i] = p[j]
            row[x0 + j] = F(-1)
            A_eq.append(row)
            b_eq.append(F(0))
        row = [F(0)] * nvars
        for i in range(N):
            row[offset + i] = F(1)
        A_eq.append(row)
        b_eq.append(F(1))
        for i in range(N):
            row = [F(0)] * nvars
            row[offset + i] = F(-1)
            row[t_col] = F(1)
            A_ub.append(row)
            b_ub.append(F(0))
        offset += N
    for coeffs, rhs in extra_eq:
        row = [F(0)] * nvars
        for j, v in enumerate(coeffs):
            row[x0 + j] = F(v)
        A_eq.append(row)
        b_eq.append(F(rhs))
    row = [F(0)] * nvars
    row[t_col] = F(1)
    A_ub.append(row)
    b_ub.append(F(1))
    c = [0] * nvars
    c[t_col] = 1
    free = list(range(x0, x0 + m)) + [t_col]
    res = solve_lp(LinearProgram(c, A_ub, b_ub, A_eq, b_eq, free=free))
    if not res.optimal:
        return None, None
    return res.value, tuple(res.x[x0:x0 + m])


# --- volumes ------------------------------------------------------------------

def _count_setup(V: PointConfiguration):
    """Data shared by every dilation: (points, d, base, R, chart points, chart inequalities)."""
    pts = list(V.points)
    base = pts[0]
    R, cols = rref([sub(p, base) for p in pts[1:]]) if len(pts) > 1 else ([], [])
    d = len(R)
    if d == 0:
        return pts, 0, None, None, None, None
    Y = to_chart(pts, cols)
    return pts, d, base, R, Y, _chart_inequalities(Y)


def lattice_point_count(V: PointConfiguration, t: int, membership: str = "hull", _setup=None) -> int:
    """Number of integer points in t * conv(V)."""
    pts, d, base, R, Y, ineqs = _setup or _count_setup(V)
    if t == 0:
        return 1
    if d == 0:
        return 1 if all((t * c).denominator == 1 for c in pts[0]) else 0
    if membership == "hull" and all(c.denominator == 1 for p in pts for c in p):
        return _count_integral(R, Y, ineqs, t)
    y0 = Y[0]
    lo = [min(y[j] for y in Y) * t for j in range(d)]
    hi = [max(y[j] for y in Y) * t for j in range(d)]
    ranges = [range(_ceil(a), _floor(b) + 1) for a, b in zip(lo, hi)]
    count = 0
    for y in itertools.product(*ranges):
        x = [t * b + sum((y[j] - t * y0[j]) * R[j][c] for j in range(d)) for c, b in enumerate(base)]
        if any(v.denominator != 1 for v in x):
            continue
        if membership == "hull":
            if all(dot(a, y) <= t * b for a, b in ineqs):
                count += 1
        else:
            if contains_point(V, [v / t for v in x]):
                count += 1
    return count


def _count_integral(R, Y, ineqs, t, chunk=1 << 18):
    """Vectorised count for lattice polytopes, in exact int64 arithmetic."""
    d = len(Y[0])
    Yi = np.array([[int(c) for c in y] for y in Y], dtype=np.int64)
    D = _lcm_denominators(c for row in R for c in row)
    RD = np.array([[int(c * D) for c in row] for row in R], dtype=np.int64)
    A = np.array([[int(c) for c in a] for a, _ in ineqs], dtype=np.int64)
    bvec = np.array([int(b) for _, b in ineqs], dtype=np.int64) * t
    lo = Yi.min(axis=0) * t
    hi = Yi.max(axis=0) * t
    shape = tuple(int(h - l + 1) for l, h in zip(lo, hi))
    total = int(np.prod(shape))
    count = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        grid = np.stack(np.unravel_index(idx, shape), axis=1) + lo
        ok = (grid @ A.T <= bvec).all(axis=1)
        if D != 1:
            grid = grid[ok]
            x = (grid - t * Yi[0]) @ RD
            ok = (x % D == 0).all(axis=1)
        count += int(ok.sum())
    return count


def _chart_inequalities(Y):
    Yi, _ = _integral(Y)
    uniq = tuple(sorted(set(Yi)))
    # the same functional works on the unscaled chart points
    return [(a, dot(a, Y[Yi.index(uniq[next(iter(T))])])) for T, a in _hull_facets_full(uniq)]


def _ceil(q):
    return -((-q.numerator) // q.denominator)


def _floor(q):
    return q.numerator // q.denominator


def ehrhart_values(V: PointConfiguration, membership: str = "hull") -> list:
    setup = _count_setup(V)
    return [lattice_point_count(V, t, membership, setup) for t in range(setup[1] + 1)]


def normalized_volume(V: PointConfiguration, dim: int | None = None, membership: str = "hull") -> int:
    """dim! times the relative volume, from the d-th finite difference of the Ehrhart counts."""
    vals = ehrhart_values(V, membership)
    d = len(vals) - 1
    if dim is not None and d < dim:
        return 0
    return sum((-1) ** (d - t) * comb(d, t) * vals[t] for t in range(d + 1))
