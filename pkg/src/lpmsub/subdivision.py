"""Regular subdivisions of matroid polytopes, splits and common refinements.

Weights are plain dicts mapping sorted basis tuples to Fractions. The lower
hull (min) convention is used everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations

from .geometry import (
    LowerFacet,
    PointConfiguration,
    affine_dimension,
    dot,
    lower_facets,
    max_common_interiority,
    normalized_volume,
)
from .lattice_paths import as_lpm, is_snake
from .matroid import MalformedInput, Matroid, exchange_holds, is_series_parallel
from .positroid import is_positroid

F = Fraction


class NotASplit(ValueError):
    """The hyperplane x(A) = mu does not cut the relative interior of the polytope."""


# --- weight vectors ---------------------------------------------------------

def parse_basis_key(key) -> tuple:
    if isinstance(key, str):
        parts = [p for p in key.replace(" ", "").split(",") if p]
        if not parts and key.strip():
            raise MalformedInput(f"bad basis key {key!r}")
        try:
            return tuple(sorted(int(p) for p in parts))
        except ValueError:
            raise MalformedInput(f"bad basis key {key!r}") from None
    return tuple(sorted(int(x) for x in key))


def basis_key(b) -> str:
    return ",".join(map(str, b))


def parse_rational(v) -> Fraction:
    try:
        return F(v) if not isinstance(v, float) else F(v).limit_denominator(10**9)
    except (ValueError, ZeroDivisionError, TypeError):
        raise MalformedInput(f"not a rational number: {v!r}") from None


def weights_from_map(M: Matroid, mapping) -> dict:
    """Keyed weights; every basis needs a value and non-bases are rejected."""
    w = {}
    for key, v in mapping.items():
        b = parse_basis_key(key)
        if b not in M.bases:
            raise MalformedInput(f"weight given for non-basis {basis_key(b)}")
        w[b] = parse_rational(v)
    missing = [b for b in M.sorted_bases() if b not in w]
    if missing:
        raise MalformedInput(f"weight missing for basis {basis_key(missing[0])}")
    return w


def weights_from_vector(M: Matroid, vector, order: str = "lex") -> dict:
    """Flat weight list read against the lexicographic order of sorted bases."""
    if order != "lex":
        raise MalformedInput(f"flat vectors need the 'lex' basis order, got {order!r}")
    bs = M.sorted_bases()
    if len(vector) != len(bs):
        raise MalformedInput(f"vector has {len(vector)} entries but the matroid has {len(bs)} bases")
    return {b: parse_rational(v) for b, v in zip(bs, vector)}


def weights_to_vector(M: Matroid, w: dict) -> list:
    return [w[b] for b in M.sorted_bases()]


def add_weights(*ws) -> dict:
    out = {}
    for w in ws:
        for b, v in w.items():
            out[b] = out.get(b, F(0)) + v
    return out


def scale_weights(w: dict, lam) -> dict:
    return {b: F(lam) * v for b, v in w.items()}


# --- subdivisions -----------------------------------------------------------

@dataclass(frozen=True)
class Subdivision:
    ambient: Matroid
    cells: tuple                 # sorted tuple of frozensets of bases
    certificates: tuple = None   # LowerFacet per cell, aligned with cells, or None

    @property
    def cell_set(self) -> frozenset:
        return frozenset(self.cells)

    def __len__(self):
        return len(self.cells)

    def cell_matroid(self, i: int) -> Matroid | None:
        cell = self.cells[i]
        if not exchange_holds(cell):
            return None
        return Matroid(self.ambient.n, cell, check=False)

    def to_json(self) -> dict:
        return {"cells": [[list(b) for b in sorted(c)] for c in self.cells]}

    @classmethod
    def from_json(cls, M: Matroid, data) -> "Subdivision":
        try:
            cells = [frozenset(tuple(sorted(b)) for b in c) for c in data["cells"]]
        except (KeyError, TypeError):
            raise MalformedInput("subdivision JSON needs a 'cells' list") from None
        for c in cells:
            if not c <= M.bases:
                raise MalformedInput("a cell contains a non-basis")
        return _make(M, cells, None)


def _cell_order(c):
    return sorted(c)


def _make(M, cells, certs):
    if certs is None:
        return Subdivision(M, tuple(sorted(cells, key=_cell_order)), None)
    pairs = sorted(zip(cells, certs), key=lambda p: _cell_order(p[0]))
    return Subdivision(M, tuple(c for c, _ in pairs), tuple(f for _, f in pairs))


def _config(M: Matroid, bases=None) -> PointConfiguration:
    return PointConfiguration.of_matroid(M, bases)


def regular_subdivision(M: Matroid, w: dict) -> Subdivision:
    for b in M.bases:
        if b not in w:
            raise MalformedInput(f"weight missing for basis {basis_key(b)}")
    facets = lower_facets(_config(M), w)
    return _make(M, [f.labels for f in facets], facets)


def trivial_subdivision(M: Matroid) -> Subdivision:
    return regular_subdivision(M, {b: F(0) for b in M.bases})


def subdivisions_equal(S1: Subdivision, S2: Subdivision) -> bool:
    return S1.ambient == S2.ambient and S1.cell_set == S2.cell_set


@dataclass(frozen=True)
class CellReport:
    bases: tuple
    is_matroid: bool
    is_lpm: bool
    is_snake: bool
    is_positroid: bool
    is_series_parallel: bool
    lpm: tuple | None = None     # (P, Q) when the cell is a lattice path matroid

    def to_json(self) -> dict:
        d = {
            "bases": [list(b) for b in self.bases],
            "matroid": self.is_matroid,
            "lpm": self.is_lpm,
            "snake": self.is_snake,
            "positroid": self.is_positroid,
            "series_parallel": self.is_series_parallel,
        }
        if self.lpm:
            d["P"], d["Q"] = list(self.lpm[0]), list(self.lpm[1])
        return d


def classify_cell(n: int, bases) -> CellReport:
    bs = tuple(sorted(bases))
    if not exchange_holds(frozenset(bs)):
        return CellReport(bs, False, False, False, False, False)
    M = Matroid(n, bs, check=False)
    L = as_lpm(M)
    return CellReport(
        bs,
        True,
        L is not None,
        L is not None and is_snake(L),
        is_positroid(M),
        is_series_parallel(M),
        (L.P, L.Q) if L is not None else None,
    )


def classify_cells(S: Subdivision) -> list:
    return [classify_cell(S.ambient.n, c) for c in S.cells]


def is_matroidal(S: Subdivision) -> bool:
    return all(exchange_holds(c) for c in S.cells)


def is_lpm_subdivision(S: Subdivision) -> bool:
    return all(r.is_lpm for r in classify_cells(S))


# --- certificates -----------------------------------------------------------

@lru_cache(maxsize=4096)
def _volume(M: Matroid, bases: frozenset, dim: int | None) -> int:
    return normalized_volume(_config(M, bases), dim=dim)


def cell_volumes(S: Subdivision) -> list:
    d = affine_dimension(_config(S.ambient))
    return [_volume(S.ambient, c, d) for c in S.cells]


def volume_additivity(S: Subdivision) -> bool:
    return sum(cell_volumes(S)) == _volume(S.ambient, S.ambient.bases, None)


def full_dimensional_cells(S: Subdivision) -> bool:
    d = affine_dimension(_config(S.ambient))
    return all(affine_dimension(_config(S.ambient, c)) == d for c in S.cells)


def face_to_face(S: Subdivision) -> bool:
    """Every pair of cells meets in a common face.

    With lifting certificates u_i the difference u_j - u_i vanishes exactly on
    the shared vertices, is <= 0 on cell i and >= 0 on cell j, so
    conv(C_i) and conv(C_j) meet in conv(C_i & C_j). Without certificates a
    separation LP is solved per pair.
    """
    if S.certificates is not None:
        w_pts = {b: S.ambient.indicator(b) for c in S.cells for b in c}
        for (ci, fi), (cj, fj) in combinations(zip(S.cells, S.certificates), 2):
            for b in ci | cj:
                x = w_pts[b]
                diff = fj.value(x) - fi.value(x)
                if b in ci and b in cj:
                    if diff != 0:
                        return False
                elif b in ci and diff >= 0:
                    return False
                elif b in cj and diff <= 0:
                    return False
        return True
    from .dissection import common_face

    return all(common_face(S.ambient.n, ci, cj) for ci, cj in combinations(S.cells, 2))


# --- splits -----------------------------------------------------------------

def _level(b, A) -> int:
    return sum(1 for e in b if e in A)


@dataclass(frozen=True)
class Split:
    A: frozenset
    mu: int
    minus: frozenset    # bases with v(A) <= mu
    plus: frozenset     # bases with v(A) >= mu

    @property
    def cells(self) -> frozenset:
        return frozenset({self.minus, self.plus})

    def label(self) -> str:
        return f"({{{','.join(map(str, sorted(self.A)))}}},{self.mu})"

    def to_json(self) -> dict:
        return {
            "A": sorted(self.A),
            "mu": self.mu,
            "cells": [[list(b) for b in sorted(c)] for c in sorted(self.cells, key=_cell_order)],
        }


def split_meets_interior(M: Matroid, A, mu) -> bool:
    A = frozenset(A)
    levels = [_level(b, A) for b in M.bases]
    return min(levels) < mu < max(levels)


def make_split(M: Matroid, A, mu: int) -> Split:
    """The two closed sides of x(A) = mu.

    Edges of a matroid polytope are parallel to e_i - e_j, so x(A) changes by
    at most one along an edge and an integral hyperplane crossing the interior
    cuts no edge: each side is the hull of the vertices lying on it.
    """
    A = frozenset(int(a) for a in A)
    if not A <= set(M.ground):
        raise MalformedInput(f"A must be a subset of 1..{M.n}")
    if int(mu) != mu:
        raise MalformedInput("mu must be an integer")
    mu = int(mu)
    if not split_meets_interior(M, A, mu):
        raise NotASplit(f"x({sorted(A)}) = {mu} misses the relative interior")
    minus = frozenset(b for b in M.bases if _level(b, A) <= mu)
    plus = frozenset(b for b in M.bases if _level(b, A) >= mu)
    return Split(A, mu, minus, plus)


def split_weight(M: Matroid, A, mu: int) -> dict:
    """w(v) = max(v(A) - mu, 0): zero on the lower side, growing on the upper side."""
    S = make_split(M, A, mu)
    return {b: F(max(_level(b, S.A) - S.mu, 0)) for b in M.bases}


def split_subdivision(M: Matroid, S: Split) -> Subdivision:
    """Subdivision of a split with certificates from its split weight."""
    return regular_subdivision(M, split_weight(M, S.A, S.mu))


def splits_compatible(S1: Split, S2: Split, M: Matroid) -> bool:
    """True iff the two hyperplanes share no point of the relative interior.

    A split compared with itself (or with another description of the same cut)
    counts as compatible.
    """
    if S1.cells == S2.cells:
        return True
    ind1 = [1 if e in S1.A else 0 for e in M.ground]
    ind2 = [1 if e in S2.A else 0 for e in M.ground]
    t, _ = max_common_interiority([_config(M)], extra_eq=[(ind1, S1.mu), (ind2, S2.mu)])
    return t is None or t <= 0


# --- common refinement --------------------------------------------------------

def _sum_facets(f: LowerFacet, g: LowerFacet, labels) -> LowerFacet:
    return LowerFacet(tuple(a + b for a, b in zip(f.c, g.c)), f.c0 + g.c0, frozenset(labels))


def common_refinement(S1: Subdivision, S2: Subdivision, check_volume: bool = False) -> Subdivision:
    """Full-dimensional pairwise intersections of cells.

    When both inputs carry lifting certificates, the sum of two certificates is
    tight exactly on the intersection, so each kept intersection is a maximal
    cell of the regular subdivision for the summed lifting and the result is a
    genuine subdivision. Otherwise pass ``check_volume`` to validate it by
    volume additivity.
    """
    if S1.ambient != S2.ambient:
        raise ValueError("subdivisions of different matroids")
    M = S1.ambient
    d = affine_dimension(_config(M))
    cells, certs = [], []
    seen = set()
    for i, c1 in enumerate(S1.cells):
        for j, c2 in enumerate(S2.cells):
            c = c1 & c2
            if len(c) <= d or c in seen:
                continue
            if affine_dimension(_config(M, c)) < d:
                continue
            seen.add(c)
            cells.append(c)
            if S1.certificates is not None and S2.certificates is not None:
                certs.append(_sum_facets(S1.certificates[i], S2.certificates[j], c))
    have = S1.certificates is not None and S2.certificates is not None
    out = _make(M, cells, certs if have else None)
    if check_volume and not volume_additivity(out):
        raise ValueError("pairwise intersections do not form a subdivision")
    return out


def refine_all(subdivisions, M: Matroid | None = None) -> Subdivision:
    subs = list(subdivisions)
    if not subs:
        if M is None:
            raise ValueError("need the ambient matroid for an empty refinement")
        return trivial_subdivision(M)
    out = subs[0]
    for S in subs[1:]:
        out = common_refinement(out, S)
    return out


def certificates_consistent(S: Subdivision, w: dict) -> bool:
    """Each certificate lies below w everywhere and touches it exactly on its cell."""
    if S.certificates is None:
        return False
    pts = {b: S.ambient.indicator(b) for b in S.ambient.bases}
    for c, f in zip(S.cells, S.certificates):
        for b, x in pts.items():
            u = f.value(x)
            if u > w[b] or (u == w[b]) != (b in c):
                return False
    return True


def dual_subdivision(S: Subdivision) -> Subdivision:
    """Cell-wise dual, relabelled by i -> n+1-i so that lattice paths stay ordered."""
    n = S.ambient.n
    flip = lambda b: tuple(sorted(n + 1 - e for e in range(1, n + 1) if e not in b))
    amb = Matroid(n, [flip(b) for b in S.ambient.bases], check=False)
    return _make(amb, [frozenset(flip(b) for b in c) for c in S.cells], None)


def lineality_functional(M: Matroid, coeffs, const=0) -> dict:
    """The weight of a global affine function, restricted to the vertices."""
    return {b: dot([F(c) for c in coeffs], M.indicator(b)) + F(const) for b in M.bases}

