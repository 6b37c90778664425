"""Hyperplane splits of matroid polytopes and the fan of LPM subdivisions they generate."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .lattice_paths import LatticePathMatroid, recognize_lpm
from .matroid import Matroid, exchange_holds, is_connected, uniform
from .subdivision import (
    MalformedInput,
    Subdivision,
    add_weights,
    dual_subdivision,
    make_split,
    refine_all,
    split_subdivision,
    split_weight,
    splits_compatible,
    trivial_subdivision,
)


class UnsupportedAmbient(ValueError):
    """Duality check requested for a fan whose ambient is not uniform."""


def enumerate_hypersimplex_splits(M: Matroid) -> list:
    """All cuts x(A) = mu through the relative interior, one per induced cell pair.

    A cut is reported by its first description in the scan (smallest |A|, then
    lexicographic A), which also merges (A, mu) with (complement, k - mu).
    """
    if not is_connected(M):
        raise MalformedInput("split enumeration needs a connected matroid")
    n = M.n
    found = {}
    for r in range(1, n):
        for A in combinations(range(1, n + 1), r):
            As = frozenset(A)
            levels = [sum(1 for e in b if e in As) for b in M.bases]
            for mu in range(max(1, min(levels) + 1), max(levels)):
                S = make_split(M, As, mu)
                if not (exchange_holds(S.minus) and exchange_holds(S.plus)):
                    continue
                found.setdefault(S.cells, S)
    return sorted(found.values(), key=lambda s: (len(s.A), sorted(s.A), s.mu))


def _lpm_cell(n: int, cell) -> bool:
    return recognize_lpm(Matroid(n, cell, check=False)) is not None


def enumerate_lpm_splits(L) -> list:
    """Splits of P_L whose two sides are both lattice path matroid polytopes."""
    M = L.matroid if isinstance(L, LatticePathMatroid) else L
    if not is_connected(M):
        return []
    return [S for S in enumerate_hypersimplex_splits(M) if _lpm_cell(M.n, S.minus) and _lpm_cell(M.n, S.plus)]


@dataclass(frozen=True)
class FanCone:
    splits: tuple               # indices into LPMFan.splits
    subdivision: Subdivision
    weight: dict = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.splits)


@dataclass
class LPMFan:
    ambient: Matroid
    splits: list
    cones: list
    require_compatible: bool = False

    def f_vector(self) -> tuple:
        top = max((c.dim for c in self.cones), default=0)
        return tuple(sum(1 for c in self.cones if c.dim == i) for i in range(top + 1))

    def cones_of_dim(self, i: int) -> list:
        return [c for c in self.cones if c.dim == i]

    def maximal_cones(self) -> list:
        keys = [set(c.splits) for c in self.cones]
        return [c for c, s in zip(self.cones, keys) if not any(s < t for t in keys)]

    def face_pairs(self) -> list:
        """Covering relations of the face poset, as pairs of cone indices."""
        idx = {c.splits: i for i, c in enumerate(self.cones)}
        out = []
        for i, c in enumerate(self.cones):
            for drop in c.splits:
                sub = tuple(s for s in c.splits if s != drop)
                if sub in idx:
                    out.append((idx[sub], i))
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "splits": [s.to_json() for s in self.splits],
            "f_vector": list(self.f_vector()),
            "cones": [
                {"splits": list(c.splits), "cells": c.subdivision.to_json()["cells"]}
                for c in self.cones
            ],
        }

    def to_dot(self) -> str:
        def name(c):
            return "0" if not c.splits else "S" + "_".join(str(i + 1) for i in c.splits)

        lines = ["digraph lpmfan {", "  rankdir=BT;"]
        for c in self.cones:
            lines.append(f'  "{name(c)}" [label="{name(c)}\\n{len(c.subdivision)} cells"];')
        for i, j in self.face_pairs():
            lines.append(f'  "{name(self.cones[i])}" -> "{name(self.cones[j])}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_lpmfan(L, require_compatible: bool = False) -> LPMFan:
    """Cones are sets of LPM splits whose common refinement has only LPM cells.

    The sum of the split weights of a cone induces its refinement, so every
    cone is a set of weights inducing one LPM subdivision. With
    ``require_compatible`` only pairwise compatible split sets are kept. The
    empty set gives the trivial cone.
    """
    M = L.matroid if isinstance(L, LatticePathMatroid) else L
    splits = enumerate_lpm_splits(M)
    subs = [split_subdivision(M, S) for S in splits]
    weights = [split_weight(M, S.A, S.mu) for S in splits]
    compat = {}
    if require_compatible:
        compat = {
            (i, j): splits_compatible(splits[i], splits[j], M)
            for i, j in combinations(range(len(splits)), 2)
        }
    triv = trivial_subdivision(M)
    cones = [FanCone((), triv, {b: Fraction(0) for b in M.bases})]
    for r in range(1, len(splits) + 1):
        for idx in combinations(range(len(splits)), r):
            if require_compatible and not all(compat[p] for p in combinations(idx, 2)):
                continue
            S = refine_all([subs[i] for i in idx])
            if all(_lpm_cell(M.n, c) for c in S.cells):
                cones.append(FanCone(idx, S, add_weights(*(weights[i] for i in idx))))
    return LPMFan(M, splits, cones, require_compatible)


def dual_fan_check(fan: LPMFan) -> bool:
    """Every cone's cell-wise dual subdivision (relabelled i -> n+1-i) is again a cone's."""
    M = fan.ambient
    n, k = M.n, M.k
    if M != uniform(k, n):
        raise UnsupportedAmbient("dual fan check needs a hypersimplex ambient")
    other = fan if n == 2 * k else build_lpmfan(uniform(n - k, n), fan.require_compatible)
    targets = {c.subdivision.cell_set for c in other.cones}
    return all(dual_subdivision(c.subdivision).cell_set in targets for c in fan.cones)


def subdivision_dual_graph_dot(S: Subdivision) -> str:
    """Cells as nodes, edges between cells sharing a facet-sized vertex set."""
    from .geometry import PointConfiguration, affine_dimension

    d = affine_dimension(PointConfiguration.of_matroid(S.ambient))
    lines = ["graph subdivision {"]
    for i, c in enumerate(S.cells):
        lines.append(f'  c{i} [label="cell {i + 1}\\n{len(c)} bases"];')
    for i, j in combinations(range(len(S.cells)), 2):
        common = S.cells[i] & S.cells[j]
        if len(common) >= d and affine_dimension(PointConfiguration.of_matroid(S.ambient, common)) == d - 1:
            lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
