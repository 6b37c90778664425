"""Dissections of matroid polytopes into cells, matroidal minors of dissections,
and lattice path matroids indexed by noncrossing path pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .geometry import (
    PointConfiguration,
    affine_dimension,
    dot,
    hull_facets,
    max_common_interiority,
    normalized_volume,
)
from .lattice_paths import LatticePathMatroid, all_paths, lpm_bases
from .lp import LinearProgram, solve_lp
from .matroid import DegenerateMinor, MalformedInput, Matroid, minor

F = Fraction


@dataclass
class DissectionReport:
    full_dimensional: list
    pairwise_interior_disjoint: bool
    covers: bool
    good: bool
    volume_sum: int = 0
    ambient_volume: int = 0
    overlap: tuple | None = None       # (i, j, witness point) for the first overlapping pair
    bad_contact: tuple | None = None   # (i, j) for the first codim-1 contact that is not a shared facet

    @property
    def is_dissection(self) -> bool:
        return all(self.full_dimensional) and self.pairwise_interior_disjoint and self.covers

    @property
    def is_good_dissection(self) -> bool:
        return self.is_dissection and self.good

    def to_json(self) -> dict:
        d = {
            "full_dimensional": self.full_dimensional,
            "pairwise_interior_disjoint": self.pairwise_interior_disjoint,
            "covers": self.covers,
            "good": self.good,
            "volume_sum": self.volume_sum,
            "ambient_volume": self.ambient_volume,
            "is_dissection": self.is_dissection,
            "is_good_dissection": self.is_good_dissection,
        }
        if self.overlap:
            i, j, x = self.overlap
            d["overlap"] = {"cells": [i, j], "point": [str(v) for v in x]}
        if self.bad_contact:
            d["bad_contact"] = list(self.bad_contact)
        return d


def _config(n: int, bases) -> PointConfiguration:
    bs = sorted(bases)
    pts = [tuple(1 if e in b else 0 for e in range(1, n + 1)) for b in bs]
    return PointConfiguration(pts, bs)


def common_face(n: int, C1, C2) -> bool:
    """conv(C1) and conv(C2) meet exactly in conv(C1 & C2), a face of both.

    Looks for an affine function vanishing on the shared vertices, <= -s on the
    rest of C1 and >= s on the rest of C2, maximising s <= 1.
    """
    C1, C2 = frozenset(C1), frozenset(C2)
    shared = C1 & C2
    only1, only2 = C1 - C2, C2 - C1
    ind = lambda b: [F(1) if e in b else F(0) for e in range(1, n + 1)]
    # variables: a_1..a_n, a_0, s   (all free except s <= 1)
    nv = n + 2
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for b in only1:
        A_ub.append(ind(b) + [F(1), F(1)])
        b_ub.append(F(0))
    for b in only2:
        A_ub.append([-x for x in ind(b)] + [F(-1), F(1)])
        b_ub.append(F(0))
    for b in shared:
        A_eq.append(ind(b) + [F(1), F(0)])
        b_eq.append(F(0))
    A_ub.append([F(0)] * (nv - 1) + [F(1)])
    b_ub.append(F(1))
    c = [0] * (nv - 1) + [1]
    res = solve_lp(LinearProgram(c, A_ub, b_ub, A_eq, b_eq, free=list(range(nv))))
    return res.optimal and res.value > 0


def _bad_codim1_contact(V1, V2, facets1, facets2) -> bool:
    """Do the cells touch along a (d-1)-dimensional set that is not a common facet?"""
    for a, b, lab1 in facets1:
        pts_on = {lab: p for lab, p in zip(V2.labels, V2.points)}
        for a2, b2, lab2 in facets2:
            if not all(dot(a, pts_on[l]) == b for l in lab2):
                continue
            if lab1 == lab2:
                continue
            t, _ = max_common_interiority([V1.sub(lab1), V2.sub(lab2)])
            if t is not None and t > 0:
                return True
    return False


def check_dissection(cells, ambient: Matroid) -> DissectionReport:
    n = ambient.n
    for M in cells:
        if M.n != n or not M.bases <= ambient.bases:
            raise MalformedInput("every cell must use bases of the ambient matroid")
    amb = _config(n, ambient.bases)
    d = affine_dimension(amb)
    configs = [_config(n, M.bases) for M in cells]
    full = [affine_dimension(V) == d for V in configs]
    live = [i for i, ok in enumerate(full) if ok]

    disjoint, overlap = True, None
    for i, j in combinations(live, 2):
        t, x = max_common_interiority([configs[i], configs[j]])
        if t is not None and t > 0:
            disjoint, overlap = False, (i, j, x)
            break

    vols = [normalized_volume(configs[i]) for i in live]
    amb_vol = normalized_volume(amb)
    covers = disjoint and sum(vols) == amb_vol

    good, bad = True, None
    if disjoint:
        facets = {i: hull_facets(configs[i]) for i in live}
        for i, j in combinations(live, 2):
            if _bad_codim1_contact(configs[i], configs[j], facets[i], facets[j]):
                good, bad = False, (i, j)
                break
    else:
        good = False
    return DissectionReport(full, disjoint, covers, good, sum(vols), amb_vol, overlap, bad)


@dataclass
class MinorDissections:
    element: int
    contraction: list
    contraction_report: DissectionReport
    deletion: list
    deletion_report: DissectionReport
    dropped: dict = field(default_factory=dict)   # cell index -> reason

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "contraction": {"cells": [M.to_json() for M in self.contraction], "report": self.contraction_report.to_json()},
            "deletion": {"cells": [M.to_json() for M in self.deletion], "report": self.deletion_report.to_json()},
            "dropped": {str(k): v for k, v in sorted(self.dropped.items())},
        }


def dissection_minors(cells, i: int, ambient: Matroid) -> MinorDissections:
    """Contract and delete element i in every cell, keeping the full-dimensional results."""
    if i not in ambient.ground:
        raise MalformedInput(f"element {i} not in [1..{ambient.n}]")
    amb_c = minor(ambient, "contract", i)
    amb_d = minor(ambient, "delete", i)
    dim_c = affine_dimension(_config(amb_c.n, amb_c.bases))
    dim_d = affine_dimension(_config(amb_d.n, amb_d.bases))
    con, dele, dropped = [], [], {}
    for idx, M in enumerate(cells):
        for kind, out, dim in (("contract", con, dim_c), ("delete", dele, dim_d)):
            try:
                N = minor(M, kind, i)
            except DegenerateMinor:
                dropped.setdefault(idx, []).append(f"{kind}: degenerate")
                continue
            if affine_dimension(_config(N.n, N.bases)) == dim:
                out.append(N)
            else:
                dropped.setdefault(idx, []).append(f"{kind}: lower-dimensional")
    return MinorDissections(
        i, con, check_dissection(con, amb_c), dele, check_dissection(dele, amb_d), dropped
    )


def noncrossing_pairs(n: int, k: int) -> list:
    """Pairs (P, Q) of paths in the k x (n-k-4) grid with P <= Q componentwise."""
    if k < 0 or n < k + 4:
        raise MalformedInput(f"need n >= k + 4, got n={n}, k={k}")
    paths = list(all_paths(k, n - 4))
    return [(P, Q) for P in paths for Q in paths if all(p <= q for p, q in zip(P, Q))]


def bcfw_lpm_collection(n: int, k: int):
    """The LPMs M[P, Q] on [n-4] for all noncrossing pairs, with a recorded report."""
    if k < 1:
        raise MalformedInput("need k >= 1")
    pairs = noncrossing_pairs(n, k)
    m = n - 4
    cells = [lpm_bases(P, Q, m) for P, Q in pairs]
    ambient = lpm_bases(tuple(range(1, k + 1)), tuple(range(m - k + 1, m + 1)), m).matroid
    report = check_dissection([L.matroid for L in cells], ambient)
    return cells, report
