"""Scripted reproduction runs: Δ(3,6) and Δ(4,8) computations, BCFW-type collections."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb

from . import data
from .dissection import bcfw_lpm_collection, dissection_minors, noncrossing_pairs
from .dressian import is_positive_tropical_plucker, is_tropical_plucker
from .fan import build_lpmfan, dual_fan_check, enumerate_hypersimplex_splits, enumerate_lpm_splits
from .geometry import PointConfiguration, normalized_volume
from .matroid import Matroid, uniform
from .subdivision import (
    add_weights,
    classify_cells,
    refine_all,
    regular_subdivision,
    subdivisions_equal,
    volume_additivity,
    weights_from_vector,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "seconds": round(self.seconds, 3), "detail": self.detail}


def _run(name, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is reported, not propagated
        ok, detail = False, f"error: {exc}"
    return CheckResult(name, bool(ok), time.perf_counter() - t0, detail)


def delta36() -> list:
    M = uniform(3, 6)
    split_ws = [weights_from_vector(M, v) for v in data.DELTA36_SPLIT_WEIGHTS]
    w = weights_from_vector(M, data.DELTA36_SNAKE_WEIGHT)
    cache = {}

    def split_sum():
        total = add_weights(*split_ws)
        return total == w, "sum of split weights equals the snake weight"

    def splits_are_lpm():
        counts = []
        for sw in split_ws:
            S = regular_subdivision(M, sw)
            reps = classify_cells(S)
            counts.append(len(S))
            if len(S) != 2 or not all(r.is_lpm for r in reps):
                return False, f"cell counts {counts}"
        return True, f"cell counts {counts}"

    def snake_subdivision():
        S = regular_subdivision(M, w)
        cache["S"] = S
        R = refine_all([regular_subdivision(M, sw) for sw in split_ws])
        reps = classify_cells(S)
        ok = (
            subdivisions_equal(R, S)
            and len(S) == comb(4, 2)
            and all(r.is_snake and r.is_positroid and r.is_series_parallel for r in reps)
        )
        return ok, f"{len(S)} cells, refinement equal: {subdivisions_equal(R, S)}"

    def split_census():
        n = len(enumerate_hypersimplex_splits(M))
        return n == 35, f"{n} splits"

    def lpm_census():
        n = len(enumerate_lpm_splits(M))
        return n == 5, f"{n} LPM splits (expected 5)"

    def fan():
        F = build_lpmfan(M)
        cache["fan"] = F
        fv = F.f_vector()
        dual = dual_fan_check(F)
        return fv == (1, 5, 7, 3, 1) and dual, f"f-vector {fv}, dual check {dual}"

    def positivity():
        F = cache.get("fan") or build_lpmfan(M)
        bad = [c.splits for c in F.cones if not is_positive_tropical_plucker(c.weight, M)]
        return not bad, f"{len(F.cones)} cones, failing {bad}"

    def minors():
        F = cache.get("fan") or build_lpmfan(M)
        for cone in F.maximal_cones():
            cells = [Matroid(6, c, check=False) for c in cone.subdivision.cells]
            for i in M.ground:
                md = dissection_minors(cells, i, M)
                if not (md.contraction_report.is_dissection and md.deletion_report.is_dissection):
                    return False, f"cone {cone.splits}, element {i}"
        return True, f"{len(F.maximal_cones())} maximal cones x 6 elements"

    def volumes():
        vols = [normalized_volume(PointConfiguration.of_matroid(uniform(k, n))) for k, n in ((1, 3), (2, 4), (3, 6))]
        S = cache.get("S") or regular_subdivision(M, w)
        return vols == [1, 4, 66] and volume_additivity(S), f"volumes {vols}"

    return [
        _run("split weights sum to the snake weight", split_sum),
        _run("each split weight gives two LPM cells", splits_are_lpm),
        _run("snake weight: six snakes, equal to the refinement", snake_subdivision),
        _run("hypersimplex split census", split_census),
        _run("LPM split census", lpm_census),
        _run("LPM fan f-vector and duality", fan),
        _run("cone weights are positive tropical", positivity),
        _run("minors of maximal dissections", minors),
        _run("volumes and additivity", volumes),
    ]


def delta48() -> list:
    M = uniform(4, 8)
    w = weights_from_vector(M, data.DELTA48_WEIGHT)

    def positive():
        return is_positive_tropical_plucker(w, M), "three-term positive check"

    def cells():
        S = regular_subdivision(M, w)
        reps = classify_cells(S)
        ok = all(r.is_matroid and r.is_lpm for r in reps)
        return ok, f"{len(S)} cells, {sum(r.is_snake for r in reps)} snakes"

    return [
        _run("weight is tropical", lambda: (is_tropical_plucker(w, M), "")),
        _run("weight is positive tropical", positive),
        _run("all cells are LPM", cells),
    ]


def bcfw(n: int, k: int) -> tuple:
    cells, report = bcfw_lpm_collection(n, k)
    expected = len(noncrossing_pairs(n, k))
    results = [
        _run("cell count equals noncrossing pairs", lambda: (len(cells) == expected, f"{len(cells)} cells")),
    ]
    return results, cells, report


def table(results) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name.ljust(width)}  {r.seconds:8.2f}s  {r.detail}")
    return "\n".join(lines)

