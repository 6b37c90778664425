"""Lattice path matroids M[P, Q], snakes and the Vandermonde positroid certificate.

A path is stored as the sorted tuple of its north-step positions. ``P`` is the
componentwise smaller (Gale-minimal) path and ``Q`` the larger one, so the bases
of M[P, Q] are the k-sets {i_1 < ... < i_k} with p_j <= i_j <= q_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .matroid import MalformedInput, Matroid, is_connected


class InvalidBounds(MalformedInput):
    pass


def _path(seq, n=None) -> tuple:
    t = tuple(sorted(int(x) for x in seq))
    if len(set(t)) != len(t):
        raise InvalidBounds(f"path {t} repeats a step")
    if n is not None and t and (t[0] < 1 or t[-1] > n):
        raise InvalidBounds(f"path {t} leaves [1..{n}]")
    return t


def interval_bases(P, Q):
    """Yield the sorted k-sets between P and Q, in lexicographic order."""
    k = len(P)

    def rec(j, lo):
        if j == k:
            yield ()
            return
        for i in range(max(P[j], lo), Q[j] + 1):
            for rest in rec(j + 1, i + 1):
                yield (i,) + rest

    yield from rec(0, 1)


@dataclass(frozen=True)
class LatticePathMatroid:
    n: int
    P: tuple
    Q: tuple
    matroid: Matroid

    @property
    def k(self) -> int:
        return len(self.P)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "P": list(self.P), "Q": list(self.Q)}

    @classmethod
    def from_json(cls, data) -> "LatticePathMatroid":
        try:
            return lpm_bases(data["P"], data["Q"], int(data["n"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"LPM JSON needs 'n', 'P', 'Q': {exc}") from None


def lpm_bases(P, Q, n: int | None = None) -> LatticePathMatroid:
    P = _path(P, n)
    Q = _path(Q, n)
    if len(P) != len(Q):
        raise InvalidBounds("bounding paths have different numbers of north steps")
    if n is None:
        n = max(Q[-1] if Q else 0, P[-1] if P else 0, 1)
    if any(p > q for p, q in zip(P, Q)):
        raise InvalidBounds(f"paths cross: P={P} is not below Q={Q} componentwise")
    bases = list(interval_bases(P, Q))
    if not bases:
        raise InvalidBounds("empty interval")
    return LatticePathMatroid(n, P, Q, Matroid(n, bases, check=False))


def recognize_lpm(M: Matroid):
    """Return (P, Q) if the bases of M form the Gale interval [P, Q], else None."""
    bs = M.bases
    k = M.k
    P = tuple(min(b[j] for b in bs) for j in range(k))
    Q = tuple(max(b[j] for b in bs) for j in range(k))
    count = sum(1 for _ in interval_bases(P, Q))
    if count != len(bs):
        return None
    # every basis lies in [P, Q] by construction, so equal size means equal sets
    return P, Q


def as_lpm(M: Matroid) -> LatticePathMatroid | None:
    pq = recognize_lpm(M)
    if pq is None:
        return None
    return LatticePathMatroid(M.n, pq[0], pq[1], M)


def heights(path, n) -> list:
    """Height of the path after each of the steps 1..n."""
    s = set(path)
    out, h = [], 0
    for step in range(1, n + 1):
        h += step in s
        out.append(h)
    return out


def interior_points(L: LatticePathMatroid) -> list:
    """Lattice points strictly between P (upper) and Q (lower), as (east, north)."""
    hp = heights(L.P, L.n)
    hq = heights(L.Q, L.n)
    pts = []
    for s in range(1, L.n + 1):
        for y in range(hq[s - 1] + 1, hp[s - 1]):
            pts.append((s - y, y))
    return pts


def is_snake(L: LatticePathMatroid) -> bool:
    return L.n >= 2 and is_connected(L.matroid) and not interior_points(L)


@dataclass(frozen=True)
class PositroidMatrix:
    entries: tuple  # k rows of n ints
    seeds: tuple


def positroid_matrix(L: LatticePathMatroid, x1: int = 2) -> PositroidMatrix:
    if x1 <= 1:
        raise MalformedInput("the first seed must exceed 1")
    k = L.k
    seeds = [x1]
    for _ in range(k - 1):
        seeds.append(seeds[-1] ** (k * k))
    rows = []
    for i in range(k):
        x = seeds[i]
        rows.append(tuple(x ** (j - 1) if L.P[i] <= j <= L.Q[i] else 0
                          for j in range(1, L.n + 1)))
    return PositroidMatrix(tuple(rows), tuple(seeds))


def det(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    d = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, m):
            f = a[r][c] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def maximal_minors(A: PositroidMatrix) -> dict:
    k = len(A.entries)
    n = len(A.entries[0]) if k else 0
    out = {}
    for I in itertools.combinations(range(1, n + 1), k):
        sub = [[row[j - 1] for j in I] for row in A.entries]
        out[I] = det(sub) if k else Fraction(1)
    return out


def verify_positroid_matrix(L: LatticePathMatroid, A: PositroidMatrix) -> bool:
    """Minors are positive exactly on bases and zero on every other k-set."""
    for I, d in maximal_minors(A).items():
        if I in L.matroid.bases:
            if d <= 0:
                return False
        elif d != 0:
            return False
    return True


def all_paths(k: int, n: int):
    return itertools.combinations(range(1, n + 1), k)


def all_lpms(k: int, n: int):
    for P in all_paths(k, n):
        for Q in all_paths(k, n):
            if all(p <= q for p, q in zip(P, Q)):
                yield lpm_bases(P, Q, n)
