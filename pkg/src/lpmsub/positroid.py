"""Gale orders, Grassmann necklaces, decorated permutations, weak separation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice_paths import LatticePathMatroid
from .matroid import Matroid, polytope_dimension


def cyclic_key(t: int, n: int):
    """Sort key for the shifted order t < t+1 < ... < n < 1 < ... < t-1."""
    return lambda e: (e - t) % n


def gale_leq(I, J, t: int, n: int) -> bool:
    key = cyclic_key(t, n)
    a = sorted(I, key=key)
    b = sorted(J, key=key)
    return all(key(x) <= key(y) for x, y in zip(a, b))


def gale_min(M: Matroid, t: int = 1) -> tuple:
    """Greedy: scan elements in the t-th cyclic order, keep those that stay independent."""
    key = cyclic_key(t, M.n)
    chosen = []
    for e in sorted(M.ground, key=key):
        if M.rank(chosen + [e]) == len(chosen) + 1:
            chosen.append(e)
    return tuple(sorted(chosen))


def gale_max(M: Matroid, t: int = 1) -> tuple:
    key = cyclic_key(t, M.n)
    chosen = []
    for e in sorted(M.ground, key=key, reverse=True):
        if M.rank(chosen + [e]) == len(chosen) + 1:
            chosen.append(e)
    return tuple(sorted(chosen))


def grassmann_necklace(M: Matroid) -> tuple:
    return tuple(gale_min(M, t) for t in M.ground)


def is_necklace(seq, n: int) -> bool:
    for i in range(1, n + 1):
        cur = set(seq[i - 1])
        nxt = set(seq[i % n])
        if len(nxt) != len(cur):
            return False
        if i in cur:
            if not cur - {i} <= nxt:
                return False
        elif cur != nxt:
            return False
    return True


def schubert_envelope(I, t: int, n: int, k: int) -> frozenset:
    return frozenset(J for J in itertools.combinations(range(1, n + 1), k)
                     if gale_leq(I, J, t, n))


def is_positroid(M: Matroid) -> bool:
    """Compare the bases with the intersection of the shifted Schubert matroids of the necklace."""
    neck = grassmann_necklace(M)
    n, k = M.n, M.k
    for J in itertools.combinations(range(1, n + 1), k):
        if J in M.bases:
            continue
        if all(gale_leq(neck[t - 1], J, t, n) for t in range(1, n + 1)):
            return False
    return True


@dataclass(frozen=True)
class DecoratedPermutation:
    pi: tuple  # pi[i-1] is the image of i
    colors: tuple  # ((fixed point, +-1), ...)

    @property
    def n(self) -> int:
        return len(self.pi)

    def anti_excedances(self) -> list:
        """Positions i with pi^{-1}(i) > i, plus the fixed points colored -1 (coloops)."""
        inv = {v: i for i, v in enumerate(self.pi, start=1)}
        col = dict(self.colors)
        return [i for i in range(1, self.n + 1) if inv[i] > i or col.get(i) == -1]

    def to_json(self) -> dict:
        return {"pi": list(self.pi), "colors": {str(t): c for t, c in self.colors}}

    @classmethod
    def from_json(cls, data) -> "DecoratedPermutation":
        colors = tuple(sorted((int(t), int(c)) for t, c in data.get("colors", {}).items()))
        return cls(tuple(int(x) for x in data["pi"]), colors)


def decorated_permutation_lpm(L: LatticePathMatroid) -> DecoratedPermutation:
    I = L.P
    J = L.Q
    n = L.n
    c = [x for x in range(1, n + 1) if x not in I]
    d = [x for x in range(1, n + 1) if x not in J]
    pi = [0] * n
    for jr, ir in zip(J, I):
        pi[jr - 1] = ir
    for dr, cr in zip(d, c):
        pi[dr - 1] = cr
    colors = tuple((t, -1 if t in J else 1) for t in range(1, n + 1) if pi[t - 1] == t)
    return DecoratedPermutation(tuple(pi), colors)


def _separates(A: set, B: set) -> bool:
    # A \ B splits as A1 < (B \ A) < A2
    mid = B - A
    if not mid:
        return True
    lo, hi = min(mid), max(mid)
    return all(x < lo or x > hi for x in A - B)


def weakly_separated(I, J) -> bool:
    I, J = set(I), set(J)
    if len(I) <= len(J) and _separates(I, J):
        return True
    return len(J) <= len(I) and _separates(J, I)


def pairwise_weakly_separated(C) -> bool:
    C = list(C)
    return all(weakly_separated(a, b) for a, b in itertools.combinations(C, 2))


def is_cluster(C, M: Matroid) -> bool:
    C = {tuple(sorted(c)) for c in C}
    if not C <= M.bases:
        return False
    if len(C) != polytope_dimension(M) + 1:
        return False
    if not set(grassmann_necklace(M)) <= C:
        return False
    return pairwise_weakly_separated(C)
