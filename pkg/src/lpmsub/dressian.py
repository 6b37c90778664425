"""Three-term tropical Plücker relations and Dressian membership (min convention)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matroid import Matroid


@dataclass(frozen=True)
class ThreeTermRelation:
    S: tuple
    a: int
    b: int
    c: int
    d: int

    def _b(self, x, y) -> tuple:
        return tuple(sorted(self.S + (x, y)))

    @property
    def positive(self) -> tuple:
        return (self._b(self.a, self.c), self._b(self.b, self.d))

    @property
    def negatives(self) -> tuple:
        return (
            (self._b(self.a, self.b), self._b(self.c, self.d)),
            (self._b(self.a, self.d), self._b(self.b, self.c)),
        )

    @property
    def terms(self) -> tuple:
        return (self.positive,) + self.negatives

    def live(self, M: Matroid) -> tuple:
        return tuple(x in M.bases and y in M.bases for x, y in self.terms)

    def values(self, w: dict, M: Matroid) -> list:
        """Term values w_X + w_Y, None for dead terms (positive term first)."""
        return [w[x] + w[y] if ok else None for (x, y), ok in zip(self.terms, self.live(M))]

    def describe(self) -> str:
        S = "".join(map(str, self.S))
        return f"S={{{S}}} a,b,c,d={self.a},{self.b},{self.c},{self.d}"

    def to_json(self) -> dict:
        return {"S": list(self.S), "abcd": [self.a, self.b, self.c, self.d]}


def enumerate_three_terms(M: Matroid) -> list:
    n, k = M.n, M.k
    if k < 2:
        return []
    out = []
    for S in combinations(range(1, n + 1), k - 2):
        rest = [e for e in range(1, n + 1) if e not in S]
        for a, b, c, d in combinations(rest, 4):
            out.append(ThreeTermRelation(S, a, b, c, d))
    return out


def _tropical_ok(vals) -> bool:
    live = [v for v in vals if v is not None]
    if len(live) <= 1:
        return True
    m = min(live)
    return sum(1 for v in live if v == m) >= 2


def _positive_ok(vals) -> bool:
    live = [v for v in vals if v is not None]
    if len(live) <= 1:
        return True
    if vals[0] is None:
        # two live negative terms cannot cancel over positive reals
        return False
    return _tropical_ok(vals) and vals[0] == min(live)


def first_violation(w: dict, M: Matroid, positive: bool = False):
    ok = _positive_ok if positive else _tropical_ok
    for rel in enumerate_three_terms(M):
        if not ok(rel.values(w, M)):
            return rel
    return None


def is_tropical_plucker(w: dict, M: Matroid) -> bool:
    """Min over the live terms of each relation is attained at least twice."""
    return first_violation(w, M) is None


def is_positive_tropical_plucker(w: dict, M: Matroid) -> bool:
    """The positive pair (Sac, Sbd) attains the minimum of every relation."""
    return first_violation(w, M, positive=True) is None
