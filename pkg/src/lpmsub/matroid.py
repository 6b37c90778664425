"""Matroids given by an explicit list of bases on the ground set 1..n."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class MalformedInput(ValueError):
    """Raised when an input collection cannot describe the requested object."""


class DegenerateMinor(ValueError):
    """Contracting a loop or deleting a coloop."""


def _normalize_bases(bases: Iterable[Iterable[int]], n: int) -> frozenset:
    out = set()
    for b in bases:
        t = tuple(sorted(int(x) for x in b))
        if len(set(t)) != len(t):
            raise MalformedInput(f"basis {t} has repeated elements")
        if t and (t[0] < 1 or t[-1] > n):
            raise MalformedInput(f"basis {t} is not a subset of [1..{n}]")
        out.add(t)
    if not out:
        raise MalformedInput("empty basis collection")
    sizes = {len(b) for b in out}
    if len(sizes) != 1:
        raise MalformedInput(f"bases of different sizes: {sorted(sizes)}")
    return frozenset(out)


def exchange_holds(bases: frozenset) -> bool:
    for I in bases:
        sI = set(I)
        for J in bases:
            sJ = set(J)
            for i in sI - sJ:
                rest = sI - {i}
                if not any(tuple(sorted(rest | {j})) in bases for j in sJ - sI):
                    return False
    return True


def is_matroid(bases, n: int) -> bool:
    """Check the basis exchange axiom for a collection of equal-size subsets of [n]."""
    return exchange_holds(_normalize_bases(bases, n))


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: frozenset = field(repr=False)

    def __init__(self, n: int, bases, check: bool = True):
        if n < 1:
            raise MalformedInput("ground set size must be positive")
        norm = _normalize_bases(bases, n)
        if check and not exchange_holds(norm):
            raise MalformedInput("basis collection violates the exchange axiom")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", norm)

    @property
    def k(self) -> int:
        return len(next(iter(self.bases)))

    @property
    def ground(self) -> range:
        return range(1, self.n + 1)

    def sorted_bases(self) -> list:
        return sorted(self.bases)

    def __repr__(self):
        return f"Matroid(n={self.n}, k={self.k}, |B|={len(self.bases)})"

    def __len__(self):
        return len(self.bases)

    def __contains__(self, b) -> bool:
        return tuple(sorted(b)) in self.bases

    def rank(self, S) -> int:
        S = frozenset(S)
        return self._rank_cache(S)

    def _rank_cache(self, S):
        cache = self.__dict__.setdefault("_ranks", {})
        r = cache.get(S)
        if r is None:
            r = max(len(S.intersection(b)) for b in self.bases)
            cache[S] = r
        return r

    @cached_property
    def loops(self) -> frozenset:
        used = set().union(*map(set, self.bases))
        return frozenset(e for e in self.ground if e not in used)

    @cached_property
    def coloops(self) -> frozenset:
        return frozenset(set.intersection(*map(set, self.bases)))

    def indicator(self, basis) -> tuple:
        s = set(basis)
        return tuple(1 if e in s else 0 for e in self.ground)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "bases": [list(b) for b in self.sorted_bases()]}

    @classmethod
    def from_json(cls, data: dict) -> "Matroid":
        try:
            n = int(data["n"])
            bases = data["bases"]
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"matroid JSON needs 'n' and 'bases': {exc}") from None
        m = cls(n, bases)
        if "k" in data and int(data["k"]) != m.k:
            raise MalformedInput(f"declared rank {data['k']} but bases have size {m.k}")
        return m


def uniform(k: int, n: int) -> Matroid:
    return Matroid(n, itertools.combinations(range(1, n + 1), k), check=False)


def _relabel_without(b, e):
    return tuple(x if x < e else x - 1 for x in b if x != e)


def minor(M: Matroid, kind: str, e: int) -> Matroid:
    """Delete or contract a single element and relabel the ground set to [n-1]."""
    if e not in M.ground:
        raise MalformedInput(f"element {e} not in [1..{M.n}]")
    if M.n == 1:
        raise DegenerateMinor("cannot take a minor of a one-element matroid")
    if kind == "delete":
        if e in M.coloops:
            raise DegenerateMinor(f"{e} is a coloop; deletion would drop the rank")
        keep = [b for b in M.bases if e not in b]
    elif kind == "contract":
        if e in M.loops:
            raise DegenerateMinor(f"{e} is a loop; contraction is undefined here")
        keep = [b for b in M.bases if e in b]
    else:
        raise MalformedInput(f"unknown minor kind {kind!r}")
    return Matroid(M.n - 1, [_relabel_without(b, e) for b in keep], check=False)


def delete(M: Matroid, e: int) -> Matroid:
    return minor(M, "delete", e)


def contract(M: Matroid, e: int) -> Matroid:
    return minor(M, "contract", e)


def dual(M: Matroid) -> Matroid:
    E = set(M.ground)
    return Matroid(M.n, [tuple(sorted(E - set(b))) for b in M.bases], check=False)


def restrict_relabel(M: Matroid, perm: dict) -> Matroid:
    """Apply the relabelling ``e -> perm[e]`` to every basis."""
    return Matroid(M.n, [tuple(sorted(perm[x] for x in b)) for b in M.bases], check=False)


def reverse(M: Matroid) -> Matroid:
    return restrict_relabel(M, {e: M.n + 1 - e for e in M.ground})


def connected_components(M: Matroid) -> list:
    """Finest partition of the ground set into separators.

    A set A separates M when r(A) + r(E - A) = r(E). Each component is the
    intersection of all separators containing a given element.
    """
    E = frozenset(M.ground)
    k = M.k
    separators = []
    elems = sorted(E)
    first = elems[0]
    # a separator and its complement are both separators; scan those containing `first`
    rest = elems[1:]
    for r in range(0, len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            A = frozenset((first,) + combo)
            if A == E:
                continue
            if M.rank(A) + M.rank(E - A) == k:
                separators.append(A)
                separators.append(E - A)
    comps = []
    seen = set()
    for e in elems:
        if e in seen:
            continue
        block = set(E)
        for A in separators:
            if e in A:
                block &= A
        comps.append(frozenset(block))
        seen |= block
    return sorted((tuple(sorted(c)) for c in comps))


def is_connected(M: Matroid) -> bool:
    return len(connected_components(M)) == 1


def polytope_dimension(M: Matroid) -> int:
    return M.n - len(connected_components(M))


def _is_u24_restriction(M: Matroid, X, C) -> bool:
    rc = M.rank(C)
    if M.rank(set(X) | C) - rc != 2:
        return False
    return all(M.rank(set(p) | C) - rc == 2 for p in itertools.combinations(X, 2))


def has_u24_minor(M: Matroid) -> bool:
    """Search every 4-set X and every contraction set C disjoint from X."""
    if M.k < 2 or M.n - M.k < 2:
        return False
    E = list(M.ground)
    for X in itertools.combinations(E, 4):
        others = [e for e in E if e not in X]
        for r in range(0, min(len(others), M.k - 2) + 1):
            for C in itertools.combinations(others, r):
                C = frozenset(C)
                if M.rank(C) != len(C):
                    continue  # contracting a dependent set adds nothing over an independent one
                if _is_u24_restriction(M, X, C):
                    return True
    return False


def is_series_parallel(M: Matroid) -> bool:
    """Connected, and no U_{2,4} minor.

    This is the binary-matroid criterion; for connected positroids it coincides
    with series-parallel.
    """
    return is_connected(M) and not has_u24_minor(M)
