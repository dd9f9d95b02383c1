"""h-vectors of Hibi rings.

Two independent routes to the same h-vector:

* flag route: tally descent sets of linear extensions of the join-irreducible
  poset (``flag_beta`` then ``h_from_beta``);
* face route: count chains of the lattice (``f_vector``) and apply the
  f-to-h transform (``h_from_f``).

Regularity of the Hibi ring is the degree of its h-vector.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Mapping

from .errors import CapExceeded, HibiregError
from .lattice import DistLattice
from .planar import EdgeLabeling, chain_descents
from .poset import Poset, canonical_labeling, descent_set, linear_extensions

__all__ = [
    "DEFAULT_ENUM_CAP",
    "FlagBeta",
    "HVector",
    "FVector",
    "flag_beta",
    "h_from_beta",
    "f_vector",
    "h_from_f",
    "regularity_from_h",
    "beta_via_chains",
    "max_descent_extension",
]

DEFAULT_ENUM_CAP = 10**7


@dataclass(frozen=True)
class FlagBeta:
    """``beta[S]`` = number of linear extensions (or chains) with descent set ``S``."""

    beta: Mapping[frozenset[int], int]

    @property
    def total(self) -> int:
        return sum(self.beta.values())

    def by_size(self) -> Counter:
        out: Counter = Counter()
        for s, c in self.beta.items():
            out[len(s)] += c
        return out

    def serialize(self) -> str:
        rows = sorted(self.beta.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        return "\n".join(
            "beta {" + ",".join(map(str, sorted(s))) + "}: " + str(c) for s, c in rows
        ) + "\n"


@dataclass(frozen=True)
class HVector:
    h: tuple[int, ...]

    def __post_init__(self):
        h = list(self.h)
        while len(h) > 1 and h[-1] == 0:
            h.pop()
        object.__setattr__(self, "h", tuple(h))

    @property
    def degree(self) -> int:
        return len(self.h) - 1

    def serialize(self) -> str:
        return "h: " + " ".join(map(str, self.h))


@dataclass(frozen=True)
class FVector:
    """``f[k]`` counts chains with ``k`` elements, so ``f[0] = 1`` is the empty face."""

    f: tuple[int, ...]

    def face(self, dim: int) -> int:
        return self.f[dim + 1]


def flag_beta(P: Poset, cap: int = DEFAULT_ENUM_CAP) -> FlagBeta:
    lab = canonical_labeling(P)
    out: Counter = Counter()
    for k, ext in enumerate(linear_extensions(P)):
        if k >= cap:
            raise CapExceeded("linear extension count", cap)
        out[descent_set(ext, lab)] += 1
    return FlagBeta(dict(out))


def max_descent_extension(P: Poset, cap: int = DEFAULT_ENUM_CAP) -> tuple[tuple[int, ...], frozenset[int]]:
    """First linear extension (in enumeration order) with the most descents."""
    lab = canonical_labeling(P)
    best = None
    for k, ext in enumerate(linear_extensions(P)):
        if k >= cap:
            raise CapExceeded("linear extension count", cap)
        d = descent_set(ext, lab)
        if best is None or len(d) > len(best[1]):
            best = (ext, d)
    return best


def h_from_beta(fb: FlagBeta) -> HVector:
    size = fb.by_size()
    return HVector(tuple(size.get(k, 0) for k in range(max(size) + 1)))


def f_vector(L: DistLattice, cap: int = DEFAULT_ENUM_CAP) -> FVector:
    """Chain counts of the order complex by dynamic programming.

    ``ending[x][k]`` is the number of chains with ``k`` elements whose top is
    ``x``; element indices are a linear extension so one pass suffices.
    """
    n = len(L)
    top = L.rank + 1
    ending = [[0] * (top + 1) for _ in range(n)]
    below = [[y for y in range(x) if L.leq(y, x)] for x in range(n)]
    for x in range(n):
        row = ending[x]
        row[1] = 1
        for y in below[x]:
            prev = ending[y]
            for k in range(1, top):
                if prev[k]:
                    row[k + 1] += prev[k]
    f = [1] + [sum(ending[x][k] for x in range(n)) for k in range(1, top + 1)]
    if sum(f) > cap:
        raise CapExceeded("chain count", cap)
    return FVector(tuple(f))


def h_from_f(fv: FVector) -> HVector:
    """``h_j = sum_i (-1)^(j-i) C(D-i, j-i) f_(i-1)`` with ``D`` the facet size."""
    D = len(fv.f) - 1
    h = []
    for j in range(D + 1):
        h.append(sum((-1) ** (j - i) * comb(D - i, j - i) * fv.f[i] for i in range(j + 1)))
    if any(x < 0 for x in h):
        raise HibiregError(f"negative h-vector entry from f-vector {fv.f}")
    return HVector(tuple(h))


def regularity_from_h(h: HVector) -> int:
    return h.degree


def beta_via_chains(L: DistLattice, lam: EdgeLabeling, cap: int = DEFAULT_ENUM_CAP) -> FlagBeta:
    out: Counter = Counter()
    for k, c in enumerate(L.maximal_chains()):
        if k >= cap:
            raise CapExceeded("maximal chain count", cap)
        out[chain_descents(c, lam)] += 1
    return FlagBeta(dict(out))
