"""Finite distributive lattices as lattices of down-sets (Birkhoff).

A :class:`DistLattice` element is an integer index into ``L.ideals``; the
ideal itself is a bitmask over the base poset.  Elements are sorted by rank,
then by the sorted tuple of their poset indices, so indices are stable across
runs and the order is a linear extension of the lattice order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import CapExceeded
from .poset import Poset, bits, down_sets

__all__ = [
    "DEFAULT_SIZE_CAP",
    "DistLattice",
    "CutEdge",
    "Segment",
    "birkhoff",
    "join_irreducibles",
    "cut_edges",
    "decompose",
    "simple_blocks",
    "interval",
]

DEFAULT_SIZE_CAP = 10**6


def _ideal_key(mask):
    return (bin(mask).count("1"), tuple(bits(mask)))


class DistLattice:
    """The lattice of down-sets of ``base``, ordered by inclusion."""

    def __init__(self, base: Poset, cap: int = DEFAULT_SIZE_CAP):
        found = []
        for m in down_sets(base):
            found.append(m)
            if len(found) > cap:
                raise CapExceeded("lattice size", cap)
        self.base = base
        self.ideals = tuple(sorted(found, key=_ideal_key))
        self.index = {m: i for i, m in enumerate(self.ideals)}
        self.rank_of = tuple(bin(m).count("1") for m in self.ideals)
        upper = [[] for _ in self.ideals]
        lower = [[] for _ in self.ideals]
        for i, m in enumerate(self.ideals):
            for p in bits(base.full_mask & ~m):
                if base.down[p] & ~m == 0:
                    j = self.index[m | 1 << p]
                    upper[i].append(j)
                    lower[j].append(i)
        self.upper_covers = tuple(tuple(sorted(u)) for u in upper)
        self.lower_covers = tuple(tuple(sorted(w)) for w in lower)

    def __len__(self):
        return len(self.ideals)

    def __repr__(self):
        return f"<DistLattice |L|={len(self)} rank={self.rank} base={self.base.serialize()!r}>"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.ideals) - 1

    @property
    def rank(self) -> int:
        """Rank of the lattice, i.e. ``|P|``."""
        return self.base.n

    @property
    def d(self) -> int:
        return self.base.n - 1

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(len(self)) for j in self.upper_covers[i])

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.rank + 1)]
        for i, r in enumerate(self.rank_of):
            out[r].append(i)
        return tuple(tuple(x) for x in out)

    def ideal(self, x: int) -> frozenset[int]:
        return frozenset(bits(self.ideals[x]))

    def leq(self, x: int, y: int) -> bool:
        return self.ideals[x] & ~self.ideals[y] == 0

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def join(self, x: int, y: int) -> int:
        return self.index[self.ideals[x] | self.ideals[y]]

    def meet(self, x: int, y: int) -> int:
        return self.index[self.ideals[x] & self.ideals[y]]

    def name(self, x: int) -> str:
        """Display name: the set of base-poset names in the ideal."""
        return "{" + ",".join(self.base.names[p] for p in bits(self.ideals[x])) + "}"

    def var_suffix(self, x: int) -> str:
        """Collision-free identifier fragment (``0_2`` for ideal {p0, p2})."""
        idx = bits(self.ideals[x])
        return "_".join(map(str, idx)) if idx else "bot"

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        n = len(self)
        return [(a, b) for a in range(n) for b in range(a + 1, n) if not self.comparable(a, b)]

    def maximal_chains(self, start: int | None = None, end: int | None = None) -> Iterator[tuple[int, ...]]:
        """Saturated chains from ``start`` to ``end`` (default bottom/top), in
        lexicographic order of their element indices."""
        start = self.bottom if start is None else start
        end = self.top if end is None else end
        target = self.ideals[end]
        path = [start]

        def rec(x):
            if x == end:
                yield tuple(path)
                return
            for y in self.upper_covers[x]:
                if self.ideals[y] & ~target == 0:
                    path.append(y)
                    yield from rec(y)
                    path.pop()

        if self.leq(start, end):
            yield from rec(start)

    def count_maximal_chains(self) -> int:
        count = [0] * len(self)
        count[self.bottom] = 1
        for x in range(len(self)):
            for y in self.upper_covers[x]:
                count[y] += count[x]
        return count[self.top]

    def serialize(self) -> str:
        """Canonical text: one line per element (sorted index set), then covers."""
        lines = [f"lattice {len(self)} rank {self.rank}"]
        for i in range(len(self)):
            lines.append(f"e{i} [{' '.join(map(str, bits(self.ideals[i])))}]")
        for a, b in self.covers:
            lines.append(f"c {a} {b}")
        return "\n".join(lines) + "\n"


def birkhoff(P: Poset, cap: int = DEFAULT_SIZE_CAP) -> DistLattice:
    """The distributive lattice of down-sets of ``P``."""
    return DistLattice(P, cap)


def join_irreducibles(L: DistLattice) -> Poset:
    """Induced subposet of the elements covering exactly one element.

    A join-irreducible ideal has a unique maximal element; that element's
    base name is reused.
    """
    ji = [x for x in range(len(L)) if len(L.lower_covers[x]) == 1]
    names = []
    for x in ji:
        tops = [p for p in bits(L.ideals[x]) if not (L.base.up[p] & L.ideals[x])]
        names.append(L.base.names[tops[0]] if len(tops) == 1 else f"j{x}")
    rel = [(a, b) for a in range(len(ji)) for b in range(len(ji))
           if a != b and L.leq(ji[a], ji[b])]
    return Poset(names, rel, allow_empty=True)


@dataclass(frozen=True)
class CutEdge:
    lower: int
    upper: int


def cut_edges(L: DistLattice) -> list[CutEdge]:
    """Cover pairs whose two ranks each hold a single element, by rank."""
    lv = L.levels
    return [CutEdge(lv[r][0], lv[r + 1][0]) for r in range(L.rank)
            if len(lv[r]) == 1 and len(lv[r + 1]) == 1]


@dataclass(frozen=True)
class Segment:
    """Interval ``[lower, upper]`` of ``L`` lying between consecutive cut edges."""

    lower: int
    upper: int
    block: DistLattice

    @property
    def degenerate(self) -> bool:
        return len(self.block) <= 2


def decompose(L: DistLattice) -> list[Segment]:
    """Split ``L`` at every cut edge, keeping degenerate pieces."""
    out = []
    lo = L.bottom
    for e in cut_edges(L):
        out.append(Segment(lo, e.lower, interval(L, lo, e.lower)))
        lo = e.upper
    out.append(Segment(lo, L.top, interval(L, lo, L.top)))
    return out


def simple_blocks(L: DistLattice) -> list[DistLattice]:
    """The simple pieces of ``L``; points and single edges are dropped."""
    return [s.block for s in decompose(L) if not s.degenerate]


def interval(L: DistLattice, x: int, y: int) -> DistLattice:
    """``[x, y]`` as the lattice of down-sets of the poset ``y \\ x``."""
    if not L.leq(x, y):
        raise ValueError(f"interval endpoints {L.name(x)} and {L.name(y)} are not ordered")
    diff = L.ideals[y] & ~L.ideals[x]
    return DistLattice(L.base.subposet(bits(diff)))
