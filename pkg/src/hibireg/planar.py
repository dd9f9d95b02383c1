"""Planar distributive lattices: embedding, the upper-chain edge labeling,
corner straightening, EL verification and the two planar regularity counts.

A distributive lattice ``I(P)`` is planar exactly when ``P`` splits into two
chains ``C1``, ``C2``; an ideal ``I`` then sits at
``(|I & C1|, |I & C2|)`` in the grid.  ``i`` is the horizontal coordinate,
``j`` the vertical one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .errors import EmbeddingError
from .lattice import DistLattice
from .poset import Poset, bits, max_antichain

__all__ = [
    "PlanarEmbedding",
    "NotPlanar",
    "EdgeLabeling",
    "Square",
    "CyclicSublattice",
    "ELVerdict",
    "two_chain_partition",
    "try_embed",
    "check_embedding",
    "upper_chain",
    "build_labeling",
    "chain_descents",
    "classify_corner",
    "straighten_steps",
    "straighten",
    "verify_el",
    "verify_el_exhaustive",
    "max_descent_cardinality",
    "find_squares",
    "max_cyclic_squares",
    "cyclic_from_chain",
    "UPPER_CORNER",
    "LOWER_CORNER",
    "STRAIGHT",
]

UPPER_CORNER = "upper-corner"
LOWER_CORNER = "lower-corner"
STRAIGHT = "straight"

Chain = tuple[int, ...]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Grid coordinates of every lattice element (indexed like ``L.ideals``)."""

    coord: tuple[tuple[int, int], ...]
    chains: tuple[tuple[int, ...], tuple[int, ...]]
    at: dict = field(compare=False, repr=False, hash=False, default_factory=dict)

    def __post_init__(self):
        if not self.at:
            self.at.update({c: x for x, c in enumerate(self.coord)})

    def element(self, i: int, j: int) -> int | None:
        return self.at.get((i, j))

    def triples(self, L: DistLattice) -> list[tuple[str, int, int]]:
        """``(element-name, i, j)`` rows for export."""
        return [(L.name(x), i, j) for x, (i, j) in enumerate(self.coord)]


@dataclass(frozen=True)
class NotPlanar:
    """Verdict for a lattice whose join-irreducibles contain a 3-antichain."""

    witness: tuple[int, ...]
    names: tuple[str, ...]

    def __bool__(self):
        return False


def two_chain_partition(P: Poset) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split ``P`` into two chains, or return ``None`` if impossible.

    Prefers the longest possible first chain and, among those, the one whose
    sorted index tuple is lexicographically smallest.
    """
    n = P.n
    best: list = [None]
    best_size = -1

    def rec(k, c1, c2, m1, m2):
        nonlocal best_size
        if len(c1) + (n - k) <= best_size:
            return
        if k == n:
            best[0] = (tuple(c1), tuple(c2))
            best_size = len(c1)
            return
        comp = P.up[k] | P.down[k]
        if m1 & ~comp == 0:
            c1.append(k)
            rec(k + 1, c1, c2, m1 | 1 << k, m2)
            c1.pop()
        if m2 & ~comp == 0:
            c2.append(k)
            rec(k + 1, c1, c2, m1, m2 | 1 << k)
            c2.pop()

    rec(0, [], [], 0, 0)
    return best[0]


def try_embed(L: DistLattice) -> Union[PlanarEmbedding, NotPlanar]:
    P = L.base
    anti = max_antichain(P)
    if len(anti) > 2:
        w = anti[:3]
        return NotPlanar(w, tuple(P.names[p] for p in w))
    part = two_chain_partition(P)
    if part is None:  # cannot happen for width <= 2 (Dilworth)
        raise EmbeddingError("width-2 poset without a two-chain partition")
    m1 = sum(1 << p for p in part[0])
    m2 = sum(1 << p for p in part[1])
    coord = tuple((bin(m & m1).count("1"), bin(m & m2).count("1")) for m in L.ideals)
    emb = PlanarEmbedding(coord, part)
    check_embedding(L, emb)
    return emb


def check_embedding(L: DistLattice, emb: PlanarEmbedding) -> None:
    """Raise :class:`EmbeddingError` unless every embedding invariant holds."""
    coord = emb.coord
    n = len(L)
    if len(set(coord)) != n:
        raise EmbeddingError("coordinates are not injective")
    if coord[L.bottom] != (0, 0):
        raise EmbeddingError("bottom is not at (0, 0)")
    for x, y in L.covers:
        (a, b), (c, d) = coord[x], coord[y]
        if (c - a, d - b) not in ((1, 0), (0, 1)):
            raise EmbeddingError(f"cover {L.name(x)} -> {L.name(y)} is not a unit step")
    # chain-connectivity: reach[x] = elements reachable from x by cover steps
    reach = [0] * n
    for x in reversed(range(n)):
        r = 1 << x
        for y in L.upper_covers[x]:
            r |= reach[y]
        reach[x] = r
    for x in range(n):
        (a, b) = coord[x]
        for y in range(n):
            (c, d) = coord[y]
            le = L.leq(x, y)
            if le != (a <= c and b <= d):
                raise EmbeddingError(f"order mismatch at {L.name(x)}, {L.name(y)}")
            if le and not reach[x] >> y & 1:
                raise EmbeddingError(f"no saturated chain {L.name(x)} -> {L.name(y)}")


def upper_chain(L: DistLattice, emb: PlanarEmbedding) -> Chain:
    """The "most upper" maximal chain: step up whenever possible, else right."""
    x = L.bottom
    out = [x]
    while x != L.top:
        i, j = emb.coord[x]
        nxt = emb.element(i, j + 1)
        if nxt is None:
            nxt = emb.element(i + 1, j)
        if nxt is None:
            raise EmbeddingError(f"dead end at {L.name(x)}")
        out.append(nxt)
        x = nxt
    return tuple(out)


@dataclass(frozen=True)
class EdgeLabeling:
    """Integer label per Hasse edge ``(x, y)``."""

    labels: dict

    def __getitem__(self, edge):
        return self.labels[edge]

    def of_chain(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.labels[c[k], c[k + 1]] for k in range(len(c) - 1))


def build_labeling(L: DistLattice, emb: PlanarEmbedding) -> EdgeLabeling:
    """Label c0 by 1..d+1 and copy each label to all parallel edges."""
    c0 = upper_chain(L, emb)
    col, row = {}, {}
    for t in range(len(c0) - 1):
        (a, b), (c, d) = emb.coord[c0[t]], emb.coord[c0[t + 1]]
        if c == a + 1:
            col[a] = t + 1
        else:
            row[b] = t + 1
    labels = {}
    for x, y in L.covers:
        (a, b), (c, _) = emb.coord[x], emb.coord[y]
        try:
            labels[x, y] = col[a] if c == a + 1 else row[b]
        except KeyError:
            raise EmbeddingError(f"edge {L.name(x)} -> {L.name(y)} has no parallel edge on c0")
    return EdgeLabeling(labels)


def chain_descents(c: Sequence[int], lam: EdgeLabeling) -> frozenset[int]:
    w = lam.of_chain(c)
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def classify_corner(c: Sequence[int], t: int, emb: PlanarEmbedding) -> str:
    if not 1 <= t <= len(c) - 2:
        raise IndexError(f"corner position {t} outside 1..{len(c) - 2}")
    (i0, j0), (i1, j1), (i2, j2) = (emb.coord[c[t - 1]], emb.coord[c[t]], emb.coord[c[t + 1]])
    if j1 == j0 + 1 and i2 == i1 + 1:
        return UPPER_CORNER
    if i1 == i0 + 1 and j2 == j1 + 1:
        return LOWER_CORNER
    return STRAIGHT


def straighten_steps(c: Sequence[int], lam: EdgeLabeling, emb: PlanarEmbedding) -> Iterator[Chain]:
    """Yield the chain after each lower-corner replacement, leftmost first.

    Every replacement swaps two adjacent out-of-order labels, so the number
    of label inversions drops by one each time.
    """
    c = list(c)
    while True:
        desc = sorted(chain_descents(c, lam))
        if not desc:
            return
        t = desc[0]
        if classify_corner(c, t, emb) != LOWER_CORNER:
            raise EmbeddingError(f"descent at position {t} is not a lower corner")
        i = emb.coord[c[t - 1]][0]
        j = emb.coord[c[t + 1]][1]
        x = emb.element(i, j)
        if x is None:
            raise EmbeddingError(f"replacement vertex ({i}, {j}) is not in the lattice")
        c[t] = x
        yield tuple(c)


def straighten(c: Sequence[int], lam: EdgeLabeling, emb: PlanarEmbedding) -> Chain:
    out = tuple(c)
    for out in straighten_steps(c, lam, emb):
        pass
    return out


@dataclass(frozen=True)
class ELVerdict:
    ok: bool
    interval: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_el(L: DistLattice, lam: EdgeLabeling) -> ELVerdict:
    """Check the EL conditions on every interval ``[x, y]`` with ``x < y``.

    For each ``x`` a forward pass counts weakly increasing chains to every
    ``y`` (by last label).  The lexicographically least chain to ``y`` is
    then traced step by step; it must be unique and must be the increasing
    chain, which is equivalent to every other chain being strictly larger.
    """
    n = len(L)
    for x in range(n):
        inc: dict[int, dict[int, int]] = {x: {0: 1}}
        for u in range(x, n):
            cu = inc.get(u)
            if not cu:
                continue
            for v in L.upper_covers[u]:
                lab = lam[u, v]
                got = sum(cnt for last, cnt in cu.items() if last <= lab)
                if got:
                    dv = inc.setdefault(v, {})
                    dv[lab] = dv.get(lab, 0) + got
        for y in range(x + 1, n):
            if not L.leq(x, y):
                continue
            total = sum(inc.get(y, {}).values())
            if total != 1:
                return ELVerdict(False, (x, y), f"{total} weakly increasing chains")
            c, ties = _lex_least(L, lam, x, y)
            if ties:
                return ELVerdict(False, (x, y), "lexicographically least chain is not unique")
            w = lam.of_chain(c)
            if any(w[k] > w[k + 1] for k in range(len(w) - 1)):
                return ELVerdict(False, (x, y), "least chain is not increasing")
    return ELVerdict(True)


def _lex_least(L, lam, x, y):
    """Trace the least label word from ``x`` to ``y``; report label ties."""
    target = L.ideals[y]
    frontier = {x: 1}
    parent = {x: None}
    for _ in range(L.rank_of[y] - L.rank_of[x]):
        options = [(lam[u, v], u, v) for u in frontier for v in L.upper_covers[u]
                   if L.ideals[v] & ~target == 0]
        m = min(o[0] for o in options)
        nxt: dict[int, int] = {}
        for lab, u, v in sorted(options):
            if lab == m:
                if v not in nxt:
                    parent[v] = u
                nxt[v] = nxt.get(v, 0) + frontier[u]
        frontier = nxt
    ties = len(frontier) != 1 or frontier.get(y, 0) != 1
    c = [y]
    while parent[c[-1]] is not None:
        c.append(parent[c[-1]])
    return tuple(reversed(c)), ties


def verify_el_exhaustive(L: DistLattice, lam: EdgeLabeling) -> ELVerdict:
    """Same verdict as :func:`verify_el` by listing every chain of every interval."""
    n = len(L)
    for x in range(n):
        for y in range(x + 1, n):
            if not L.leq(x, y):
                continue
            words = [lam.of_chain(c) for c in L.maximal_chains(x, y)]
            inc = [w for w in words if all(w[k] <= w[k + 1] for k in range(len(w) - 1))]
            if len(inc) != 1:
                return ELVerdict(False, (x, y), f"{len(inc)} weakly increasing chains")
            if sum(1 for w in words if w <= inc[0]) != 1:
                return ELVerdict(False, (x, y), "increasing chain is not strictly least")
    return ELVerdict(True)


def max_descent_cardinality(L: DistLattice, lam: EdgeLabeling) -> tuple[int, Chain]:
    """Largest descent count over maximal chains, with the lexicographically
    smallest (by element index) witness chain."""
    if len(L) == 1:
        return 0, (L.bottom,)
    best: dict[tuple[int, int], int] = {}
    for x in reversed(range(len(L))):
        for y in L.upper_covers[x]:
            if y == L.top:
                best[x, y] = 0
            else:
                lab = lam[x, y]
                best[x, y] = max((lab > lam[y, z]) + best[y, z] for z in L.upper_covers[y])
    value = max(best[L.bottom, y] for y in L.upper_covers[L.bottom])
    chain = [L.bottom]
    y = next(y for y in L.upper_covers[L.bottom] if best[L.bottom, y] == value)
    chain.append(y)
    while y != L.top:
        x = chain[-2]
        z = next(z for z in L.upper_covers[y] if (lam[x, y] > lam[y, z]) + best[y, z] == best[x, y])
        chain.append(z)
        y = z
    return value, tuple(chain)


@dataclass(frozen=True)
class Square:
    """``a -> b -> d`` and ``a -> c -> d`` with ``b`` right of ``a`` and ``c`` above it."""

    a: int
    b: int
    c: int
    d: int

    @property
    def bottom(self) -> int:
        return self.a

    @property
    def top(self) -> int:
        return self.d

    def elements(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class CyclicSublattice:
    squares: tuple[Square, ...]
    connectors: tuple[Chain, ...]

    def __len__(self):
        return len(self.squares)

    def elements(self) -> frozenset[int]:
        out = set()
        for s in self.squares:
            out.update(s.elements())
        for c in self.connectors:
            out.update(c)
        return frozenset(out)

    def is_sublattice_of(self, L: DistLattice) -> bool:
        els = self.elements()
        return all(L.join(a, b) in els and L.meet(a, b) in els for a in els for b in els)


def find_squares(L: DistLattice, emb: PlanarEmbedding) -> list[Square]:
    out = []
    for a, (i, j) in enumerate(emb.coord):
        b, c, d = emb.element(i + 1, j), emb.element(i, j + 1), emb.element(i + 1, j + 1)
        if b is not None and c is not None and d is not None:
            out.append(Square(a, b, c, d))
    return out


def _connector(L, emb, x, y) -> Chain:
    """Saturated chain from ``x`` up to ``y`` (vertical steps preferred)."""
    ti, tj = emb.coord[y]
    out = [x]
    while out[-1] != y:
        i, j = emb.coord[out[-1]]
        nxt = emb.element(i, j + 1) if j + 1 <= tj else None
        if nxt is None and i + 1 <= ti:
            nxt = emb.element(i + 1, j)
        if nxt is None:
            raise EmbeddingError(f"no saturated connector {L.name(x)} -> {L.name(y)}")
        out.append(nxt)
    return tuple(out)


def max_cyclic_squares(L: DistLattice, emb: PlanarEmbedding) -> tuple[int, CyclicSublattice]:
    """Longest sequence of squares, each starting at or above the previous top."""
    sq = find_squares(L, emb)
    sq.sort(key=lambda s: (sum(emb.coord[s.a]), s.a))
    if not sq:
        return 0, CyclicSublattice((), ())
    length = [1] * len(sq)
    prev: list[int | None] = [None] * len(sq)
    for k, s in enumerate(sq):
        bi, bj = emb.coord[s.a]
        for m in range(k):
            ti, tj = emb.coord[sq[m].d]
            if ti <= bi and tj <= bj and length[m] + 1 > length[k]:
                length[k] = length[m] + 1
                prev[k] = m
    k = max(range(len(sq)), key=lambda k: (length[k], -k))
    picked = []
    while k is not None:
        picked.append(sq[k])
        k = prev[k]
    picked.reverse()
    connectors = tuple(_connector(L, emb, picked[t].d, picked[t + 1].a) for t in range(len(picked) - 1))
    return len(picked), CyclicSublattice(tuple(picked), connectors)


def cyclic_from_chain(L: DistLattice, emb: PlanarEmbedding, lam: EdgeLabeling, c: Sequence[int]) -> CyclicSublattice:
    """Cyclic sublattice with one square per descent of the maximal chain ``c``."""
    squares = []
    for t in sorted(chain_descents(c, lam)):
        if classify_corner(c, t, emb) != LOWER_CORNER:
            raise EmbeddingError(f"descent at position {t} is not a lower corner")
        i, j = emb.coord[c[t - 1]]
        x = emb.element(i, j + 1)
        if x is None:
            raise EmbeddingError(f"replacement vertex ({i}, {j + 1}) is not in the lattice")
        squares.append((t, Square(c[t - 1], c[t], x, c[t + 1])))
    connectors = tuple(tuple(c[s1 + 1:s2]) for (s1, _), (s2, _) in zip(squares, squares[1:]))
    return CyclicSublattice(tuple(s for _, s in squares), connectors)
