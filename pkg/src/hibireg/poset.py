"""Finite posets, linear extensions, descent sets and widths.

Elements are dense indices ``0..n-1``; the original names are kept only for
display and serialization.  Order relations are stored as integer bitmasks
(``down[i]`` has bit ``j`` set iff ``j < i``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import islice
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, DuplicateElementError, PosetSyntaxError

__all__ = [
    "Poset",
    "NaturalLabeling",
    "parse_poset",
    "linear_extensions",
    "count_linear_extensions",
    "canonical_extension",
    "canonical_labeling",
    "descent_set",
    "max_antichain",
    "max_antichain_size",
    "natural_labelings_sample",
    "bits",
    "down_sets",
]

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Poset:
    """An immutable finite partial order.

    ``relations`` are pairs ``(a, b)`` of indices meaning ``a < b``; the
    transitive closure is taken.  Raises :class:`CycleError` if the closure
    is not antisymmetric.
    """

    def __init__(self, names: Sequence[str], relations: Iterable[tuple[int, int]] = (),
                 *, allow_empty: bool = False):
        names = tuple(str(x) for x in names)
        n = len(names)
        if n < 1 and not allow_empty:
            raise ValueError("a poset needs at least one element")
        if len(set(names)) != n:
            raise DuplicateElementError(f"duplicate element names in {names!r}")
        up = [0] * n
        for a, b in relations:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"relation ({a}, {b}) out of range for n={n}")
            if a == b:
                raise CycleError(f"{names[a]} < {names[a]} is not a strict order")
            up[a] |= 1 << b
        # Warshall on bitmasks
        for k in range(n):
            kb = 1 << k
            uk = up[k]
            for i in range(n):
                if up[i] & kb:
                    up[i] |= uk
        for i in range(n):
            if up[i] >> i & 1:
                raise CycleError(f"relation has a cycle through {names[i]}")
        down = [0] * n
        for a in range(n):
            for b in bits(up[a]):
                down[b] |= 1 << a
        self.names = names
        self.n = n
        self.up = tuple(up)
        self.down = tuple(down)
        self._index = {x: i for i, x in enumerate(names)}

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Poset({self.serialize()!r})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self):
        return hash((self.names, self.up))

    def index(self, name: str) -> int:
        return self._index[name]

    def lt(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def le(self, a: int, b: int) -> bool:
        return a == b or self.lt(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.lt(a, b) or self.lt(b, a)

    @cached_property
    def order(self) -> tuple[tuple[bool, ...], ...]:
        """Reflexive ``n x n`` comparability table: ``order[a][b]`` iff ``a <= b``."""
        return tuple(tuple(self.le(a, b) for b in range(self.n)) for a in range(self.n))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction as sorted pairs ``(a, b)`` with ``b`` covering ``a``."""
        out = []
        for a in range(self.n):
            for b in bits(self.up[a]):
                if not (self.up[a] & self.down[b]):
                    out.append((a, b))
        return tuple(sorted(out))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def minimal_in(self, mask: int) -> list[int]:
        """Elements of ``mask`` with nothing of ``mask`` strictly below them."""
        return [i for i in bits(mask) if not (self.down[i] & mask)]

    def is_chain(self) -> bool:
        return all(self.comparable(a, b) for a in range(self.n) for b in range(a))

    def is_antichain(self) -> bool:
        return not any(self.up)

    def subposet(self, indices: Iterable[int]) -> "Poset":
        """Induced subposet on ``indices`` (kept in increasing index order)."""
        idx = sorted(set(indices))
        pos = {v: k for k, v in enumerate(idx)}
        rel = [(pos[a], pos[b]) for a in idx for b in bits(self.up[a]) if b in pos]
        return Poset([self.names[i] for i in idx], rel, allow_empty=True)

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Poset with element ``perm[i]`` of self placed at index ``i``."""
        pos = {v: k for k, v in enumerate(perm)}
        rel = [(pos[a], pos[b]) for a, b in self.covers]
        return Poset([self.names[i] for i in perm], rel)

    def serialize(self) -> str:
        """Text in the poset grammar: every element in index order, then covers,
        so that parsing the text restores the same indices."""
        parts = list(self.names)
        parts += [f"{self.names[a]}<{self.names[b]}" for a, b in self.covers]
        return "; ".join(parts)

    # -- constructors --------------------------------------------------
    @classmethod
    def chain(cls, n: int, prefix: str = "p") -> "Poset":
        return cls([f"{prefix}{i + 1}" for i in range(n)], [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int, prefix: str = "p") -> "Poset":
        return cls([f"{prefix}{i + 1}" for i in range(n)])

    @classmethod
    def from_masks(cls, up: Sequence[int], names: Sequence[str] | None = None) -> "Poset":
        n = len(up)
        if names is None:
            names = [f"p{i + 1}" for i in range(n)]
        return cls(names, [(a, b) for a in range(n) for b in bits(up[a])])

    def disjoint_union(self, other: "Poset") -> "Poset":
        k = self.n
        rel = list(self.covers) + [(a + k, b + k) for a, b in other.covers]
        return Poset(_fresh_names(self.n + other.n), rel)

    def ordinal_sum(self, other: "Poset") -> "Poset":
        """Every element of ``self`` below every element of ``other``."""
        k = self.n
        rel = list(self.covers) + [(a + k, b + k) for a, b in other.covers]
        rel += [(a, k + b) for a in range(k) for b in range(other.n)]
        return Poset(_fresh_names(self.n + other.n), rel)


def _fresh_names(n):
    return [f"p{i + 1}" for i in range(n)]


# -- parsing --------------------------------------------------------------

def parse_poset(text: str) -> Poset:
    """Parse the line/semicolon based poset grammar.

    >>> parse_poset("p1<p4; p2<p4; p2<p5; p3<p5").covers
    ((0, 1), (2, 1), (2, 3), (4, 3))
    """
    names: list[str] = []
    index: dict[str, int] = {}
    declared: set[str] = set()
    relations: list[tuple[int, int]] = []

    def intern(name, lineno):
        if not _NAME.match(name):
            raise PosetSyntaxError(f"bad element name {name!r}", lineno)
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            if "<" in stmt:
                parts = [s.strip() for s in stmt.split("<")]
                if len(parts) != 2 or not all(parts):
                    raise PosetSyntaxError(f"malformed relation {stmt!r}", lineno)
                a, b = (intern(x, lineno) for x in parts)
                if a == b:
                    raise CycleError(f"{parts[0]} < {parts[1]} is not a strict order")
                relations.append((a, b))
            else:
                if stmt in declared:
                    raise DuplicateElementError(f"line {lineno}: element {stmt!r} declared twice")
                declared.add(stmt)
                intern(stmt, lineno)
    if not names:
        raise PosetSyntaxError("empty poset description")
    return Poset(names, relations)


# -- linear extensions and descents ---------------------------------------

def linear_extensions(P: Poset) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension once, backtracking over minimal elements
    in index order (so the first one yielded is the canonical extension)."""
    n = P.n
    down = P.down
    seq = [0] * n

    def rec(depth, placed):
        if depth == n:
            yield tuple(seq)
            return
        for i in range(n):
            if not (placed >> i & 1) and (down[i] & ~placed) == 0:
                seq[depth] = i
                yield from rec(depth + 1, placed | 1 << i)

    yield from rec(0, 0)


def count_linear_extensions(P: Poset) -> int:
    """Number of linear extensions by dynamic programming over down-sets."""
    memo = {P.full_mask: 1}
    down = P.down

    def rec(placed):
        if placed in memo:
            return memo[placed]
        total = 0
        for i in range(P.n):
            if not (placed >> i & 1) and (down[i] & ~placed) == 0:
                total += rec(placed | 1 << i)
        memo[placed] = total
        return total

    return rec(0)


@dataclass(frozen=True)
class NaturalLabeling:
    """Order-preserving bijection ``element -> 1..n`` (``label[i]`` for element ``i``)."""

    label: tuple[int, ...]

    @classmethod
    def from_extension(cls, ext: Sequence[int]) -> "NaturalLabeling":
        label = [0] * len(ext)
        for pos, e in enumerate(ext):
            label[e] = pos + 1
        return cls(tuple(label))

    def is_natural_for(self, P: Poset) -> bool:
        if sorted(self.label) != list(range(1, P.n + 1)):
            return False
        return all(self.label[a] < self.label[b] for a, b in P.covers)

    def __len__(self):
        return len(self.label)


def canonical_extension(P: Poset) -> tuple[int, ...]:
    """Linear extension obtained by always removing the smallest-index minimal element."""
    return next(linear_extensions(P))


def canonical_labeling(P: Poset) -> NaturalLabeling:
    return NaturalLabeling.from_extension(canonical_extension(P))


def descent_set(ext: Sequence[int], lab: NaturalLabeling) -> frozenset[int]:
    """1-based positions ``i`` with ``lab(ext[i-1]) > lab(ext[i])``."""
    if len(ext) != len(lab):
        raise ValueError(f"extension of length {len(ext)} vs labeling of size {len(lab)}")
    w = [lab.label[e] for e in ext]
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def natural_labelings_sample(P: Poset, k: int) -> list[NaturalLabeling]:
    """Up to ``k`` distinct natural labelings, the canonical one first."""
    if k < 1:
        raise ValueError("k must be positive")
    return [NaturalLabeling.from_extension(e) for e in islice(linear_extensions(P), k)]


def down_sets(P: Poset) -> Iterator[int]:
    """Yield every down-set of ``P`` as a bitmask (deterministic order)."""
    order = canonical_extension(P)
    n = P.n
    down = P.down

    def rec(k, mask):
        if k == n:
            yield mask
            return
        yield from rec(k + 1, mask)
        e = order[k]
        if down[e] & ~mask == 0:
            yield from rec(k + 1, mask | 1 << e)

    yield from rec(0, 0)


# -- antichains -----------------------------------------------------------

def max_antichain(P: Poset) -> tuple[int, ...]:
    """A maximum antichain, found by branch and bound on the incomparability
    graph.  Among maximum antichains the lexicographically smallest is returned."""
    n = P.n
    incomp = [P.full_mask & ~(P.up[i] | P.down[i] | 1 << i) for i in range(n)]
    best: list[int] = []

    def rec(current, cand):
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = list(current)
            return
        if len(current) + bin(cand).count("1") <= len(best):
            return
        v = (cand & -cand).bit_length() - 1
        current.append(v)
        rec(current, cand & incomp[v] & ~((1 << (v + 1)) - 1))
        current.pop()
        rec(current, cand & ~(1 << v))

    rec([], P.full_mask)
    return tuple(best)


def max_antichain_size(P: Poset) -> int:
    return len(max_antichain(P))
