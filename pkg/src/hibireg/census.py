"""Canonical forms of posets and the census of non-isomorphic posets.

The canonical form uses colour refinement followed by individualisation of
one vertex per twin class.  Twins (elements with equal strict up- and
down-sets) are interchangeable by an automorphism, so only one of them needs
to be individualised, which keeps antichain-heavy posets cheap.
"""
from __future__ import annotations

from typing import Iterator

from .poset import Poset, bits, down_sets, max_antichain_size

__all__ = [
    "canonical_form",
    "canonical_order",
    "canonical_poset",
    "is_isomorphic",
    "nonisomorphic_posets",
    "iter_census",
]


def _refine(colors, up, down):
    n = len(colors)
    while True:
        sigs = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in bits(down[i]))),
                tuple(sorted(colors[j] for j in bits(up[i]))),
            )
            for i in range(n)
        ]
        rank = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _encode(perm, up):
    pos = {v: k for k, v in enumerate(perm)}
    out = []
    for v in perm:
        m = 0
        for w in bits(up[v]):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def _search(P: Poset):
    """Return ``(encoding, perm)`` of the least leaf of the search tree."""
    n, up, down = P.n, P.up, P.down
    twin = [(down[i], up[i]) for i in range(n)]
    init = [(bin(down[i]).count("1"), bin(up[i]).count("1")) for i in range(n)]
    rank = {s: k for k, s in enumerate(sorted(set(init)))}
    colors = _refine([rank[s] for s in init], up, down)
    best = None

    def rec(colors):
        nonlocal best
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            cell = cells[c]
            if len(cell) > 1 and len({twin[i] for i in cell}) > 1:
                target = cell
                break
        if target is None:
            perm = sorted(range(n), key=lambda i: (colors[i], i))
            enc = _encode(perm, up)
            if best is None or enc < best[0]:
                best = (enc, perm)
            return
        seen = set()
        for v in target:
            if twin[v] in seen:
                continue
            seen.add(twin[v])
            # doubling keeps the old colour order; the individualised vertex
            # sorts before the rest of its cell
            split = [2 * c + (0 if i == v or c != colors[v] else 1) for i, c in enumerate(colors)]
            rec(_refine(split, up, down))

    rec(colors)
    return best


def canonical_form(P: Poset) -> tuple[int, tuple[int, ...]]:
    """Isomorphism invariant that determines ``P`` up to isomorphism."""
    enc, _ = _search(P)
    return P.n, enc


def canonical_order(P: Poset) -> list[int]:
    """Element order realising :func:`canonical_form`."""
    return _search(P)[1]


def canonical_poset(P: Poset) -> Poset:
    """The canonical representative with fresh names ``p1..pn``."""
    _, enc = canonical_form(P)
    return Poset.from_masks(enc)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    return P.n == Q.n and canonical_form(P) == canonical_form(Q)


def _extend(Q: Poset) -> Iterator[Poset]:
    """All one-element extensions of ``Q`` by a new maximal element."""
    n = Q.n
    for D in down_sets(Q):
        up = list(Q.up) + [0]
        for j in bits(D):
            up[j] |= 1 << n
        yield Poset.from_masks(up)


def iter_census(max_size: int, max_width: int | None = None) -> Iterator[tuple[int, list[Poset]]]:
    """Yield ``(size, posets)`` for sizes ``1..max_size``.

    Every poset of size k+1 arises from one of size k by adding a maximal
    element; duplicates are removed by canonical form.  The width bound is
    hereditary under deleting a maximal element, so filtering while growing
    loses nothing.  Each level is sorted by canonical form.
    """
    if max_size < 1:
        return
    level = [canonical_poset(Poset.antichain(1))]
    yield 1, level
    for size in range(2, max_size + 1):
        found: dict[tuple, Poset] = {}
        for Q in level:
            for R in _extend(Q):
                if max_width is not None and max_antichain_size(R) > max_width:
                    continue
                key = canonical_form(R)
                if key not in found:
                    found[key] = Poset.from_masks(key[1])
        level = [found[k] for k in sorted(found)]
        yield size, level


def nonisomorphic_posets(size: int, max_width: int | None = None) -> list[Poset]:
    """All posets with exactly ``size`` elements up to isomorphism."""
    out: list[Poset] = []
    for k, level in iter_census(size, max_width):
        if k == size:
            out = level
    return out
