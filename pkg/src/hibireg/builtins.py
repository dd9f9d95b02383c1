"""Named fixture posets usable from the command line.

``chain N``, ``antichain N`` / ``boolean N``, ``grid AxB`` (the A x B grid
lattice), ``cyclic R[:L]`` (R squares joined by connectors of L edges) and
``example-nonplanar`` (the 5-element poset whose lattice has reg 3 strictly
inside its bounds).
"""
from __future__ import annotations

import re

from .poset import Poset, parse_poset

__all__ = ["example_poset", "grid_poset", "cyclic_poset", "builtin_poset", "BUILTIN_NAMES"]

BUILTIN_NAMES = ("chain", "antichain", "boolean", "grid", "cyclic", "example-nonplanar")


def example_poset() -> Poset:
    return parse_poset("p1; p2; p3; p4; p5\np1<p4; p2<p4; p2<p5; p3<p5")


def grid_poset(a: int, b: int) -> Poset:
    """Join-irreducibles of the ``a x b`` grid lattice: chains of a-1 and b-1."""
    if a < 1 or b < 1:
        raise ValueError("grid sides must be positive")
    names = [f"a{i + 1}" for i in range(a - 1)] + [f"b{i + 1}" for i in range(b - 1)]
    rel = [(i, i + 1) for i in range(a - 2)]
    rel += [(a - 1 + i, a + i) for i in range(b - 2)]
    if not names:
        raise ValueError("the 1 x 1 grid has no join-irreducibles")
    return Poset(names, rel)


def cyclic_poset(squares, connectors=0) -> Poset:
    """Poset whose lattice is a staircase of squares.

    Each square is a 2-antichain; consecutive squares are separated by a
    chain of ``connectors[k]`` elements (an int applies to every gap).
    """
    if squares < 1:
        raise ValueError("need at least one square")
    if isinstance(connectors, int):
        connectors = [connectors] * (squares - 1)
    if len(connectors) != squares - 1:
        raise ValueError("need one connector length per gap")
    levels: list[list[str]] = []
    for k in range(squares):
        levels.append([f"s{k + 1}a", f"s{k + 1}b"])
        if k < squares - 1:
            levels.extend([f"c{k + 1}_{m + 1}"] for m in range(connectors[k]))
    names = [x for lv in levels for x in lv]
    pos = {x: i for i, x in enumerate(names)}
    rel = [(pos[x], pos[y]) for lo, hi in zip(levels, levels[1:]) for x in lo for y in hi]
    return Poset(names, rel)


_BUILTIN_RE = re.compile(r"\s*([a-z]+(?:-[a-z]+)*)(?:[\s:=-]+(\S+))?\s*\Z")


def builtin_poset(text: str) -> Poset:
    """Resolve a builtin name such as ``"antichain 4"`` or ``"grid 2x3"``."""
    m = _BUILTIN_RE.match(text.lower())
    if not m:
        raise ValueError(f"unknown builtin {text!r}")
    name, arg = m.groups()
    if name == "example-nonplanar":
        return example_poset()
    if arg is None:
        raise ValueError(f"builtin {name!r} needs an argument")
    if name == "chain":
        return Poset.chain(int(arg))
    if name in ("antichain", "boolean"):
        return Poset.antichain(int(arg))
    if name == "grid":
        a, b = (int(x) for x in arg.split("x"))
        return grid_poset(a, b)
    if name == "cyclic":
        r, _, c = arg.partition(":")
        return cyclic_poset(int(r), int(c or 0))
    raise ValueError(f"unknown builtin {text!r}; choose from {', '.join(BUILTIN_NAMES)}")
