"""Join-meet binomials, their squarefree initial ideal, and text exports:
computer-algebra scripts and Graphviz Hasse diagrams."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

from .errors import HibiregError
from .lattice import DistLattice
from .planar import EdgeLabeling, PlanarEmbedding

__all__ = [
    "BinomialGenerator",
    "MonomialGenerator",
    "UnsupportedDialect",
    "DIALECTS",
    "variable_order",
    "variable_name",
    "joinmeet_generators",
    "initial_ideal",
    "export_cas_script",
    "export_hasse_graph",
    "lattice_digest",
    "write_exports",
]


class UnsupportedDialect(HibiregError, ValueError):
    pass


@dataclass(frozen=True)
class BinomialGenerator:
    """``a*b - join*meet`` for an incomparable pair ``a < b`` (by index)."""

    a: int
    b: int
    join: int
    meet: int

    @property
    def positive(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def negative(self) -> tuple[int, int]:
        return (self.join, self.meet)


@dataclass(frozen=True)
class MonomialGenerator:
    a: int
    b: int


def variable_order(L: DistLattice) -> tuple[int, ...]:
    """Canonical element order; it is a linear extension of ``L``."""
    return tuple(range(len(L)))


def variable_name(L: DistLattice, x: int) -> str:
    return f"x_{L.var_suffix(x)}"


def joinmeet_generators(L: DistLattice) -> list[BinomialGenerator]:
    return [BinomialGenerator(a, b, L.join(a, b), L.meet(a, b)) for a, b in L.incomparable_pairs()]


def initial_ideal(L: DistLattice) -> list[MonomialGenerator]:
    return [MonomialGenerator(a, b) for a, b in L.incomparable_pairs()]


# -- CAS scripts ----------------------------------------------------------------

def _header(L, comment):
    order = " > ".join(variable_name(L, x) for x in variable_order(L))
    lines = [
        f"join-meet ideal of a distributive lattice: {len(L)} elements, rank {L.rank}",
        f"join-irreducibles: {L.base.serialize() or '(none)'}",
        f"variable order (reverse lexicographic): {order}",
    ]
    lines += [f"{variable_name(L, x)} = {L.name(x)}" for x in range(len(L))]
    return [f"{comment} {s}" for s in lines]


def _generic(L, gens):
    out = _header(L, "#")
    out.append("dialect: generic")
    out.append("ring: " + " ".join(variable_name(L, x) for x in variable_order(L)))
    out.append("order: revlex")
    out.append(f"generators: {len(gens)}")
    if not gens:
        out.append("# zero ideal: the lattice is a chain, so I_L = 0")
    v = lambda x: variable_name(L, x)  # noqa: E731
    for g in gens:
        out.append(f"{v(g.a)}*{v(g.b)} - {v(g.join)}*{v(g.meet)}")
    out.append("query: regularity R/I")
    return out


def _macaulay2(L, gens):
    out = _header(L, "--")
    out.append("-- variable x_k is element k in the listing above")
    out.append(f"R = QQ[x_0..x_{len(L) - 1}, MonomialOrder => GRevLex];")
    if gens:
        body = ",\n  ".join(f"x_{g.a}*x_{g.b} - x_{g.join}*x_{g.meet}" for g in gens)
        out.append(f"I = ideal(\n  {body});")
    else:
        out.append("-- zero ideal: the lattice is a chain, so I_L = 0")
        out.append("I = ideal(0_R);")
    out.append("-- reg R/I")
    out.append("print regularity comodule I;")
    return out


def _singular(L, gens):
    out = _header(L, "//")
    out.append("// variable x(k) is element k in the listing above")
    out.append(f"ring R = 0, (x(0..{len(L) - 1})), dp;")
    if gens:
        body = ",\n  ".join(f"x({g.a})*x({g.b}) - x({g.join})*x({g.meet})" for g in gens)
        out.append(f"ideal I =\n  {body};")
    else:
        out.append("// zero ideal: the lattice is a chain, so I_L = 0")
        out.append("ideal I = 0;")
    out.append("// regularity of the resolution of I is reg(I) = reg(R/I) + 1")
    out.append("resolution re = mres(I, 0);")
    out.append("print(regularity(re) - 1);")
    return out


DIALECTS = {
    "generic": (_generic, "cas.txt"),
    "macaulay2": (_macaulay2, "m2"),
    "singular": (_singular, "sing"),
}


def export_cas_script(L: DistLattice, dialect: str = "generic") -> str:
    try:
        render, _ = DIALECTS[dialect]
    except KeyError:
        raise UnsupportedDialect(f"unsupported dialect {dialect!r}; choose from {', '.join(DIALECTS)}")
    return "\n".join(render(L, joinmeet_generators(L))) + "\n"


# -- Hasse diagrams ---------------------------------------------------------------

def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse_graph(L: DistLattice, emb: PlanarEmbedding | None = None,
                       lam: EdgeLabeling | None = None) -> str:
    """Graphviz DOT text with one layer per rank.

    With an embedding, element ``(i, j)`` is pinned at ``(i - j, i + j)`` so
    the picture is the usual rotated grid; with a labeling, edges carry labels.
    """
    out = ["digraph hasse {", "  rankdir=BT;", "  node [shape=circle, fontsize=10];"]
    for x in range(len(L)):
        attrs = [f"label={_quote(L.name(x))}"]
        if emb is not None:
            i, j = emb.coord[x]
            attrs.append(f'pos="{i - j},{i + j}!"')
            attrs.append(f'coord="{i},{j}"')
        out.append(f"  n{x} [{', '.join(attrs)}];")
    for level in L.levels:
        out.append("  { rank=same; " + " ".join(f"n{x};" for x in level) + " }")
    for x, y in L.covers:
        extra = f" [label={_quote(str(lam[x, y]))}]" if lam is not None else ""
        out.append(f"  n{x} -> n{y}{extra};")
    out.append("}")
    return "\n".join(out) + "\n"


def lattice_digest(L: DistLattice) -> str:
    return hashlib.sha256(L.serialize().encode()).hexdigest()[:12]


def write_exports(L: DistLattice, out_dir, stem: str = "lattice", dialect: str = "generic",
                  emb: PlanarEmbedding | None = None, lam: EdgeLabeling | None = None,
                  script: bool = True, graph: bool = True) -> list[Path]:
    """Write the CAS script and/or DOT graph as ``<stem>-<digest>.<ext>``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    base = f"{stem}-{lattice_digest(L)}"
    paths = []
    if script:
        text = export_cas_script(L, dialect)
        p = out_dir / f"{base}.{DIALECTS[dialect][1]}"
        p.write_text(text)
        paths.append(p)
    if graph:
        p = out_dir / f"{base}.dot"
        p.write_text(export_hasse_graph(L, emb, lam))
        paths.append(p)
    return paths
