"""Regularity of Hibi rings: dispatch, bounds, certificates and the
theorem-verification sweep over the poset census."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .builtins import example_poset
from .census import canonical_form, iter_census
from .errors import HibiregError
from .hilbert import (
    DEFAULT_ENUM_CAP,
    f_vector,
    flag_beta,
    h_from_beta,
    h_from_f,
    max_descent_extension,
)
from .lattice import DEFAULT_SIZE_CAP, DistLattice, birkhoff, decompose
from .planar import (
    NotPlanar,
    build_labeling,
    max_cyclic_squares,
    max_descent_cardinality,
    try_embed,
)
from .poset import Poset, count_linear_extensions, max_antichain, max_antichain_size

__all__ = [
    "Budget",
    "RegularityReport",
    "BlockEntry",
    "LinearResolution",
    "SweepRow",
    "SweepSummary",
    "SweepFailure",
    "TheoremViolation",
    "regularity",
    "nonplanar_bounds",
    "boolean_regularity",
    "cyclic_regularity",
    "has_linear_resolution",
    "sweep_corpus",
    "check_poset",
    "METHODS",
]

PLANAR = "planar-formula"
HVECTOR = "h-vector"
BOUNDS = "bounds-only"
BOOLEAN = "boolean-closed-form"
ADDITIVE = "additive-composition"
METHODS = (PLANAR, HVECTOR, BOUNDS, BOOLEAN, ADDITIVE)


class TheoremViolation(HibiregError):
    """Two routes that must agree produced different answers."""


@dataclass(frozen=True)
class Budget:
    max_extensions: int = DEFAULT_ENUM_CAP
    max_lattice: int = DEFAULT_SIZE_CAP

    def __post_init__(self):
        if self.max_extensions < 1 or self.max_lattice < 1:
            raise ValueError("budget caps must be positive")


@dataclass
class BlockEntry:
    """One piece of the cut-edge decomposition; ``report`` is None for points."""

    lower: str
    upper: str
    report: "RegularityReport | None"


@dataclass
class RegularityReport:
    value: int | None
    lower_bound: int
    upper_bound: int
    method: str
    certificates: dict = field(default_factory=dict)
    blocks: list[BlockEntry] = field(default_factory=list)
    poset: str = ""

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise ValueError("lower bound exceeds upper bound")
        if self.value is not None and not self.lower_bound <= self.value <= self.upper_bound:
            raise TheoremViolation(
                f"value {self.value} outside bounds [{self.lower_bound}, {self.upper_bound}]")

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "method": self.method,
            "poset": self.poset,
            "certificates": self.certificates,
            "blocks": [
                {"lower": b.lower, "upper": b.upper,
                 "report": b.report.to_dict() if b.report else None}
                for b in self.blocks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_records(self, prefix: str = "") -> list[str]:
        out = [
            f"{prefix}value={'' if self.value is None else self.value}",
            f"{prefix}lower_bound={self.lower_bound}",
            f"{prefix}upper_bound={self.upper_bound}",
            f"{prefix}method={self.method}",
        ]
        for k in sorted(self.certificates):
            out.append(f"{prefix}certificate.{k}={_flat(self.certificates[k])}")
        for n, b in enumerate(self.blocks):
            p = f"{prefix}block.{n}."
            out.append(f"{p}span={b.lower}..{b.upper}")
            if b.report is None:
                out.append(f"{p}degenerate=1")
            else:
                out.extend(b.report.to_records(p))
        return out

    def to_text(self) -> str:
        lines = []
        if self.value is None:
            lines.append(f"bounds-only: reg in [{self.lower_bound}, {self.upper_bound}]")
        else:
            lines.append(f"value: {self.value}, bounds: [{self.lower_bound}, {self.upper_bound}]")
        lines.append(f"method: {self.method}")
        if self.value is not None:
            lines.append(f"value: {self.value} ({self.method})")
        for k in sorted(self.certificates):
            lines.append(f"  {k}: {_flat(self.certificates[k])}")
        for b in self.blocks:
            if b.report is None:
                continue
            r = b.report
            v = "?" if r.value is None else r.value
            lines.append(f"  block {b.lower}..{b.upper}: value {v} [{r.lower_bound}, {r.upper_bound}] ({r.method})")
        return "\n".join(lines) + "\n"


def _flat(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_flat(x) if isinstance(x, (list, tuple)) else str(x) for x in v)
    return str(v)


# -- closed forms and bounds ------------------------------------------------

def nonplanar_bounds(P: Poset) -> tuple[int, int]:
    """``(width - 1, |P| - 1)``."""
    if P.n == 0:
        return 0, 0
    return max_antichain_size(P) - 1, P.n - 1


def boolean_regularity(n: int) -> int:
    if n < 1:
        raise ValueError("Boolean lattice rank must be positive")
    return n - 1


def cyclic_regularity(r: int) -> int:
    if r < 0:
        raise ValueError("square count must be nonnegative")
    return r


# -- dispatcher ---------------------------------------------------------------

def _hvector_degree(P: Poset, budget: Budget):
    h = h_from_beta(flag_beta(P, budget.max_extensions))
    return h.degree


def _block_report(L: DistLattice, budget: Budget, verify: bool) -> RegularityReport:
    P = L.base
    lo, hi = nonplanar_bounds(P)
    names = P.names
    if P.n == 0:
        return RegularityReport(0, 0, 0, PLANAR, poset="")
    anti = max_antichain(P)
    certs: dict = {"antichain": [names[p] for p in anti]}

    if P.is_antichain():
        value = boolean_regularity(P.n)
        certs["extension"] = list(reversed(names))
        if verify:
            _agree(value, _hvector_degree(P, budget), "boolean closed form", "h-vector", P)
        return RegularityReport(value, lo, hi, BOOLEAN, certs, poset=P.serialize())

    emb = try_embed(L)
    if not isinstance(emb, NotPlanar):
        value, cyc = max_cyclic_squares(L, emb)
        certs["squares"] = [[L.name(x) for x in s.elements()] for s in cyc.squares]
        certs["cyclic_sublattice"] = sorted(L.name(x) for x in cyc.elements())
        if verify:
            lam = build_labeling(L, emb)
            desc, chain = max_descent_cardinality(L, lam)
            _agree(value, desc, "cyclic squares", "max descents", P)
            _agree(value, _hvector_degree(P, budget), "cyclic squares", "h-vector", P)
            certs["chain"] = [L.name(x) for x in chain]
        return RegularityReport(value, lo, hi, PLANAR, certs, poset=P.serialize())

    if count_linear_extensions(P) <= budget.max_extensions:
        ext, dset = max_descent_extension(P, budget.max_extensions)
        value = _hvector_degree(P, budget)
        _agree(value, len(dset), "h-vector degree", "max descent extension", P)
        certs["extension"] = [names[p] for p in ext]
        certs["descents"] = sorted(dset)
        return RegularityReport(value, lo, hi, HVECTOR, certs, poset=P.serialize())
    return RegularityReport(None, lo, hi, BOUNDS, certs, poset=P.serialize())


def _agree(a, b, what_a, what_b, P):
    if a != b:
        raise TheoremViolation(f"{what_a} = {a} but {what_b} = {b} for poset {P.serialize()!r}")


def regularity(L: DistLattice, budget: Budget | None = None, verify: bool = False) -> RegularityReport:
    """Regularity of ``R(L)`` with certificates.

    Simple lattices are handled directly.  Otherwise ``L`` is split at its
    cut edges and the block values are added; a block that exhausts the
    budget contributes only its bounds.  With ``verify`` the closed forms and
    the planar formula are also cross-checked against the other routes.
    """
    budget = budget or Budget()
    segments = decompose(L)
    if len(segments) == 1:
        return _block_report(L, budget, verify)
    entries = []
    value, lo, hi = 0, 0, 0
    for s in segments:
        rep = None if s.degenerate else _block_report(s.block, budget, verify)
        entries.append(BlockEntry(L.name(s.lower), L.name(s.upper), rep))
        if rep is None:
            continue
        lo += rep.lower_bound
        hi += rep.upper_bound
        value = None if value is None or rep.value is None else value + rep.value
    return RegularityReport(value, lo, hi, ADDITIVE, {}, entries, poset=L.base.serialize())


# -- linear resolutions -------------------------------------------------------

@dataclass(frozen=True)
class LinearResolution:
    result: bool
    reason: str
    a: int | None = None

    def __bool__(self):
        return self.result


def _grid_parameter(P: Poset) -> int | None:
    """``a`` if ``P`` is a chain of ``a >= 1`` elements plus one isolated point."""
    if P.n < 2:
        return None
    isolated = [p for p in range(P.n) if not (P.up[p] | P.down[p])]
    for p in isolated:
        rest = P.subposet(q for q in range(P.n) if q != p)
        if rest.is_chain():
            return P.n - 1
    return None


def has_linear_resolution(L: DistLattice) -> LinearResolution:
    """Whether ``R(L)`` has a linear resolution, i.e. ``L`` is a 2 x (a+1) grid
    (possibly padded by cut-edge chains, which only add free variables)."""
    segs = decompose(L)
    blocks = [s for s in segs if not s.degenerate]
    if not blocks:
        extra = ""
        if len(L) == 2:
            extra = "; this is the divisor lattice of 2*3^0 (a = 0), linear only by convention"
        return LinearResolution(False, "no generators: I_L = 0, resolution is trivial (reg 0)" + extra)
    if len(blocks) > 1:
        return LinearResolution(False, f"{len(blocks)} nontrivial simple blocks force reg >= {len(blocks)}")
    B = blocks[0].block
    a = _grid_parameter(B.base)
    if a is not None:
        why = f"divisor lattice of 2*3^{a} (2 x {a + 1} grid)"
        if len(segs) > 1:
            why += " padded by cut edges"
        return LinearResolution(True, why, a)
    if max_antichain_size(B.base) >= 3:
        return LinearResolution(False, "three pairwise incomparable join-irreducibles force reg >= 2")
    emb = try_embed(B)
    r, _ = max_cyclic_squares(B, emb)
    return LinearResolution(False, f"planar with a cyclic sublattice of {r} squares: reg = {r} >= 2")


# -- census sweep ---------------------------------------------------------------

class SweepFailure(HibiregError):
    def __init__(self, message, poset: Poset):
        super().__init__(f"{message} [poset: {poset.serialize()}]")
        self.poset = poset


@dataclass(frozen=True)
class SweepRow:
    size: int
    posets: int
    planar: int
    nonplanar: int
    linear: int
    max_reg: int
    failures: int = 0

    def record(self) -> str:
        return (f"size={self.size} posets={self.posets} planar={self.planar} "
                f"nonplanar={self.nonplanar} linear={self.linear} max_reg={self.max_reg} "
                f"failures={self.failures}")


@dataclass
class SweepSummary:
    rows: list[SweepRow]
    example_checked: bool = False

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.rows)

    @property
    def total(self) -> int:
        return sum(r.posets for r in self.rows)

    def to_records(self) -> str:
        out = [r.record() for r in self.rows]
        out.append(f"total={self.total} failures={self.failures} "
                   f"example_checked={int(self.example_checked)}")
        return "\n".join(out) + "\n"

    def to_text(self) -> str:
        head = f"{'size':>4} {'posets':>7} {'planar':>7} {'nonplanar':>9} {'linear':>6} {'max reg':>7} {'failures':>8}"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            lines.append(f"{r.size:>4} {r.posets:>7} {r.planar:>7} {r.nonplanar:>9} "
                         f"{r.linear:>6} {r.max_reg:>7} {r.failures:>8}")
        lines.append(f"total {self.total} posets, {self.failures} failures")
        if self.example_checked:
            lines.append("example poset: reg 3 within bounds [2, 4]")
        return "\n".join(lines) + "\n"


def check_poset(P: Poset, budget: Budget | None = None) -> tuple[RegularityReport, LinearResolution, bool]:
    """Run every route on ``I(P)``; raise :class:`SweepFailure` on disagreement.

    Returns the report, the linear-resolution verdict and whether ``I(P)`` is planar.
    """
    budget = budget or Budget()
    L = birkhoff(P, budget.max_lattice)
    try:
        hb = h_from_beta(flag_beta(P, budget.max_extensions))
        hf = h_from_f(f_vector(L, budget.max_extensions))
        if hb != hf:
            raise SweepFailure(f"flag route {hb.h} != face route {hf.h}", P)
        rep = regularity(L, budget, verify=True)
    except TheoremViolation as exc:
        raise SweepFailure(str(exc), P) from exc
    if rep.value != hb.degree:
        raise SweepFailure(f"report value {rep.value} != deg h {hb.degree}", P)
    for b in rep.blocks:
        r = b.report
        if r is not None and r.value is not None and not r.lower_bound <= r.value <= r.upper_bound:
            raise SweepFailure("block value outside its bounds", P)
    if not rep.lower_bound <= hb.degree <= rep.upper_bound:
        raise SweepFailure("bounds do not bracket the exact value", P)
    lin = has_linear_resolution(L)
    expect = hb.degree == 1 and bool(L.incomparable_pairs())
    if lin.result != expect:
        raise SweepFailure(f"linear resolution verdict {lin.result} but reg = {hb.degree}", P)
    planar = max_antichain_size(P) <= 2
    return rep, lin, planar


def sweep_corpus(max_poset_size: int, budget: Budget | None = None,
                 max_width: int | None = None) -> SweepSummary:
    """Check every route on all non-isomorphic posets up to ``max_poset_size``."""
    if max_poset_size < 1:
        raise ValueError("max_poset_size must be positive")
    example_key = canonical_form(example_poset())
    rows = []
    example_checked = False
    for size, level in iter_census(max_poset_size, max_width):
        planar = nonplanar = linear = max_reg = 0
        for P in level:
            rep, lin, is_planar = check_poset(P, budget)
            planar += is_planar
            nonplanar += not is_planar
            linear += lin.result
            max_reg = max(max_reg, rep.value)
            if size == 5 and canonical_form(P) == example_key:
                if (rep.value, rep.lower_bound, rep.upper_bound) != (3, 2, 4):
                    raise SweepFailure("example poset does not give reg 3 in [2, 4]", P)
                example_checked = True
        rows.append(SweepRow(size, len(level), planar, nonplanar, linear, max_reg))
    return SweepSummary(rows, example_checked)
