"""Command-line interface: ``hibireg {reg,hvector,verify,export,sweep}``.

Exit codes: 0 success, 1 a theorem check failed, 2 usage/parse/budget error.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import __version__
from .builtins import builtin_poset
from .engine import Budget, SweepFailure, TheoremViolation, has_linear_resolution, regularity, sweep_corpus
from .errors import CapExceeded, HibiregError
from .export import DIALECTS, UnsupportedDialect, write_exports
from .hilbert import f_vector, flag_beta, h_from_beta, h_from_f
from .lattice import birkhoff
from .planar import (
    NotPlanar,
    build_labeling,
    chain_descents,
    max_cyclic_squares,
    max_descent_cardinality,
    try_embed,
    upper_chain,
    verify_el,
)
from .poset import parse_poset

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SWEEP_SIZE = 8


class UsageError(Exception):
    pass


def _load(args):
    if args.builtin and args.input:
        raise UsageError("give either --input or --builtin, not both")
    if args.builtin:
        try:
            return builtin_poset(args.builtin), re.sub(r"[^A-Za-z0-9]+", "-", args.builtin).strip("-")
        except ValueError as exc:
            raise UsageError(str(exc))
    if not args.input:
        raise UsageError("an input poset is required (--input PATH, --input -, or --builtin NAME)")
    if args.input == "-":
        return parse_poset(sys.stdin.read()), "stdin"
    path = Path(args.input)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    return parse_poset(text), path.stem


def _budget(args):
    try:
        return Budget(max_extensions=args.budget)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_reg(args, out) -> int:
    P, _ = _load(args)
    L = birkhoff(P, _budget(args).max_lattice)
    rep = regularity(L, _budget(args))
    lin = has_linear_resolution(L)
    if args.format == "records":
        out.write("\n".join(rep.to_records()) + "\n")
        out.write(f"linear_resolution={int(lin.result)}\n")
        return EXIT_OK
    if rep.value is None:
        out.write("*** bounds-only: enumeration budget exhausted ***\n")
    out.write(rep.to_text())
    out.write(f"linear resolution: {'yes' if lin else 'no'} ({lin.reason})\n")
    return EXIT_OK


def cmd_hvector(args, out) -> int:
    P, _ = _load(args)
    budget = _budget(args)
    L = birkhoff(P, budget.max_lattice)
    fb = flag_beta(P, budget.max_extensions)
    hb = h_from_beta(fb)
    hf = h_from_f(f_vector(L, budget.max_extensions))
    agree = hb == hf
    if args.format == "records":
        out.write(f"h_beta={' '.join(map(str, hb.h))}\n")
        out.write(f"h_f={' '.join(map(str, hf.h))}\n")
        out.write(f"agree={int(agree)}\ndegree={hb.degree}\n")
        out.write(fb.serialize())
    elif agree:
        out.write(f"{hb.serialize()} (both paths agree)\n")
        out.write(f"deg h = {hb.degree} = reg R(L)\n")
    else:
        out.write(f"MISMATCH: descent route {hb.serialize()}, face route {hf.serialize()}\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, out) -> int:
    P, _ = _load(args)
    budget = _budget(args)
    L = birkhoff(P, budget.max_lattice)
    emb = try_embed(L)
    if isinstance(emb, NotPlanar):
        from .engine import nonplanar_bounds
        lo, hi = nonplanar_bounds(P)
        out.write(f"not planar; witness antichain {{{','.join(emb.names)}}}; bounds ({lo},{hi})\n")
        return EXIT_OK
    lam = build_labeling(L, emb)
    checks = []
    el = verify_el(L, lam)
    checks.append(("EL-labeling", el.ok, el.reason))
    c0 = upper_chain(L, emb)
    n_chains = L.count_maximal_chains()
    if n_chains <= budget.max_extensions:
        free = [c for c in L.maximal_chains() if not chain_descents(c, lam)]
        checks.append(("unique descent-free chain is c0", free == [c0], f"{len(free)} descent-free chains"))
    desc, _ = max_descent_cardinality(L, lam)
    sq, _ = max_cyclic_squares(L, emb)
    deg = h_from_beta(flag_beta(P, budget.max_extensions)).degree
    checks.append(("squares = descents = deg h", sq == desc == deg, f"{sq} / {desc} / {deg}"))
    ok = all(c[1] for c in checks)
    for name, passed, detail in checks:
        out.write(f"{'PASS' if passed else 'FAIL'} {name}" + (f" ({detail})" if detail and not passed else "") + "\n")
    out.write(f"max descents {desc}, max cyclic squares {sq}, deg h {deg}\n")
    out.write("all checks pass\n" if ok else "theorem check FAILED\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args, out) -> int:
    P, stem = _load(args)
    L = birkhoff(P, _budget(args).max_lattice)
    emb = try_embed(L)
    lam = None
    if isinstance(emb, NotPlanar):
        emb = None
    else:
        lam = build_labeling(L, emb)
    try:
        paths = write_exports(L, args.out, stem or "lattice", args.dialect, emb, lam)
    except OSError as exc:
        raise UsageError(f"cannot write to {args.out}: {exc}")
    for p in paths:
        out.write(f"{p}\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if not 1 <= args.size <= MAX_SWEEP_SIZE:
        raise UsageError(f"--size must be between 1 and {MAX_SWEEP_SIZE}")
    summary = sweep_corpus(args.size, _budget(args))
    out.write(summary.to_records() if args.format == "records" else summary.to_text())
    return EXIT_OK if summary.failures == 0 else EXIT_FAIL


COMMANDS = {
    "reg": cmd_reg,
    "hvector": cmd_hvector,
    "verify": cmd_verify,
    "export": cmd_export,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="poset file, or - for stdin")
    common.add_argument("--builtin", metavar="NAME",
                        help='named fixture, e.g. "antichain 4", "grid 2x3", "cyclic 3:1", example-nonplanar')
    common.add_argument("--budget", type=int, default=Budget().max_extensions,
                        help="cap on enumerated linear extensions / chains")
    common.add_argument("--format", choices=("text", "records"), default="text")

    parser = argparse.ArgumentParser(prog="hibireg", description="Regularity of Hibi rings of distributive lattices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("reg", parents=[common], help="regularity report")
    sub.add_parser("hvector", parents=[common], help="h-vector by both routes")
    sub.add_parser("verify", parents=[common], help="planar EL-labeling checks")
    p = sub.add_parser("export", parents=[common], help="write CAS script and Hasse graph")
    p.add_argument("--dialect", default="generic", choices=sorted(DIALECTS))
    p.add_argument("--out", default=".", help="output directory")
    p = sub.add_parser("sweep", parents=[common], help="check every route on the poset census")
    p.add_argument("--size", type=int, default=5)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (TheoremViolation, SweepFailure) as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, UnsupportedDialect, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HibiregError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
