"""Acceptance suite: one test per criterion, each with its own time limit.

Every test records a PASS/FAIL line through ``acceptance_log``; the lines are
printed in a separate section at the end of the pytest run.
"""
import random
import subprocess
import sys
import time
from itertools import product

import pytest

from hibireg.builtins import cyclic_poset, example_poset
from hibireg.census import iter_census
from hibireg.engine import Budget, has_linear_resolution, nonplanar_bounds, regularity
from hibireg.hilbert import f_vector, flag_beta, h_from_beta, h_from_f
from hibireg.lattice import birkhoff, cut_edges
from hibireg.planar import (
    NotPlanar,
    build_labeling,
    chain_descents,
    max_cyclic_squares,
    max_descent_cardinality,
    try_embed,
    upper_chain,
    verify_el,
)
from hibireg.poset import Poset, max_antichain_size

pytestmark = pytest.mark.acceptance


@pytest.fixture
def criterion(acceptance_log):
    """Yield a recorder; the test body fills in ``ok`` and ``detail``."""
    state = {}

    def start(number, title, limit):
        state.update(number=number, title=title, limit=limit, t0=time.perf_counter())
        return state

    yield start
    elapsed = time.perf_counter() - state["t0"]
    ok = state.get("ok", False) and elapsed < state["limit"]
    acceptance_log(f"[{'PASS' if ok else 'FAIL'}] {state['number']:>2}. {state['title']}: "
                   f"{state.get('detail', 'did not finish')} ({elapsed:.2f}s, limit {state['limit']}s)")


def _finish(state, ok, detail):
    elapsed = time.perf_counter() - state["t0"]
    state["ok"], state["detail"] = ok, detail
    assert ok, detail
    assert elapsed < state["limit"], f"took {elapsed:.1f}s, limit {state['limit']}s"


def _census(max_size, max_width=None):
    return [P for _, level in iter_census(max_size, max_width) for P in level]


def test_c01_boolean_closed_form(criterion):
    st = criterion(1, "Boolean lattices B_1..B_6 have reg n-1 via the h-vector", 30)
    got = {n: h_from_beta(flag_beta(Poset.antichain(n))).degree for n in range(1, 7)}
    bad = {n: v for n, v in got.items() if v != n - 1}
    _finish(st, not bad, f"degrees {list(got.values())}, mismatches {bad}")


def test_c02_planar_three_way(criterion):
    st = criterion(2, "planar simple lattices: cyclic squares = max descents = deg h", 300)
    checked, bad = 0, []
    for P in _census(8, max_width=2):
        L = birkhoff(P)
        if cut_edges(L):
            continue
        emb = try_embed(L)
        lam = build_labeling(L, emb)
        sq, _ = max_cyclic_squares(L, emb)
        desc, _ = max_descent_cardinality(L, lam)
        deg = h_from_beta(flag_beta(P)).degree
        checked += 1
        if not sq == desc == deg:
            bad.append(P.serialize())
    _finish(st, checked > 0 and not bad, f"{checked} lattices checked, {len(bad)} failures")


def test_c03_cyclic_lattices(criterion):
    st = criterion(3, "cyclic lattices with r = 1..4 squares have reg r", 10)
    checked, bad = 0, []
    for r in range(1, 5):
        for conn in product(range(3), repeat=r - 1):
            P = cyclic_poset(r, list(conn))
            L = birkhoff(P)
            rep = regularity(L, verify=True)
            deg = h_from_beta(flag_beta(P)).degree
            checked += 1
            if not rep.value == deg == r:
                bad.append((r, conn, rep.value, deg))
    _finish(st, not bad, f"{checked} lattices checked, failures {bad}")


def test_c04_example(criterion):
    st = criterion(4, "example poset: reg 3 with strict bounds 2 < 3 < 4", 1)
    rep = regularity(birkhoff(example_poset()))
    trip = (rep.lower_bound, rep.value, rep.upper_bound)
    _finish(st, trip == (2, 3, 4) and rep.lower_bound < rep.value < rep.upper_bound,
            f"(lower, value, upper) = {trip}")


def test_c05_nonplanar_bounds(criterion):
    st = criterion(5, "non-planar lattices (|P| <= 7) satisfy width-1 <= reg <= |P|-1", 300)
    checked, bad = 0, []
    for P in _census(7):
        if max_antichain_size(P) <= 2:
            continue
        lo, hi = nonplanar_bounds(P)
        deg = h_from_beta(flag_beta(P)).degree
        checked += 1
        if not (lo == max_antichain_size(P) - 1 and hi == P.n - 1 and lo <= deg <= hi):
            bad.append(P.serialize())
    _finish(st, checked > 0 and not bad, f"{checked} lattices checked, {len(bad)} violations")


def _is_grid(P):
    """Brute-force grid test: a chain of a >= 1 elements plus one isolated point."""
    if P.n < 2:
        return False
    alone = [p for p in range(P.n) if not (P.up[p] | P.down[p])]
    return len(alone) >= 1 and P.subposet(p for p in range(P.n) if p != alone[0]).is_chain()


def test_c06_linear_resolution(criterion):
    st = criterion(6, "reg 1 with I_L != 0 among simple lattices (|P| <= 7) is exactly the grids", 300)
    checked, wrong = 0, []
    for P in _census(7):
        L = birkhoff(P)
        if cut_edges(L):
            continue
        checked += 1
        reg1 = h_from_beta(flag_beta(P)).degree == 1 and bool(L.incomparable_pairs())
        if reg1 != _is_grid(P) or bool(has_linear_resolution(L)) != reg1:
            wrong.append(P.serialize())
    _finish(st, checked > 0 and not wrong, f"{checked} simple lattices, {len(wrong)} misclassified")


def test_c07_two_h_routes(criterion):
    st = criterion(7, "h-vector from descents equals h-vector from chain counts (|P| <= 7)", 300)
    checked, bad = 0, []
    for P in _census(7):
        checked += 1
        if h_from_beta(flag_beta(P)) != h_from_f(f_vector(birkhoff(P))):
            bad.append(P.serialize())
    _finish(st, checked == 2045 + 318 + 63 + 16 + 5 + 2 + 1 and not bad,
            f"{checked} posets, {len(bad)} mismatches")


def test_c08_el_labeling(criterion):
    st = criterion(8, "EL-labeling valid and c0 the unique descent-free chain (|L| <= 200)", 120)
    checked, bad = 0, []
    for P in _census(8, max_width=2):
        L = birkhoff(P)
        if len(L) > 200:
            continue
        emb = try_embed(L)
        if isinstance(emb, NotPlanar):
            continue
        lam = build_labeling(L, emb)
        free = [c for c in L.maximal_chains() if not chain_descents(c, lam)]
        checked += 1
        if not verify_el(L, lam) or free != [upper_chain(L, emb)]:
            bad.append(P.serialize())
    _finish(st, checked > 0 and not bad, f"{checked} lattices checked, {len(bad)} failures")


def test_c09_additivity(criterion):
    st = criterion(9, "50 random cut-edge glueings: composite reg = sum of block regs", 60)
    rng = random.Random(20240601)
    pool = [P for P in _census(5) if P.n >= 2 and not cut_edges(birkhoff(P))]
    bad = []
    for _ in range(50):
        parts = [rng.choice(pool) for _ in range(rng.randint(2, 3))]
        glued = parts[0]
        for q in parts[1:]:
            glued = Poset.ordinal_sum(Poset.ordinal_sum(glued, Poset.chain(rng.randint(1, 2))), q)
        L = birkhoff(glued)
        composite = regularity(L, Budget()).value
        separate = sum(regularity(birkhoff(q)).value for q in parts)
        if composite != separate or composite != h_from_beta(flag_beta(glued)).degree:
            bad.append(glued.serialize())
    _finish(st, len(pool) > 0 and not bad, f"50 glueings from {len(pool)} blocks, {len(bad)} failures")


def test_c10_determinism(criterion):
    st = criterion(10, "two runs of the size-5 sweep give byte-identical records", 60)
    cmd = [sys.executable, "-m", "hibireg.cli", "sweep", "--size", "5", "--format", "records"]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout
    ok = same and all(r.returncode == 0 for r in runs) and b"failures=0" in runs[0].stdout
    _finish(st, ok, f"identical={same}, exit codes {[r.returncode for r in runs]}, "
                    f"{len(runs[0].stdout)} bytes")
