import re
from itertools import combinations

import pytest

from hibireg.builtins import cyclic_poset, example_poset
from hibireg.export import (
    DIALECTS,
    UnsupportedDialect,
    export_cas_script,
    export_hasse_graph,
    initial_ideal,
    joinmeet_generators,
    lattice_digest,
    variable_name,
    variable_order,
    write_exports,
)
from hibireg.lattice import birkhoff
from hibireg.planar import build_labeling, try_embed
from hibireg.poset import Poset


def diamond():
    return birkhoff(Poset.antichain(2))


def test_diamond_binomial():
    L = diamond()
    gens = joinmeet_generators(L)
    assert len(gens) == 1
    g = gens[0]
    v = lambda x: variable_name(L, x)  # noqa: E731
    assert f"{v(g.a)}*{v(g.b)} - {v(g.join)}*{v(g.meet)}" == "x_0*x_1 - x_0_1*x_bot"


def test_generator_counts():
    assert len(joinmeet_generators(birkhoff(Poset.antichain(3)))) == 9
    assert joinmeet_generators(birkhoff(Poset.chain(3))) == []


def test_generators_are_lattice_identities():
    L = birkhoff(example_poset())
    gens = joinmeet_generators(L)
    pairs = {(g.a, g.b) for g in gens}
    brute = {(a, b) for a, b in combinations(range(len(L)), 2)
             if not (L.ideals[a] & ~L.ideals[b] == 0 or L.ideals[b] & ~L.ideals[a] == 0)}
    assert pairs == brute
    for g in gens:
        assert L.ideals[g.join] == L.ideals[g.a] | L.ideals[g.b]
        assert L.ideals[g.meet] == L.ideals[g.a] & L.ideals[g.b]
        assert g.positive == (g.a, g.b) and g.negative == (g.join, g.meet)


def test_initial_ideal_is_incomparable_products():
    L = birkhoff(example_poset())
    assert [(m.a, m.b) for m in initial_ideal(L)] == [(g.a, g.b) for g in joinmeet_generators(L)]


def test_variable_order_is_linear_extension():
    L = birkhoff(example_poset())
    order = variable_order(L)
    pos = {x: k for k, x in enumerate(order)}
    assert all(pos[x] < pos[y] for x, y in L.covers)


def test_example_script_variables():
    L = birkhoff(example_poset())
    text = export_cas_script(L)
    ring = next(line for line in text.splitlines() if line.startswith("ring:"))
    assert len(ring.split()) - 1 == len(L) == 13


@pytest.mark.parametrize("dialect", sorted(DIALECTS))
def test_scripts_deterministic_and_complete(dialect):
    L = birkhoff(example_poset())
    a = export_cas_script(L, dialect)
    assert a == export_cas_script(birkhoff(example_poset()), dialect)
    n_gens = len(joinmeet_generators(L))
    assert len(re.findall(r"x[_(]\w+\)?\*x[_(]\w+\)? - ", a)) == n_gens


@pytest.mark.parametrize("dialect", sorted(DIALECTS))
def test_chain_script_zero_ideal(dialect):
    assert "zero ideal" in export_cas_script(birkhoff(Poset.chain(2)), dialect)


def test_unsupported_dialect():
    with pytest.raises(UnsupportedDialect):
        export_cas_script(diamond(), "maple")


def test_diamond_dot():
    L = diamond()
    emb = try_embed(L)
    text = export_hasse_graph(L, emb, build_labeling(L, emb))
    assert len(re.findall(r"^  n\d+ \[", text, re.M)) == 4
    edges = re.findall(r"^  n\d+ -> n\d+ \[label=\"(\d)\"\];", text, re.M)
    assert sorted(edges) == ["1", "1", "2", "2"]
    assert 'pos="0,0!"' in text


def test_staircase_lattice_dot():
    L = birkhoff(cyclic_poset(3, [1, 0]))
    emb = try_embed(L)
    text = export_hasse_graph(L, emb, build_labeling(L, emb))
    assert len(re.findall(r"^  n\d+ \[", text, re.M)) == len(L) == 11
    assert len(re.findall(r" -> ", text)) == len(L.covers) == 13
    assert text.count("rank=same") == L.rank + 1


def test_dot_without_embedding():
    text = export_hasse_graph(birkhoff(example_poset()))
    assert "pos=" not in text and "label=\"" in text


def test_digest_stable():
    assert lattice_digest(diamond()) == lattice_digest(diamond())
    assert lattice_digest(diamond()) != lattice_digest(birkhoff(Poset.chain(2)))


def test_write_exports(tmp_path):
    L = diamond()
    emb = try_embed(L)
    paths = write_exports(L, tmp_path / "out", "diamond", "macaulay2", emb, build_labeling(L, emb))
    assert [p.suffix for p in paths] == [".m2", ".dot"]
    assert all(p.name.startswith(f"diamond-{lattice_digest(L)}") for p in paths)
    assert paths[0].read_text() == export_cas_script(L, "macaulay2")
    only = write_exports(L, tmp_path, graph=False)
    assert len(only) == 1 and only[0].name.endswith(".cas.txt")
