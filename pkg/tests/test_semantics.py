import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from argdecide import (
    DefeatGraph,
    Semantics,
    TooLarge,
    build_framework,
    defends,
    extensions,
    grounded_extension,
    is_conflict_free,
    oracle_extensions,
    parse_theory,
)
from argdecide.semantics import grounded_iterates

from corpus import random_graph

REBUTTAL = "belief 1: a. belief 1: d. drule r1: a => b. drule r2: d => ~b."


@pytest.fixture
def ex1():
    return build_framework(parse_theory(REBUTTAL))


def test_conflict_free(ex1):
    assert is_conflict_free([], ex1)
    assert not is_conflict_free([2, 3], ex1)
    assert is_conflict_free([0, 1], ex1)


def test_defends(ex1):
    assert defends([], 0, ex1)
    assert not defends([], 2, ex1)
    assert defends([2], 2, ex1)


def test_grounded_examples(ex1):
    assert grounded_extension(DefeatGraph(3, ())) == {0, 1, 2}
    assert grounded_extension(ex1) == {0, 1}
    assert grounded_extension(DefeatGraph(3, ((0, 1), (1, 2)))) == {0, 2}


def test_rebuttal_multi_extension_semantics(ex1):
    assert extensions(ex1, "preferred").extensions == ((0, 1, 2), (0, 1, 3))
    assert extensions(ex1, "stable").extensions == ((0, 1, 2), (0, 1, 3))
    assert extensions(ex1, "complete").extensions == ((0, 1), (0, 1, 2), (0, 1, 3))
    assert extensions(ex1, Semantics.GROUNDED).extensions == ((0, 1),)


def test_empty_framework():
    g = DefeatGraph(0, ())
    for sem in Semantics:
        assert extensions(g, sem).extensions == ((),)
        assert oracle_extensions(g, sem).extensions == ((),)


def test_odd_cycle_has_no_stable_extension():
    g = DefeatGraph(3, ((0, 1), (1, 2), (2, 0)))
    assert extensions(g, "stable").extensions == ()
    assert extensions(g, "preferred").extensions == ((),)


def test_self_attacker():
    g = DefeatGraph(2, ((0, 0), (0, 1)))
    assert extensions(g, "preferred").extensions == ((),)
    assert extensions(g, "grounded").extensions == ((),)


def test_oracle_refuses_large_frameworks():
    with pytest.raises(TooLarge):
        oracle_extensions(DefeatGraph(21, ()), "grounded")


def test_bad_pair_rejected():
    with pytest.raises(ValueError):
        DefeatGraph(2, ((0, 2),))


def test_grounded_iterates_increase():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng)
        chain = grounded_iterates(g)
        assert len(chain) <= g.n + 1
        for x, y in zip(chain, chain[1:]):
            assert x <= y
        assert chain[-1] == grounded_extension(g)


def test_many_preferred_extensions():
    # ten independent two-cycles: 2^10 preferred, 3^10 complete
    pairs = [(2 * i, 2 * i + 1) for i in range(10)] + [(2 * i + 1, 2 * i) for i in range(10)]
    g = DefeatGraph(20, tuple(pairs))
    assert len(extensions(g, "preferred")) == 1024
    assert len(extensions(g, "stable")) == 1024


def test_symmetric_conflicts_give_maximal_independent_sets():
    # with symmetric defeat and no self-attack, preferred = stable = maximal
    # independent sets, i.e. maximal cliques of the complement graph
    rng = random.Random(9)
    n = 30
    pairs = set()
    for x in range(n):
        for y in range(x + 1, n):
            if rng.random() < 0.15:
                pairs |= {(x, y), (y, x)}
    g = DefeatGraph(n, tuple(pairs))
    complement = nx.complement(nx.Graph(list(pairs)))
    complement.add_nodes_from(range(n))
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(complement))
    assert list(extensions(g, "preferred").extensions) == expected
    assert list(extensions(g, "stable").extensions) == expected


def _ladder_ok(g):
    fam = {sem: set(extensions(g, sem).extensions) for sem in Semantics}
    grounded = set(fam[Semantics.GROUNDED].pop())
    return (
        fam[Semantics.STABLE] <= fam[Semantics.PREFERRED] <= fam[Semantics.COMPLETE] <= fam[Semantics.ADMISSIBLE]
        and all(grounded <= set(e) for e in fam[Semantics.COMPLETE])
    )


@st.composite
def graphs(draw, max_args=9):
    n = draw(st.integers(0, max_args))
    pairs = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
                          max_size=3 * n)) if n else []
    return DefeatGraph(n, tuple(pairs))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_solver_matches_oracle(g):
    for sem in Semantics:
        assert extensions(g, sem) == oracle_extensions(g, sem)


@settings(max_examples=150, deadline=None)
@given(graphs(max_args=14))
def test_ladder(g):
    assert _ladder_ok(g)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_extensions_are_conflict_free_and_sorted(g):
    for sem in Semantics:
        found = extensions(g, sem).extensions
        assert list(found) == sorted(set(found))
        for e in found:
            assert list(e) == sorted(e)
            assert is_conflict_free(e, g)
