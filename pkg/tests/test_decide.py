import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from argdecide import (
    Attitude,
    Comparison,
    Literal,
    Rule,
    RuleKind,
    Theory,
    build_framework,
    compare_decisions,
    frameworks_equivalent,
    output,
    parse_theory,
    rank_decisions,
)
from argdecide.decide import UnknownDecision, acceptable_pool
from argdecide.semantics import grounded_extension

REBUTTAL = "belief 1: a. belief 1: d. drule r1: a => b. drule r2: d => ~b."
TRAVEL = """
scale 5. decision take_train. decision take_plane.
belief 3: trains_run. belief 1: seat_free.
goal+ 2: arrive_rested. goal+ 5: arrive_early.
drule r1: trains_run, take_train => arrive_rested.
drule r2: seat_free, take_plane => arrive_early.
"""
UMBRELLA = """
scale 3. decision u. decision no_u. belief 2: rain.
goal+ 3: dry. goal- 1: wet.
drule r1: rain, u => dry. drule r2: rain, no_u => wet.
"""


def _all(f):
    return frozenset(range(len(f)))


@pytest.mark.parametrize("sem", ["grounded", "preferred", "complete", "stable"])
def test_rebuttal_output(sem):
    f = build_framework(parse_theory(REBUTTAL))
    assert output(f, sem).output == {Literal("a"), Literal("d")}


def test_empty_framework_output():
    f = build_framework(Theory())
    for sem in ("grounded", "preferred", "stable"):
        assert output(f, sem).output == frozenset()


def test_decisions_never_in_output():
    f = build_framework(parse_theory(UMBRELLA))
    out = output(f).output
    assert out == {Literal("rain")}


def test_travel_comparison():
    f = build_framework(parse_theory(TRAVEL))
    pool = grounded_extension(f)
    assert compare_decisions("take_train", "take_plane", pool, f) is Comparison.BETTER
    assert compare_decisions("take_plane", "take_train", pool, f) is Comparison.WORSE


def test_empty_vectors_are_equivalent():
    f = build_framework(parse_theory("decision x. decision y."))
    for att in Attitude:
        assert compare_decisions("x", "y", _all(f), f, att) is Comparison.EQUIVALENT


def test_optimistic_fewer_cons_win():
    f = build_framework(parse_theory("decision x. decision y. goal- 1: bad. drule r: y => bad."))
    assert compare_decisions("x", "y", _all(f), f, "optimistic") is Comparison.BETTER
    assert compare_decisions("y", "x", _all(f), f, "optimistic") is Comparison.WORSE
    # the pessimist sees no PRO arguments on either side
    assert compare_decisions("x", "y", _all(f), f, "pessimistic") is Comparison.EQUIVALENT


def test_optimistic_weaker_cons_win():
    f = build_framework(parse_theory(
        "scale 3. decision x. decision y. goal- 1: mild. goal- 3: severe."
        "drule r1: x => mild. drule r2: y => severe."
    ))
    assert compare_decisions("x", "y", _all(f), f, "optimistic") is Comparison.BETTER


def test_decision_against_itself():
    f = build_framework(parse_theory(TRAVEL))
    assert compare_decisions("take_train", "take_train", _all(f), f) is Comparison.EQUIVALENT


def test_unknown_decision():
    f = build_framework(parse_theory(TRAVEL))
    with pytest.raises(UnknownDecision):
        compare_decisions("take_bus", "take_train", _all(f), f)


def test_umbrella_ranking():
    f = build_framework(parse_theory(UMBRELLA))
    r = rank_decisions(f)
    assert r.order == (("u",), ("no_u",))
    (only,) = r.justification["u"]
    assert str(only[1]) == "(2, 3)"
    assert r.justification["no_u"] == ()
    assert r.rank_of("u") == 0 and r.rank_of("no_u") == 1
    assert r.relation() == {("u", "no_u")}
    opt = rank_decisions(f, "optimistic")
    assert opt.order == (("u",), ("no_u",))


def test_no_decisions_gives_empty_ranking():
    r = rank_decisions(build_framework(parse_theory(REBUTTAL)))
    assert r.order == () and r.justification == {}


def test_identical_vectors_share_a_group():
    f = build_framework(parse_theory(
        "scale 2. decision x. decision y. goal+ 2: g. goal+ 2: h. drule r1: x => g. drule r2: y => h."
    ))
    assert rank_decisions(f).order == (("x", "y"),)


def test_rank_groups_partition_decisions():
    f = build_framework(parse_theory(
        "scale 4. decision a. decision b. decision c. decision e."
        "goal+ 4: g1. goal+ 3: g2. goal+ 2: g3. goal+ 1: g4."
        "drule r1: a => g1. drule r2: a => g4. drule r3: b => g2. drule r4: b => g3. drule r5: c => g1."
    ))
    r = rank_decisions(f)
    assert r.order == (("a",), ("c",), ("b",), ("e",))
    assert sorted(itertools.chain(*r.order)) == ["a", "b", "c", "e"]


def test_multi_extension_pool_warns():
    f = build_framework(parse_theory(REBUTTAL))
    pool, warnings = acceptable_pool(f, "preferred")
    assert warnings and "common to all" in warnings[0]
    assert pool == grounded_extension(f)


def test_stable_without_extension_warns():
    # an odd loop of undercuts leaves no stable extension
    f = build_framework(parse_theory(
        "belief 1: a. drule r1: a => ~@r2. drule r2: a => ~@r3. drule r3: a => ~@r1."
    ))
    res = output(f, "stable")
    assert res.output == frozenset() and res.warnings
    assert rank_decisions(f, sem="stable").warnings


def test_frameworks_equivalent_reflexive():
    f = build_framework(parse_theory(UMBRELLA))
    e = frameworks_equivalent(f, f)
    assert e.output_equal and e.ranking_equal


def test_epistemic_restriction_keeps_output():
    f = build_framework(parse_theory(UMBRELLA))
    assert frameworks_equivalent(f, f.epistemic_only()).output_equal


def test_raising_a_stratum_changes_output():
    low = build_framework(parse_theory("scale 2. belief 1: a. belief 1: d. drule r1: a => b. drule r2: d => ~b."))
    high = build_framework(parse_theory("scale 2. belief 2: a. belief 1: d. drule r1: a => b. drule r2: d => ~b."))
    assert Literal("b") in output(high).output
    assert not frameworks_equivalent(low, high).output_equal


def _decision_theory(rng, n=4):
    decisions = [f"d{i}" for i in range(rng.randint(1, 4))]
    goals = {Literal(f"g{i}"): rng.randint(1, n) for i in range(rng.randint(0, 6))}
    rules = []
    for i, g in enumerate(goals):
        for d in rng.sample(decisions, rng.randint(0, len(decisions))):
            rules.append(Rule(f"r{len(rules)}", (Literal(d),), g, RuleKind.DEFEASIBLE))
    return Theory(decisions=frozenset(decisions), pos_goals=goals, defeasible_rules=tuple(rules), n=n)


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_grade_relabelling_keeps_ranking(rng, gaps):
    t = _decision_theory(rng)
    table = list(itertools.accumulate(gaps))
    relabelled = Theory(
        decisions=t.decisions,
        pos_goals={g: table[v - 1] for g, v in t.pos_goals.items()},
        defeasible_rules=t.defeasible_rules,
        n=table[-1],
    )
    assert rank_decisions(build_framework(t)).order == rank_decisions(build_framework(relabelled)).order


def test_pessimistic_ranking_ignores_cons():
    rng = random.Random(3)
    for _ in range(50):
        t = _decision_theory(rng)
        bad = Literal("bad")
        extra = tuple(
            Rule(f"c{i}", (Literal(d),), bad, RuleKind.DEFEASIBLE)
            for i, d in enumerate(sorted(t.decisions)) if rng.random() < 0.5
        )
        with_cons = Theory(decisions=t.decisions, pos_goals=t.pos_goals, neg_goals={bad: rng.randint(1, t.n)},
                           defeasible_rules=t.defeasible_rules + extra, n=t.n)
        assert rank_decisions(build_framework(t)).order == rank_decisions(build_framework(with_cons)).order
