import random

import pytest
from hypothesis import given, settings

from argdecide import (
    Category,
    ConstructionOverflow,
    Literal,
    args_cons,
    args_pro,
    build_arguments,
    parse_theory,
    subarguments,
)
from argdecide.theory import Theory

from corpus import theory_corpus
from strategies import theories

REBUTTAL = "belief 1: a. belief 1: d. drule r1: a => b. drule r2: d => ~b."
UMBRELLA = "scale 3. decision u. belief 2: rain. goal+ 3: dry. drule r: rain, u => dry."


def L(text):
    return Literal.parse(text)


def test_rebuttal_arguments():
    s = build_arguments(parse_theory(REBUTTAL))
    assert [s.render(i) for i in range(len(s))] == [
        "A1: [a]",
        "A2: [d]",
        "A3: [A1 => b]",
        "A4: [A2 => ~b]",
    ]
    assert all(a.category is Category.EPISTEMIC for a in s)
    assert s[2].props == {L("a"), L("b")}
    assert s[3].props == {L("d"), L("~b")}
    assert s.by_conclusion[L("~b")] == (3,)


def test_empty_theory():
    assert len(build_arguments(Theory())) == 0


def test_umbrella_decision_argument():
    s = build_arguments(parse_theory(UMBRELLA))
    assert len(s) == 2
    rain, dec = s[0], s[1]
    assert rain.category is Category.EPISTEMIC and rain.conclusion == L("rain")
    assert dec.category is Category.DECISION
    assert dec.conclusion == L("u")
    assert dec.goals_pos == {L("dry")} and dec.goals_neg == frozenset()
    assert dec.props == {L("rain"), L("dry"), L("u")}
    assert dec.decision_atom == "u"
    assert s.by_decision == {"u": (1,)}
    assert s.render(1) == "A2: [A1, u => dry]"


def test_pro_and_con():
    t = parse_theory(
        "scale 3. decision u. belief 2: rain. goal+ 3: dry. goal- 1: wet.\n"
        "drule r1: rain, u => dry. drule r2: rain, u => wet. srule r3: rain -> u."
    )
    s = build_arguments(t)
    everything = range(len(s))
    by_rule = {a.top_rule: a.id for a in s if a.top_rule}
    assert args_pro("u", everything, s) == sorted([by_rule["r1"], by_rule["r3"]])
    assert args_cons("u", everything, s) == [by_rule["r2"]]
    assert s[by_rule["r3"]].category is Category.RECOMMENDING
    assert args_pro("u", [], s) == []


def test_pro_excludes_con_arguments():
    s = build_arguments(parse_theory("decision u. goal- 1: wet. drule r: u => wet."))
    assert args_pro("u", range(len(s)), s) == []
    assert args_cons("u", range(len(s)), s) == [0]


def test_subarguments():
    s = build_arguments(parse_theory(REBUTTAL))
    assert subarguments(0, s) == {0}
    assert subarguments(2, s) == {0, 2}
    u = build_arguments(parse_theory(UMBRELLA))
    assert subarguments(1, u) == {0, 1}


def test_goals_are_not_premises():
    s = build_arguments(parse_theory("scale 2. decision u. goal+ 2: g. drule r1: g => h. drule r2: u => g."))
    assert [a.category for a in s] == [Category.DECISION]


def test_decision_atoms_not_consumed_by_epistemic_rules():
    s = build_arguments(parse_theory("decision u. belief 1: a. drule r1: a, u => b."))
    # b is no goal, so r1 yields nothing
    assert len(s) == 1


def test_cyclic_rules_stay_finite():
    t = parse_theory("belief 1: a. srule s1: a -> b. srule s2: b -> a. drule r1: b => c. drule r2: c => b.")
    s = build_arguments(t)
    concs = sorted(str(a.conclusion) for a in s)
    assert concs == ["a", "b", "c"]


def test_construction_overflow():
    text = "belief 1: a0. belief 1: b0.\n" + "\n".join(
        f"drule x{i}: a{i}, b{i} => a{i + 1}. drule y{i}: a{i}, b{i} => b{i + 1}. "
        f"drule z{i}: b{i} => a{i + 1}. drule w{i}: a{i} => b{i + 1}."
        for i in range(12)
    )
    with pytest.raises(ConstructionOverflow):
        build_arguments(parse_theory(text), max_args=500)


def test_inconsistent_arguments_are_not_built():
    s = build_arguments(parse_theory("belief 1: a. belief 1: ~a. drule r: a, ~a => b."))
    assert [str(a.conclusion) for a in s] == ["a", "~a"]


def test_premises_are_belief_leaves():
    s = build_arguments(parse_theory("scale 2. belief 2: a. belief 1: b. drule r1: a => b. drule r2: b => c."))
    derived_c = [a for a in s if a.conclusion == L("c") and L("a") in a.props]
    assert derived_c and derived_c[0].premises == {L("a")}


def _check_structure(s):
    for a in s:
        assert a.id in a.subs
        assert len(a.goals_pos) + len(a.goals_neg) <= 1
        has_goals = bool(a.goals_pos or a.goals_neg)
        assert (a.category is Category.DECISION) == has_goals
        if a.category is not Category.EPISTEMIC:
            for sub in a.subs - {a.id}:
                assert s[sub].category is Category.EPISTEMIC
        expected = {a.conclusion} | a.goals_pos | a.goals_neg
        for c in a.children:
            expected |= s[c].props
        if a.decision_atom:
            expected.add(Literal(a.decision_atom))
        assert a.props == expected
        # acyclic: every proper sub-argument has a smaller id
        assert all(sub < a.id for sub in a.subs - {a.id})


def test_structure_on_random_theories():
    for t in theory_corpus(5, 150):
        _check_structure(build_arguments(t))


@settings(max_examples=60, deadline=None)
@given(theories())
def test_structure_and_determinism(t):
    s1, s2 = build_arguments(t), build_arguments(t)
    assert s1 == s2
    _check_structure(s1)
