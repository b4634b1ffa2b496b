"""Object language, rules and the graded theory tuple.

Literals are signed propositional atoms. A theory carries the decision
atoms, a stratified belief base, two graded goal bases and the strict and
defeasible rules. Grades live on the scale ``1..n`` with ``n`` the most
certain / most important level.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Set, Tuple


@dataclass(frozen=True)
class Literal:
    atom: str
    positive: bool = True

    def __post_init__(self):
        if not self.atom:
            raise ValueError("literal atom must be a nonempty name")

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith("~"):
            return cls(text[1:].strip(), False)
        return cls(text, True)

    @property
    def sort_key(self) -> Tuple[str, bool]:
        # a sorts before ~a
        return (self.atom, not self.positive)

    def __lt__(self, other: "Literal") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return self.atom if self.positive else "~" + self.atom


def negate(lit: Literal) -> Literal:
    return Literal(lit.atom, not lit.positive)


def applicability(rule_id: str) -> Literal:
    """The literal ``@rule_id`` naming the applicability of a defeasible rule.

    Its negation ``~@rule_id`` is what an undercutter concludes.
    """
    return Literal("@" + rule_id, True)


class RuleKind(enum.Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"

    @property
    def arrow(self) -> str:
        return "->" if self is RuleKind.STRICT else "=>"


@dataclass(frozen=True)
class Rule:
    id: str
    body: Tuple[Literal, ...]
    head: Literal
    kind: RuleKind = RuleKind.DEFEASIBLE
    assumptions: FrozenSet[Literal] = frozenset()

    def __post_init__(self):
        # allow lists / sets to be passed in
        object.__setattr__(self, "body", tuple(self.body))
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))
        if not self.id:
            raise TheoryError("rule id must be nonempty", "syntax")
        if self.head in self.body:
            raise TheoryError(
                f"rule {self.id} is self-supporting: head {self.head} occurs in its body",
                "syntax",
            )

    @property
    def is_strict(self) -> bool:
        return self.kind is RuleKind.STRICT

    def __str__(self) -> str:
        lhs = ", ".join(str(b) for b in self.body)
        text = f"{self.id}: " + (lhs + " " if lhs else "") + f"{self.kind.arrow} {self.head}"
        if self.assumptions:
            text += " assuming " + ", ".join(str(a) for a in sorted(self.assumptions))
        return text


class TheoryError(ValueError):
    """Raised when a theory violates a well-formedness constraint.

    ``kind`` mirrors the parser's error kinds (``bad_grade``,
    ``role_clash``, ``duplicate_id``, ``syntax``).
    """

    def __init__(self, message: str, kind: str = "role_clash"):
        super().__init__(message)
        self.message = message
        self.kind = kind


def closure(facts: Iterable[Literal], strict_rules: Iterable[Rule]) -> Set[Literal]:
    """Least superset of ``facts`` closed under forward chaining on strict rules."""
    result = set(facts)
    rules = [r for r in strict_rules if r.is_strict]
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in result and all(b in result for b in r.body):
                result.add(r.head)
                changed = True
    return result


def is_directly_consistent(lits: Iterable[Literal]) -> bool:
    lits = set(lits)
    return not any(negate(l) in lits for l in lits)


def is_consistent(facts: Iterable[Literal], strict_rules: Iterable[Rule] = ()) -> bool:
    return is_directly_consistent(closure(facts, strict_rules))


def transpositions(rule: Rule) -> list:
    """Contrapositives of a strict rule: ``b1..bi..bn -> h`` gives
    ``b1..~h..bn -> ~bi`` for every body position ``i``."""
    out = []
    for i, b in enumerate(rule.body):
        body = rule.body[:i] + (negate(rule.head),) + rule.body[i + 1:]
        try:
            out.append(Rule(f"{rule.id}/t{i + 1}", body, negate(b), RuleKind.STRICT))
        except TheoryError:
            # contradictory body; the contrapositive would support itself
            continue
    return out


def _minimal(envs) -> list:
    envs = sorted(set(envs), key=lambda e: (len(e), sorted(e)))
    out = []
    for e in envs:
        if not any(o <= e for o in out):
            out.append(e)
    return out


def nogoods(strict_rules: Iterable[Rule]) -> list:
    """Minimal sets of literals that are inconsistent under the strict rules.

    Every literal is a potential premise; each literal is labelled with the
    minimal premise sets that derive it, and a nogood is a minimal union of
    a label of some ``l`` with a label of ``~l``, leaving out the trivial
    ones that contain a complementary pair. The empty set is a nogood
    exactly when the rules alone are contradictory.
    """
    rules = [r for r in strict_rules if r.is_strict]
    universe = set()
    for r in rules:
        universe.update(r.body)
        universe.add(r.head)
    universe |= {negate(l) for l in universe}
    label = {l: [frozenset([l])] for l in universe}
    changed = True
    while changed:
        changed = False
        for r in rules:
            envs = [frozenset()]
            for b in r.body:
                envs = [e | x for e in envs for x in label[b]]
            envs = [e for e in envs if is_directly_consistent(e)]
            merged = _minimal(label[r.head] + envs)
            if set(merged) != set(label[r.head]):
                label[r.head] = merged
                changed = True
    found = []
    for l in universe:
        if l.positive:
            found += [e | x for e in label[l] for x in label[negate(l)]]
    # a set holding both l and ~l is trivially inconsistent; skip those
    return [e for e in _minimal(found) if is_directly_consistent(e)]


def contrapositives(strict_rules: Iterable[Rule]) -> list:
    """Strict rules ``N - {m} -> ~m`` for every nogood ``N`` and ``m`` in it.

    This closes the rule base under contraposition of whole derivations,
    not just single rules: whatever the rules derive from a set of
    premises, the negation of the conclusion refutes the premises.
    """
    out = []
    for k, ng in enumerate(sorted(nogoods(strict_rules), key=lambda e: (len(e), sorted(e)))):
        if not ng:
            continue
        for j, m in enumerate(sorted(ng)):
            out.append(Rule(f"/c{k + 1}.{j + 1}", tuple(sorted(ng - {m})), negate(m), RuleKind.STRICT))
    return out


def _reduced(rule: Rule) -> Rule:
    body = tuple(dict.fromkeys(b for b in rule.body if b != negate(rule.head)))
    if body == rule.body:
        return rule
    return Rule(rule.id, body, rule.head, rule.kind, rule.assumptions)


def _check_grades(base: Mapping[Literal, int], n: int, what: str):
    for lit, level in base.items():
        if not isinstance(level, int) or isinstance(level, bool) or not 1 <= level <= n:
            raise TheoryError(
                f"{what} {lit} has grade {level!r} outside 1..{n}", "bad_grade"
            )


@dataclass(frozen=True)
class Theory:
    """The tuple (D, K, G+, G-) together with the rule base (S, NS).

    Rules are kept sorted by id so that two theories with the same content
    compare equal regardless of declaration order.
    """

    decisions: FrozenSet[str] = frozenset()
    beliefs: Dict[Literal, int] = field(default_factory=dict)
    pos_goals: Dict[Literal, int] = field(default_factory=dict)
    neg_goals: Dict[Literal, int] = field(default_factory=dict)
    strict_rules: Tuple[Rule, ...] = ()
    defeasible_rules: Tuple[Rule, ...] = ()
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "decisions", frozenset(self.decisions))
        object.__setattr__(self, "beliefs", dict(self.beliefs))
        object.__setattr__(self, "pos_goals", dict(self.pos_goals))
        object.__setattr__(self, "neg_goals", dict(self.neg_goals))
        object.__setattr__(
            self, "strict_rules", tuple(sorted(self.strict_rules, key=lambda r: r.id))
        )
        object.__setattr__(
            self,
            "defeasible_rules",
            tuple(sorted(self.defeasible_rules, key=lambda r: r.id)),
        )
        self.validate()

    def validate(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise TheoryError(f"scale top must be a positive integer, got {self.n!r}", "bad_grade")
        _check_grades(self.beliefs, self.n, "belief")
        _check_grades(self.pos_goals, self.n, "goal+")
        _check_grades(self.neg_goals, self.n, "goal-")

        for base, what in ((self.beliefs, "belief"), (self.pos_goals, "goal+"), (self.neg_goals, "goal-")):
            for lit in base:
                if lit.atom in self.decisions:
                    raise TheoryError(f"decision atom {lit.atom} also used as a {what}")
        for lit in self.pos_goals:
            if lit in self.neg_goals:
                raise TheoryError(f"{lit} is both a positive and a negative goal")
        for lit in self.beliefs:
            if lit in self.pos_goals or lit in self.neg_goals:
                raise TheoryError(f"{lit} is both a belief and a goal")

        seen = set()
        for r in self.rules:
            if r.id in seen:
                raise TheoryError(f"rule id {r.id} used twice", "duplicate_id")
            seen.add(r.id)
            if r.kind is RuleKind.STRICT and r not in self.strict_rules:
                raise TheoryError(f"rule {r.id} is not strict", "syntax")
            if r.kind is RuleKind.DEFEASIBLE and r not in self.defeasible_rules:
                raise TheoryError(f"rule {r.id} is not defeasible", "syntax")
            for lit in (*r.body, r.head, *r.assumptions):
                if lit.atom in self.decisions and not lit.positive:
                    raise TheoryError(f"rule {r.id} negates decision atom {lit.atom}")
            for lit in r.assumptions:
                if lit.atom in self.decisions:
                    raise TheoryError(f"rule {r.id} assumes decision atom {lit.atom}")
            if len(self.decisions_in(r.body)) > 1:
                raise TheoryError(f"rule {r.id} has more than one decision atom in its body")

    @property
    def rules(self) -> Tuple[Rule, ...]:
        return self.strict_rules + self.defeasible_rules

    @property
    def goals(self) -> Dict[Literal, int]:
        return {**self.pos_goals, **self.neg_goals}

    def rule(self, rule_id: str) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)

    def inference_rules(self, transpose: bool = True) -> Tuple[Rule, ...]:
        """Rules used to build arguments.

        With ``transpose``, decision-free strict rules are read classically:
        a body literal contradicting the head is dropped (``b, ~h -> h`` says
        no more than ``b -> h``) and every contrapositive of what they
        derive is added. Defeasible rules and rules involving decisions are
        used as given.
        """
        if not transpose:
            return self.rules
        out = []
        logical = []
        for r in self.rules:
            if r.is_strict and not self.decisions_in(r.body) and r.head.atom not in self.decisions:
                logical.append(_reduced(r))
            else:
                out.append(r)
        have = {(frozenset(r.body), r.head) for r in logical}
        for c in contrapositives(logical):
            key = (frozenset(c.body), c.head)
            if key not in have:
                have.add(key)
                logical.append(c)
        return tuple(out + logical)

    def consistency_rules(self, transpose: bool = True) -> Tuple[Rule, ...]:
        """Strict rules that count when testing a set of literals for consistency.

        Rules concluding a decision are left out: a recommendation does not
        make the decision true.
        """
        return tuple(
            r for r in self.inference_rules(transpose)
            if r.is_strict and r.head.atom not in self.decisions
        )

    def is_decision(self, lit: Literal) -> bool:
        return lit.positive and lit.atom in self.decisions

    def decisions_in(self, lits: Iterable[Literal]) -> list:
        return [l for l in lits if l.atom in self.decisions]


def stratum_of(t: Theory, lit: Literal) -> Optional[int]:
    return t.beliefs.get(lit)
