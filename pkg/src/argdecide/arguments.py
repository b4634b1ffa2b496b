"""Construction of argument structures from a theory.

Arguments are built bottom-up. Atomic arguments come from the belief base;
rule applications over epistemic sub-arguments yield further epistemic
arguments; a rule concluding a decision yields a recommending argument; a
rule whose body mixes epistemic premises with one decision atom and whose
head is a goal yields a decision argument.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .theory import Literal, Rule, RuleKind, Theory, applicability, is_consistent

DEFAULT_MAX_ARGS = 100_000


class Category(enum.Enum):
    EPISTEMIC = "epistemic"
    RECOMMENDING = "recommending"
    DECISION = "decision"


class ConstructionOverflow(RuntimeError):
    """The rule base produced more arguments than the configured cap."""


@dataclass(frozen=True)
class Argument:
    id: int
    conclusion: Literal
    props: FrozenSet[Literal]
    goals_pos: FrozenSet[Literal]
    goals_neg: FrozenSet[Literal]
    subs: FrozenSet[int]
    top_rule: Optional[str]
    category: Category
    decision_atom: Optional[str] = None
    # immediate sub-arguments, in rule-body order
    children: Tuple[int, ...] = ()
    # beliefs the argument rests on (its atomic sub-arguments)
    premises: FrozenSet[Literal] = frozenset()

    @property
    def name(self) -> str:
        return f"A{self.id + 1}"

    @property
    def is_epistemic(self) -> bool:
        return self.category is Category.EPISTEMIC

    @property
    def goals(self) -> FrozenSet[Literal]:
        return self.goals_pos | self.goals_neg


@dataclass(frozen=True)
class ArgumentSet:
    args: Tuple[Argument, ...]
    by_conclusion: Mapping[Literal, Tuple[int, ...]]
    by_decision: Mapping[str, Tuple[int, ...]]
    # rule objects, so attack checks do not need the theory
    rules: Mapping[str, Rule]

    def __len__(self):
        return len(self.args)

    def __iter__(self):
        return iter(self.args)

    def __getitem__(self, i: int) -> Argument:
        return self.args[i]

    def ids(self, category: Optional[Category] = None) -> List[int]:
        return [a.id for a in self.args if category is None or a.category is category]

    def restrict(self, keep: Iterable[int]) -> "ArgumentSet":
        """Sub-argument-closed restriction with ids renumbered densely."""
        keep = sorted(set(keep))
        remap = {old: new for new, old in enumerate(keep)}
        args = []
        for old in keep:
            a = self.args[old]
            if not a.subs <= remap.keys():
                raise ValueError(f"{a.name} has sub-arguments outside the restriction")
            args.append(
                Argument(
                    id=remap[old],
                    conclusion=a.conclusion,
                    props=a.props,
                    goals_pos=a.goals_pos,
                    goals_neg=a.goals_neg,
                    subs=frozenset(remap[s] for s in a.subs),
                    top_rule=a.top_rule,
                    category=a.category,
                    decision_atom=a.decision_atom,
                    children=tuple(remap[c] for c in a.children),
                    premises=a.premises,
                )
            )
        return _index(args, self.rules)

    def render(self, i: int) -> str:
        """Bracket notation, e.g. ``A3: [A1 => b]``."""
        a = self.args[i]
        if a.top_rule is None:
            return f"{a.name}: [{a.conclusion}]"
        rule = self.rules[a.top_rule]
        premises = [self.args[c].name for c in a.children]
        if a.category is Category.DECISION:
            premises.append(a.decision_atom)
            head = next(iter(a.goals))
        else:
            head = a.conclusion
        lhs = ", ".join(premises)
        return f"{a.name}: [" + (lhs + " " if lhs else "") + f"{rule.kind.arrow} {head}]"

    def used_rules(self, i: int) -> List[Rule]:
        return [self.rules[self.args[s].top_rule] for s in sorted(self.args[i].subs)
                if self.args[s].top_rule is not None]


def _index(args: Sequence[Argument], rules: Mapping[str, Rule]) -> ArgumentSet:
    by_conc: Dict[Literal, List[int]] = {}
    by_dec: Dict[str, List[int]] = {}
    for a in args:
        by_conc.setdefault(a.conclusion, []).append(a.id)
        if a.decision_atom is not None:
            by_dec.setdefault(a.decision_atom, []).append(a.id)
    return ArgumentSet(
        args=tuple(args),
        by_conclusion={k: tuple(v) for k, v in sorted(by_conc.items())},
        by_decision={k: tuple(v) for k, v in sorted(by_dec.items())},
        rules=dict(rules),
    )


def _classify(goals_pos, goals_neg, decision_atom) -> Category:
    if goals_pos or goals_neg:
        return Category.DECISION
    if decision_atom is not None:
        return Category.RECOMMENDING
    return Category.EPISTEMIC


class _Builder:
    def __init__(self, t: Theory, max_args: int, transpose: bool):
        self.t = t
        self.rules = t.inference_rules(transpose)
        self.strict = t.consistency_rules(transpose)
        self.max_args = max_args
        self.args: List[Argument] = []
        self.seen = set()
        self.epistemic_by_conc: Dict[Literal, List[int]] = {}
        # conclusions of all sub-arguments, per argument
        self.sub_concs: List[FrozenSet[Literal]] = []
        self.applies: List[FrozenSet[Literal]] = []

    def add(self, key, conclusion, children, rule, goals_pos=frozenset(),
            goals_neg=frozenset(), decision_atom=None) -> bool:
        if key in self.seen:
            return False
        below = frozenset().union(*(self.sub_concs[c] for c in children)) if children else frozenset()
        # finiteness guard: no conclusion repeated on a branch
        if conclusion in below:
            return False
        self.seen.add(key)
        aid = len(self.args)
        props = set()
        subs = {aid}
        applies = set()
        premises = set() if children or rule is not None else {conclusion}
        for c in children:
            premises |= self.args[c].premises
            props |= self.args[c].props
            subs |= self.args[c].subs
            applies |= self.applies[c]
        props.add(conclusion)
        props |= goals_pos | goals_neg
        if decision_atom is not None:
            props.add(Literal(decision_atom))
        if rule is not None and not rule.is_strict:
            applies.add(applicability(rule.id))
        # propositions, together with the applicability of every defeasible
        # rule used, must be consistent under the strict rules
        if not is_consistent(props | applies, self.strict):
            return False
        arg = Argument(
            id=aid,
            conclusion=conclusion,
            props=frozenset(props),
            goals_pos=frozenset(goals_pos),
            goals_neg=frozenset(goals_neg),
            subs=frozenset(subs),
            top_rule=rule.id if rule is not None else None,
            category=_classify(goals_pos, goals_neg, decision_atom),
            decision_atom=decision_atom,
            children=tuple(children),
            premises=frozenset(premises),
        )
        if len(self.args) >= self.max_args:
            raise ConstructionOverflow(
                f"more than {self.max_args} arguments; the rule base is likely pathological"
            )
        self.args.append(arg)
        self.applies.append(frozenset(applies))
        self.sub_concs.append(below | {conclusion})
        if arg.is_epistemic:
            self.epistemic_by_conc.setdefault(conclusion, []).append(aid)
        return True

    def premise_choices(self, body: Sequence[Literal]):
        pools = [list(self.epistemic_by_conc.get(l, ())) for l in body]
        return itertools.product(*pools)

    def build(self) -> ArgumentSet:
        t = self.t
        for lit in sorted(t.beliefs):
            self.add(("belief", lit), lit, (), None)

        epistemic_rules = [
            r for r in self.rules
            if not t.decisions_in(r.body) and not t.is_decision(r.head)
        ]
        changed = True
        while changed:
            changed = False
            for r in epistemic_rules:
                for combo in list(self.premise_choices(r.body)):
                    if self.add((r.id, combo), r.head, combo, r):
                        changed = True

        # recommending: epistemic premises, a decision as head
        for r in self.rules:
            if t.decisions_in(r.body) or not t.is_decision(r.head):
                continue
            for combo in list(self.premise_choices(r.body)):
                self.add((r.id, combo), r.head, combo, r, decision_atom=r.head.atom)

        # decision: epistemic premises plus one decision, a goal as head
        for r in self.rules:
            ds = t.decisions_in(r.body)
            if len(ds) != 1:
                continue
            if r.head in t.pos_goals:
                gp, gn = frozenset([r.head]), frozenset()
            elif r.head in t.neg_goals:
                gp, gn = frozenset(), frozenset([r.head])
            else:
                continue
            d = ds[0].atom
            rest = [l for l in r.body if l.atom not in t.decisions]
            for combo in list(self.premise_choices(rest)):
                self.add((r.id, combo), Literal(d), combo, r, gp, gn, decision_atom=d)

        return _index(self.args, {r.id: r for r in self.rules})


def build_arguments(t: Theory, max_args: int = DEFAULT_MAX_ARGS,
                    transpose: bool = True) -> ArgumentSet:
    """Every argument structure derivable from ``t``, with dense, stable ids.

    An argument is kept only if its propositions are consistent under the
    strict rules. With ``transpose`` (the default) strict rules are closed
    under contraposition first, as they would be if generated from a
    monotonic logic. Raises ConstructionOverflow past ``max_args``
    arguments.
    """
    return _Builder(t, max_args, transpose).build()


def args_pro(d: str, pool: Iterable[int], s: ArgumentSet) -> List[int]:
    """Arguments in ``pool`` for ``d``: goal-satisfying or recommending.

    A con argument also has ``d`` among its propositions; the membership test
    on PROP only applies when the argument has no goals at all.
    """
    d_lit = Literal(d)
    out = []
    for i in sorted(pool):
        a = s[i]
        if a.conclusion != d_lit:
            continue
        if a.goals_pos or (not a.goals_neg and d_lit in a.props):
            out.append(i)
    return out


def args_cons(d: str, pool: Iterable[int], s: ArgumentSet) -> List[int]:
    return [i for i in sorted(pool)
            if s[i].conclusion == Literal(d) and s[i].goals_neg]


def subarguments(a: int, s: ArgumentSet) -> FrozenSet[int]:
    return s[a].subs
