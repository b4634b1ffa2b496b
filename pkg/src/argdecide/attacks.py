"""Rebut, assumption and undercut attacks; defeat; framework assembly."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .arguments import DEFAULT_MAX_ARGS, Argument, ArgumentSet, Category, build_arguments
from .preference import DEFAULT_POLICY, Force, PreferencePolicy, Verdict, cert, compare_forces, force
from .semantics import DefeatGraph
from .theory import Literal, RuleKind, Theory, applicability, negate


class AttackKind(enum.Enum):
    REBUT = "rebut"
    ASSUMPTION = "assumption"
    UNDERCUT = "undercut"


def rebut_attacks(a: Argument, b: Argument) -> bool:
    return any(negate(p) in b.props for p in a.props)


def _assumption_hits(a: Argument, b: Argument, s: ArgumentSet) -> List[Tuple[int, Literal]]:
    """(sub-argument of a, assumption of b) pairs where the sub-argument concludes
    the complement of the assumption."""
    assumed = set()
    for r in s.used_rules(b.id):
        assumed |= r.assumptions
    hits = []
    for sub in sorted(a.subs):
        target = negate(s[sub].conclusion)
        if target in assumed:
            hits.append((sub, target))
    return hits


def assumption_attacks(a: Argument, b: Argument, s: ArgumentSet) -> Optional[int]:
    """The lowest-id sub-argument of ``a`` on which ``a`` assumption-attacks ``b``."""
    hits = _assumption_hits(a, b, s)
    return hits[0][0] if hits else None


def undercut_attacks(a: Argument, b: Argument, s: ArgumentSet) -> bool:
    a_concs = {s[x].conclusion for x in a.subs}
    for y in b.subs:
        rid = s[y].top_rule
        if rid is None or s.rules[rid].kind is not RuleKind.DEFEASIBLE:
            continue
        if negate(applicability(rid)) in a_concs:
            return True
    return False


def assumption_score(assumption: Literal, t: Theory) -> int:
    # an assumption counts as a premise at its stratum, or at the top if unlisted
    return t.beliefs.get(assumption, t.n)


def defeat_kinds(a: Argument, b: Argument, s: ArgumentSet, t: Theory,
                 policy: PreferencePolicy = DEFAULT_POLICY,
                 forces: Optional[List[Force]] = None) -> Tuple[AttackKind, ...]:
    """Attack kinds through which ``a`` defeats ``b`` (empty when it does not)."""
    # a decision or recommending argument never defeats an epistemic one
    if b.is_epistemic and not a.is_epistemic:
        return ()
    fa = forces[a.id] if forces is not None else force(a, t)
    fb = forces[b.id] if forces is not None else force(b, t)
    kinds = []
    if rebut_attacks(a, b):
        if compare_forces(b.category, fb, a.category, fa, policy) is not Verdict.STRICTLY_PREFERRED:
            kinds.append(AttackKind.REBUT)
    for sub, assumption in _assumption_hits(a, b, s):
        sub_cert = forces[sub].cert if forces is not None else cert(s[sub], t)
        if not assumption_score(assumption, t) > sub_cert:
            kinds.append(AttackKind.ASSUMPTION)
            break
    if undercut_attacks(a, b, s):
        kinds.append(AttackKind.UNDERCUT)
    return tuple(kinds)


def defeats(a: Argument, b: Argument, policy: PreferencePolicy, t: Theory,
            s: Optional[ArgumentSet] = None) -> bool:
    if s is None:
        s = build_arguments(t)
    return bool(defeat_kinds(a, b, s, t, policy))


@dataclass(frozen=True)
class Framework:
    theory: Theory
    args: ArgumentSet
    defeats: Dict[Tuple[int, int], Tuple[AttackKind, ...]]
    policy: PreferencePolicy = DEFAULT_POLICY

    @cached_property
    def graph(self) -> DefeatGraph:
        return DefeatGraph(len(self.args), tuple(self.defeats))

    @cached_property
    def forces(self) -> List[Force]:
        return [force(a, self.theory) for a in self.args]

    def __len__(self):
        return len(self.args)

    def restrict(self, keep) -> "Framework":
        """Framework over a sub-argument-closed subset, defeat restricted to it."""
        keep = sorted(set(keep))
        remap = {old: new for new, old in enumerate(keep)}
        pairs = {
            (remap[x], remap[y]): k
            for (x, y), k in self.defeats.items()
            if x in remap and y in remap
        }
        return Framework(self.theory, self.args.restrict(keep), dict(sorted(pairs.items())), self.policy)

    def epistemic_only(self) -> "Framework":
        return self.restrict(self.args.ids(Category.EPISTEMIC))


def build_framework(t: Theory, policy: PreferencePolicy = DEFAULT_POLICY,
                    max_args: int = DEFAULT_MAX_ARGS, transpose: bool = True) -> Framework:
    s = build_arguments(t, max_args, transpose)
    forces = [force(a, t) for a in s]
    pairs = {}
    for a in s:
        for b in s:
            kinds = defeat_kinds(a, b, s, t, policy, forces)
            if kinds:
                pairs[(a.id, b.id)] = kinds
    return Framework(t, s, pairs, policy)
