"""Argument strength and the preference relation between arguments."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .arguments import Argument, Category
from .theory import Theory


class PreferencePolicy(enum.Enum):
    # recommending arguments always beat decision arguments
    NORMATIVE = "normative"
    # recommending vs decision arguments are compared on certainty
    CERTAINTY_BASED = "certainty_based"


DEFAULT_POLICY = PreferencePolicy.CERTAINTY_BASED


class Verdict(enum.Enum):
    STRICTLY_PREFERRED = "strictly_preferred"
    EQUIVALENT = "equivalent"
    STRICTLY_DISPREFERRED = "strictly_dispreferred"
    INCOMPARABLE = "incomparable"

    def flip(self) -> "Verdict":
        return _FLIP[self]


_FLIP = {
    Verdict.STRICTLY_PREFERRED: Verdict.STRICTLY_DISPREFERRED,
    Verdict.STRICTLY_DISPREFERRED: Verdict.STRICTLY_PREFERRED,
    Verdict.EQUIVALENT: Verdict.EQUIVALENT,
    Verdict.INCOMPARABLE: Verdict.INCOMPARABLE,
}


class NotDecisionArgument(ValueError):
    pass


@dataclass(frozen=True)
class Force:
    cert: int
    imp: Optional[int] = None

    def __str__(self):
        return str(self.cert) if self.imp is None else f"({self.cert}, {self.imp})"


def cert(a: Argument, t: Theory) -> int:
    """Level of the weakest belief the argument rests on.

    Only premises count: a derived conclusion that happens to be a weaker
    belief too does not lower the certainty of its derivation. An argument
    that uses no belief at all sits at the top of the scale.
    """
    levels = [t.beliefs[p] for p in a.premises]
    return min(levels) if levels else t.n


def imp(a: Argument, t: Theory) -> int:
    if a.category is not Category.DECISION:
        raise NotDecisionArgument(f"{a.name} is {a.category.value}, not a decision argument")
    (goal,) = a.goals
    if goal in a.goals_pos:
        return t.pos_goals[goal]
    return t.neg_goals[goal]


def force(a: Argument, t: Theory) -> Force:
    if a.category is Category.DECISION:
        return Force(cert(a, t), imp(a, t))
    return Force(cert(a, t))


def _cmp(x: int, y: int) -> Verdict:
    if x > y:
        return Verdict.STRICTLY_PREFERRED
    if x < y:
        return Verdict.STRICTLY_DISPREFERRED
    return Verdict.EQUIVALENT


def compare_forces(cat_a: Category, fa: Force, cat_b: Category, fb: Force,
                   policy: PreferencePolicy = DEFAULT_POLICY) -> Verdict:
    """Preference between two arguments given only their categories and forces."""
    E, R, D = Category.EPISTEMIC, Category.RECOMMENDING, Category.DECISION
    if cat_a is E and cat_b is not E:
        return Verdict.STRICTLY_PREFERRED
    if cat_b is E and cat_a is not E:
        return Verdict.STRICTLY_DISPREFERRED
    if cat_a is D and cat_b is D:
        return _cmp(min(fa.cert, fa.imp), min(fb.cert, fb.imp))
    if cat_a is cat_b:
        return _cmp(fa.cert, fb.cert)
    # one recommending, one decision argument
    if policy is PreferencePolicy.NORMATIVE:
        return Verdict.STRICTLY_PREFERRED if cat_a is R else Verdict.STRICTLY_DISPREFERRED
    return _cmp(fa.cert, fb.cert)


def prefers(a: Argument, b: Argument, policy: PreferencePolicy, t: Theory) -> Verdict:
    return compare_forces(a.category, force(a, t), b.category, force(b, t), policy)
