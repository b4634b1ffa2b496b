"""Skeptical inference and argument-based ranking of decisions."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .arguments import Category, args_cons, args_pro
from .attacks import Framework
from .preference import Force, Verdict, compare_forces
from .semantics import Semantics, extensions, grounded_extension
from .theory import Literal


class Attitude(str, enum.Enum):
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"


class Comparison(str, enum.Enum):
    BETTER = "better"
    EQUIVALENT = "equivalent"
    WORSE = "worse"


class UnknownDecision(KeyError):
    pass


@dataclass(frozen=True)
class InferenceResult:
    output: FrozenSet[Literal]
    semantics_used: Semantics
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class DecisionRanking:
    attitude: Attitude
    order: Tuple[Tuple[str, ...], ...]
    # decision -> (argument id, force) pairs, strongest first
    justification: Dict[str, Tuple[Tuple[int, Force], ...]]
    pool: FrozenSet[int] = frozenset()
    warnings: Tuple[str, ...] = ()

    def rank_of(self, d: str) -> int:
        for i, group in enumerate(self.order):
            if d in group:
                return i
        raise UnknownDecision(d)

    def relation(self) -> FrozenSet[Tuple[str, str]]:
        """Strict part of the induced pre-ordering as (better, worse) pairs."""
        pairs = set()
        for i, hi in enumerate(self.order):
            for lo in self.order[i + 1:]:
                pairs.update((a, b) for a in hi for b in lo)
        return frozenset(pairs)


def output(f: Framework, sem: Union[str, Semantics] = Semantics.GROUNDED) -> InferenceResult:
    """Literals concluded by an epistemic argument in every extension."""
    sem = Semantics(sem)
    exts = extensions(f, sem).as_sets()
    if not exts:
        return InferenceResult(
            frozenset(), sem, (f"no {sem.value} extension exists; output is empty",)
        )
    common = None
    for e in exts:
        concs = {f.args[i].conclusion for i in e if f.args[i].is_epistemic}
        common = concs if common is None else common & concs
    return InferenceResult(frozenset(common), sem)


def acceptable_pool(f: Framework, sem: Union[str, Semantics] = Semantics.GROUNDED
                    ) -> Tuple[FrozenSet[int], Tuple[str, ...]]:
    """Arguments used for ranking: the grounded extension, the unique extension,
    or the intersection of all extensions."""
    sem = Semantics(sem)
    if sem is Semantics.GROUNDED:
        return grounded_extension(f), ()
    exts = extensions(f, sem).as_sets()
    if not exts:
        return frozenset(), (f"no {sem.value} extension exists; no argument is acceptable",)
    if len(exts) == 1:
        return exts[0], ()
    pool = frozenset.intersection(*exts)
    return pool, (
        f"{len(exts)} {sem.value} extensions; ranking uses the arguments common to all of them",
    )


def _sorted_vector(f: Framework, ids: Iterable[int]) -> List[int]:
    forces = f.forces
    args = f.args

    def cmp(x, y):
        v = compare_forces(args[x].category, forces[x], args[y].category, forces[y], f.policy)
        if v is Verdict.STRICTLY_PREFERRED:
            return -1
        if v is Verdict.STRICTLY_DISPREFERRED:
            return 1
        return (x > y) - (x < y)

    return sorted(ids, key=functools.cmp_to_key(cmp))


def _vector(f: Framework, d: str, pool, attitude: Attitude) -> List[int]:
    select = args_pro if attitude is Attitude.PESSIMISTIC else args_cons
    return _sorted_vector(f, select(d, pool, f.args))


def _lexicographic(f: Framework, left: Sequence[int], right: Sequence[int]) -> int:
    """+1 when ``left`` wins, -1 when ``right`` wins, 0 otherwise.

    Position-wise comparison of the two vectors; ties over the common prefix
    go to the longer one.
    """
    forces, args = f.forces, f.args
    for x, y in zip(left, right):
        v = compare_forces(args[x].category, forces[x], args[y].category, forces[y], f.policy)
        if v is Verdict.STRICTLY_PREFERRED:
            return 1
        if v is Verdict.STRICTLY_DISPREFERRED:
            return -1
    return (len(left) > len(right)) - (len(left) < len(right))


def compare_decisions(d1: str, d2: str, pool: Iterable[int], f: Framework,
                      attitude: Union[str, Attitude] = Attitude.PESSIMISTIC) -> Comparison:
    attitude = Attitude(attitude)
    for d in (d1, d2):
        if d not in f.theory.decisions:
            raise UnknownDecision(d)
    pool = frozenset(pool)
    v1 = _vector(f, d1, pool, attitude)
    v2 = _vector(f, d2, pool, attitude)
    score = _lexicographic(f, v1, v2)
    if attitude is Attitude.OPTIMISTIC:
        # stronger or more numerous cons lose
        score = -score
    if score > 0:
        return Comparison.BETTER
    if score < 0:
        return Comparison.WORSE
    return Comparison.EQUIVALENT


def _rank_groups(decisions: Sequence[str], at_least: Dict[Tuple[str, str], bool]
                 ) -> Tuple[Tuple[str, ...], ...]:
    # groups are the strongly connected parts of "at least as good as"
    reach = {d: {e for e in decisions if at_least[(d, e)]} for d in decisions}
    changed = True
    while changed:
        changed = False
        for d in decisions:
            extra = set().union(*(reach[e] for e in reach[d])) - reach[d]
            if extra:
                reach[d] |= extra
                changed = True
    groups = []
    placed = set()
    for d in decisions:
        if d in placed:
            continue
        group = tuple(sorted(e for e in decisions if e in reach[d] and d in reach[e]))
        placed.update(group)
        groups.append(group)
    groups.sort(key=lambda g: (-len(reach[g[0]]), g))
    return tuple(groups)


def rank_decisions(f: Framework, attitude: Union[str, Attitude] = Attitude.PESSIMISTIC,
                   sem: Union[str, Semantics] = Semantics.GROUNDED) -> DecisionRanking:
    attitude = Attitude(attitude)
    pool, warnings = acceptable_pool(f, sem)
    decisions = sorted(f.theory.decisions)
    at_least = {}
    for d1 in decisions:
        for d2 in decisions:
            at_least[(d1, d2)] = (
                d1 == d2 or compare_decisions(d1, d2, pool, f, attitude) is not Comparison.WORSE
            )
    justification = {
        d: tuple((i, f.forces[i]) for i in _vector(f, d, pool, attitude)) for d in decisions
    }
    return DecisionRanking(
        attitude=attitude,
        order=_rank_groups(decisions, at_least),
        justification=justification,
        pool=pool,
        warnings=warnings,
    )


@dataclass(frozen=True)
class Equivalence:
    output_equal: bool
    ranking_equal: bool


def frameworks_equivalent(f1: Framework, f2: Framework,
                          sem: Union[str, Semantics] = Semantics.GROUNDED,
                          attitude: Union[str, Attitude] = Attitude.PESSIMISTIC) -> Equivalence:
    """Compare inference output and decision pre-orders of two frameworks.

    Both flags are reported; callers decide whether equivalence needs one
    or both.
    """
    out_eq = output(f1, sem).output == output(f2, sem).output
    r1 = rank_decisions(f1, attitude, sem)
    r2 = rank_decisions(f2, attitude, sem)
    return Equivalence(out_eq, r1.relation() == r2.relation())
