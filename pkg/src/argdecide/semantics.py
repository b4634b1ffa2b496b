"""Dung acceptability semantics over a defeat graph.

The solver keeps, for every argument, the set of arguments it defeats and
the set of its defeaters as Python ints used as bit vectors, so that
conflict and defence tests are whole-word mask operations. Complete and
preferred extensions come from one include/exclude search that forces in
every defended argument; for preferred it also cuts branches dominated by
an extension already found. Stable extensions are filtered from the
preferred ones. ``oracle_extensions`` re-derives every semantics by brute
force over all subsets and shares no code with the solver.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple, Union

ORACLE_LIMIT = 20


class Semantics(str, enum.Enum):
    ADMISSIBLE = "admissible"
    PREFERRED = "preferred"
    COMPLETE = "complete"
    STABLE = "stable"
    GROUNDED = "grounded"


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DefeatGraph:
    """Arguments ``0..n-1`` and the defeat pairs (attacker, target) between them."""

    n: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(set((int(x), int(y)) for x, y in self.pairs)))
        for x, y in pairs:
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise ValueError(f"defeat pair {(x, y)} outside 0..{self.n - 1}")
        object.__setattr__(self, "pairs", pairs)

    @cached_property
    def attacks(self) -> List[int]:
        out = [0] * self.n
        for x, y in self.pairs:
            out[x] |= 1 << y
        return out

    @cached_property
    def attackers(self) -> List[int]:
        out = [0] * self.n
        for x, y in self.pairs:
            out[y] |= 1 << x
        return out

    @property
    def everything(self) -> int:
        return (1 << self.n) - 1

    def attacked_by(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.attacks[i]
        return out

    def attackers_of(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.attackers[i]
        return out

    def defended(self, mask: int) -> int:
        """Characteristic function: the arguments all of whose defeaters ``mask`` defeats."""
        hit = self.attacked_by(mask)
        out = 0
        for a in range(self.n):
            if self.attackers[a] & ~hit == 0:
                out |= 1 << a
        return out

    def conflict_free(self, mask: int) -> bool:
        return self.attacked_by(mask) & mask == 0


def _graph(f) -> DefeatGraph:
    return f if isinstance(f, DefeatGraph) else f.graph


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _mask(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class ExtensionSet:
    semantics: Semantics
    extensions: Tuple[Tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.extensions)

    def __len__(self):
        return len(self.extensions)

    def as_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(e) for e in self.extensions]


def _canonical(sem: Semantics, masks: Iterable[int]) -> ExtensionSet:
    exts = sorted({tuple(_bits(m)) for m in masks})
    return ExtensionSet(Semantics(sem), tuple(exts))


def is_conflict_free(s: Iterable[int], f) -> bool:
    return _graph(f).conflict_free(_mask(s))


def defends(s: Iterable[int], a: int, f) -> bool:
    g = _graph(f)
    return g.attackers[a] & ~g.attacked_by(_mask(s)) == 0


def grounded_iterates(f) -> List[FrozenSet[int]]:
    """The chain F(empty), F(F(empty)), ... up to the fixpoint."""
    g = _graph(f)
    chain = []
    cur = 0
    while True:
        nxt = g.defended(cur)
        chain.append(frozenset(_bits(nxt)))
        if nxt == cur:
            return chain
        cur = nxt


def grounded_extension(f) -> FrozenSet[int]:
    return grounded_iterates(f)[-1]


def _admissible_masks(g: DefeatGraph) -> List[int]:
    """All admissible sets, by branching on arguments in id order."""
    n = g.n
    out = []

    def rec(i: int, inn: int, blocked: int):
        # blocked: arguments that conflict with inn
        if i == n:
            if inn & ~g.defended(inn) == 0:
                out.append(inn)
            return
        # every defeater of inn must still be defeatable by inn or a later candidate
        later = g.everything & ~((1 << i) - 1) & ~blocked
        potential = inn | later
        for b in _bits(g.attackers_of(inn)):
            if g.attackers[b] & potential == 0:
                return
        bit = 1 << i
        if not blocked & bit and not g.attacks[i] & (inn | bit):
            rec(i + 1, inn | bit, blocked | g.attacks[i] | g.attackers[i])
        rec(i + 1, inn, blocked)

    rec(0, 0, 0)
    return out


def _search(g: DefeatGraph, maximal: bool) -> List[int]:
    """Complete extensions, or only the maximal ones, by IN / excluded branching.

    ``out`` holds arguments defeated by the current IN set, ``must`` the
    attackers of IN that still have to be defeated, ``blank`` the open
    arguments. An open argument whose defeaters are all OUT is defended
    and goes IN without branching. A branch dies when a ``must`` argument
    has no open defeater left, when an excluded argument is already
    defended, or (with ``maximal``) when everything it could still make
    IN is covered by a set already found. Each leaf is a distinct
    complete extension.
    """
    found: List[int] = []
    self_attacking = _mask(x for x in range(g.n) if g.attacks[x] >> x & 1)

    def take(x: int, inn: int, out: int, must: int, blank: int):
        bit = 1 << x
        hit = g.attacks[x]
        inn |= bit
        out |= hit
        must &= ~hit
        blank &= ~(bit | hit)
        threat = g.attackers[x] & ~out
        return inn, out, must | threat, blank & ~threat

    def rec(inn: int, out: int, must: int, blank: int):
        while True:
            if any(g.attackers[x] & blank == 0 for x in _bits(must)):
                return
            forced = next((x for x in _bits(blank) if g.attackers[x] & ~out == 0), None)
            if forced is None:
                break
            inn, out, must, blank = take(forced, inn, out, must, blank)
        excluded = g.everything & ~(inn | out | must | blank)
        if any(g.attackers[x] & ~out == 0 for x in _bits(excluded)):
            return
        if maximal and any((inn | blank) & ~f == 0 for f in found):
            return
        if not blank:
            if maximal:
                found[:] = [f for f in found if f & ~inn]
            found.append(inn)
            return
        y = max(_bits(blank), key=lambda x: (_popcount(g.attacks[x] & must),
                                             _popcount(g.attacks[x] & blank), -x))
        rec(*take(y, inn, out, must, blank))
        rec(inn, out, must, blank & ~(1 << y))

    rec(0, 0, 0, g.everything & ~self_attacking)
    return found


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _complete_masks(g: DefeatGraph) -> List[int]:
    return _search(g, maximal=False)


def _preferred_masks(g: DefeatGraph) -> List[int]:
    return _search(g, maximal=True)


def extensions(f, sem: Union[str, Semantics]) -> ExtensionSet:
    sem = Semantics(sem)
    g = _graph(f)
    if sem is Semantics.GROUNDED:
        return _canonical(sem, [_mask(grounded_extension(g))])
    if sem is Semantics.ADMISSIBLE:
        return _canonical(sem, _admissible_masks(g))
    if sem is Semantics.COMPLETE:
        return _canonical(sem, _complete_masks(g))
    preferred = _preferred_masks(g)
    if sem is Semantics.PREFERRED:
        return _canonical(sem, preferred)
    # every stable extension is preferred
    stable = [m for m in preferred if (m | g.attacked_by(m)) == g.everything]
    return _canonical(sem, stable)


def oracle_extensions(f, sem: Union[str, Semantics]) -> ExtensionSet:
    """Extensions by exhaustive subset testing; refuses more than 20 arguments."""
    sem = Semantics(sem)
    g = _graph(f)
    if g.n > ORACLE_LIMIT:
        raise TooLarge(f"{g.n} arguments; the oracle handles at most {ORACLE_LIMIT}")
    args = range(g.n)
    defeat = set(g.pairs)

    def conflict_free(S):
        return not any((x, y) in defeat for x in S for y in S)

    def defends_arg(S, a):
        return all(any((c, b) in defeat for c in S) for b in args if (b, a) in defeat)

    subsets = [frozenset(c) for k in range(g.n + 1) for c in itertools.combinations(args, k)]
    admissible = [S for S in subsets if conflict_free(S) and all(defends_arg(S, a) for a in S)]
    complete = [S for S in admissible if all(a in S for a in args if defends_arg(S, a))]

    if sem is Semantics.ADMISSIBLE:
        found = admissible
    elif sem is Semantics.COMPLETE:
        found = complete
    elif sem is Semantics.PREFERRED:
        found = [S for S in admissible if not any(S < T for T in admissible)]
    elif sem is Semantics.STABLE:
        found = [
            S for S in subsets
            if conflict_free(S)
            and all(any((c, a) in defeat for c in S) for a in args if a not in S)
        ]
    else:
        found = [S for S in complete if all(S <= T for T in complete)]
    return ExtensionSet(sem, tuple(sorted(tuple(sorted(S)) for S in found)))
