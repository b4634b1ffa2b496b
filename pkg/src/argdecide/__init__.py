"""Argumentation-based inference from stratified knowledge and decision ranking."""

from .arguments import (
    Argument,
    ArgumentSet,
    Category,
    ConstructionOverflow,
    args_cons,
    args_pro,
    build_arguments,
    subarguments,
)
from .attacks import (
    AttackKind,
    Framework,
    assumption_attacks,
    build_framework,
    defeats,
    rebut_attacks,
    undercut_attacks,
)
from .decide import (
    Attitude,
    Comparison,
    DecisionRanking,
    InferenceResult,
    compare_decisions,
    frameworks_equivalent,
    output,
    rank_decisions,
)
from .parser import ParseError, SourceSpan, parse_theory, serialize_theory
from .preference import Force, PreferencePolicy, Verdict, cert, force, imp, prefers
from .semantics import (
    DefeatGraph,
    ExtensionSet,
    Semantics,
    TooLarge,
    defends,
    extensions,
    grounded_extension,
    is_conflict_free,
    oracle_extensions,
)
from .theory import Literal, Rule, RuleKind, Theory, TheoryError, closure, is_consistent, negate, stratum_of

__version__ = "0.1.0"
