"""Reader and writer for the line-oriented theory language.

Grammar (``#`` starts a comment, every statement ends with ``.``)::

    scale N.
    decision d.
    belief L: lit.
    goal+ L: lit.
    goal- L: lit.
    srule id: lit, ..., lit -> lit.
    drule id: lit, ..., lit => lit assuming lit, ..., lit.

A literal is ``atom`` or ``~atom``; ``@r`` names the applicability of the
defeasible rule ``r``. Several statements may share a line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .theory import Literal, Rule, RuleKind, Theory, TheoryError

ERROR_KINDS = ("syntax", "duplicate_id", "bad_grade", "role_clash")

_IDENT = r"[A-Za-z_][A-Za-z0-9_']*"
_LIT = r"~?\s*@?" + _IDENT
_LITLIST = rf"{_LIT}(?:\s*,\s*{_LIT})*"

_STATEMENTS = {
    "scale": re.compile(r"scale\s+(?P<n>-?\d+)"),
    "decision": re.compile(rf"decision\s+(?P<atom>{_IDENT})"),
    "belief": re.compile(rf"belief\s+(?P<level>-?\d+)\s*:\s*(?P<lit>{_LIT})"),
    "goal": re.compile(rf"goal(?P<sign>[+-])\s+(?P<level>-?\d+)\s*:\s*(?P<lit>{_LIT})"),
    "srule": re.compile(
        rf"srule\s+(?P<id>{_IDENT})\s*:\s*(?P<body>{_LITLIST})?\s*->\s*(?P<head>{_LIT})"
    ),
    "drule": re.compile(
        rf"drule\s+(?P<id>{_IDENT})\s*:\s*(?P<body>{_LITLIST})?\s*=>\s*(?P<head>{_LIT})"
        rf"(?:\s+assuming\s+(?P<assume>{_LITLIST}))?"
    ),
}


@dataclass(frozen=True, order=True)
class SourceSpan:
    line: int
    column: int

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError("spans are 1-based")

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseError(ValueError):
    def __init__(self, span: SourceSpan, message: str, kind: str = "syntax"):
        assert kind in ERROR_KINDS, kind
        assert message
        super().__init__(f"{span}: {kind}: {message}")
        self.span = span
        self.message = message
        self.kind = kind


@dataclass
class _Statement:
    keyword: str
    match: "re.Match[str]"
    span: SourceSpan


def _split_statements(text: str) -> Tuple[List[Tuple[str, SourceSpan]], List[ParseError]]:
    """Cut the document into '.'-terminated chunks, each tagged with its start."""
    chunks: List[Tuple[str, SourceSpan]] = []
    errors: List[ParseError] = []
    buf: List[str] = []
    start: Optional[SourceSpan] = None
    line, col = 1, 0
    in_comment = False
    for ch in text:
        col += 1
        if ch == "\n":
            in_comment = False
            if buf:
                buf.append(" ")
            line, col = line + 1, 0
            continue
        if in_comment:
            continue
        if ch == "#":
            in_comment = True
            continue
        if ch == ".":
            if start is None:
                errors.append(ParseError(SourceSpan(line, col), "empty statement"))
            else:
                chunks.append(("".join(buf).strip(), start))
            buf, start = [], None
            continue
        if start is None:
            if ch.isspace():
                continue
            start = SourceSpan(line, col)
        buf.append(ch)
    if start is not None:
        errors.append(ParseError(start, "statement not terminated by '.'"))
    return chunks, errors


def _lits(text: Optional[str]) -> List[Literal]:
    if not text:
        return []
    return [Literal.parse(part.replace(" ", "")) for part in text.split(",")]


def parse_theory(text: str) -> Theory:
    """Parse a theory document; raises ParseError for the first problem found."""
    chunks, errors = _split_statements(text)
    statements: List[_Statement] = []
    for chunk, span in chunks:
        keyword = chunk.split(None, 1)[0] if chunk else ""
        if keyword.startswith("goal"):
            keyword = "goal"
        pattern = _STATEMENTS.get(keyword)
        m = pattern.fullmatch(chunk) if pattern else None
        if m is None:
            errors.append(ParseError(span, f"cannot parse statement {chunk!r}"))
            continue
        statements.append(_Statement(keyword, m, span))

    def fail(st: _Statement, message: str, kind: str):
        errors.append(ParseError(st.span, message, kind))

    scales = [st for st in statements if st.keyword == "scale"]
    for st in scales[1:]:
        fail(st, "scale declared more than once", "syntax")
    n = 1
    if scales:
        n = int(scales[0].match["n"])
        if n < 1:
            fail(scales[0], f"scale must be at least 1, got {n}", "bad_grade")
            n = 1
    declared = bool(scales)

    decisions = {}
    for st in statements:
        if st.keyword == "decision":
            atom = st.match["atom"]
            if atom in decisions:
                fail(st, f"decision {atom} declared twice", "duplicate_id")
            decisions.setdefault(atom, st)

    def grade(st: _Statement) -> Optional[int]:
        level = int(st.match["level"])
        if not 1 <= level <= n:
            why = f"grade {level} outside 1..{n}"
            if not declared:
                why += " (no scale declared, default is 1)"
            fail(st, why, "bad_grade")
            return None
        return level

    beliefs: Dict[Literal, int] = {}
    pos_goals: Dict[Literal, int] = {}
    neg_goals: Dict[Literal, int] = {}
    strict: List[Rule] = []
    defeasible: List[Rule] = []
    rule_ids = set()

    for st in statements:
        m = st.match
        if st.keyword in ("belief", "goal"):
            lit = Literal.parse(m["lit"].replace(" ", ""))
            if st.keyword == "belief":
                base, what = beliefs, "belief"
            elif m["sign"] == "+":
                base, what = pos_goals, "goal+"
            else:
                base, what = neg_goals, "goal-"
            level = grade(st)
            if lit.atom in decisions:
                fail(st, f"{lit.atom} is declared a decision and used as a {what}", "role_clash")
                continue
            if lit in base:
                fail(st, f"{what} {lit} graded twice", "duplicate_id")
                continue
            others = [b for b in (beliefs, pos_goals, neg_goals) if b is not base and lit in b]
            if others:
                fail(st, f"{lit} already has another role", "role_clash")
                continue
            if level is not None:
                base[lit] = level
        elif st.keyword in ("srule", "drule"):
            rid = m["id"]
            body = _lits(m["body"])
            head = Literal.parse(m["head"].replace(" ", ""))
            assume = _lits(m.groupdict().get("assume"))
            if rid in rule_ids:
                fail(st, f"rule id {rid} used twice", "duplicate_id")
                continue
            rule_ids.add(rid)
            if head in body:
                fail(st, f"rule {rid} is self-supporting", "syntax")
                continue
            clash = [l for l in (*body, head, *assume) if l.atom in decisions and not l.positive]
            if clash:
                fail(st, f"rule {rid} negates decision atom {clash[0].atom}", "role_clash")
                continue
            if any(l.atom in decisions for l in assume):
                fail(st, f"rule {rid} assumes a decision atom", "role_clash")
                continue
            if sum(l.atom in decisions for l in body) > 1:
                fail(st, f"rule {rid} has more than one decision atom in its body", "role_clash")
                continue
            kind = RuleKind.STRICT if st.keyword == "srule" else RuleKind.DEFEASIBLE
            (strict if kind is RuleKind.STRICT else defeasible).append(
                Rule(rid, tuple(body), head, kind, frozenset(assume))
            )

    if errors:
        raise min(errors, key=lambda e: e.span)
    try:
        return Theory(
            decisions=frozenset(decisions),
            beliefs=beliefs,
            pos_goals=pos_goals,
            neg_goals=neg_goals,
            strict_rules=tuple(strict),
            defeasible_rules=tuple(defeasible),
            n=n,
        )
    except TheoryError as exc:  # backstop; the checks above should catch these
        raise ParseError(SourceSpan(1, 1), exc.message, exc.kind) from exc


def _rule_line(r: Rule) -> str:
    keyword = "srule" if r.is_strict else "drule"
    body = ", ".join(str(l) for l in r.body)
    text = f"{keyword} {r.id}: " + (body + " " if body else "") + f"{r.kind.arrow} {r.head}"
    if r.assumptions:
        text += " assuming " + ", ".join(str(l) for l in sorted(r.assumptions))
    return text + "."


def serialize_theory(t: Theory) -> str:
    """Canonical text for ``t``; ``parse_theory`` reads it back to an equal theory."""
    lines = [f"scale {t.n}."]
    lines += [f"decision {d}." for d in sorted(t.decisions)]
    for keyword, base in (("belief", t.beliefs), ("goal+", t.pos_goals), ("goal-", t.neg_goals)):
        lines += [f"{keyword} {base[l]}: {l}." for l in sorted(base)]
    lines += [_rule_line(r) for r in t.strict_rules]
    lines += [_rule_line(r) for r in t.defeasible_rules]
    return "\n".join(lines) + "\n"


def load_theory(path) -> Theory:
    with open(path, encoding="utf-8") as fh:
        return parse_theory(fh.read())
