"""Command-line front end: theory file in, report out.

Exit codes: 0 ok, 1 unreadable or malformed theory, 2 argument cap
exceeded, 3 solver and oracle disagree, 64 bad command-line flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from .arguments import DEFAULT_MAX_ARGS, ConstructionOverflow
from .attacks import Framework, build_framework
from .decide import Attitude, DecisionRanking, output, rank_decisions
from .parser import ParseError, parse_theory
from .preference import PreferencePolicy
from .semantics import ORACLE_LIMIT, Semantics, extensions, oracle_extensions

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_OVERFLOW = 2
EXIT_ORACLE = 3
EXIT_USAGE = 64


@dataclass
class RunConfig:
    input_path: str
    semantics: Semantics = Semantics.GROUNDED
    attitude: str = "pessimistic"
    policy: PreferencePolicy = PreferencePolicy.CERTAINTY_BASED
    format: str = "text"
    explain: bool = False
    oracle_check: bool = False
    max_args: int = DEFAULT_MAX_ARGS

    @property
    def attitudes(self) -> List[Attitude]:
        if self.attitude == "both":
            return [Attitude.PESSIMISTIC, Attitude.OPTIMISTIC]
        return [Attitude(self.attitude)]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="argdecide", description="Argument-based inference and decision ranking.")
    p.add_argument("input_path", metavar="THEORY", help="theory file")
    p.add_argument("--semantics", choices=[s.value for s in Semantics], default="grounded")
    p.add_argument("--attitude", choices=["pessimistic", "optimistic", "both"], default="pessimistic")
    p.add_argument("--policy", choices=[x.value for x in PreferencePolicy], default="certainty_based")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--explain", action="store_true", help="print argument trees per decision")
    p.add_argument("--oracle-check", action="store_true",
                   help=f"cross-check extensions by brute force (at most {ORACLE_LIMIT} arguments)")
    p.add_argument("--max-args", type=_positive, default=DEFAULT_MAX_ARGS)
    return p


def _ids(f: Framework, ids) -> List[str]:
    return [f.args[i].name for i in sorted(ids)]


def _tree(f: Framework, i: int, depth: int = 0) -> List[str]:
    lines = ["  " * depth + f.args.render(i)]
    for c in f.args[i].children:
        lines += _tree(f, c, depth + 1)
    return lines


def build_report(cfg: RunConfig, f: Framework, exts, out, rankings: List[DecisionRanking],
                 oracle_note: Optional[str]) -> dict:
    t = f.theory
    report = {
        "theory": {
            "scale": t.n,
            "decisions": sorted(t.decisions),
            "beliefs": {str(l): t.beliefs[l] for l in sorted(t.beliefs)},
            "goals_pos": {str(l): t.pos_goals[l] for l in sorted(t.pos_goals)},
            "goals_neg": {str(l): t.neg_goals[l] for l in sorted(t.neg_goals)},
            "strict_rules": [str(r) for r in t.strict_rules],
            "defeasible_rules": [str(r) for r in t.defeasible_rules],
        },
        "settings": {
            "semantics": cfg.semantics.value,
            "policy": cfg.policy.value,
            "attitude": cfg.attitude,
        },
        "arguments": [
            {
                "id": a.name,
                "structure": f.args.render(a.id).split(": ", 1)[1],
                "category": a.category.value,
                "conclusion": str(a.conclusion),
                "force": [f.forces[a.id].cert] if f.forces[a.id].imp is None
                else [f.forces[a.id].cert, f.forces[a.id].imp],
                "subs": _ids(f, a.subs),
            }
            for a in f.args
        ],
        "defeats": [
            {"attacker": f.args[x].name, "target": f.args[y].name,
             "kinds": [k.value for k in kinds]}
            for (x, y), kinds in f.defeats.items()
        ],
        "extensions": [_ids(f, e) for e in exts],
        "output": [str(l) for l in sorted(out.output)],
        "rankings": [],
        "warnings": list(out.warnings),
    }
    for r in rankings:
        entry = {
            "attitude": r.attitude.value,
            "groups": [list(g) for g in r.order],
            "justification": {
                d: [{"argument": f.args[i].name, "force": str(fc)} for i, fc in vec]
                for d, vec in r.justification.items()
            },
        }
        if cfg.explain:
            entry["trees"] = {
                d: [_tree(f, i) for i, _ in vec] for d, vec in r.justification.items()
            }
        report["rankings"].append(entry)
        report["warnings"] += [w for w in r.warnings if w not in report["warnings"]]
    if oracle_note is not None:
        report["oracle"] = oracle_note
    return report


def render_text(report: dict) -> str:
    th = report["theory"]
    lines = ["THEORY"]
    lines.append(f"  scale: {th['scale']}")
    lines.append(f"  decisions: {', '.join(th['decisions']) or '-'}")
    lines.append("  beliefs: " + (", ".join(f"{k}@{v}" for k, v in th["beliefs"].items()) or "-"))
    lines.append("  goals+: " + (", ".join(f"{k}@{v}" for k, v in th["goals_pos"].items()) or "-"))
    lines.append("  goals-: " + (", ".join(f"{k}@{v}" for k, v in th["goals_neg"].items()) or "-"))
    for r in th["strict_rules"] + th["defeasible_rules"]:
        lines.append(f"  rule {r}")
    lines.append("")
    lines.append("ARGUMENTS")
    for a in report["arguments"]:
        force = a["force"][0] if len(a["force"]) == 1 else f"({a['force'][0]}, {a['force'][1]})"
        lines.append(f"  {a['id']}: {a['structure']}  {a['category']}  conc={a['conclusion']}  force={force}")
    lines.append("")
    lines.append("DEFEATS")
    for d in report["defeats"]:
        lines.append(f"  {d['attacker']} -> {d['target']}  ({'+'.join(d['kinds'])})")
    lines.append("")
    lines.append(f"EXTENSIONS ({report['settings']['semantics']})")
    for e in report["extensions"]:
        lines.append("  {" + ", ".join(e) + "}")
    if not report["extensions"]:
        lines.append("  (none)")
    lines.append("")
    lines.append("OUTPUT")
    lines.append("  " + (", ".join(report["output"]) or "(empty)"))
    for r in report["rankings"]:
        lines.append("")
        lines.append(f"RANKING ({r['attitude']})")
        for rank, group in enumerate(r["groups"], 1):
            for d in group:
                vec = ", ".join(f"{j['argument']} {j['force']}" for j in r["justification"][d])
                lines.append(f"  {rank}. {d}  [{vec}]")
            if "trees" in r:
                for d in group:
                    for tree in r["trees"][d]:
                        lines += ["       " + line for line in tree]
    if "oracle" in report:
        lines.append("")
        lines.append(f"ORACLE: {report['oracle']}")
    if report["warnings"]:
        lines.append("")
        lines.append("WARNINGS")
        lines += [f"  {w}" for w in report["warnings"]]
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with open(cfg.input_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"argdecide: cannot read {cfg.input_path}: {exc.strerror or exc}", file=err)
        return EXIT_PARSE
    try:
        theory = parse_theory(text)
    except ParseError as exc:
        print(f"{cfg.input_path}:{exc.span.line}:{exc.span.column}: {exc.kind}: {exc.message}", file=err)
        return EXIT_PARSE
    try:
        f = build_framework(theory, cfg.policy, cfg.max_args)
    except ConstructionOverflow as exc:
        print(f"argdecide: {exc}", file=err)
        return EXIT_OVERFLOW

    exts = extensions(f, cfg.semantics)
    oracle_note = None
    if cfg.oracle_check:
        if len(f.args) <= ORACLE_LIMIT:
            expected = oracle_extensions(f, cfg.semantics)
            if expected != exts:
                print(f"argdecide: oracle mismatch for {cfg.semantics.value}: "
                      f"solver {list(exts)} vs oracle {list(expected)}", file=err)
                return EXIT_ORACLE
            oracle_note = "agree"
        else:
            oracle_note = f"skipped ({len(f.args)} arguments > {ORACLE_LIMIT})"

    inference = output(f, cfg.semantics)
    rankings = [rank_decisions(f, a, cfg.semantics) for a in cfg.attitudes]
    report = build_report(cfg, f, exts, inference, rankings, oracle_note)
    if cfg.format == "structured":
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(render_text(report))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    ns = make_parser().parse_args(argv)
    cfg = RunConfig(
        input_path=ns.input_path,
        semantics=Semantics(ns.semantics),
        attitude=ns.attitude,
        policy=PreferencePolicy(ns.policy),
        format=ns.format,
        explain=ns.explain,
        oracle_check=ns.oracle_check,
        max_args=ns.max_args,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
