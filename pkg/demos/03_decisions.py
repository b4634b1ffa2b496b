"""
Ranking decisions
=================

A pessimist looks at the strongest reasons for each option; an optimist
at how weak and few the reasons against it are.
"""

import pathlib

from argdecide import build_framework, rank_decisions
from argdecide.parser import load_theory

HERE = pathlib.Path(__file__).resolve().parent


def show(name, attitudes=("pessimistic",)):
    f = build_framework(load_theory(HERE / "theories" / f"{name}.theory"))
    for attitude in attitudes:
        r = rank_decisions(f, attitude)
        print(f"{name} ({attitude})")
        for rank, group in enumerate(r.order, 1):
            for d in group:
                vec = ", ".join(f"{f.args[i].name} {fc}" for i, fc in r.justification[d])
                print(f"  {rank}. {d:12s} [{vec}]")


# Train: certainty 3, goal importance 2 -> strength 2.
# Plane: certainty 1, goal importance 5 -> strength 1.
show("travel")

# Taking the umbrella reaches a goal; leaving it only risks a bad outcome.
show("umbrella", ("pessimistic", "optimistic"))

# Without beliefs every argument is certain and only goal grades matter:
# a reaches g1 and g4, c only g1, b reaches g2 and g3.
show("possibilistic")
