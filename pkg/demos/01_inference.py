"""
Inference from an inconsistent stratified base
===============================================

Two beliefs pull in opposite directions. Arguments are built, they rebut
each other, and only what survives in every extension is inferred.
"""

import pathlib

from argdecide import build_framework, extensions, output
from argdecide.parser import load_theory

HERE = pathlib.Path(__file__).resolve().parent

# Equal strata: neither side wins the rebuttal.
t = load_theory(HERE / "theories" / "rebuttal.theory")
f = build_framework(t)
for i in range(len(f)):
    print(f.args.render(i), " force", f.forces[i])
print("defeats:", sorted((f.args[x].name, f.args[y].name) for x, y in f.defeats))

for sem in ("grounded", "preferred"):
    exts = [[f.args[i].name for i in e] for e in extensions(f, sem)]
    print(f"{sem:9s} extensions {exts}  output {sorted(map(str, output(f, sem).output))}")

# A reliable report against a rumour: the stronger argument defeats the
# weaker one, and the strict rule carries its conclusion further.
f = build_framework(load_theory(HERE / "theories" / "stratified.theory"))
print()
print("stratified output:", sorted(map(str, output(f).output)))
