"""
Three ways to attack an argument
================================

The penguin theory shows rebuttal, undercut (denying that a rule applies)
and attack on an assumption a rule relies on.
"""

import pathlib

from argdecide import build_framework, output
from argdecide.parser import load_theory, parse_theory

HERE = pathlib.Path(__file__).resolve().parent
t = load_theory(HERE / "theories" / "penguin.theory")
f = build_framework(t)

for i in range(len(f)):
    print(f.args.render(i))
print()
for (x, y), kinds in f.defeats.items():
    print(f"{f.args[x].name} defeats {f.args[y].name} by {', '.join(k.value for k in kinds)}")

# r3 undercuts r2 whatever the forces, so nothing concludes flies
print("\noutput:", sorted(map(str, output(f).output)))

# Without the undercutting rule the assumption ~injured is still contested:
# injured (stratum 2) beats ~injured (stratum 1) and so defeats every
# flying argument that assumes the animal is fine.
t2 = parse_theory(open(HERE / "theories" / "penguin.theory").read().replace("drule r3: penguin => ~@r2.", ""))
print("without r3:", sorted(map(str, output(build_framework(t2)).output)))
