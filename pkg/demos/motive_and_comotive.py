"""
One t-module, two dictionaries
===============================

A two-dimensional t-module over F_3(T) is abelian and coabelian of rank 3.
On the comotive side the action needs the cube root of T.
"""

from pathlib import Path

from tmotives import OrderSpec, TModuleData, analyze_tmodule, parse_input
from tmotives.diagram import ascii_diagram

doc = parse_input((Path(__file__).parent / "inputs" / "two_dimensional.yaml").read_text())
tm = TModuleData(doc.K, doc.matrix)

# the motive, with the second sheet ordered first
motive = analyze_tmodule(tm, side="motive", order=OrderSpec((2, 1)))
print(motive.verdict, "of rank", motive.rank)
print("basis:", [str(e) for e in motive.model.basis_elements])
for row in motive.model.action:
    print("   ", [str(x) for x in row])
print(ascii_diagram(motive.janet, motive.ring.names, "k"))

# the comotive
comotive = analyze_tmodule(tm, side="comotive", order=OrderSpec((1, 2)))
print(comotive.verdict, "of rank", comotive.rank, "at perfection level", comotive.level)
for row in comotive.model.action:
    print("   ", [str(x) for x in row])
