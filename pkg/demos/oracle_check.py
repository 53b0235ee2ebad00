"""
Checking a Janet basis by brute force
======================================

The oracle only uses linear algebra over K inside a box of degrees, so it
gives an independent check on the normal form machinery.
"""

from tmotives import DegreeBox, FunctionField, ModElem, OrderSpec, SkewRing, TwistPair
from tmotives import janet_algorithm, truncated_submodule, verify_janet
from tmotives.janet import ConePair, JanetSet

K = FunctionField.of_order(3)
R = SkewRing(K, TwistPair(1, 0))
rho, sigma, T = R.rho(), R.sigma(), R.scalar(K.theta())
gens = [
    ModElem.from_vector(R, [rho**2, -(sigma**2) + T]),
    ModElem.from_vector(R, [-(sigma**2) + T, R.one()]),
    ModElem.from_vector(R, [R.zero(), rho**2 - (sigma**2 - T) * (sigma**2 - T**9)]),
]
J = janet_algorithm(gens, OrderSpec.identity(2))
box = DegreeBox(3, 4)

# rho^2 g2 lies in the span of the shifted generators
span = truncated_submodule(gens, box, J.order)
print("rho^2 g2 in span:", span.contains(gens[1].shift(2, 0)))

# all four checks pass for the computed basis
print(verify_janet(J, gens, box).checks)

# widen one cone on purpose and the disjointness check notices
pairs = list(J.pairs)
pairs[1] = ConePair(pairs[1].b, frozenset({"rho", "sigma"}))
print(verify_janet(JanetSet(pairs, J.order), gens, box).checks)
