"""
A Janet basis over a skew polynomial ring
==========================================

Three relations in a free module of rank 2 over K{rho, sigma}, where rho
twists constants by Frobenius and sigma commutes with them.
"""

from tmotives import FunctionField, ModElem, OrderSpec, SkewRing, TwistPair, janet_algorithm
from tmotives.structure import analyze

# the coefficient field F_3(T) and the ring
K = FunctionField.of_order(3)
R = SkewRing(K, TwistPair(1, 0))
rho, sigma, T = R.rho(), R.sigma(), R.scalar(K.theta())

# the relations, one row per generator
g1 = ModElem.from_vector(R, [rho**2, -(sigma**2) + T])
g2 = ModElem.from_vector(R, [-(sigma**2) + T, R.one()])
g3 = ModElem.from_vector(R, [R.zero(), rho**2 - (sigma**2 - T) * (sigma**2 - T**9)])

# the Janet basis: each element comes with the variables allowed to multiply it
J = janet_algorithm([g1, g2, g3], OrderSpec.identity(2))
for b, mu in J.as_tuples():
    print(sorted(mu), b)
print("rounds:", J.rounds)

# the quotient is free of rank 2 over K[sigma]
report, model = analyze(J)
print("n =", report.n, " m =", report.m, " rank =", report.rank)

# pick the basis k1, rho*k1 and print how rho acts on it
model = model.reorder([model.index_of((1, 0)), model.index_of((1, 1))])
for e, row in zip(model.basis_elements, model.action):
    print("rho *", e, "=", [str(x) for x in row])
