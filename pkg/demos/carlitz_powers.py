"""
Tensor powers of the Carlitz module
====================================

The d-th tensor power has a t-motive of rank 1 on which tau acts by (t - T)^d.
"""

from tmotives import FunctionField, TModuleData, analyze_tmodule, tau_ring

K = FunctionField.of_order(3)
R = tau_ring(K)
T = R.scalar(K.theta())


def carlitz_power(d):
    # theta on the diagonal, ones above it, and tau in the bottom left corner
    D = [[R.zero()] * d for _ in range(d)]
    for i in range(d):
        D[i][i] = T
        if i + 1 < d:
            D[i][i + 1] = R.one()
    D[d - 1][0] = D[d - 1][0] + R.rho()
    return TModuleData(K, D)


for d in range(1, 6):
    res = analyze_tmodule(carlitz_power(d))
    print(d, res.verdict, "rank", res.rank, "tau acts by", res.model.action[0][0])

# for d = 2 the algorithm needs one extra element before it stops
res = analyze_tmodule(carlitz_power(2), keep_history=True)
print("rounds:", res.janet.rounds)
for b, mu in res.janet.as_tuples():
    print(sorted(mu), b)
