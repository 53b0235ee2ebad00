"""
From a motive back to a t-module
=================================

Start with tau acting on K[t]^r and ask for the t-module it comes from.
"""

from tmotives import FunctionField, MotiveData, analyze_tmodule, reverse_ring, tmodule_from_motive

K = FunctionField.of_order(3)
R = reverse_ring(K, "motive")
t, T = R.rho(), R.scalar(K.theta())

# tau e = (t - T) e gives back the Carlitz module
res = tmodule_from_motive(MotiveData(K, [[t - T]]))
print("phi_t =", res.tmodule.D[0][0])

# the square has a two-dimensional t-module
res = tmodule_from_motive(MotiveData(K, [[(t - T) ** 2]]))
print("dimension", res.tmodule.d)
for row in res.tmodule.D:
    print("   ", [str(x) for x in row])

# going forward again gives rank 1 and the same action
fwd = analyze_tmodule(res.tmodule)
print(fwd.verdict, "rank", fwd.rank, "action", fwd.model.action[0][0])

# a determinant that is not a power of (t - T) is rejected
try:
    tmodule_from_motive(MotiveData(K, [[t - T * T]]))
except Exception as exc:
    print(type(exc).__name__ + ":", exc)
