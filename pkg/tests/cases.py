"""Builders for the golden cases and seeded random inputs shared by the tests."""

from __future__ import annotations

import random

from tmotives import (
    COMOTIVE,
    MOTIVE,
    FunctionField,
    ModElem,
    OrderSpec,
    SkewRing,
    TModuleData,
    TwistPair,
    tau_ring,
)

Q = 3


def field(q: int = Q) -> FunctionField:
    return FunctionField.of_order(q)


# -- running example --------------------------------------------------------


def running_ring(K):
    """K{rho, sigma} where rho is Frobenius and sigma commutes with K."""
    return SkewRing(K, TwistPair(1, 0))


def running_gens(K):
    R = running_ring(K)
    rho, sig, T = R.rho(), R.sigma(), R.scalar(K.theta())
    q = K.q
    g1 = ModElem.from_vector(R, [rho**2, -(sig**2) + T])
    g2 = ModElem.from_vector(R, [-(sig**2) + T, R.one()])
    g3 = ModElem.from_vector(R, [R.zero(), rho**2 - (sig**2 - T) * (sig**2 - T ** (q * q))])
    return R, [g1, g2, g3]


# -- t-modules ----------------------------------------------------------------


def tmodule(K, rows):
    """TModuleData from rows of callables/values in K{tau}."""
    return TModuleData(K, rows)


def drinfeld(K, coeffs):
    """phi_t = theta + a_1 tau + ... + a_r tau^r."""
    R = tau_ring(K)
    D = R.scalar(K.theta())
    for i, a in enumerate(coeffs, start=1):
        D = D + R.monomial(i, 0, a)
    return TModuleData(K, [[D]])


def carlitz_power(K, d):
    R = tau_ring(K)
    T = R.scalar(K.theta())
    D = [[R.zero() for _ in range(d)] for _ in range(d)]
    for i in range(d):
        D[i][i] = T
        if i + 1 < d:
            D[i][i + 1] = R.one()
    D[d - 1][0] = D[d - 1][0] + R.rho()
    return TModuleData(K, D)


def two_dimensional(K):
    R = tau_ring(K)
    tau, T = R.rho(), R.scalar(K.theta())
    return TModuleData(K, [[T + tau**2, tau**3], [1 + tau, T + tau**2]])


def quasi_periodic(K, psi_coeffs, delta_coeffs):
    """phi_t = [[psi_t, 0], [delta_t, theta]] with delta_t in tau K{tau}."""
    R = tau_ring(K)
    T = R.scalar(K.theta())
    psi = T
    for i, a in enumerate(psi_coeffs, start=1):
        psi = psi + R.monomial(i, 0, a)
    delta = R.zero()
    for i, a in enumerate(delta_coeffs, start=1):
        if a:
            delta = delta + R.monomial(i, 0, a)
    return TModuleData(K, [[psi, R.zero()], [delta, T]])


def golden_presentations():
    """(name, gens, order) for the six golden cases of the oracle suite."""
    from tmotives import presentation_from_tmodule

    K = field()
    out = []
    R, gens = running_gens(K)
    out.append(("running example", gens, OrderSpec.identity(2)))
    gens, _ = presentation_from_tmodule(carlitz_power(K, 2), MOTIVE)
    out.append(("carlitz square", gens, OrderSpec.identity(2)))
    gens, _ = presentation_from_tmodule(drinfeld(K, [K.theta(), K.one]), MOTIVE)
    out.append(("drinfeld rank 2", gens, OrderSpec.identity(1)))
    gens, _ = presentation_from_tmodule(quasi_periodic(K, [K.one, K.theta()], [K.one, K.zero, K.theta()]), MOTIVE)
    out.append(("quasi-periodic", gens, OrderSpec((2, 1))))
    gens, _ = presentation_from_tmodule(two_dimensional(K), MOTIVE)
    out.append(("two-dimensional motive", gens, OrderSpec((2, 1))))
    gens, _ = presentation_from_tmodule(two_dimensional(K), COMOTIVE)
    out.append(("two-dimensional comotive", gens, OrderSpec((1, 2))))
    return out


def action_residues(J, basis, action):
    """Normal forms of rho*e_a - sum_b action[a][b]*e_b; all zero iff the action is right."""
    from tmotives import normal_form

    ring = J.pairs[0].b.ring
    out = []
    for a, e in enumerate(basis):
        image = e.left_mul(ring.rho())
        for b, f in enumerate(basis):
            image = image - f.left_mul(action[a][b])
        out.append(normal_form(image, J))
    return out


# -- random inputs ------------------------------------------------------------


def random_poly_elem(K, rng, max_deg=2, level=0):
    """Element of F_q[T] (at the given perfection level) of degree <= max_deg."""
    coeffs = [rng.randrange(K.q) for _ in range(rng.randint(0, max_deg) + 1)]
    return K.poly(coeffs, level)


def random_skew(R, rng, max_k=2, max_j=2, terms=3, max_deg=2, min_terms=0):
    f = R.zero()
    for _ in range(rng.randint(min_terms, terms)):
        k, j = rng.randint(0, max_k), rng.randint(0, max_j)
        f = f + R.monomial(k, j, random_poly_elem(R.K, rng, max_deg))
    return f


def random_presentation(seed: int):
    """Random small presentation: d <= 2, entry degrees <= 2, q in {2, 3}."""
    rng = random.Random(seed)
    K = field(rng.choice([2, 3]))
    twist = rng.choice([TwistPair(1, 0), TwistPair(-1, 0), TwistPair(0, 1), TwistPair(0, 0)])
    R = SkewRing(K, twist)
    d = rng.randint(1, 2)
    gens = []
    for _ in range(rng.randint(2, 3) if d == 1 else 2):
        g = ModElem.from_vector(R, [random_skew(R, rng, terms=2, min_terms=1) for _ in range(d)])
        if not g.is_zero():
            gens.append(g)
    if not gens:
        gens.append(ModElem.from_vector(R, [R.rho() + R.sigma()] + [R.zero()] * (d - 1)))
    order = OrderSpec(tuple(rng.sample(range(1, d + 1), d)))
    return R, gens, order
