"""Normal forms, Janet decompositions and the Janet algorithm for submodules
of a free K{rho, sigma}-module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .freemod import ModElem, OrderSpec, leading

log = logging.getLogger(__name__)

RHO = "rho"
SIGMA = "sigma"
FULL = frozenset({RHO, SIGMA})
SIGMA_ONLY = frozenset({SIGMA})
RHO_ONLY = frozenset({RHO})
EMPTY = frozenset()


class JanetError(Exception):
    pass


class RoundsExceeded(JanetError):
    """The Janet algorithm hit its round limit; ``state`` holds the last set."""

    def __init__(self, rounds: int, state: list):
        super().__init__(f"Janet algorithm did not finish within {rounds} rounds")
        self.rounds = rounds
        self.state = state


@dataclass(frozen=True)
class ConePair:
    b: ModElem
    mu: frozenset

    def __post_init__(self):
        if not self.b:
            raise ValueError("cone generator must be nonzero")
        object.__setattr__(self, "mu", frozenset(self.mu))


def in_cone(mono, lm, mu) -> bool:
    """Is mono in Mon(mu) * lm?"""
    i, k, j = mono
    i0, k0, j0 = lm
    if i != i0:
        return False
    if RHO in mu:
        if k < k0:
            return False
    elif k != k0:
        return False
    if SIGMA in mu:
        return j >= j0
    return j == j0


def divides(lm1, lm2) -> bool:
    """lm1 divides lm2 (same sheet, componentwise <=)."""
    return lm1[0] == lm2[0] and lm1[1] <= lm2[1] and lm1[2] <= lm2[2]


@dataclass
class JanetSet:
    """Cone pairs (b, mu) with the order they were built for.

    ``certified`` is set only by :func:`janet_algorithm`.
    """

    pairs: list
    order: OrderSpec
    certified: bool = False
    rounds: int = 0
    history: list = field(default_factory=list, repr=False)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def heads(self) -> list:
        return [p.b for p in self.pairs]

    def leading_monomials(self) -> list:
        return [leading(p.b, self.order)[0] for p in self.pairs]

    def as_tuples(self) -> list:
        """[(b, mu)] for comparisons in tests."""
        return [(p.b, p.mu) for p in self.pairs]


class _Reducer:
    """Precomputed (lm, lc, b, mu) data for repeated reductions."""

    def __init__(self, pairs, order: OrderSpec):
        self.order = order
        self.by_sheet = {}
        for idx, p in enumerate(pairs):
            lm, lc = leading(p.b, order)
            self.by_sheet.setdefault(lm[0], []).append((order.key(lm), idx, lm, lc, p.b, p.mu))
        for lst in self.by_sheet.values():
            # greatest lm first, then list order
            lst.sort(key=lambda t: (-t[0][1], -t[0][2], t[1]))

    def find(self, mono):
        for _, _, lm, lc, b, mu in self.by_sheet.get(mono[0], ()):
            if in_cone(mono, lm, mu):
                return lm, lc, b
        return None

    def reduce(self, g: ModElem) -> ModElem:
        order = self.order
        h = dict(g.terms)
        ring = g.ring
        bound = None
        while True:
            hit = None
            for m in sorted(h, key=order.key, reverse=True):
                if bound is not None and order.key(m) >= bound:
                    continue
                found = self.find(m)
                if found is not None:
                    hit = (m, found)
                    break
            if hit is None:
                return ModElem(ring, g.d, h)
            m, (lm, lc, b) = hit
            dk, dj = m[1] - lm[1], m[2] - lm[2]
            sh = ring.shift(dk, dj)
            c = h[m] / lc.frobenius(sh)
            for (i, k, j), x in b.terms.items():
                key = (i, k + dk, j + dj)
                y = c * x.frobenius(sh)
                s = h.get(key)
                if s is None:
                    h[key] = -y
                else:
                    s = s - y
                    if s:
                        h[key] = s
                    else:
                        del h[key]
            bound = order.key(m)


def primitive_part(g: ModElem) -> ModElem:
    """g scaled by a monic element of K so its coefficients are coprime polynomials.

    Reductions divide by leading coefficients, so fresh elements pick up
    denominators and common factors that would otherwise snowball; elements
    that are already primitive come back unchanged.
    """
    if not g.terms:
        return g
    coeffs = list(g.terms.values())
    if all(c.den == (1,) and c.level == 0 for c in coeffs):
        if len(coeffs) == 1 or any(len(c.num) == 1 for c in coeffs):
            return g
    K = coeffs[0].K
    P, q = K.P, K.q
    L = max(c.level for c in coeffs)
    den, num = (1,), ()
    for c in coeffs:
        k = q ** (L - c.level)
        d = P.inflate(c.den, k)
        den = P.mul(den, P.exact_div(d, P.gcd(den, d)))
        num = P.gcd(num, P.inflate(c.num, k)) if num else P.monic(P.inflate(c.num, k))
        if len(num) == 1 and den == (1,) and L == 0:
            return g
    factor = K.make(L, den, num)
    return g if factor.is_one() else g.scale(factor)


def _pairs_of(T):
    if isinstance(T, JanetSet):
        return T.pairs, T.order
    raise TypeError("expected a JanetSet")


def normal_form(g: ModElem, T: JanetSet) -> ModElem:
    """Reduce g modulo the cones of T, largest reducible monomial first."""
    pairs, order = _pairs_of(T)
    if not g:
        return g
    return _Reducer(pairs, order).reduce(g)


def normal_form_full(g: ModElem, H, order: OrderSpec) -> ModElem:
    """Normal form with respect to a plain set H (every mu = {rho, sigma})."""
    if not g:
        return g
    return _Reducer([ConePair(h, FULL) for h in H], order).reduce(g)


def _element_key(g: ModElem, order: OrderSpec):
    return [order.key(m) for m in sorted(g.terms, key=order.key, reverse=True)]


def sort_descending(G, order: OrderSpec) -> list:
    """Descending by leading monomial; ties by the full descending monomial sequence."""
    return sorted(G, key=lambda g: _element_key(g, order), reverse=True)


def janet_decomposition(G, order: OrderSpec) -> JanetSet:
    """Cone decomposition of the union of the full cones of an auto-reduced G."""
    G = [g for g in G]
    if any(not g for g in G):
        raise JanetError("Janet decomposition needs nonzero elements")
    lms = [leading(g, order)[0] for g in G]
    for a in range(len(G)):
        for b in range(len(G)):
            if a != b and divides(lms[a], lms[b]):
                raise JanetError("Janet decomposition needs an auto-reduced set")
    G = sort_descending(G, order)
    pairs = []
    prev = {}
    for g in G:
        lm = leading(g, order)[0]
        sheet = lm[0]
        if sheet not in prev:
            pairs.append(ConePair(g, FULL))
        else:
            span = prev[sheet][1] - lm[1]
            for k in range(span - 1, -1, -1):
                pairs.append(ConePair(g.shift(k, 0), SIGMA_ONLY))
        prev[sheet] = lm
    return JanetSet(pairs, order)


def auto_reduce(G, order: OrderSpec) -> list:
    """Reduce each element by the others until nothing changes; zeros are dropped."""
    G = sort_descending([g for g in G if g], order)
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(G):
            others = G[:idx] + G[idx + 1 :]
            h = normal_form_full(g, others, order)
            if h != g:
                h = primitive_part(h)
                G = others + ([h] if h else [])
                G = sort_descending(G, order)
                changed = True
                break
    return G


def janet_algorithm(G, order: OrderSpec, max_rounds: int = 1000, keep_history: bool = False) -> JanetSet:
    """Janet basis of the submodule generated by G."""
    G = [g for g in G if g]
    history = []
    for rnd in range(1, max_rounds + 1):
        G = auto_reduce(G, order)
        J = janet_decomposition(G, order)
        P = []
        reducer = _Reducer(J.pairs, order)
        for pair in J.pairs:
            for nu in (RHO, SIGMA):
                if nu in pair.mu:
                    continue
                prod = pair.b.shift(1, 0) if nu == RHO else pair.b.shift(0, 1)
                h = reducer.reduce(prod)
                if h:
                    h = primitive_part(h)
                if h and h not in P:
                    P.append(h)
        if keep_history:
            history.append({"G": list(G), "J": list(J.pairs), "P": list(P)})
        log.debug("janet round %d: |J|=%d |P|=%d", rnd, len(J), len(P))
        if not P:
            J.certified = True
            J.rounds = rnd
            J.history = history
            return J
        G = J.heads() + P
    raise RoundsExceeded(max_rounds, G)
