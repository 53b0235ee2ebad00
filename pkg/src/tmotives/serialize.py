"""Exact JSON-compatible encodings of fields, rings and module elements."""

from __future__ import annotations

from .coeff import FunctionField, elem_from_data
from .freemod import ModElem, OrderSpec
from .fq import GF
from .janet import ConePair, JanetSet
from .skew import SkewPoly, SkewRing, TwistPair


def field_to_data(K: FunctionField) -> dict:
    F = K.F
    return {"p": F.p, "n": F.n, "q": F.q, "modulus": list(F.modulus) if F.n > 1 else None}


def field_from_data(data: dict) -> FunctionField:
    mod = data.get("modulus")
    return FunctionField(GF(int(data["q"]), tuple(mod) if mod else None))


def ring_to_data(R: SkewRing) -> dict:
    return {"names": list(R.names), "twist": [R.a_rho, R.a_sigma]}


def ring_from_data(K: FunctionField, data: dict) -> SkewRing:
    return SkewRing(K, TwistPair(*data["twist"]), tuple(data["names"]))


def skew_to_data(f: SkewPoly) -> list:
    return [[k, j, c.to_data()] for (k, j), c in sorted(f.terms.items())]


def skew_from_data(R: SkewRing, data: list) -> SkewPoly:
    return SkewPoly(R, {(k, j): elem_from_data(R.K, c) for k, j, c in data})


def elem_to_data(f: ModElem) -> dict:
    return {"d": f.d, "terms": [[i, k, j, c.to_data()] for (i, k, j), c in sorted(f.terms.items())]}


def elem_from_data_mod(R: SkewRing, data: dict) -> ModElem:
    return ModElem(R, int(data["d"]), {(i, k, j): elem_from_data(R.K, c) for i, k, j, c in data["terms"]})


def mu_to_data(mu, R: SkewRing) -> list:
    """Multiplicative variables by their ring names, greater variable first."""
    return [name for var, name in zip(("rho", "sigma"), R.names) if var in mu]


def mu_from_data(names, R: SkewRing) -> frozenset:
    lookup = dict(zip(R.names, ("rho", "sigma")))
    return frozenset(lookup[n] for n in names)


def janet_to_data(J: JanetSet, R: SkewRing) -> dict:
    return {
        "order": list(J.order.perm),
        "certified": J.certified,
        "rounds": J.rounds,
        "pairs": [{"b": elem_to_data(p.b), "mu": mu_to_data(p.mu, R)} for p in J.pairs],
    }


def janet_from_data(R: SkewRing, data: dict) -> JanetSet:
    pairs = [ConePair(elem_from_data_mod(R, p["b"]), mu_from_data(p["mu"], R)) for p in data["pairs"]]
    return JanetSet(pairs, OrderSpec(tuple(data["order"])), bool(data.get("certified")), int(data.get("rounds", 0)))


def matrix_to_data(A: list) -> list:
    return [[skew_to_data(x) for x in row] for row in A]


def matrix_from_data(R: SkewRing, data: list) -> list:
    return [[skew_from_data(R, x) for x in row] for row in data]
