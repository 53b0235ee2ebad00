"""Small dense matrices over a skew polynomial ring (lists of lists of SkewPoly)."""

from __future__ import annotations

from .skew import SkewPoly, SkewRing, coeff_twist, skew_mul


def zeros(ring: SkewRing, r: int, c: int) -> list:
    return [[ring.zero() for _ in range(c)] for _ in range(r)]


def identity(ring: SkewRing, n: int) -> list:
    m = zeros(ring, n, n)
    for i in range(n):
        m[i][i] = ring.one()
    return m


def matmul(A: list, B: list, ring: SkewRing) -> list:
    """A*B with entries multiplied in written order."""
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = zeros(ring, len(A), cols)
    for i, row in enumerate(A):
        if len(row) != inner:
            raise ValueError("matrix shapes do not match")
        for k in range(cols):
            acc = ring.zero()
            for j in range(inner):
                a = row[j]
                if a:
                    b = B[j][k]
                    if b:
                        acc = acc + skew_mul(a, b)
            out[i][k] = acc
    return out


def twist(A: list, power: int) -> list:
    """Entrywise coefficient Frobenius."""
    return [[coeff_twist(x, power) for x in row] for row in A]


def transpose(A: list) -> list:
    return [list(r) for r in zip(*A)] if A else []


def is_identity(A: list) -> bool:
    return all(
        (x.terms == {(0, 0): x.ring.K.one}) if i == j else not x for i, row in enumerate(A) for j, x in enumerate(row)
    )


def equal(A: list, B: list) -> bool:
    return len(A) == len(B) and all(len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(A, B))


def render(A: list) -> list:
    return [[str(x) for x in row] for row in A]


def max_level(A: list) -> int:
    return max((x.max_level() for row in A for x in row), default=0)


def copy(A: list) -> list:
    return [list(r) for r in A]


def scalar_matrix(ring: SkewRing, rows) -> list:
    """Matrix of constants/skew polynomials coerced into ring."""
    return [[ring.coerce(x) for x in row] for row in rows]


def entry_is_unit(x: SkewPoly) -> bool:
    return bool(x) and set(x.terms) == {(0, 0)}
