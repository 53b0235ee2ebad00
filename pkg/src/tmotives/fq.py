"""Finite fields F_q, q = p**n.

Elements are encoded as integers in ``range(q)``: the base-p digits of the
integer are the coefficients (low to high) of the residue polynomial modulo a
fixed monic irreducible of degree n.  For n == 1 the encoding is the residue
mod p itself.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

# Low-to-high coefficient lists of monic irreducibles used when no modulus is
# supplied.
BUILTIN_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
}

MAX_TABLE_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _pmod(a: list, m: tuple, p: int) -> list:
    """Remainder of a mod monic m over F_p (lists low to high)."""
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - c * m[i]) % p
    a = [x % p for x in a[:dm]]
    return a


def _is_irreducible(m: tuple, p: int) -> bool:
    n = len(m) - 1
    if n == 1:
        return True
    # brute force: no monic factor of degree 1..n//2
    for deg in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=deg):
            f = tuple(tail) + (1,)
            if not any(_pmod(m, f, p)):
                return False
    return True


def find_irreducible(p: int, n: int) -> tuple:
    """Smallest monic irreducible of degree n over F_p in lexicographic order."""
    for tail in product(range(p), repeat=n):
        m = tuple(reversed(tail)) + (1,)
        if m[0] and _is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {n} over F_{p}")


class FiniteField:
    """The field F_q with q = p**n.

    Arithmetic on encoded elements is exposed through ``add``, ``sub``,
    ``mul``, ``neg`` and ``inv``.  For n > 1 these are table lookups.
    """

    def __init__(self, p: int, n: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.n = n
        self.q = p**n
        if n == 1:
            self.modulus = (0, 1)
        else:
            if self.q > MAX_TABLE_Q:
                raise ValueError(f"q = {self.q} exceeds supported table size {MAX_TABLE_Q}")
            if modulus is None:
                modulus = BUILTIN_MODULI.get(self.q) or find_irreducible(p, n)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {n}")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
            self._build_tables()

    # -- encoding helpers -------------------------------------------------
    def _digits(self, a: int) -> list:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        a = 0
        for c in reversed(list(digits)):
            a = a * self.p + (c % self.p)
        return a

    def _build_tables(self):
        q, p = self.q, self.p
        digs = [self._digits(a) for a in range(q)]
        self._add = [[self._encode([x + y for x, y in zip(digs[a], digs[b])]) for b in range(q)] for a in range(q)]
        self._neg = [self._encode([-x for x in digs[a]]) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                prod_ = [0] * (2 * self.n - 1)
                for i, x in enumerate(digs[a]):
                    if x:
                        for j, y in enumerate(digs[b]):
                            prod_[i + j] += x * y
                c = self._encode(_pmod(prod_, self.modulus, p))
                mul[a][b] = mul[b][a] = c
        self._mul = mul
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    # -- arithmetic -------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a * b) % self.p
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> F_p -> F_q."""
        return k % self.p

    @property
    def generator(self) -> int:
        """Class of the variable ``a`` in F_p[a]/(modulus)."""
        if self.n == 1:
            raise ValueError("prime field has no extension generator")
        return self.p

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def GF(q: int, modulus=None) -> FiniteField:
    """Cached constructor from the field order."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return FiniteField(p, n, modulus)
