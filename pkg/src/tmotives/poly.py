"""Dense univariate polynomials over F_q.

A polynomial is a tuple of encoded F_q elements, low degree first, with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from flint import nmod_poly

from .fq import FiniteField

_FLINT_MUL_MIN = 24
# Above this length, prime-field division and gcd go through FLINT.
_FLINT_MIN = 16


class PolyArith:
    """Polynomial arithmetic over a fixed finite field."""

    def __init__(self, F: FiniteField):
        self.F = F
        self.prime = F.n == 1
        self.p = F.p

    # -- basics -----------------------------------------------------------
    @staticmethod
    def trim(a) -> tuple:
        a = list(a)
        while a and not a[-1]:
            a.pop()
        return tuple(a)

    @staticmethod
    def deg(a) -> int:
        return len(a) - 1

    def add(self, a, b) -> tuple:
        if len(a) < len(b):
            a, b = b, a
        if self.prime:
            p = self.p
            out = [(x + y) % p for x, y in zip(a, b)]
        else:
            ad = self.F.add
            out = [ad(x, y) for x, y in zip(a, b)]
        out.extend(a[len(b):])
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def neg(self, a) -> tuple:
        if self.prime:
            p = self.p
            return tuple((-x) % p for x in a)
        ng = self.F.neg
        return tuple(ng(x) for x in a)

    def sub(self, a, b) -> tuple:
        return self.add(a, self.neg(b))

    def scale(self, a, c: int) -> tuple:
        if not c:
            return ()
        if c == 1:
            return tuple(a)
        if self.prime:
            p = self.p
            return tuple((x * c) % p for x in a)
        m = self.F.mul
        return tuple(m(x, c) for x in a)

    def mul(self, a, b) -> tuple:
        if not a or not b:
            return ()
        la, lb = len(a), len(b)
        if la == 1:
            return self.scale(b, a[0])
        if lb == 1:
            return self.scale(a, b[0])
        if self.prime:
            p = self.p
            if min(la, lb) >= _FLINT_MUL_MIN:
                return self._from_flint(self._to_flint(a) * self._to_flint(b))
            res = [0] * (la + lb - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        res[i + j] += x * y
            out = [c % p for c in res]
        else:
            ad, ml = self.F.add, self.F.mul
            out = [0] * (la + lb - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            out[i + j] = ad(out[i + j], ml(x, y))
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def _to_flint(self, a):
        return nmod_poly(list(a), self.p)

    @staticmethod
    def _from_flint(f) -> tuple:
        return tuple(int(c) for c in f.coeffs())

    def divmod(self, a, b) -> tuple:
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if len(a) < len(b):
            return (), tuple(a)
        if self.prime and len(a) >= _FLINT_MIN:
            q, r = divmod(self._to_flint(a), self._to_flint(b))
            return self._from_flint(q), self._from_flint(r)
        F = self.F
        inv_lc = F.inv(b[-1])
        db = len(b) - 1
        r = list(a)
        qt = [0] * (len(a) - db)
        if self.prime:
            p = self.p
            for k in range(len(a) - 1, db - 1, -1):
                c = r[k] % p
                if c:
                    c = (c * inv_lc) % p
                    qt[k - db] = c
                    off = k - db
                    for i in range(db + 1):
                        r[off + i] -= c * b[i]
            r = [x % p for x in r[:db]]
        else:
            ad, ml, ng = F.add, F.mul, F.neg
            for k in range(len(a) - 1, db - 1, -1):
                c = r[k]
                if c:
                    c = ml(c, inv_lc)
                    qt[k - db] = c
                    off = k - db
                    nc = ng(c)
                    for i in range(db + 1):
                        if b[i]:
                            r[off + i] = ad(r[off + i], ml(nc, b[i]))
            r = r[:db]
        return self.trim(qt), self.trim(r)

    def monic(self, a) -> tuple:
        if not a or a[-1] == 1:
            return tuple(a)
        return self.scale(a, self.F.inv(a[-1]))

    def gcd(self, a, b) -> tuple:
        """Monic gcd (Euclid)."""
        if self.prime and max(len(a), len(b)) >= _FLINT_MIN:
            if not a and not b:
                return ()
            return self.monic(self._from_flint(self._to_flint(a).gcd(self._to_flint(b))))
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def exact_div(self, a, b) -> tuple:
        q, r = self.divmod(a, b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- exponent manipulation ---------------------------------------------
    @staticmethod
    def inflate(a, k: int) -> tuple:
        """Substitute u -> u**k."""
        if k == 1 or len(a) <= 1:
            return tuple(a)
        out = [0] * ((len(a) - 1) * k + 1)
        for i, c in enumerate(a):
            out[i * k] = c
        return tuple(out)

    @staticmethod
    def is_in_power(a, k: int) -> bool:
        """True if a is a polynomial in u**k."""
        return all(not c for i, c in enumerate(a) if i % k)

    @staticmethod
    def deflate(a, k: int) -> tuple:
        return tuple(a[::k])
