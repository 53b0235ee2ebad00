"""The coefficient field K = F_q(T) and its perfection.

An element at perfection level e is a reduced fraction num(u)/den(u) with
u = T**(1/q**e).  Because F_q is fixed by x -> x**q, the Frobenius x -> x**q
maps num(u)/den(u) at level e to the same fraction at level e - 1, so
Frobenius powers never touch coefficients; they only relabel levels (and
inflate exponents when the level would drop below 0).
"""

from __future__ import annotations

from fractions import Fraction

from .fq import FiniteField, GF
from .poly import PolyArith


class FunctionField:
    """K = F_q(T) together with all the fields F_q(T**(1/q**e))."""

    def __init__(self, F: FiniteField):
        self.F = F
        self.P = PolyArith(F)
        self.q = F.q
        self.p = F.p
        self._zero = FieldElem(self, 0, (), (1,))
        self._one = FieldElem(self, 0, (1,), (1,))

    @classmethod
    def of_order(cls, q: int, modulus=None) -> "FunctionField":
        return cls(GF(q, tuple(modulus) if modulus is not None else None))

    # -- constructors ---------------------------------------------------------
    @property
    def zero(self) -> "FieldElem":
        return self._zero

    @property
    def one(self) -> "FieldElem":
        return self._one

    def theta(self) -> "FieldElem":
        return FieldElem(self, 0, (0, 1), (1,))

    def gen(self) -> "FieldElem":
        """The generator ``a`` of F_q over F_p."""
        return self.const(self.F.generator)

    def const(self, c: int) -> "FieldElem":
        """Encoded F_q element as a constant of K."""
        return FieldElem(self, 0, (c,) if c else (), (1,))

    def from_int(self, k: int) -> "FieldElem":
        return self.const(self.F.from_int(k))

    def poly(self, coeffs, level: int = 0) -> "FieldElem":
        """Polynomial in u = T**(1/q**level) from low-to-high encoded coefficients."""
        return self.make(level, self.P.trim(coeffs), (1,))

    def make(self, level: int, num, den) -> "FieldElem":
        """Canonical element num/den at the given level."""
        P = self.P
        num, den = P.trim(num), P.trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self._zero
        if len(den) > 1:
            g = P.gcd(num, den)
            if len(g) > 1:
                num = P.exact_div(num, g)
                den = P.exact_div(den, g)
        if den[-1] != 1:
            c = self.F.inv(den[-1])
            num, den = P.scale(num, c), P.scale(den, c)
        q = self.q
        while level > 0 and P.is_in_power(num, q) and P.is_in_power(den, q):
            num, den = P.deflate(num, q), P.deflate(den, q)
            level -= 1
        return FieldElem(self, level, num, den)

    def coerce(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            if x.K is not self and x.K != self:
                raise TypeError("elements of different coefficient fields")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def __eq__(self, other):
        return isinstance(other, FunctionField) and self.F == other.F

    def __hash__(self):
        return hash(("K", self.F))

    def __repr__(self):
        return f"FunctionField({self.F!r})"

    # -- rendering of F_q constants ----------------------------------------
    def render_const(self, c: int) -> str:
        F = self.F
        if F.n == 1:
            if 2 * c > F.p:
                return str(c - F.p)
            return str(c)
        digits = F._digits(c)
        terms = []
        for i in range(len(digits) - 1, -1, -1):
            d = digits[i]
            if not d:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if not mono:
                terms.append(str(d))
            elif d == 1:
                terms.append(mono)
            else:
                terms.append(f"{d}*{mono}")
        return " + ".join(terms)


def _lift(P: PolyArith, a, k: int, q: int):
    return P.inflate(a, q**k) if k else a


class FieldElem:
    """Immutable element of the perfection of F_q(T)."""

    __slots__ = ("K", "level", "num", "den", "_hash")

    def __init__(self, K: FunctionField, level: int, num: tuple, den: tuple):
        self.K = K
        self.level = level
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_constant(self) -> bool:
        """True if the element lies in F_q."""
        return len(self.num) <= 1 and self.den == (1,)

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    # -- arithmetic -------------------------------------------------------------
    def _common(self, other):
        K = self.K
        e = max(self.level, other.level)
        P, q = K.P, K.q
        a = (_lift(P, self.num, e - self.level, q), _lift(P, self.den, e - self.level, q))
        b = (_lift(P, other.num, e - other.level, q), _lift(P, other.den, e - other.level, q))
        return e, a, b

    def _arg(self, other):
        if isinstance(other, (FieldElem, int)):
            return self.K.coerce(other)
        return None

    def __add__(self, other):
        other = self._arg(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        K = self.K
        P = K.P
        e, (an, ad), (bn, bd) = self._common(other)
        if ad == bd:
            return K.make(e, P.add(an, bn), ad)
        if ad == (1,):
            return K.make(e, P.add(P.mul(an, bd), bn), bd)
        if bd == (1,):
            return K.make(e, P.add(an, P.mul(bn, ad)), ad)
        return K.make(e, P.add(P.mul(an, bd), P.mul(bn, ad)), P.mul(ad, bd))

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return FieldElem(self.K, self.level, self.K.P.neg(self.num), self.den)

    def __sub__(self, other):
        other = self._arg(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._arg(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._arg(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return self.K.zero
        if other.is_one():
            return self
        if self.is_one():
            return other
        K = self.K
        P = K.P
        e, (an, ad), (bn, bd) = self._common(other)
        if ad == (1,) and bd == (1,):
            return K.make(e, P.mul(an, bn), (1,))
        return K.make(e, P.mul(an, bn), P.mul(ad, bd))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero in K")
        return self.K.make(self.level, self.den, self.num)

    def __truediv__(self, other):
        other = self._arg(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.K.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r, b = self.K.one, self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def frobenius(self, power: int = 1) -> "FieldElem":
        """x ** (q ** power); negative powers take q-th roots in the perfection."""
        if not power or not self.num:
            return self
        new = self.level - power
        if new >= 0:
            if power > 0:
                return FieldElem(self.K, new, self.num, self.den)
            # Taking roots keeps the fraction but may leave the level non-minimal.
            P, q = self.K.P, self.K.q
            num, den = self.num, self.den
            while new > 0 and P.is_in_power(num, q) and P.is_in_power(den, q):
                num, den = P.deflate(num, q), P.deflate(den, q)
                new -= 1
            return FieldElem(self.K, new, num, den)
        K = self.K
        k = K.q ** (-new)
        P = K.P
        return FieldElem(K, 0, P.inflate(self.num, k), P.inflate(self.den, k))

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.K.from_int(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return (
            self.level == other.level
            and self.num == other.num
            and self.den == other.den
            and (self.K is other.K or self.K == other.K)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self.num, self.den))
        return self._hash

    # -- rendering --------------------------------------------------------------
    def _render_poly(self, a) -> str:
        K = self.K
        denom = K.q**self.level
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            ex = Fraction(i, denom)
            if ex == 0:
                mono = ""
            elif ex == 1:
                mono = "T"
            elif ex.denominator == 1:
                mono = f"T^{ex.numerator}"
            else:
                mono = f"T^({ex.numerator}/{ex.denominator})"
            cs = K.render_const(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            elif " " in cs:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __str__(self):
        n = self._render_poly(self.num)
        if self.den == (1,):
            return n
        d = self._render_poly(self.den)
        return f"({n})/({d})"

    def __repr__(self):
        return f"FieldElem({self})"

    def is_atomic_str(self) -> bool:
        """True if str(self) needs no parentheses as a factor."""
        s = str(self)
        return not ((" + " in s or " - " in s) and not (s.startswith("(") and s.endswith(")") and self.den != (1,)))

    def to_data(self) -> dict:
        """Exact JSON-compatible representation."""
        return {"level": self.level, "num": list(self.num), "den": list(self.den)}


def elem_from_data(K: FunctionField, data: dict) -> FieldElem:
    return K.make(int(data["level"]), tuple(data["num"]), tuple(data["den"]))
