"""Free modules F = D k_1 + ... + D k_d over D = K{rho, sigma}.

Monomials are triples ``(i, k, j)`` meaning rho^k sigma^j k_i with sheets
numbered from 1.  Monomials are ordered position-over-term: the sheet
decides first (per an :class:`OrderSpec`), then lex with rho dominant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import FieldElem
from .skew import SkewPoly, SkewRing, render_terms


@dataclass(frozen=True)
class OrderSpec:
    """Sheet priority: ``perm[0]`` is the greatest sheet, ``perm[-1]`` the least."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(i) for i in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"order {perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_rank", {s: len(perm) - n for n, s in enumerate(perm)})

    @classmethod
    def identity(cls, d: int) -> "OrderSpec":
        return cls(tuple(range(1, d + 1)))

    @property
    def d(self) -> int:
        return len(self.perm)

    def key(self, mono) -> tuple:
        """Sort key: larger key = greater monomial."""
        i, k, j = mono
        return (self._rank[i], k, j)


def compare(m1, m2, order: OrderSpec) -> int:
    """-1, 0, 1 as m1 is less than, equal to, greater than m2."""
    a, b = order.key(m1), order.key(m2)
    return (a > b) - (a < b)


class ModElem:
    """Element of the free module, a finitely supported map (i, k, j) -> K."""

    __slots__ = ("ring", "d", "terms")

    def __init__(self, ring: SkewRing, d: int, terms: dict):
        self.ring = ring
        self.d = d
        self.terms = terms

    @classmethod
    def basis(cls, ring: SkewRing, d: int, i: int) -> "ModElem":
        return cls(ring, d, {(i, 0, 0): ring.K.one})

    @classmethod
    def from_vector(cls, ring: SkewRing, entries) -> "ModElem":
        """sum_i entries[i-1] * k_i for skew polynomials entries."""
        d = len(entries)
        terms = {}
        for i, f in enumerate(entries, start=1):
            f = ring.coerce(f)
            for (k, j), c in f.terms.items():
                terms[(i, k, j)] = c
        return cls(ring, d, terms)

    def zero(self) -> "ModElem":
        return ModElem(self.ring, self.d, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def component(self, i: int) -> SkewPoly:
        return SkewPoly(self.ring, {(k, j): c for (s, k, j), c in self.terms.items() if s == i})

    def to_vector(self) -> list:
        return [self.component(i) for i in range(1, self.d + 1)]

    def sheets(self) -> set:
        return {i for i, _, _ in self.terms}

    def max_level(self) -> int:
        return max((c.level for c in self.terms.values()), default=0)

    def _check(self, other):
        if not isinstance(other, ModElem) or other.ring != self.ring or other.d != self.d:
            raise TypeError("module elements from different free modules")

    def __add__(self, other):
        self._check(other)
        return ModElem(self.ring, self.d, _add_terms(self.terms, other.terms, 1))

    def __sub__(self, other):
        self._check(other)
        return ModElem(self.ring, self.d, _add_terms(self.terms, other.terms, -1))

    def __neg__(self):
        return ModElem(self.ring, self.d, {m: -c for m, c in self.terms.items()})

    def scale(self, c: FieldElem) -> "ModElem":
        """c * self for c in K."""
        if not c:
            return self.zero()
        return ModElem(self.ring, self.d, {m: c * x for m, x in self.terms.items()})

    def shift(self, k: int, j: int) -> "ModElem":
        """rho^k sigma^j * self."""
        if not k and not j:
            return self
        sh = self.ring.shift(k, j)
        return ModElem(
            self.ring,
            self.d,
            {(i, a + k, b + j): c.frobenius(sh) for (i, a, b), c in self.terms.items()},
        )

    def left_mul(self, f: SkewPoly) -> "ModElem":
        """f * self for f in D."""
        out = {}
        for (k, j), c in f.terms.items():
            out = _add_terms(out, self.shift(k, j).scale(c).terms, 1)
        return ModElem(self.ring, self.d, out)

    def __rmul__(self, f):
        if isinstance(f, SkewPoly):
            return self.left_mul(f)
        if isinstance(f, (FieldElem, int)):
            return self.scale(self.ring.K.coerce(f))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        return self.ring == other.ring and self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self, order: OrderSpec | None = None, basis_name: str = "k") -> str:
        order = order or OrderSpec.identity(self.d)
        names = self.ring.names
        items = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            i, k, j = m
            parts = []
            if k:
                parts.append(names[0] if k == 1 else f"{names[0]}^{k}")
            if j:
                parts.append(names[1] if j == 1 else f"{names[1]}^{j}")
            parts.append(f"{basis_name}{i}")
            items.append(("*".join(parts), self.terms[m]))
        return render_terms(items, names)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"ModElem({self})"


def _add_terms(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for m, c in b.items():
        if sign < 0:
            c = -c
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def leading(f: ModElem, order: OrderSpec):
    """(lm(f), lc(f)) under the position-over-term order."""
    if not f.terms:
        raise ValueError("leading monomial of zero")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]
