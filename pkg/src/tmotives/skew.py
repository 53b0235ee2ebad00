"""Skew polynomial rings K{rho, sigma}.

rho and sigma commute with each other and twist coefficients:
``rho * x = frob(x, a_rho) * rho`` and ``sigma * x = frob(x, a_sigma) * sigma``
where ``frob(x, a) = x ** (q ** a)``.  The four rings used for t-motives
and t-comotives are

============  ======  ========  =====
ring          rho     sigma     twist
============  ======  ========  =====
motive        tau     t         (1, 0)
comotive      sigma   t         (-1, 0)
reverse       t       tau       (0, 1)
reverse dual  t       sigma     (0, -1)
============  ======  ========  =====
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import FieldElem, FunctionField

VARIABLE_TWISTS = {"tau": 1, "sigma": -1, "t": 0}


@dataclass(frozen=True)
class TwistPair:
    a_rho: int
    a_sigma: int


class SkewRing:
    """The ring K{rho, sigma} with Frobenius-power twists."""

    def __init__(self, K: FunctionField, twist: TwistPair, names=("rho", "sigma")):
        self.K = K
        self.twist = twist
        self.names = tuple(names)
        if len(self.names) != 2 or self.names[0] == self.names[1]:
            raise ValueError("need two distinct variable names")

    @classmethod
    def from_names(cls, K: FunctionField, rho: str, sigma: str) -> "SkewRing":
        """Ring whose twists are implied by the variable names tau/sigma/t."""
        try:
            twist = TwistPair(VARIABLE_TWISTS[rho], VARIABLE_TWISTS[sigma])
        except KeyError as exc:
            raise ValueError(f"unknown variable {exc.args[0]!r}") from None
        return cls(K, twist, (rho, sigma))

    @property
    def a_rho(self) -> int:
        return self.twist.a_rho

    @property
    def a_sigma(self) -> int:
        return self.twist.a_sigma

    def shift(self, k: int, j: int) -> int:
        """Frobenius power applied to a coefficient moved past rho^k sigma^j."""
        return k * self.twist.a_rho + j * self.twist.a_sigma

    # -- constructors -------------------------------------------------------
    def zero(self) -> "SkewPoly":
        return SkewPoly(self, {})

    def one(self) -> "SkewPoly":
        return SkewPoly(self, {(0, 0): self.K.one})

    def scalar(self, x) -> "SkewPoly":
        x = self.K.coerce(x)
        return SkewPoly(self, {(0, 0): x} if x else {})

    def monomial(self, k: int, j: int, c=None) -> "SkewPoly":
        c = self.K.one if c is None else self.K.coerce(c)
        return SkewPoly(self, {(k, j): c} if c else {})

    def rho(self) -> "SkewPoly":
        return self.monomial(1, 0)

    def sigma(self) -> "SkewPoly":
        return self.monomial(0, 1)

    def univariate(self, coeffs, var: str = "sigma") -> "SkewPoly":
        """sum coeffs[i] * var^i with coefficients on the left."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.K.coerce(c)
            if c:
                terms[(i, 0) if var == "rho" else (0, i)] = c
        return SkewPoly(self, terms)

    def coerce(self, x) -> "SkewPoly":
        if isinstance(x, SkewPoly):
            if x.ring != self:
                raise TypeError("twist mismatch between skew polynomials")
            return x
        return self.scalar(x)

    def __eq__(self, other):
        return (
            isinstance(other, SkewRing)
            and self.twist == other.twist
            and self.names == other.names
            and self.K == other.K
        )

    def __hash__(self):
        return hash((self.twist, self.names))

    def __repr__(self):
        return f"{self.K!r}{{{self.names[0]},{self.names[1]}}}"


def _order_key(kj):
    return kj


class SkewPoly:
    """Element of K{rho, sigma}: a finitely supported map (k, j) -> K."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SkewRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self, descending: bool = True):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=descending)

    def variable(self):
        """'rho', 'sigma', 'const' or None if both variables occur."""
        has_r = any(k for k, _ in self.terms)
        has_s = any(j for _, j in self.terms)
        if has_r and has_s:
            return None
        if has_r:
            return "rho"
        if has_s:
            return "sigma"
        return "const"

    def degree(self, var: str) -> int:
        """Degree in var (-1 for zero)."""
        idx = 0 if var == "rho" else 1
        return max((kj[idx] for kj in self.terms), default=-1)

    def coefficient(self, k: int, j: int) -> FieldElem:
        return self.terms.get((k, j), self.ring.K.zero)

    def leading(self):
        """Greatest monomial in lex order with rho dominant, and its coefficient."""
        kj = max(self.terms)
        return kj, self.terms[kj]

    def max_level(self) -> int:
        return max((c.level for c in self.terms.values()), default=0)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self.ring.coerce(other)
        out = dict(self.terms)
        for kj, c in other.terms.items():
            s = out.get(kj)
            if s is None:
                out[kj] = c
            else:
                s = s + c
                if s:
                    out[kj] = s
                else:
                    del out[kj]
        return SkewPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.ring, {kj: -c for kj, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        return skew_mul(self, self.ring.coerce(other))

    def __rmul__(self, other):
        return skew_mul(self.ring.coerce(other), self)

    def __pow__(self, e: int):
        r = self.ring.one()
        for _ in range(e):
            r = r * self
        return r

    def scale_left(self, c: FieldElem) -> "SkewPoly":
        """c * self for a field element c."""
        if not c:
            return self.ring.zero()
        return SkewPoly(self.ring, {kj: c * x for kj, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            try:
                other = self.ring.coerce(other)
            except TypeError:
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- rendering --------------------------------------------------------------
    def __str__(self):
        return render_skew(self)

    def __repr__(self):
        return f"SkewPoly({self})"


def _mono_str(names, k, j) -> str:
    parts = []
    if k:
        parts.append(names[0] if k == 1 else f"{names[0]}^{k}")
    if j:
        parts.append(names[1] if j == 1 else f"{names[1]}^{j}")
    return "*".join(parts)


def render_terms(items, names) -> str:
    """Render (monomial-parts, coefficient) pairs; items given in display order."""
    pieces = []
    for mono, c in items:
        cs = str(c)
        if not mono:
            pieces.append(cs)
            continue
        if c.is_one():
            pieces.append(mono)
        elif cs == "-1":
            pieces.append("-" + mono)
        elif " + " in cs or " - " in cs[1:] or "/" in cs:
            pieces.append(f"({cs})*{mono}")
        else:
            pieces.append(f"{cs}*{mono}")
    if not pieces:
        return "0"
    out = pieces[0]
    for t in pieces[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def render_skew(f: SkewPoly) -> str:
    names = f.ring.names
    return render_terms(((_mono_str(names, k, j), c) for (k, j), c in f.sorted_terms()), names)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product under rho*x = frob(x, a_rho)*rho, sigma*x = frob(x, a_sigma)*sigma."""
    if f.ring != g.ring:
        raise TypeError("twist mismatch between skew polynomials")
    ring = f.ring
    ar, asg = ring.twist.a_rho, ring.twist.a_sigma
    out = {}
    for (k, j), x in f.terms.items():
        sh = k * ar + j * asg
        for (l, m), y in g.terms.items():
            c = x * y.frobenius(sh)
            kj = (k + l, j + m)
            s = out.get(kj)
            if s is None:
                out[kj] = c
            else:
                s = s + c
                if s:
                    out[kj] = s
                else:
                    del out[kj]
    return SkewPoly(ring, out)


def coeff_twist(p: SkewPoly, power: int) -> SkewPoly:
    """Apply frob(., power) to every coefficient, leaving variables untouched."""
    if not power:
        return p
    return SkewPoly(p.ring, {kj: c.frobenius(power) for kj, c in p.terms.items()})


def _univariate_var(f: SkewPoly, g: SkewPoly) -> str:
    vf, vg = f.variable(), g.variable()
    if vf is None or vg is None:
        raise ValueError("division needs univariate skew polynomials")
    vs = {vf, vg} - {"const"}
    if len(vs) > 1:
        raise ValueError("skew polynomials in different variables")
    return vs.pop() if vs else "sigma"


def _key(var, n):
    return (n, 0) if var == "rho" else (0, n)


def right_divmod(f: SkewPoly, g: SkewPoly, var: str | None = None):
    """(quo, rem) with f = quo*g + rem and deg rem < deg g."""
    if f.ring != g.ring:
        raise TypeError("twist mismatch between skew polynomials")
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    var = var or _univariate_var(f, g)
    ring = f.ring
    a = ring.a_rho if var == "rho" else ring.a_sigma
    b = g.degree(var)
    lcg = g.terms[_key(var, b)]
    quo = {}
    r = f
    while r and r.degree(var) >= b:
        d = r.degree(var)
        c = r.terms[_key(var, d)]
        x = c / lcg.frobenius((d - b) * a)
        quo[_key(var, d - b)] = x
        r = r - skew_mul(SkewPoly(ring, {_key(var, d - b): x}), g)
    return SkewPoly(ring, quo), r


def left_divmod(f: SkewPoly, g: SkewPoly, var: str | None = None):
    """(quo, rem) with f = g*quo + rem and deg rem < deg g.

    Needs inverse twists, which the lazy perfection always provides.
    """
    if f.ring != g.ring:
        raise TypeError("twist mismatch between skew polynomials")
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    var = var or _univariate_var(f, g)
    ring = f.ring
    a = ring.a_rho if var == "rho" else ring.a_sigma
    b = g.degree(var)
    lcg = g.terms[_key(var, b)]
    quo = {}
    r = f
    while r and r.degree(var) >= b:
        d = r.degree(var)
        c = r.terms[_key(var, d)]
        x = (c / lcg).frobenius(-b * a)
        quo[_key(var, d - b)] = x
        r = r - skew_mul(g, SkewPoly(ring, {_key(var, d - b): x}))
    return SkewPoly(ring, quo), r


def star(f: SkewPoly, target: SkewRing, var: str = "rho", target_var: str | None = None) -> SkewPoly:
    """Anti-isomorphism sum a_i v^i -> sum frob(a_i, -i*a_v) w^i.

    For v = tau this is sum a_i tau^i -> sum a_i^(1/q^i) sigma^i; for
    v = sigma it is the inverse map back to tau.  Variables other than v
    (i.e. t) are carried along unchanged.
    """
    a = f.ring.a_rho if var == "rho" else f.ring.a_sigma
    target_var = target_var or var
    out = {}
    for (k, j), c in f.terms.items():
        i, other = (k, j) if var == "rho" else (j, k)
        key = (i, other) if target_var == "rho" else (other, i)
        out[key] = c.frobenius(-i * a)
    return SkewPoly(target, out)
