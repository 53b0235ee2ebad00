"""Brute-force verification of Janet-basis claims by truncated linear algebra.

Everything here works with K-vector spaces spanned by monomial multiples
m*g that fit inside a degree box, so the checks are independent of the
normal-form machinery in :mod:`tmotives.janet`.  Conclusions are only about
the box: elements whose construction needs cancellation beyond the box are
invisible to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freemod import ModElem, OrderSpec, leading

RHO, SIGMA = "rho", "sigma"
DEFAULT_BUDGET = 20000


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class DegreeBox:
    K_max: int
    J_max: int

    def __post_init__(self):
        if self.K_max < 0 or self.J_max < 0:
            raise ValueError("box bounds must be >= 0")

    def size(self, d: int) -> int:
        return d * (self.K_max + 1) * (self.J_max + 1)

    def contains(self, mono) -> bool:
        return mono[1] <= self.K_max and mono[2] <= self.J_max

    def fits(self, f: ModElem) -> bool:
        return all(self.contains(m) for m in f.terms)

    def monomials(self, d: int):
        return [(i, k, j) for i in range(1, d + 1) for k in range(self.K_max + 1) for j in range(self.J_max + 1)]

    def grow(self, dk: int = 1, dj: int = 1) -> "DegreeBox":
        return DegreeBox(self.K_max + dk, self.J_max + dj)

    def hull(self, elems) -> "DegreeBox":
        """Smallest box containing self and the supports of elems."""
        K, J = self.K_max, self.J_max
        for f in elems:
            for _, k, j in f.terms:
                K, J = max(K, k), max(J, j)
        return DegreeBox(K, J)


def _extent(f: ModElem):
    return max(k for _, k, _ in f.terms), max(j for _, _, j in f.terms)


class TruncatedSpan:
    """Echelon basis (monic pivots, columns in descending monomial order)."""

    def __init__(self, order: OrderSpec):
        self.order = order
        self.rows = {}  # pivot monomial -> row dict

    def _pivot(self, row):
        return max(row, key=self.order.key)

    def reduce(self, vec: dict) -> dict:
        """Reduce vec against the pivot rows, greatest monomial first."""
        v = dict(vec)
        key = self.order.key
        while v:
            done = True
            for m in sorted(v, key=key, reverse=True):
                r = self.rows.get(m)
                if r is not None:
                    c = v[m]
                    for mm, x in r.items():
                        y = v.get(mm)
                        z = -(c * x) if y is None else y - c * x
                        if z:
                            v[mm] = z
                        else:
                            v.pop(mm, None)
                    done = False
                    break
            if done:
                return v
        return v

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = self._pivot(v)
        inv = v[p].inverse()
        self.rows[p] = {m: x * inv for m, x in v.items()}
        return True

    def contains(self, f: ModElem) -> bool:
        return not self.reduce(f.terms)

    @property
    def pivots(self) -> set:
        return set(self.rows)

    def dimension(self) -> int:
        return len(self.rows)

    def rref(self) -> dict:
        """Fully reduced rows (each pivot column cleared in every other row)."""
        key = self.order.key
        out = {}
        for p in sorted(self.rows, key=key):
            row = dict(self.rows[p])
            for q, r in out.items():
                c = row.get(q)
                if c:
                    for mm, x in r.items():
                        z = row.get(mm, None)
                        z = -(c * x) if z is None else z - c * x
                        if z:
                            row[mm] = z
                        else:
                            row.pop(mm, None)
            out[p] = row
        return out


def _shifts(g: ModElem, box: DegreeBox, variables=(RHO, SIGMA)):
    """All m*g with m a monomial in the given variables and support inside box."""
    gk, gj = _extent(g)
    kr = range(box.K_max - gk + 1) if RHO in variables else range(1)
    jr = range(box.J_max - gj + 1) if SIGMA in variables else range(1)
    for k in kr:
        for j in jr:
            yield g.shift(k, j)


def truncated_submodule(gens, box: DegreeBox, order: OrderSpec, budget: int = DEFAULT_BUDGET) -> TruncatedSpan:
    """K-span of {m*g : support(m*g) inside box}, in echelon form."""
    gens = [g for g in gens if g]
    if gens:
        d = gens[0].d
        if box.size(d) > budget:
            raise BudgetExceeded(f"box {box} has {box.size(d)} monomials, budget {budget}: use a smaller box")
    span = TruncatedSpan(order)
    for g in gens:
        for h in _shifts(g, box):
            span.add(h.terms)
    return span


def _cone_members(lm, mu, box: DegreeBox):
    i, k0, j0 = lm
    ks = range(k0, box.K_max + 1) if RHO in mu else [k0]
    js = range(j0, box.J_max + 1) if SIGMA in mu else [j0]
    return [(i, k, j) for k in ks for j in js if k <= box.K_max and j <= box.J_max]


def cones_intersect(lm1, mu1, lm2, mu2) -> bool:
    """Exact test whether Mon(mu1)*lm1 and Mon(mu2)*lm2 share a monomial."""
    if lm1[0] != lm2[0]:
        return False
    for pos, var in ((1, RHO), (2, SIGMA)):
        a, b = lm1[pos], lm2[pos]
        fa, fb = var in mu1, var in mu2
        if fa and fb:
            continue
        if fa and b < a:
            return False
        if fb and a < b:
            return False
        if not fa and not fb and a != b:
            return False
    return True


class _ConeMultiples:
    """Cone multiples m*b generated on demand, one per cone monomial.

    Since the cones are meant to be disjoint, the first cone containing a
    monomial is used; overlapping cones are reported by the disjointness check.
    """

    def __init__(self, pairs, lms, order: OrderSpec):
        self.order = order
        self.cones = list(zip(lms, [p.mu for p in pairs], [p.b for p in pairs]))
        self.cache = {}

    def multiple(self, mono):
        if mono in self.cache:
            return self.cache[mono]
        found = None
        for lm, mu, b in self.cones:
            if _in_cone(mono, lm, mu):
                h = b.shift(mono[1] - lm[1], mono[2] - lm[2])
                inv = h.terms[mono].inverse()
                found = {m: x * inv for m, x in h.terms.items()}
                break
        self.cache[mono] = found
        return found

    def remainder(self, vec: dict) -> dict:
        """Subtract cone multiples from the top down; what is left has no cone monomials."""
        v = dict(vec)
        key = self.order.key
        bound = None
        while True:
            hit = None
            for m in sorted(v, key=key, reverse=True):
                if bound is not None and key(m) >= bound:
                    continue
                row = self.multiple(m)
                if row is not None:
                    hit = (m, row)
                    break
            if hit is None:
                return v
            m, row = hit
            c = v[m]
            for mm, x in row.items():
                y = v.get(mm)
                z = -(c * x) if y is None else y - c * x
                if z:
                    v[mm] = z
                else:
                    v.pop(mm, None)
            bound = key(m)


def _in_cone(mono, lm, mu) -> bool:
    if mono[0] != lm[0]:
        return False
    for pos, var in ((1, RHO), (2, SIGMA)):
        if var in mu:
            if mono[pos] < lm[pos]:
                return False
        elif mono[pos] != lm[pos]:
            return False
    return True


@dataclass
class Verdict:
    box: DegreeBox
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_data(self) -> dict:
        return {
            "box": [self.box.K_max, self.box.J_max],
            "ok": self.ok,
            "checks": dict(self.checks),
            "details": {k: v for k, v in sorted(self.details.items())},
        }


def membership(elems, gens, order: OrderSpec, start: DegreeBox, budget: int = DEFAULT_BUDGET, grow: int = 4):
    """Are all elems in the truncated span of gens for some box up to start+grow?

    Returns (ok, box used, list of indices not found).
    """
    box = start.hull(list(elems) + list(gens))
    missing = list(range(len(elems)))
    d = (elems or gens)[0].d if (elems or gens) else 1
    for _ in range(grow + 1):
        if box.size(d) > budget:
            break
        span = truncated_submodule(gens, box, order, budget)
        missing = [n for n in missing if not span.contains(elems[n])]
        if not missing:
            return True, box, []
        box = box.grow()
    return False, box, missing


def verify_janet(J, gens, box: DegreeBox, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Four box-bounded checks of the claim that J is a Janet basis of <gens>.

    (a) every b in J lies in <gens> and every g in <b : b in J>;
    (b) the cones are pairwise disjoint;
    (c) every leading monomial of the truncated submodule is a cone monomial,
        and every element of it is a K-combination of cone multiples m*b;
    (d) staircase monomials are independent modulo the truncated submodule and,
        together with unreachable cone monomials, fill up the quotient.
    """
    order = J.order
    pairs = list(J.pairs)
    heads = [p.b for p in pairs]
    lms = [leading(b, order)[0] for b in heads]
    v = Verdict(box)

    ok1, box1, miss1 = membership(heads, gens, order, box, budget)
    ok2, box2, miss2 = membership(list(gens), heads, order, box, budget)
    v.checks["membership"] = ok1 and ok2
    v.details["membership"] = {
        "janet_in_gens_box": [box1.K_max, box1.J_max],
        "gens_in_janet_box": [box2.K_max, box2.J_max],
        "missing_janet": miss1,
        "missing_gens": miss2,
    }

    clashes = []
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if cones_intersect(lms[a], pairs[a].mu, lms[b], pairs[b].mu):
                clashes.append([a, b])
    v.checks["disjoint"] = not clashes
    v.details["disjoint"] = {"overlaps": clashes}

    d = heads[0].d if heads else (gens[0].d if gens else 1)
    span = truncated_submodule(gens, box, order, budget)
    pivots = span.pivots
    covered = set()
    for p, lm in zip(pairs, lms):
        covered.update(_cone_members(lm, p.mu, box))
    cones = _ConeMultiples(pairs, lms, order)
    stray = sorted(pivots - covered)
    unexplained = sorted(m for m, row in span.rows.items() if cones.remainder(row))
    v.checks["coverage"] = not stray and not unexplained
    v.details["coverage"] = {
        "leading_outside_cones": [list(m) for m in stray],
        "rows_not_in_cone_span": [list(m) for m in unexplained],
        "truncated_dimension": span.dimension(),
    }

    all_monos = box.monomials(d)
    stairs = [m for m in all_monos if m not in covered]
    bad = sorted(set(stairs) & pivots)
    quotient_dim = len(all_monos) - len(pivots)
    unreachable = len(covered - pivots)
    bad = [list(m) for m in bad]
    v.checks["staircase"] = not bad and quotient_dim == len(stairs) + unreachable
    v.details["staircase"] = {
        "staircase_in_box": len(stairs),
        "quotient_dim": quotient_dim,
        "unreachable_cone_monomials": unreachable,
        "staircase_leading": bad,
    }
    return v


def default_box(J) -> DegreeBox:
    """rho-bound = largest rho-degree of a leading monomial + 2, sigma-bound 4."""
    lms = J.leading_monomials()
    kmax = max((k for _, k, _ in lms), default=0)
    return DegreeBox(kmax + 2, 4)
