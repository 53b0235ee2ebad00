"""Reading off module structure over K<sigma> from a certified Janet basis.

For M = F / <p_1, ..., p_d> the Janet basis yields the quantities n_i, m_i,
a finite K<sigma>-generating set W_gen (when every n_i is finite), the
relations among it, the rho-action on it, and finally a free basis via an
elementary-divisor diagonalisation over K<sigma>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import matrices as mx
from .freemod import ModElem, OrderSpec, leading
from .janet import FULL, JanetSet, in_cone, normal_form
from .skew import SkewPoly, SkewRing, left_divmod, right_divmod

INF = math.inf


class StructureError(Exception):
    pass


class NotFinitelyGenerated(StructureError):
    """Some n_i is infinite."""


class TorsionError(StructureError):
    """Elementary divisor diagonalisation produced a non-unit diagonal entry."""


@dataclass
class StructureReport:
    """Everything Janet-basis theory says about M as a K<sigma>-module.

    Generators are pairs ``(i, j)`` standing for rho^j k_i.  ``relations``
    rows and ``action`` rows are coordinate vectors over ``W_gen`` with
    entries in K<sigma> (skew polynomials using only sigma).
    """

    ring: SkewRing
    d: int
    order: OrderSpec
    janet: JanetSet
    n: list
    m: list
    W_gen: list
    W_ind: list
    B_top: list = field(default_factory=list)
    B_low: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    action: list = field(default_factory=list)

    @property
    def finite(self) -> bool:
        return all(x != INF for x in self.n)

    @property
    def rank(self):
        """sum m_i: the K(sigma)-dimension of the rationalised module."""
        return sum(self.m) if all(x != INF for x in self.m) else INF

    def generator_element(self, w) -> ModElem:
        i, j = w
        return ModElem(self.ring, self.d, {(i, j, 0): self.ring.K.one})

    def infinite_sheets(self) -> list:
        return [i for i, x in enumerate(self.n, start=1) if x == INF]

    def relation_heads(self) -> list:
        """Leading monomials of the Janet basis on sheets with n_i infinite."""
        bad = set(self.infinite_sheets())
        return [lm for lm in self.janet.leading_monomials() if lm[0] in bad]


def staircase_contains(J: JanetSet, mono) -> bool:
    """True if mono lies outside every cone of J."""
    for p in J.pairs:
        if in_cone(mono, leading(p.b, J.order)[0], p.mu):
            return False
    return True


def quantities(J: JanetSet) -> StructureReport:
    """n_i, m_i, W_gen and W_ind of a certified Janet basis."""
    if not J.certified:
        raise StructureError("quantities need a certified Janet basis")
    if not J.pairs:
        raise StructureError("empty Janet basis: the module is free over K{rho, sigma}")
    b0 = J.pairs[0].b
    ring, d, order = b0.ring, b0.d, J.order
    n = [INF] * d
    m = [INF] * d
    for lm in J.leading_monomials():
        i, k, j = lm
        if j == 0:
            n[i - 1] = min(n[i - 1], k)
        m[i - 1] = min(m[i - 1], k)
    W_gen = _generators(n, order)
    W_ind = _generators(m, order)
    return StructureReport(ring, d, order, J, n, m, W_gen, W_ind)


def _generators(bounds, order: OrderSpec) -> list:
    """rho^j k_i with j < bounds[i], in descending monomial order (finite part only)."""
    out = []
    for i in order.perm:
        b = bounds[i - 1]
        if b == INF:
            continue
        out.extend((i, j) for j in range(b - 1, -1, -1))
    return out


def to_coordinates(f: ModElem, W_gen: list) -> list:
    """Write f as a K<sigma>-combination of W_gen (coefficients on the left)."""
    ring = f.ring
    index = {w: a for a, w in enumerate(W_gen)}
    coords = [dict() for _ in W_gen]
    for (i, k, j), c in f.terms.items():
        a = index.get((i, k))
        if a is None:
            raise StructureError(f"monomial rho^{k} sigma^{j} k{i} is not in K<sigma>*W_gen")
        coords[a][(0, j)] = c
    return [SkewPoly(ring, t) for t in coords]


def from_coordinates(coords: list, W_gen: list, ring: SkewRing, d: int) -> ModElem:
    terms = {}
    for (i, k), f in zip(W_gen, coords):
        for (_, j), c in f.terms.items():
            terms[(i, k, j)] = c
    return ModElem(ring, d, terms)


def split_top_low(J: JanetSet, report: StructureReport) -> StructureReport:
    """Fill in B_top, B_low and the relations matrix."""
    if not report.finite:
        raise NotFinitelyGenerated(
            f"n = {report.n}: the module is not finitely generated over K<sigma>; "
            "use the generator/relation-head data of the quantities report instead"
        )
    order = J.order
    top_idx = {}
    for idx, p in enumerate(J.pairs):
        i, k, j = leading(p.b, order)[0]
        if j == 0 and k == report.n[i - 1]:
            if p.mu != FULL:
                raise StructureError(f"top element on sheet {i} does not carry a full cone")
            top_idx[i] = idx
    B_top = [J.pairs[top_idx[i]].b for i in range(1, report.d + 1)]
    B_low = []
    for idx, p in enumerate(J.pairs):
        if idx in top_idx.values():
            continue
        rest = JanetSet([q for c, q in enumerate(J.pairs) if c != idx], order)
        b = normal_form(p.b, rest)
        lm = leading(b, order)[0]
        if lm != leading(p.b, order)[0]:
            raise StructureError("reduced low element changed its leading monomial")
        for mono in b.terms:
            if mono != lm and not staircase_contains(J, mono):
                raise StructureError("reduced low element leaves the staircase")
        B_low.append(b)
    report.B_top = B_top
    report.B_low = B_low
    report.relations = [to_coordinates(b, report.W_gen) for b in B_low]
    return report


def action_on_generators(report: StructureReport) -> list:
    """Matrix C with rho * w_a = sum_b C[a][b] * w_b over W_gen."""
    if not report.B_top:
        raise StructureError("run split_top_low first")
    ring, d = report.ring, report.d
    rows = []
    index = {w: a for a, w in enumerate(report.W_gen)}
    for i, j in report.W_gen:
        if j < report.n[i - 1] - 1:
            row = [ring.zero() for _ in report.W_gen]
            row[index[(i, j + 1)]] = ring.one()
        else:
            b = report.B_top[i - 1]
            lm, lc = leading(b, report.order)
            image = ModElem(ring, d, {lm: ring.K.one}) - b.scale(lc.inverse())
            row = to_coordinates(image, report.W_gen)
        rows.append(row)
    report.action = rows
    return rows


# -- elementary divisors -----------------------------------------------------


@dataclass
class FreeModel:
    """A K<sigma>-basis e_1..e_s1 of M and the rho-action on it.

    ``basis`` rows are coordinates over ``W_gen``; ``U @ B @ V`` equals
    ``[[1, 0], [0, 0]]`` with an s0 x s0 identity block.
    """

    W_gen: list
    s0: int
    U: list
    U_inv: list
    V: list
    V_inv: list
    diagonal: list
    basis: list
    action: list
    basis_elements: list

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def level(self) -> int:
        """Perfection level needed to write down the basis and the action."""
        return max(mx.max_level(self.basis), mx.max_level(self.action), 0)

    @property
    def work_level(self) -> int:
        """Perfection level reached anywhere in the elementary-divisor computation."""
        return max(self.level, mx.max_level(self.V), mx.max_level(self.V_inv), mx.max_level(self.U))

    def reorder(self, perm) -> "FreeModel":
        """Relabel the basis: new e_a is old e_{perm[a]} (0-based)."""
        perm = list(perm)
        if sorted(perm) != list(range(self.size)):
            raise ValueError("not a permutation of the basis")
        s0 = self.s0
        V_inv = self.V_inv[:s0] + [self.V_inv[s0 + a] for a in perm]
        V = [row[:s0] + [row[s0 + a] for a in perm] for row in self.V]
        action = [[self.action[a][b] for b in perm] for a in perm]
        return FreeModel(
            self.W_gen,
            s0,
            self.U,
            self.U_inv,
            V,
            V_inv,
            self.diagonal,
            [self.basis[a] for a in perm],
            action,
            [self.basis_elements[a] for a in perm],
        )

    def index_of(self, w) -> int:
        """Position of the basis element equal to the generator w, if any."""
        ring = self.basis[0][0].ring if self.basis and self.basis[0] else None
        target = [ring.one() if g == w else ring.zero() for g in self.W_gen]
        for a, row in enumerate(self.basis):
            if all(x == y for x, y in zip(row, target)):
                return a
        raise KeyError(w)


def _least_degree(A, rows, cols):
    best = None
    for i in rows:
        for k in cols:
            x = A[i][k]
            if x:
                dg = x.degree("sigma")
                if best is None or dg < best[0]:
                    best = (dg, i, k)
    return best


def _rotate_rows(M, a, t):
    """Move row a to position t, shifting rows t..a-1 down."""
    if a != t:
        M.insert(t, M.pop(a))


def _rotate_cols(M, b, t):
    if b != t:
        for row in M:
            row.insert(t, row.pop(b))


def _rotate_rows_inverse(M, a, t):
    """Apply the inverse row rotation as a column rotation (for U^-1)."""
    _rotate_cols(M, a, t)


def diagonalize(B: list, ring: SkewRing, s: int):
    """Elementary-divisor form of B (r x s) over K<sigma>.

    Returns (A, U, U_inv, V, V_inv, s0) with A = U B V diagonal in its
    first s0 positions.
    """
    r = len(B)
    A = mx.copy(B)
    U, Ui = mx.identity(ring, r), mx.identity(ring, r)
    V, Vi = mx.identity(ring, s), mx.identity(ring, s)
    t = 0
    while t < min(r, s):
        piv = _least_degree(A, range(t, r), range(t, s))
        if piv is None:
            break
        _, a, b = piv
        _rotate_rows(A, a, t)
        _rotate_rows(U, a, t)
        _rotate_cols(Ui, a, t)
        _rotate_cols(A, b, t)
        _rotate_cols(V, b, t)
        _rotate_rows(Vi, b, t)
        while True:
            dirty = False
            p = A[t][t]
            for i in range(t + 1, r):
                if A[i][t]:
                    qt, rem = right_divmod(A[i][t], p, "sigma")
                    if qt:
                        A[i] = [x - qt * y for x, y in zip(A[i], A[t])]
                        U[i] = [x - qt * y for x, y in zip(U[i], U[t])]
                        for row in Ui:
                            row[t] = row[t] + row[i] * qt
                    dirty |= bool(rem)
            for k in range(t + 1, s):
                if A[t][k]:
                    qt, rem = left_divmod(A[t][k], p, "sigma")
                    if qt:
                        for row in A:
                            row[k] = row[k] - row[t] * qt
                        for row in V:
                            row[k] = row[k] - row[t] * qt
                        Vi[t] = [x + qt * y for x, y in zip(Vi[t], Vi[k])]
                    dirty |= bool(rem)
            if not dirty:
                break
            cand = [(A[i][t].degree("sigma"), 0, i) for i in range(t + 1, r) if A[i][t]]
            cand += [(A[t][k].degree("sigma"), 1, k) for k in range(t + 1, s) if A[t][k]]
            _, kind, idx = min(cand)
            if kind == 0:
                _rotate_rows(A, idx, t)
                _rotate_rows(U, idx, t)
                _rotate_cols(Ui, idx, t)
            else:
                _rotate_cols(A, idx, t)
                _rotate_cols(V, idx, t)
                _rotate_rows(Vi, idx, t)
        t += 1
    return A, U, Ui, V, Vi, t


def free_model(report: StructureReport) -> FreeModel:
    """K<sigma>-basis of M and the rho-action on it (elementary divisors)."""
    if not report.finite:
        raise NotFinitelyGenerated(f"n = {report.n}")
    if not report.action:
        action_on_generators(report)
    ring = report.ring
    s = len(report.W_gen)
    B = report.relations
    A, U, Ui, V, Vi, s0 = diagonalize(B, ring, s)
    diag = [A[t][t] for t in range(s0)]
    for t, h in enumerate(diag):
        if not mx.entry_is_unit(h):
            raise TorsionError(f"module not torsion-free: elementary divisor {h}")
        inv = h.terms[(0, 0)].inverse()
        hs = ring.scalar(inv)
        A[t] = [hs * x for x in A[t]]
        U[t] = [hs * x for x in U[t]]
        hh = ring.scalar(h.terms[(0, 0)])
        for row in Ui:
            row[t] = row[t] * hh
    r = len(B)
    if r:
        if not mx.equal(mx.matmul(mx.matmul(U, B, ring), V, ring), A):
            raise StructureError("U*B*V check failed")
        if not mx.is_identity(mx.matmul(U, Ui, ring)):
            raise StructureError("U inverse check failed")
    if not mx.is_identity(mx.matmul(V, Vi, ring)):
        raise StructureError("V inverse check failed")
    full = mx.matmul(mx.matmul(mx.twist(Vi, ring.a_rho), report.action, ring), V, ring)
    action = [row[s0:] for row in full[s0:]]
    basis = Vi[s0:]
    elements = [from_coordinates(row, report.W_gen, ring, report.d) for row in basis]
    return FreeModel(report.W_gen, s0, U, Ui, V, Vi, [A[t][t] for t in range(s0)], basis, action, elements)


def analyze(J: JanetSet, with_free_model: bool = True):
    """quantities -> split_top_low -> action -> free model, as far as finiteness allows."""
    report = quantities(J)
    if not report.finite:
        return report, None
    split_top_low(J, report)
    action_on_generators(report)
    fm = free_model(report) if with_free_model else None
    return report, fm
