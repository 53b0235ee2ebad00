"""Anderson t-modules, t-motives and t-comotives.

The forward direction turns a t-module (the matrix D of phi_t over K{tau})
into a presentation of its motive over K{tau, t} or of its comotive over
K{sigma, t}, and asks the structure layer whether the quotient is finitely
generated over K[t].  The reverse direction starts from a (co)motive given
by Theta over K[t] and asks whether it is finitely generated over K{tau}
(resp. K{sigma}); if so the t-action on a free basis is phi_t.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matrices as mx
from .coeff import FieldElem, FunctionField
from .freemod import ModElem, OrderSpec
from .janet import JanetSet, janet_algorithm
from .skew import SkewPoly, SkewRing, right_divmod, star
from .structure import FreeModel, StructureReport, analyze

MOTIVE = "motive"
COMOTIVE = "comotive"
SIDES = (MOTIVE, COMOTIVE)


class AndersonError(Exception):
    pass


class NotAnderson(AndersonError):
    """d(phi_t) - theta is not nilpotent."""


class NotEffective(AndersonError):
    """det(Theta) is not a constant times a power of (t - theta)."""


def tau_ring(K: FunctionField) -> SkewRing:
    """K{tau, t}; t-module matrices live in its tau-only part."""
    return SkewRing.from_names(K, "tau", "t")


def forward_ring(K: FunctionField, side: str) -> SkewRing:
    _check_side(side)
    return SkewRing.from_names(K, "tau" if side == MOTIVE else "sigma", "t")


def reverse_ring(K: FunctionField, side: str) -> SkewRing:
    _check_side(side)
    return SkewRing.from_names(K, "t", "tau" if side == MOTIVE else "sigma")


def _check_side(side):
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def swap_variables(f: SkewPoly, target: SkewRing) -> SkewPoly:
    """Move f to a ring whose two variables are the same as f's, in the other order."""
    return SkewPoly(target, {(j, k): c for (k, j), c in f.terms.items()})


def move_to(f: SkewPoly, target: SkewRing) -> SkewPoly:
    """Re-home f in a ring sharing the variable names it actually uses."""
    src = f.ring
    if src == target:
        return f
    out = {}
    for (k, j), c in f.terms.items():
        degs = {}
        if k:
            degs[src.names[0]] = k
        if j:
            degs[src.names[1]] = j
        kk = degs.pop(target.names[0], 0)
        jj = degs.pop(target.names[1], 0)
        if degs:
            raise ValueError(f"{f} uses a variable that {target.names} does not have")
        out[(kk, jj)] = c
    return SkewPoly(target, out)


@dataclass
class TModuleData:
    """phi_t = D over K{tau} in fixed coordinates; theta is the image of t."""

    K: FunctionField
    D: list

    def __post_init__(self):
        if not self.D:
            raise ValueError("dimension must be >= 1")
        R = tau_ring(self.K)
        rows = []
        for row in self.D:
            if len(row) != len(self.D):
                raise ValueError("matrix D must be square")
            rows.append([move_to(x, R) if isinstance(x, SkewPoly) else R.coerce(x) for x in row])
        for row in rows:
            for x in row:
                if x.degree("sigma") > 0:
                    raise ValueError("entries of D must not involve t")
        self.D = rows

    @property
    def d(self) -> int:
        return len(self.D)

    @property
    def theta(self) -> FieldElem:
        return self.K.theta()

    @property
    def ring(self) -> SkewRing:
        return tau_ring(self.K)

    def differential(self) -> list:
        """The tau-degree 0 part of D as a matrix over K."""
        return [[x.coefficient(0, 0) for x in row] for row in self.D]

    def is_nilpotent(self) -> bool:
        """(D_0 - theta)^d == 0."""
        K = self.K
        d = self.d
        N = self.differential()
        for i in range(d):
            N[i][i] = N[i][i] - self.theta
        P = [[K.one if i == j else K.zero for j in range(d)] for i in range(d)]
        for _ in range(d):
            P = _field_matmul(K, P, N)
        return all(not x for row in P for x in row)

    def check(self):
        if not self.is_nilpotent():
            raise NotAnderson("not an Anderson t-module: d(phi_t) - theta is not nilpotent")


def _field_matmul(K, A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for k in range(p):
            acc = K.zero
            for j in range(m):
                if A[i][j] and B[j][k]:
                    acc = acc + A[i][j] * B[j][k]
            row.append(acc)
        out.append(row)
    return out


def dual_matrix(D: list, target: SkewRing) -> list:
    """D* : transpose and send sum a_i tau^i to sum a_i^(1/q^i) sigma^i."""
    d = len(D)
    return [[star(D[j][i], target, var="rho") for j in range(d)] for i in range(d)]


def undual_matrix(Dstar: list, target: SkewRing) -> list:
    """Inverse of :func:`dual_matrix` (sigma back to tau)."""
    d = len(Dstar)
    return [[star(Dstar[j][i], target, var="rho") for j in range(d)] for i in range(d)]


def presentation_from_tmodule(tm: TModuleData, side: str = MOTIVE):
    """Generators p_i = t k_i - sum_j A_ij k_j with A = D (motive) or D* (comotive)."""
    tm.check()
    R = forward_ring(tm.K, side)
    A = tm.D if side == MOTIVE else dual_matrix(tm.D, R)
    A = [[move_to(x, R) for x in row] for row in A]
    t = R.sigma()
    gens = []
    for i, row in enumerate(A):
        entries = [(t if i == j else R.zero()) - x for j, x in enumerate(row)]
        gens.append(ModElem.from_vector(R, entries))
    return gens, R


@dataclass
class Analysis:
    """Outcome of running the Janet/structure pipeline on one presentation."""

    direction: str  # "forward" or "reverse"
    side: str
    ring: SkewRing
    order: OrderSpec
    gens: list
    janet: JanetSet
    report: StructureReport
    model: FreeModel | None
    tmodule: TModuleData | None = None
    notes: list = field(default_factory=list)

    @property
    def finite(self) -> bool:
        return self.report.finite

    @property
    def rank(self):
        return self.report.rank

    @property
    def level(self) -> int:
        return self.model.level if self.model is not None else 0

    @property
    def verdict(self) -> str:
        if self.direction == "forward":
            word = "abelian" if self.side == MOTIVE else "coabelian"
            return word if self.finite else f"not {word}"
        if not self.finite:
            return "no associated t-module of this form"
        if self.side == MOTIVE and self.model.work_level > 0:
            return "free over the perfection"
        return "t-module"


def analyze_tmodule(
    tm: TModuleData,
    side: str = MOTIVE,
    order: OrderSpec | None = None,
    max_rounds: int = 1000,
    keep_history: bool = False,
) -> Analysis:
    """Decide (co)abelianness and compute a K[t]-basis with its tau/sigma-action."""
    gens, R = presentation_from_tmodule(tm, side)
    order = order or OrderSpec.identity(tm.d)
    J = janet_algorithm(gens, order, max_rounds=max_rounds, keep_history=keep_history)
    report, model = analyze(J)
    return Analysis("forward", side, R, order, gens, J, report, model)


@dataclass
class MotiveData:
    """tau (or sigma) acting on a K[t]-basis e by Theta, entries in K[t]."""

    K: FunctionField
    Theta: list
    side: str = MOTIVE

    def __post_init__(self):
        _check_side(self.side)
        if not self.Theta:
            raise ValueError("dimension must be >= 1")
        R = reverse_ring(self.K, self.side)
        rows = []
        for row in self.Theta:
            if len(row) != len(self.Theta):
                raise ValueError("matrix Theta must be square")
            rows.append([move_to(x, R) if isinstance(x, SkewPoly) else R.coerce(x) for x in row])
        for row in rows:
            for x in row:
                if x.degree("sigma") > 0:
                    raise ValueError(f"entries of Theta must lie in K[t], got {x}")
        self.Theta = rows

    @property
    def r(self) -> int:
        return len(self.Theta)

    @property
    def ring(self) -> SkewRing:
        return reverse_ring(self.K, self.side)

    @classmethod
    def from_action(cls, K: FunctionField, action: list, side: str = MOTIVE) -> "MotiveData":
        """Theta from a forward analysis' action matrix (entries in the t-variable)."""
        return cls(K, [[x for x in row] for row in action], side)


def determinant(A: list, ring: SkewRing) -> SkewPoly:
    """Bareiss fraction-free determinant of a matrix over the commutative ring K[t]."""
    n = len(A)
    M = mx.copy(A)
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return ring.zero()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                q, r = right_divmod(num, prev)
                if r:
                    raise ArithmeticError("Bareiss division was not exact")
                M[i][j] = q
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


@dataclass
class Effectiveness:
    effective: bool
    det: SkewPoly
    c: FieldElem | None
    s: int
    reason: str = ""


def check_effective(m: MotiveData) -> Effectiveness:
    """det(Theta) == c * (t - theta)^s with c a nonzero constant of K?"""
    R = m.ring
    det = determinant(m.Theta, R)
    if not det:
        return Effectiveness(False, det, None, 0, "det(Theta) = 0: the action is not injective")
    lin = R.rho() - R.scalar(m.K.theta())
    f, s = det, 0
    while f.degree("rho") > 0:
        q, r = right_divmod(f, lin)
        if r:
            return Effectiveness(False, det, None, s, f"det(Theta) = {det} is not c*(t - T)^s")
        f, s = q, s + 1
    return Effectiveness(True, det, f.coefficient(0, 0), s)


def presentation_from_motive(m: MotiveData):
    R = m.ring
    v = R.sigma()
    gens = []
    for i, row in enumerate(m.Theta):
        entries = [(v if i == j else R.zero()) - x for j, x in enumerate(row)]
        gens.append(ModElem.from_vector(R, entries))
    return gens, R


def tmodule_from_motive(
    m: MotiveData,
    order: OrderSpec | None = None,
    max_rounds: int = 1000,
    keep_history: bool = False,
) -> Analysis:
    """Reverse dictionary: the t-module whose (co)motive is m, when it exists."""
    eff = check_effective(m)
    if not eff.effective:
        raise NotEffective(eff.reason)
    gens, R = presentation_from_motive(m)
    order = order or OrderSpec.identity(m.r)
    J = janet_algorithm(gens, order, max_rounds=max_rounds, keep_history=keep_history)
    report, model = analyze(J)
    out = Analysis("reverse", m.side, R, order, gens, J, report, model)
    if model is None:
        return out
    T = tau_ring(m.K)
    if m.side == MOTIVE:
        D = [[swap_variables(x, T) for x in row] for row in model.action]
    else:
        S = SkewRing.from_names(m.K, "sigma", "t")
        Dstar = [[swap_variables(x, S) for x in row] for row in model.action]
        D = undual_matrix(Dstar, T)
    tm = TModuleData(m.K, D)
    if not tm.is_nilpotent():
        raise NotAnderson("reconstructed phi_t fails the nilpotence condition")
    out.tmodule = tm
    if m.side == MOTIVE and model.work_level > 0:
        out.notes.append(f"basis needs q-th roots: free over the perfection (level {model.work_level})")
    return out
