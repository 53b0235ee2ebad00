"""Expression language and input documents.

Expressions::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/' | <juxtaposition>) factor)*
    factor := '-' factor | atom ['^' INT]
    atom   := INT | 'T' | 'theta' | 'a' | variable | '(' expr ')'

Products are taken in the order written, so ``tau*T`` is T^q*tau.  Division
is only by nonzero constants of K.  Fractional exponents such as T^(1/q)
are rejected: perfection levels only ever come out of a computation.

Documents are YAML with a ``field`` block, exactly one object block
(``tmodule``, ``motive``, ``comotive`` or ``presentation``) and an optional
``options`` block; see the demos directory for complete examples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import yaml

from .coeff import FunctionField
from .fq import BUILTIN_MODULI, GF, is_prime
from .skew import VARIABLE_TWISTS, SkewPoly, SkewRing, TwistPair


class InputError(Exception):
    """Malformed input; ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, where: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.where = where
        loc = []
        if where:
            loc.append(where)
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{', '.join(loc)}: {message}" if loc else message)


_TOKEN = re.compile(r"(\s+)|(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()])|(.)")


def tokenize(text: str):
    """(kind, value, column) triples; kind is 'int', 'name', 'op' or 'end'."""
    text = str(text)
    out = []
    for m in _TOKEN.finditer(text):
        col = m.start() + 1
        if m.group(2):
            out.append(("int", int(m.group(2)), col))
        elif m.group(3):
            out.append(("name", m.group(3), col))
        elif m.group(4):
            out.append(("op", m.group(4), col))
        elif m.group(5):
            raise InputError(f"unexpected character {m.group(5)!r}", column=col)
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text, ring: SkewRing, allowed, where: str, line, col0):
        self.text = str(text)
        self.ring = ring
        self.K = ring.K
        self.allowed = set(ring.names if allowed is None else allowed)
        self.where = where
        self.line = line
        self.col0 = col0
        try:
            self.toks = tokenize(self.text)
        except InputError as exc:
            raise self.error(exc.message, exc.column) from None
        self.i = 0

    def error(self, msg, column):
        col = None if column is None else column + self.col0
        return InputError(msg, self.line, col, self.where)

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, col = self.next()
        if kind != "op" or val != ch:
            raise self.error(f"expected {ch!r}", col)

    def parse(self) -> SkewPoly:
        if self.peek()[0] == "end":
            raise self.error("empty expression", 1)
        val = self.expr()
        kind, v, col = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {v!r}", col)
        return val

    def expr(self):
        val = self.term()
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.next()
                rhs = self.term()
                val = val + rhs if v == "+" else val - rhs
            else:
                return val

    def _starts_atom(self, tok):
        kind, v, _ = tok
        return kind in ("int", "name") or (kind == "op" and v == "(")

    def term(self):
        val = self.factor()
        while True:
            tok = self.peek()
            kind, v, col = tok
            if kind == "op" and v == "*":
                self.next()
                val = val * self.factor()
            elif kind == "op" and v == "/":
                self.next()
                dcol = self.peek()[2]
                den = self.factor()
                if not den:
                    raise self.error("division by zero", dcol)
                if set(den.terms) != {(0, 0)}:
                    raise self.error("can only divide by a nonzero element of K", dcol)
                val = val * self.ring.scalar(den.terms[(0, 0)].inverse())
            elif self._starts_atom(tok):
                val = val * self.factor()
            else:
                return val

    def factor(self):
        kind, v, col = self.peek()
        if kind == "op" and v == "-":
            self.next()
            return -self.factor()
        if kind == "op" and v == "+":
            self.next()
            return self.factor()
        base = self.atom()
        kind, v, col = self.peek()
        if kind == "op" and v == "^":
            self.next()
            kind, e, ecol = self.next()
            if kind == "op" and e == "(":
                raise self.error("fractional or parenthesised exponents (such as T^(1/q)) are not accepted", ecol)
            if kind != "int":
                raise self.error("exponent must be a non-negative integer", ecol)
            return base**e
        return base

    def atom(self):
        kind, v, col = self.next()
        R = self.ring
        if kind == "int":
            return R.scalar(self.K.from_int(v))
        if kind == "name":
            if v in ("T", "theta"):
                return R.scalar(self.K.theta())
            if v == "a":
                if self.K.F.n == 1:
                    raise self.error("'a' (generator of F_q) is only defined for q = p^n with n > 1", col)
                return R.scalar(self.K.gen())
            if v in R.names:
                if v not in self.allowed:
                    raise self.error(f"variable {v!r} is not allowed here", col)
                return R.rho() if v == R.names[0] else R.sigma()
            raise self.error(f"unknown name {v!r}", col)
        if kind == "op" and v == "(":
            val = self.expr()
            self.expect_op(")")
            return val
        if kind == "end":
            raise self.error("unexpected end of expression", col)
        raise self.error(f"unexpected {v!r}", col)


def parse_expr(text, ring: SkewRing, allowed=None, where: str = "", line=None, column_offset: int = 0) -> SkewPoly:
    """Parse an expression into an element of ring (only ``allowed`` variables)."""
    if isinstance(text, bool):
        raise InputError("expected an expression, got a boolean", line, None, where)
    if isinstance(text, int):
        return ring.scalar(ring.K.from_int(text))
    if not isinstance(text, str):
        raise InputError(f"expected an expression, got {type(text).__name__}", line, None, where)
    return _Parser(text, ring, allowed, where, line, column_offset).parse()


# -- YAML with positions ------------------------------------------------------


class _MarkedStr(str):
    line: int = None
    column: int = None


class _Loader(yaml.SafeLoader):
    pass


def _construct_str(loader, node):
    s = _MarkedStr(loader.construct_scalar(node))
    s.line = node.start_mark.line + 1
    # 1-based column of the first character of the scalar's content
    s.column = node.start_mark.column + 1 + (1 if node.style in ("'", '"') else 0)
    return s


_Loader.add_constructor("tag:yaml.org,2002:str", _construct_str)


def _marks(x):
    return getattr(x, "line", None), getattr(x, "column", None)


KINDS = ("tmodule", "motive", "comotive", "presentation")


@dataclass
class InputDoc:
    K: FunctionField
    kind: str
    ring: SkewRing
    matrix: list
    options: dict = field(default_factory=dict)
    field_spec: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.matrix)


def field_from_spec(spec) -> FunctionField:
    if not isinstance(spec, dict):
        raise InputError("field block must be a mapping with p (and n) or q")
    p, n, q = spec.get("p"), spec.get("n"), spec.get("q")
    if q is not None:
        q = _int(q, "field.q")
        p0 = next((d for d in range(2, q + 1) if q % d == 0), None)
        if p0 is None:
            raise InputError("field.q must be a prime power")
        n0, x = 0, q
        while x % p0 == 0:
            x //= p0
            n0 += 1
        if x != 1:
            raise InputError(f"field.q = {q} is not a prime power")
        if p is not None and _int(p, "field.p") != p0:
            raise InputError("field.p does not match field.q")
        if n is not None and _int(n, "field.n") != n0:
            raise InputError("field.n does not match field.q")
        p, n = p0, n0
    else:
        if p is None:
            raise InputError("field block needs p (and optionally n) or q")
        p = _int(p, "field.p")
        n = 1 if n is None else _int(n, "field.n")
    if not is_prime(p):
        raise InputError(f"field.p = {p} is not prime")
    if n < 1:
        raise InputError("field.n must be >= 1")
    modulus = spec.get("irreducible", spec.get("modulus"))
    if modulus is not None:
        if not isinstance(modulus, list) or not all(isinstance(c, int) for c in modulus):
            raise InputError("field.irreducible must be a list of integers, constant term first")
        modulus = tuple(c % p for c in modulus)
    elif n > 1 and p**n not in BUILTIN_MODULI and p**n > 1024:
        raise InputError(f"q = {p**n} needs an explicit field.irreducible")
    try:
        return FunctionField(GF(p**n, modulus))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _int(x, name):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{name} must be an integer")
    return x


def _parse_matrix(rows, ring, allowed, name, square=True):
    if not isinstance(rows, list) or not rows:
        raise InputError("dimension must be >= 1", *_marks(rows), where=name)
    out = []
    width = None
    for a, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            row = [row]
        if square and len(row) != len(rows):
            raise InputError(f"row {a} has {len(row)} entries, expected {len(rows)} (matrix must be square)", where=name)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(f"row {a} has {len(row)} entries, expected {width}", where=name)
        if not row:
            raise InputError("dimension must be >= 1", where=name)
        parsed = []
        for b, x in enumerate(row, start=1):
            line, col = _marks(x)
            where = f"{name}[{a}][{b}]"
            parsed.append(parse_expr(x, ring, allowed, where, line, (col or 1) - 1 if col else 0))
        out.append(parsed)
    return out


def _wrong_variable_check(rows, ring, forbidden, name, hint):
    for a, row in enumerate(rows, start=1):
        for b, x in enumerate(row, start=1):
            if not isinstance(x, str):
                continue
            try:
                toks = tokenize(x)
            except InputError:
                continue  # reported with full context by the parser
            for kind, v, col in toks:
                if kind == "name" and v in forbidden:
                    line, c0 = _marks(x)
                    raise InputError(
                        f"variable {v!r} is not allowed here ({hint})",
                        line,
                        (c0 or 1) - 1 + col if c0 else col,
                        f"{name}[{a}][{b}]",
                    )


def parse_input(text: str) -> InputDoc:
    """Parse and validate a YAML input document."""
    try:
        data = yaml.load(text, Loader=_Loader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise InputError(
            f"YAML syntax error: {exc.problem}",
            mark.line + 1 if mark else None,
            mark.column + 1 if mark else None,
        ) from None
    if not isinstance(data, dict):
        raise InputError("document must be a mapping with field/object/options blocks")
    unknown = set(data) - {"field", "options", *KINDS}
    if unknown:
        raise InputError(f"unknown top-level keys: {sorted(map(str, unknown))}")
    if "field" not in data:
        raise InputError("missing field block")
    K = field_from_spec(data["field"])
    kinds = [k for k in KINDS if k in data]
    if len(kinds) != 1:
        raise InputError(f"exactly one of {KINDS} is required, found {kinds or 'none'}")
    kind = kinds[0]
    block = data[kind]
    options = data.get("options") or {}
    if not isinstance(options, dict):
        raise InputError("options block must be a mapping")
    options = {str(k): v for k, v in options.items()}
    if not isinstance(block, dict):
        raise InputError(f"{kind} block must be a mapping")
    if kind == "tmodule":
        if "D" not in block:
            raise InputError("tmodule block needs a matrix D")
        ring = SkewRing.from_names(K, "tau", "t")
        _wrong_variable_check(block["D"] or [], ring, {"t", "sigma"}, "D", "t-module entries live in K{tau}")
        matrix = _parse_matrix(block["D"], ring, {"tau"}, "D")
    elif kind in ("motive", "comotive"):
        if "Theta" not in block:
            raise InputError(f"{kind} block needs a matrix Theta")
        other = "tau" if kind == "motive" else "sigma"
        ring = SkewRing.from_names(K, "t", other)
        _wrong_variable_check(block["Theta"] or [], ring, {"tau", "sigma"}, "Theta", "entries must lie in K[t]")
        matrix = _parse_matrix(block["Theta"], ring, {"t"}, "Theta")
    else:
        names = block.get("variables")
        if not isinstance(names, list) or len(names) != 2:
            raise InputError("presentation.variables must list two variable names (greater first)")
        names = [str(v) for v in names]
        twist = block.get("twist")
        if twist is None:
            missing = [v for v in names if v not in VARIABLE_TWISTS]
            if missing:
                raise InputError(f"variables {missing} need an explicit presentation.twist [a_rho, a_sigma]")
            ring = SkewRing.from_names(K, *names)
        else:
            if not (isinstance(twist, list) and len(twist) == 2 and all(isinstance(x, int) for x in twist)):
                raise InputError("presentation.twist must be two integers")
            for v in names:
                if v in ("T", "theta", "a") or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise InputError(f"invalid variable name {v!r}")
            ring = SkewRing(K, TwistPair(*twist), names)
        gens = block.get("gens")
        matrix = _parse_matrix(gens, ring, None, "gens", square=False)
    options = _validate_options(options, len(matrix), kind)
    return InputDoc(K, kind, ring, matrix, options, dict(data["field"]))


def _validate_options(opts: dict, d: int, kind: str) -> dict:
    out = {}
    for key, val in opts.items():
        if key == "order":
            if not isinstance(val, list) or sorted(val) != list(range(1, d + 1)):
                raise InputError(f"options.order must be a permutation of 1..{d}")
            out["order"] = tuple(val)
        elif key == "side":
            if val not in ("motive", "comotive"):
                raise InputError("options.side must be motive or comotive")
            if kind != "tmodule":
                raise InputError("options.side only applies to tmodule documents")
            out["side"] = val
        elif key == "max_rounds":
            out["max_rounds"] = _int(val, "options.max_rounds")
            if out["max_rounds"] < 1:
                raise InputError("options.max_rounds must be >= 1")
        elif key == "box":
            if not (isinstance(val, list) and len(val) == 2 and all(isinstance(x, int) and x >= 0 for x in val)):
                raise InputError("options.box must be [K_max, J_max]")
            out["box"] = tuple(val)
        elif key == "format":
            if val not in ("text", "json"):
                raise InputError("options.format must be text or json")
            out["format"] = val
        elif key == "diagram":
            if val not in ("ascii", "svg", "none"):
                raise InputError("options.diagram must be ascii, svg or none")
            out["diagram"] = val
        else:
            raise InputError(f"unknown option {key!r}")
    return out
