"""Reports: a JSON-compatible tree per analysis, plus a plain-text rendering.

Every report carries an ``exact`` section with lossless coefficient data so
that a stored report can be reloaded and re-verified.  Rendered strings use
the input grammar, with fractional exponents of T for perfection levels.
"""

from __future__ import annotations

import json
import math

from . import serialize as sz
from .anderson import Analysis
from .freemod import ModElem, leading
from .janet import JanetSet

FORMAT_VERSION = 1


def _n(x):
    return "inf" if x == math.inf else int(x)


def _mono(ring, w, basis_name):
    i, j = w
    v = ring.names[0]
    if j == 0:
        return f"{basis_name}{i}"
    return f"{v}*{basis_name}{i}" if j == 1 else f"{v}^{j}*{basis_name}{i}"


def _matrix(A):
    return [[str(x) for x in row] for row in A]


def janet_section(J: JanetSet, ring, basis_name="k") -> dict:
    return {
        "rounds": J.rounds,
        "certified": J.certified,
        "pairs": [
            {
                "b": p.b.render(J.order, basis_name),
                "lm": ModElem(ring, p.b.d, {leading(p.b, J.order)[0]: ring.K.one}).render(J.order, basis_name),
                "mu": sz.mu_to_data(p.mu, ring),
            }
            for p in J.pairs
        ],
    }


def _basis_name(a: Analysis) -> str:
    return "e" if a.direction == "reverse" else "k"


def analysis_report(a: Analysis, command: str) -> dict:
    """JSON tree for a forward or reverse analysis."""
    R, rep, bn = a.ring, a.report, _basis_name(a)
    out = {
        "format": FORMAT_VERSION,
        "command": command,
        "field": sz.field_to_data(R.K),
        "ring": sz.ring_to_data(R),
        "direction": a.direction,
        "side": a.side,
        "order": list(a.order.perm),
        "verdict": a.verdict,
        "n": [_n(x) for x in rep.n],
        "m": [_n(x) for x in rep.m],
        "rank": _n(rep.rank),
        "presentation": [g.render(a.order, bn) for g in a.gens],
        "janet": janet_section(a.janet, R, bn),
        "notes": list(a.notes),
    }
    if a.direction == "reverse":
        out["dimension"] = out.pop("rank") if a.finite else None
        out["rank_rational"] = _n(rep.rank)
    if rep.finite:
        out["generators"] = [_mono(R, w, bn) for w in rep.W_gen]
        out["independent"] = [_mono(R, w, bn) for w in rep.W_ind]
        out["relations"] = _matrix(rep.relations)
        out["action_on_generators"] = _matrix(rep.action)
    else:
        out["generators"] = {
            "finite_sheets": [[i + 1, _n(x)] for i, x in enumerate(rep.n) if x != math.inf],
            "infinite_sheets": rep.infinite_sheets(),
            "description": [
                (
                    f"{R.names[0]}^j*{bn}{i + 1} for all j >= 0"
                    if x == math.inf
                    else f"{R.names[0]}^j*{bn}{i + 1} for 0 <= j < {x}"
                )
                for i, x in enumerate(rep.n)
            ],
        }
        out["relation_heads"] = [
            ModElem(R, rep.d, {lm: R.K.one}).render(a.order, bn) for lm in rep.relation_heads()
        ]
    exact = {
        "presentation": [sz.elem_to_data(g) for g in a.gens],
        "janet": sz.janet_to_data(a.janet, R),
    }
    if a.model is not None:
        fm = a.model
        out["basis"] = [e.render(a.order, bn) for e in fm.basis_elements]
        out["action"] = _matrix(fm.action)
        out["level"] = fm.level
        out["work_level"] = fm.work_level
        exact["action"] = sz.matrix_to_data(fm.action)
        exact["basis"] = sz.matrix_to_data(fm.basis)
    if a.tmodule is not None:
        out["tmodule"] = {"dimension": a.tmodule.d, "D": _matrix(a.tmodule.D)}
        exact["D"] = sz.matrix_to_data(a.tmodule.D)
    out["exact"] = exact
    return out


def janet_report(J: JanetSet, gens, ring, command: str = "janet") -> dict:
    return {
        "format": FORMAT_VERSION,
        "command": command,
        "field": sz.field_to_data(ring.K),
        "ring": sz.ring_to_data(ring),
        "order": list(J.order.perm),
        "presentation": [g.render(J.order) for g in gens],
        "janet": janet_section(J, ring),
        "exact": {"presentation": [sz.elem_to_data(g) for g in gens], "janet": sz.janet_to_data(J, ring)},
    }


def load_exact(report: dict):
    """(ring, gens, JanetSet) rebuilt from a report's exact section."""
    K = sz.field_from_data(report["field"])
    R = sz.ring_from_data(K, report["ring"])
    gens = [sz.elem_from_data_mod(R, g) for g in report["exact"]["presentation"]]
    J = sz.janet_from_data(R, report["exact"]["janet"])
    return R, gens, J


def to_json(report: dict) -> str:
    """Canonical serialization: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def from_json(text: str) -> dict:
    return json.loads(text)


def _fmt_matrix(rows, indent="    "):
    if not rows:
        return [indent + "(empty)"]
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return [indent + "[ " + "  ".join(x.ljust(w) for x, w in zip(r, widths)) + " ]" for r in rows]


def _vec(xs):
    return "[" + ", ".join(str(x) for x in xs) + "]"


def to_text(report: dict) -> str:
    """Readable summary of a report tree."""
    L = []
    f = report["field"]
    names = report["ring"]["names"]
    L.append(f"field      F_{f['q']}(T)" + (f", modulus {f['modulus']}" if f.get("modulus") else ""))
    L.append(f"ring       K{{{names[0]}, {names[1]}}}, order of sheets {_vec(report['order'])}")
    if "verdict" in report:
        L.append(f"verdict    {report['verdict']}")
        L.append(f"n          {_vec(report['n'])}")
        L.append(f"m          {_vec(report['m'])}")
        if "dimension" in report:
            L.append(f"dimension  {report['dimension']}")
        else:
            L.append(f"rank       {report['rank']}")
    L.append("presentation")
    L.extend(f"    {g}" for g in report["presentation"])
    jn = report["janet"]
    L.append(f"Janet basis ({jn['rounds']} rounds)")
    for p in jn["pairs"]:
        L.append(f"    {{{', '.join(p['mu'])}}}  lm {p['lm']}:  {p['b']}")
    if isinstance(report.get("generators"), list):
        L.append("generators " + ", ".join(report["generators"]))
        if report.get("relations"):
            L.append("relations (rows over the generators)")
            L.extend(_fmt_matrix(report["relations"]))
    elif isinstance(report.get("generators"), dict):
        L.append("generators")
        L.extend(f"    {d}" for d in report["generators"]["description"])
        L.append("relation heads on infinite sheets: " + ", ".join(report["relation_heads"]))
    if "basis" in report:
        L.append("basis      " + ", ".join(report["basis"]))
        L.append(f"action of {names[0]} on the basis (row a = image of basis element a)")
        L.extend(_fmt_matrix(report["action"]))
        L.append(f"perfection level {report['level']}")
    if "tmodule" in report:
        L.append(f"t-module of dimension {report['tmodule']['dimension']}, phi_t =")
        L.extend(_fmt_matrix(report["tmodule"]["D"]))
    for note in report.get("notes", []):
        L.append(f"note       {note}")
    if "oracle" in report:
        o = report["oracle"]
        checks = ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in sorted(o["checks"].items()))
        L.append(f"oracle     box {o['box']}: {checks}")
    if "elapsed" in report:
        L.append(f"elapsed    {report['elapsed']:.3f} s")
    return "\n".join(L) + "\n"
