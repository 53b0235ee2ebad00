"""Command-line front end.

Exit codes:
    0  success
    1  internal error
    2  input error (syntax, validation, unreadable file)
    3  not (co)abelian, or no associated t-module in the reverse direction
    4  (co)motive is not effective
    5  not an Anderson t-module (nilpotence fails)
    6  oracle verification failed
    7  Janet algorithm hit the round limit
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .anderson import (
    COMOTIVE,
    MOTIVE,
    MotiveData,
    NotAnderson,
    NotEffective,
    TModuleData,
    analyze_tmodule,
    presentation_from_motive,
    presentation_from_tmodule,
    tmodule_from_motive,
)
from .diagram import ascii_diagram, svg_diagram
from .freemod import ModElem, OrderSpec
from .janet import RoundsExceeded, janet_algorithm
from .oracle import BudgetExceeded, DegreeBox, default_box, verify_janet
from .parsing import InputError, parse_input
from .report import analysis_report, from_json, janet_report, load_exact, to_json, to_text

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_NOT_FINITE = 3
EXIT_NOT_EFFECTIVE = 4
EXIT_NOT_ANDERSON = 5
EXIT_ORACLE = 6
EXIT_ROUNDS = 7


def _order(text):
    try:
        perm = tuple(int(x) for x in text.split(","))
        return OrderSpec(perm)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad order {text!r}: {exc}") from None


def _box(text):
    try:
        k, j = (int(x) for x in text.split(","))
        return DegreeBox(k, j)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad box {text!r}: expected K,J with K, J >= 0") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tmotives", description="Janet bases for Anderson t-modules and their (co)motives.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, side=False):
        p.add_argument("input", help="input document (YAML); '-' reads stdin")
        if side:
            p.add_argument("--side", choices=[MOTIVE, COMOTIVE], help="motive (default) or comotive")
        p.add_argument("--order", type=_order, help="sheet order, greatest first, e.g. 2,1")
        p.add_argument("--format", choices=["text", "json"], help="output format (default text)")
        p.add_argument("--diagram", choices=["ascii", "svg", "none"], help="cone diagram of the Janet basis")
        p.add_argument("--max-rounds", type=int, help="round limit for the Janet algorithm (default 1000)")
        p.add_argument("--box", type=_box, help="oracle degree box K,J (implies --oracle)")
        p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
        p.add_argument("--timing", action="store_true", help="include elapsed time (makes output non-reproducible)")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")

    common(sub.add_parser("analyze", help="t-module -> (co)motive basis and action"), side=True)
    common(sub.add_parser("reverse", help="(co)motive -> t-module"))
    common(sub.add_parser("janet", help="Janet basis of a raw presentation"), side=True)
    v = sub.add_parser("verify", help="run the oracle against a stored JSON report")
    v.add_argument("report", help="JSON report written with --format json")
    v.add_argument("--box", type=_box, help="degree box K,J (default: rho-bound + 2, 4)")
    v.add_argument("--format", choices=["text", "json"], default="text")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _opt(args, doc, name, default=None):
    val = getattr(args, name, None)
    if val is not None:
        return val
    return doc.options.get(name, default)


def _finish(args, doc, report, J, ring, basis_name, gens, t0):
    box = args.box or (DegreeBox(*doc.options["box"]) if "box" in doc.options else None)
    code = EXIT_OK
    if args.oracle or box is not None:
        verdict = verify_janet(J, gens, box or default_box(J))
        report["oracle"] = verdict.to_data()
        if not verdict.ok:
            code = EXIT_ORACLE
    if args.timing:
        report["elapsed"] = round(time.perf_counter() - t0, 6)
    diagram = _opt(args, doc, "diagram", "none")
    fmt = _opt(args, doc, "format", "text")
    pic = None
    if diagram == "ascii":
        pic = ascii_diagram(J, ring.names, basis_name)
    elif diagram == "svg":
        pic = svg_diagram(J, ring.names, basis_name)
    if fmt == "json":
        if pic is not None:
            report["diagram"] = {"format": diagram, "content": pic}
        text = to_json(report)
    else:
        text = to_text(report) + ("\n" + pic if pic else "")
    _emit(args, text)
    return code


def _emit(args, text):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _order_for(args, doc, d):
    o = args.order or (OrderSpec(doc.options["order"]) if "order" in doc.options else None)
    if o is not None and o.d != d:
        raise InputError(f"order {list(o.perm)} does not match dimension {d}")
    return o or OrderSpec.identity(d)


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    doc = parse_input(_read(args.input))
    if doc.kind != "tmodule":
        raise InputError(f"analyze needs a tmodule document, got {doc.kind}")
    side = _opt(args, doc, "side", MOTIVE)
    tm = TModuleData(doc.K, doc.matrix)
    a = analyze_tmodule(tm, side, _order_for(args, doc, tm.d), _opt(args, doc, "max_rounds", 1000))
    report = analysis_report(a, "analyze")
    code = _finish(args, doc, report, a.janet, a.ring, "k", a.gens, t0)
    return code if code else (EXIT_OK if a.finite else EXIT_NOT_FINITE)


def cmd_reverse(args) -> int:
    t0 = time.perf_counter()
    doc = parse_input(_read(args.input))
    if doc.kind not in (MOTIVE, COMOTIVE):
        raise InputError(f"reverse needs a motive or comotive document, got {doc.kind}")
    m = MotiveData(doc.K, doc.matrix, doc.kind)
    a = tmodule_from_motive(m, _order_for(args, doc, m.r), _opt(args, doc, "max_rounds", 1000))
    report = analysis_report(a, "reverse")
    code = _finish(args, doc, report, a.janet, a.ring, "e", a.gens, t0)
    return code if code else (EXIT_OK if a.finite else EXIT_NOT_FINITE)


def cmd_janet(args) -> int:
    t0 = time.perf_counter()
    doc = parse_input(_read(args.input))
    if doc.kind == "tmodule":
        gens, ring = presentation_from_tmodule(TModuleData(doc.K, doc.matrix), _opt(args, doc, "side", MOTIVE))
    elif doc.kind in (MOTIVE, COMOTIVE):
        gens, ring = presentation_from_motive(MotiveData(doc.K, doc.matrix, doc.kind))
    else:
        ring = doc.ring
        gens = [ModElem.from_vector(ring, row) for row in doc.matrix]
    d = gens[0].d
    J = janet_algorithm(gens, _order_for(args, doc, d), max_rounds=_opt(args, doc, "max_rounds", 1000))
    report = janet_report(J, gens, ring)
    return _finish(args, doc, report, J, ring, "k", gens, t0)


def cmd_verify(args) -> int:
    try:
        report = from_json(_read(args.report))
        ring, gens, J = load_exact(report)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"not a usable report: {exc}") from None
    verdict = verify_janet(J, gens, args.box or default_box(J))
    data = verdict.to_data()
    if args.format == "json":
        sys.stdout.write(to_json(data))
    else:
        lines = [f"oracle box {data['box']}"]
        for k, v in sorted(data["checks"].items()):
            lines.append(f"  {k:<11} {'ok' if v else 'FAILED'}")
        lines.append("verdict: " + ("Janet basis confirmed within the box" if verdict.ok else "FAILED"))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if verdict.ok else EXIT_ORACLE


COMMANDS = {"analyze": cmd_analyze, "reverse": cmd_reverse, "janet": cmd_janet, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotEffective as exc:
        print(f"not effective: {exc}", file=sys.stderr)
        return EXIT_NOT_EFFECTIVE
    except NotAnderson as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOT_ANDERSON
    except RoundsExceeded as exc:
        print(f"{exc}; raise --max-rounds or try another --order", file=sys.stderr)
        return EXIT_ROUNDS
    except BrokenPipeError:
        return EXIT_OK
    except BudgetExceeded as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - last-resort boundary
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
