"""Cone pictures of a Janet set, one panel per sheet.

The greater variable runs to the right and the smaller one upwards, as in
the usual staircase pictures.  A full cone is a filled quadrant, a cone with
one multiplicative variable a half-line.
"""

from __future__ import annotations

from .freemod import leading
from .janet import FULL

RHO, SIGMA = "rho", "sigma"


def _extent(J):
    lms = J.leading_monomials()
    kmax = max((k for _, k, _ in lms), default=0) + 2
    jmax = max((j for _, _, j in lms), default=0) + 2
    return kmax, jmax


def _cell(mono, cones):
    """(symbol, index of cone) for a monomial."""
    for idx, (lm, mu) in enumerate(cones):
        if lm == mono:
            return "o", idx
    for idx, (lm, mu) in enumerate(cones):
        i, k, j = mono
        if i != lm[0]:
            continue
        okk = k >= lm[1] if RHO in mu else k == lm[1]
        okj = j >= lm[2] if SIGMA in mu else j == lm[2]
        if okk and okj:
            if mu == FULL:
                return "#", idx
            return ("|" if SIGMA in mu else "-"), idx
    return ".", None


def ascii_diagram(J, names=("rho", "sigma"), basis_name="k") -> str:
    """Text picture: o = leading monomial, # = full cone, | or - = half-line, . = staircase."""
    kmax, jmax = _extent(J)
    cones = [(leading(p.b, J.order)[0], p.mu) for p in J.pairs]
    d = J.pairs[0].b.d if J.pairs else 0
    blocks = []
    for sheet in J.order.perm[:d] if d else ():
        lines = [f"sheet {basis_name}{sheet}  ({names[0]} ->, {names[1]} ^)"]
        for j in range(jmax, -1, -1):
            row = " ".join(_cell((sheet, k, j), cones)[0] for k in range(kmax + 1))
            lines.append(f"{j:>3} | {row}")
        lines.append("    +-" + "-" * (2 * kmax + 1))
        lines.append("      " + " ".join(str(k % 10) for k in range(kmax + 1)))
        labels = [
            f"  o at ({lm[1]},{lm[2]}): pair {idx + 1}, cone {{{', '.join(n for v, n in zip((RHO, SIGMA), names) if v in mu)}}}"
            for idx, (lm, mu) in enumerate(cones)
            if lm[0] == sheet
        ]
        blocks.append("\n".join(lines + labels))
    return "\n\n".join(blocks) + "\n"


def svg_diagram(J, names=("rho", "sigma"), basis_name="k", cell: int = 32) -> str:
    """Standalone SVG with one panel per sheet."""
    kmax, jmax = _extent(J)
    cones = [(leading(p.b, J.order)[0], p.mu) for p in J.pairs]
    d = J.pairs[0].b.d if J.pairs else 0
    sheets = list(J.order.perm[:d]) if d else []
    pad = 40
    pw = (kmax + 1) * cell + pad
    ph = (jmax + 1) * cell + pad
    width = max(pw * len(sheets), 1) + pad
    height = ph + pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">'
    ]
    for n, sheet in enumerate(sheets):
        x0 = pad + n * pw
        y0 = pad // 2 + (jmax + 1) * cell

        def X(k):
            return x0 + k * cell

        def Y(j):
            return y0 - j * cell

        right, top = X(kmax) + cell // 2, Y(jmax) - cell // 2
        out.append(f'<g id="sheet-{sheet}">')
        out.append(f'<text x="{x0}" y="{top - 6}">sheet {basis_name}{sheet}</text>')
        for idx, (lm, mu) in enumerate(cones):
            if lm[0] != sheet:
                continue
            x, y = X(lm[1]), Y(lm[2])
            if mu == FULL:
                out.append(
                    f'<rect x="{x}" y="{top}" width="{right - x}" height="{y - top}" '
                    f'fill="#c8d8f0" stroke="#4060a0" stroke-width="1"/>'
                )
            elif SIGMA in mu:
                out.append(f'<line x1="{x}" y1="{y}" x2="{x}" y2="{top}" stroke="#4060a0" stroke-width="3"/>')
            elif RHO in mu:
                out.append(f'<line x1="{x}" y1="{y}" x2="{right}" y2="{y}" stroke="#4060a0" stroke-width="3"/>')
        for k in range(kmax + 1):
            for j in range(jmax + 1):
                out.append(f'<circle cx="{X(k)}" cy="{Y(j)}" r="1.5" fill="#606060"/>')
        out.append(f'<line x1="{X(0)}" y1="{y0}" x2="{right}" y2="{y0}" stroke="black"/>')
        out.append(f'<line x1="{X(0)}" y1="{y0}" x2="{X(0)}" y2="{top}" stroke="black"/>')
        out.append(f'<text x="{right + 2}" y="{y0 + 4}">{names[0]}</text>')
        out.append(f'<text x="{X(0) - 4}" y="{top - 18}">{names[1]}</text>')
        for idx, (lm, mu) in enumerate(cones):
            if lm[0] != sheet:
                continue
            x, y = X(lm[1]), Y(lm[2])
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#c03030"/>')
            out.append(f'<text x="{x + 5}" y="{y + 14}">b{idx + 1}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
