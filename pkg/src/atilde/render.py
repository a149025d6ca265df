"""SVG drawings of arc diagrams on the annulus."""

from __future__ import annotations

import math

from .arcs import ArcDiagram, diagram_violations
from .strings import StringClass, StringModule

COLORS = {
    StringClass.PREPROJECTIVE: "#1f5fbf",
    StringClass.PREINJECTIVE: "#c0392b",
    StringClass.LEFT_REGULAR: "#000000",
    StringClass.RIGHT_REGULAR: "#000000",
}
WARNING = "#ff8c00"


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _point(cx, cy, r, theta):
    # theta is measured clockwise from the top
    return cx + r * math.sin(theta), cy - r * math.cos(theta)


def _arc_path(M: StringModule, cx, cy, r_in, r_out, samples_per_turn=96) -> str:
    Q, n = M.quiver, M.n
    s, e = M.lift
    rs = r_out if Q.is_plus(s) else r_in
    re_ = r_out if Q.is_plus(e) else r_in
    gap = r_out - r_in
    exterior = Q.sign(s) is Q.sign(e)
    bulge = 0.45 * gap * min(1.0, 0.35 + M.length / (2 * n))
    steps = max(8, int(samples_per_turn * M.length / n))
    pts = []
    for t in range(steps + 1):
        u = t / steps
        theta = 2 * math.pi * (s + u * (e - s)) / n
        r = rs + u * (re_ - rs)
        if exterior:
            r += (-bulge if Q.is_plus(s) else bulge) * math.sin(math.pi * u)
        pts.append(_point(cx, cy, r, theta))
    head = f"M {_fmt(pts[0][0])} {_fmt(pts[0][1])}"
    return head + "".join(f" L {_fmt(x)} {_fmt(y)}" for x, y in pts[1:])


def render_svg(D: ArcDiagram, size: int = 400, labels: bool = True) -> str:
    Q, n = D.quiver, D.quiver.n
    cx = cy = size / 2
    r_out, r_in = 0.44 * size, 0.18 * size
    bad = set()
    for v in diagram_violations(D) if D.modules else []:
        if v.kind in ("cross", "two-cycle", "not-exceptional", "duplicate"):
            bad.update(v.modules)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r_out)}" fill="none" stroke="#888" stroke-width="1.5"/>',
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r_in)}" fill="#eee" stroke="#888" stroke-width="1.5"/>',
    ]
    for M in D.modules:
        color = WARNING if M in bad else COLORS[M.string_class]
        dash = ' stroke-dasharray="6 3"' if M in bad else ""
        lines.append(f'<path d="{_arc_path(M, cx, cy, r_in, r_out)}" fill="none" '
                     f'stroke="{color}" stroke-width="2"{dash}/>')
    for v in range(n):
        r = r_out if Q.is_plus(v) else r_in
        x, y = _point(cx, cy, r, 2 * math.pi * v / n)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#000"/>')
        if labels:
            off = 14 if Q.is_plus(v) else -14
            lx, ly = _point(cx, cy, r + off, 2 * math.pi * v / n)
            lines.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
                         f'text-anchor="middle" dominant-baseline="middle">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
