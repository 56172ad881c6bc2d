"""
Deterministic text renderings: SVG and ASCII wiring diagrams, SVG beam diagrams.

Slot ``s`` is drawn at height ``s`` (top first) and comparator ``t`` at
abscissa ``t + 1``; the cut is the left and right border.  Contacts are white
circles, crossings small black dots.
"""

from __future__ import annotations

from .arrangement import Arrangement
from .combinatorics import BeamDiagram
from .network import Network

__all__ = ["wiring_svg", "wiring_ascii", "beams_svg"]

SCALE = 40
PAD = 30


def _fmt(v: float) -> str:
    return f"{v:.1f}".rstrip("0").rstrip(".")


def _svg_open(width: float, height: float) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]


def _wire_paths(net: Network, crossings: frozenset[int] | None):
    """Per-wire polylines in grid units; without crossings every vertex is a touch."""
    n = net.n
    perm = list(range(n, 0, -1))
    paths = {w: [(0.0, float(s + 1))] for s, w in enumerate(perm)}
    marks = []
    for t, c in enumerate(net.comparators):
        x = t + 1.0
        h = c.level
        a, b = perm[h - 1], perm[h]
        mid = h + 0.5
        swap = crossings is not None and c.id in crossings
        if swap:
            paths[a] += [(x - 0.4, float(h)), (x + 0.4, float(h + 1))]
            paths[b] += [(x - 0.4, float(h + 1)), (x + 0.4, float(h))]
            perm[h - 1], perm[h] = b, a
            marks.append(("crossing", x, mid))
        else:
            paths[a] += [(x - 0.4, float(h)), (x, h + 0.45), (x + 0.4, float(h))]
            paths[b] += [(x - 0.4, float(h + 1)), (x, h + 0.55), (x + 0.4, float(h + 1))]
            marks.append(("contact" if crossings is not None else "vertex", x, mid))
    end = net.m + 1.0
    for s, w in enumerate(perm):
        paths[w].append((end, float(s + 1)))
    return paths, marks


def wiring_svg(net: Network, arr: Arrangement | None = None) -> str:
    crossings = arr.crossings if arr is not None else None
    paths, marks = _wire_paths(net, crossings)
    width = (net.m + 1) * SCALE + 2 * PAD
    height = (net.n + 1) * SCALE + 2 * PAD

    def px(x, y):
        return f"{_fmt(PAD + x * SCALE)},{_fmt(PAD + y * SCALE)}"

    out = _svg_open(width, height)
    top, bottom = PAD + 0.5 * SCALE, PAD + (net.n + 0.5) * SCALE
    for x in (PAD, PAD + (net.m + 1) * SCALE):
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(top)}" x2="{_fmt(x)}" y2="{_fmt(bottom)}" '
                   'stroke="gray" stroke-dasharray="4 3"/>')
    for w in sorted(paths):
        pts = " ".join(px(x, y) for x, y in paths[w])
        out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5">'
                   f'<title>wire {w}</title></polyline>')
    for kind, x, y in marks:
        if kind == "crossing":
            out.append(f'<circle cx="{_fmt(PAD + x * SCALE)}" cy="{_fmt(PAD + y * SCALE)}" r="3" fill="black"/>')
        else:
            fill = "white" if kind == "contact" else "gray"
            out.append(f'<circle cx="{_fmt(PAD + x * SCALE)}" cy="{_fmt(PAD + y * SCALE)}" r="6" '
                       f'fill="{fill}" stroke="black" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def wiring_ascii(net: Network, arr: Arrangement | None = None) -> str:
    """
    One text row per slot and one per gap; comparator columns show ``X`` for a
    crossing, ``o`` for a contact and ``*`` when no arrangement is given.
    """
    n = net.n
    width = 3 * net.m + 1
    rows = [[("-" if r % 2 == 0 else " ") for _ in range(width)] for r in range(2 * n - 1)]
    for t, c in enumerate(net.comparators):
        col = 3 * t + 2
        gap = 2 * c.level - 1
        if arr is None:
            sym = "*"
        else:
            sym = "o" if c.id in arr.contacts else "X"
        rows[gap][col] = sym
        rows[gap - 1][col] = "+"
        rows[gap + 1][col] = "+"
    perm = list(range(n, 0, -1))
    if arr is not None:
        for c in net.comparators:
            if c.id in arr.crossings:
                h = c.level
                perm[h - 1], perm[h] = perm[h], perm[h - 1]
    label = len(str(n))
    out = []
    for r, row in enumerate(rows):
        if r % 2 == 0:
            s = r // 2
            left = str(n - s).rjust(label)
            right = f" {perm[s]}" if arr is not None else ""
            out.append(f"{left} {''.join(row)}{right}".rstrip())
        else:
            out.append(f"{' ' * label} {''.join(row)}".rstrip())
    return "\n".join(out) + "\n"


def beams_svg(diagram: BeamDiagram) -> str:
    n = diagram.n
    span = n + 1
    size = span * SCALE + 2 * PAD

    def px(x, y):
        # grid y grows upward
        return f"{_fmt(PAD + (x + 1) * SCALE)},{_fmt(PAD + (n - y) * SCALE)}"

    out = _svg_open(size, size)
    for i in range(n):
        out.append(f'<line x1="{_fmt(PAD + (i + 1) * SCALE)}" y1="{_fmt(PAD)}" '
                   f'x2="{_fmt(PAD + (i + 1) * SCALE)}" y2="{_fmt(PAD + span * SCALE)}" stroke="#ddd"/>')
        out.append(f'<line x1="{_fmt(PAD)}" y1="{_fmt(PAD + (n - i) * SCALE)}" '
                   f'x2="{_fmt(PAD + span * SCALE)}" y2="{_fmt(PAD + (n - i) * SCALE)}" stroke="#ddd"/>')
    for u, v in sorted(diagram.mirrors):
        cx, cy = PAD + (u + 1) * SCALE, PAD + (n - v) * SCALE
        d = SCALE * 0.3
        out.append(f'<line x1="{_fmt(cx - d)}" y1="{_fmt(cy + d)}" x2="{_fmt(cx + d)}" y2="{_fmt(cy - d)}" '
                   'stroke="steelblue" stroke-width="3"/>')
    for b in diagram.beams:
        pts = " ".join(px(x, y) for x, y in b.points)
        out.append(f'<polyline points="{pts}" fill="none" stroke="crimson" stroke-width="1.5">'
                   f'<title>beam {b.index}</title></polyline>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
