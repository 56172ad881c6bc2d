"""
Counting and beam diagrams for multitriangulations of a convex polygon.

Polygon vertices are labelled ``0..n-1`` counterclockwise.  A beam diagram
places a double-faced mirror at the grid point ``(u, v)`` of every edge
``u < v``: a ray travelling right along row ``v`` turns up into column ``u``,
and a ray travelling up column ``u`` turns right into row ``v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

__all__ = [
    "catalan", "det_catalan", "hankel_det",
    "BeamDiagram", "Beam", "NotMultitriangulationError",
    "beams", "beam_check", "beam_report", "convex_crossing", "is_k_triangulation",
    "zigzag_two_triangulation",
]


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("catalan index must be non-negative")
    return comb(2 * m, m) // (m + 1)


def hankel_det(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(size - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, size) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, size):
            for j in range(p + 1, size):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[-1][-1]


def det_catalan(n: int, k: int) -> int:
    """``det(C_{n-i-j})`` for ``1 <= i, j <= k``: the number of k-triangulations of the n-gon."""
    if not n > 2 * k >= 0:
        raise ValueError(f"need n > 2k >= 0, got n={n}, k={k}")
    return hankel_det([[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)])


class NotMultitriangulationError(ValueError):
    pass


def convex_crossing(e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Two chords of a convex polygon cross iff their endpoints interleave."""
    a, b = sorted(e)
    c, d = sorted(f)
    return a < c < b < d or c < a < d < b


def is_k_triangulation(n: int, k: int, edges: Iterable[tuple[int, int]]) -> bool:
    """A (k+1)-crossing-free set of ``k(2n - 2k - 1)`` chords is a k-triangulation."""
    es = sorted({tuple(sorted(e)) for e in edges})
    if len(es) != k * (2 * n - 2 * k - 1) or any(not 0 <= a < b < n for a, b in es):
        return False
    cross = {e: {f for f in es if convex_crossing(e, f)} for e in es}

    def clique(size, cands):
        if size == 0:
            return True
        for e in sorted(cands):
            if clique(size - 1, {f for f in cands & cross[e] if f > e}):
                return True
        return False

    return not clique(k + 1, set(es))


def zigzag_two_triangulation() -> set[tuple[int, int]]:
    """
    A 2-triangulation of the 15-gon with no triangulation inside it: the 30
    short edges plus five zigzags ``3a, 3a+6, 3a+1, 3a+5, 3a+2``.
    """
    n = 15
    edges = {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)}
    for a in range(5):
        path = [3 * a, 3 * a + 6, 3 * a + 1, 3 * a + 5, 3 * a + 2]
        for x, y in zip(path, path[1:]):
            edges.add(tuple(sorted((x % n, y % n))))
    return edges


@dataclass(frozen=True)
class Beam:
    index: int                         # 1-based
    points: tuple[tuple[int, int], ...]  # start, reflection points, end
    reflections: int
    exit: tuple[str, int]              # ("up", column) or ("right", row)


@dataclass(frozen=True)
class BeamDiagram:
    n: int
    k: int
    mirrors: frozenset[tuple[int, int]]
    beams: tuple[Beam, ...]


def _trace(n: int, mirrors: frozenset[tuple[int, int]], index: int, row: int) -> Beam:
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for u, v in mirrors:
        by_row.setdefault(v, []).append(u)
        by_col.setdefault(u, []).append(v)
    x, y = -1, row
    pts = [(x, y)]
    moving_right = True
    bounces = 0
    for _ in range(2 * len(mirrors) + 2):
        if moving_right:
            ahead = [u for u in by_row.get(y, ()) if u > x]
            if not ahead:
                pts.append((n, y))
                return Beam(index, tuple(pts), bounces, ("right", y))
            x = min(ahead)
        else:
            ahead = [v for v in by_col.get(x, ()) if v > y]
            if not ahead:
                pts.append((x, n))
                return Beam(index, tuple(pts), bounces, ("up", x))
            y = min(ahead)
        pts.append((x, y))
        bounces += 1
        moving_right = not moving_right
    raise AssertionError("beam did not leave the grid")


def beams(n: int, k: int, edges: Iterable[tuple[int, int]], check: bool = True) -> BeamDiagram:
    edges = {tuple(sorted(e)) for e in edges}
    if check and not is_k_triangulation(n, k, edges):
        raise NotMultitriangulationError(f"edge set is not a {k}-triangulation of the {n}-gon")
    mirrors = frozenset(edges)
    out = tuple(_trace(n, mirrors, i, k - 1 + i) for i in range(1, n - 2 * k + 1))
    return BeamDiagram(n, k, mirrors, out)


def _segments(beam: Beam):
    return list(zip(beam.points, beam.points[1:]))


def _crossings(a: Beam, b: Beam) -> int | None:
    """Transversal crossings of two beams; ``None`` if they share a segment."""
    count = 0
    for s, t in itertools.product(_segments(a), _segments(b)):
        (x1, y1), (x2, y2) = s
        (x3, y3), (x4, y4) = t
        s_h, t_h = y1 == y2, y3 == y4
        if s_h == t_h:
            same_line = (y1 == y3) if s_h else (x1 == x3)
            if same_line:
                lo1, hi1 = sorted((x1, x2) if s_h else (y1, y2))
                lo2, hi2 = sorted((x3, x4) if s_h else (y3, y4))
                if min(hi1, hi2) > max(lo1, lo2):
                    return None
            continue
        (hx1, hy), (hx2, _) = s if s_h else t
        (vx, vy1), (_, vy2) = t if s_h else s
        # interior on both: endpoints are mirrors or the far ends, where no crossing happens
        if min(hx1, hx2) < vx < max(hx1, hx2) and min(vy1, vy2) < hy < max(vy1, vy2):
            count += 1
    return count


def beam_report(diagram: BeamDiagram) -> dict[str, bool]:
    n, k = diagram.n, diagram.k
    mono = all(
        all(p[0] <= q[0] and p[1] <= q[1] for p, q in zip(b.points, b.points[1:]))
        for b in diagram.beams
    )
    ends = all(b.exit == ("up", k - 1 + b.index) for b in diagram.beams)
    bounces = all(b.reflections == 2 * k + 1 for b in diagram.beams)
    pairs = all(_crossings(a, b) == 1 for a, b in itertools.combinations(diagram.beams, 2))
    return {"monotone": mono, "endpoints": ends, "reflections": bounces, "crossings": pairs,
            "count": len(diagram.beams) == n - 2 * k}


def beam_check(diagram: BeamDiagram) -> bool:
    return all(beam_report(diagram).values())
