"""
Exact planar geometry and the duality between point sets and sorting networks.

All coordinates are :class:`fractions.Fraction`; every predicate is an exact
sign computation.  The dual network of a point set sweeps the direction of an
oriented line from angle 0 to pi: at angle 0 the wires are ordered by
y-coordinate (largest on top) and each pair of points swaps when the sweep
reaches the direction of the line through them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Mapping, Sequence

from .arrangement import Arrangement
from .enumeration import SizeLimitError
from .network import Comparator, Network

__all__ = [
    "Point", "PointSet", "DualNetwork", "ChordSet", "Star", "StarEntry",
    "CollinearError", "DegenerateDirectionError", "DegenerateQueryError", "IdMapError",
    "orientation", "general_position_check", "dual_network", "convex_position", "random_points",
    "side_counts", "classify_edge", "primal_edges", "segments_cross",
    "is_crossing_free", "is_pointed", "is_pseudotriangulation",
    "alternation_check", "k_pointed_check", "crossing_free_check",
    "stars", "star_of", "corner_count", "winding_number", "k_depth",
    "pseudotriangulations_bruteforce",
]

Point = tuple[Fraction, Fraction]

LEFT = 1
RIGHT = -1


class CollinearError(ValueError):
    pass


class DegenerateDirectionError(ValueError):
    pass


class DegenerateQueryError(ValueError):
    pass


class IdMapError(ValueError):
    pass


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if ``r`` is left of the oriented line ``pq``, -1 if right, 0 if collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def general_position_check(points: Sequence[Point]) -> None:
    if len(set(points)) != len(points):
        raise CollinearError("repeated point")
    for a, b, c in itertools.combinations(range(len(points)), 3):
        if orientation(points[a], points[b], points[c]) == 0:
            raise CollinearError(f"points {a}, {b}, {c} are collinear")


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        general_position_check(pts)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def convex_position(n: int) -> PointSet:
    """Points ``(2^i, 4^i)``, ``i = 1..n``: convex, counterclockwise, all slopes distinct."""
    if n < 3:
        raise ValueError("convex position needs at least 3 points")
    return PointSet(tuple((Fraction(2 ** i), Fraction(4 ** i)) for i in range(1, n + 1)))


def random_points(n: int, rng: random.Random, size: int = 1000) -> PointSet:
    """Integer points in a box, rejection-sampled into general position with distinct y."""
    while True:
        pts = []
        ys = set()
        while len(pts) < n:
            p = (Fraction(rng.randrange(size)), Fraction(rng.randrange(size)))
            if p[1] in ys:
                continue
            if any(orientation(a, b, p) == 0 for a, b in itertools.combinations(pts, 2)):
                continue
            pts.append(p)
            ys.add(p[1])
        try:
            ps = PointSet(tuple(pts))
            dual_network(ps)
            return ps
        except (CollinearError, DegenerateDirectionError):
            continue


@dataclass(frozen=True)
class DualNetwork:
    """A point set's dual network with the bookkeeping back to points."""
    points: PointSet
    net: Network
    wire_to_point: Mapping[int, int]
    pairs: Mapping[int, tuple[int, int]]  # comparator id -> sorted point pair

    @cached_property
    def vertex_of(self) -> dict[tuple[int, int], int]:
        return {pair: v for v, pair in self.pairs.items()}


def _direction(p: Point, q: Point):
    """Direction of line pq normalised into the open upper half-plane."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dy < 0 or (dy == 0 and dx < 0):
        dx, dy = -dx, -dy
    return dx, dy


def dual_network(points: PointSet) -> DualNetwork:
    pts = points.points
    n = len(pts)
    order = sorted(range(n), key=lambda i: pts[i][1], reverse=True)
    for a, b in zip(order, order[1:]):
        if pts[a][1] == pts[b][1]:
            raise DegenerateDirectionError(f"points {a} and {b} share a y-coordinate (line along the cut)")
    # slot j (1-based, top first) holds wire n + 1 - j
    wire_of_point = {p: n - j for j, p in enumerate(order)}
    wire_to_point = {w: p for p, w in wire_of_point.items()}

    events = [((i, j), _direction(pts[i], pts[j])) for i, j in itertools.combinations(range(n), 2)]

    def cmp(e, f):
        c = _cross(e[1], f[1])
        return -1 if c > 0 else (1 if c < 0 else 0)

    events.sort(key=cmp_to_key(cmp))
    slots = [wire_of_point[p] for p in order]  # slot index 0 = top
    where = {w: s for s, w in enumerate(slots)}
    comps = []
    pairs = {}
    t = 0
    while t < len(events):
        u = t
        while u < len(events) and cmp(events[t], events[u]) == 0:
            u += 1
        group = events[t:u]
        pts_used = [x for (pair, _) in group for x in pair]
        if len(set(pts_used)) != len(pts_used):
            raise DegenerateDirectionError("parallel connecting lines share a point")
        # parallel disjoint events commute; take them bottom slot first
        group.sort(key=lambda e: -min(where[wire_of_point[e[0][0]]], where[wire_of_point[e[0][1]]]))
        for (i, j), _ in group:
            si, sj = where[wire_of_point[i]], where[wire_of_point[j]]
            if abs(si - sj) != 1:
                raise AssertionError(f"event ({i}, {j}) swaps non-adjacent slots {si}, {sj}")
            s = min(si, sj)
            cid = len(comps)
            comps.append(Comparator(cid, s + 1))
            pairs[cid] = (i, j)
            slots[s], slots[s + 1] = slots[s + 1], slots[s]
            where[slots[s]] = s
            where[slots[s + 1]] = s + 1
        t = u
    return DualNetwork(points, Network(n, tuple(comps)), wire_to_point, pairs)


# --- primal edge sets -------------------------------------------------------

def side_counts(points: Sequence[Point], i: int, j: int) -> tuple[int, int]:
    """Number of points strictly left and strictly right of the line through points i, j."""
    left = right = 0
    for r, p in enumerate(points):
        if r in (i, j):
            continue
        o = orientation(points[i], points[j], p)
        if o > 0:
            left += 1
        elif o < 0:
            right += 1
    return left, right


def classify_edge(points: Sequence[Point], edge: tuple[int, int], k: int) -> str:
    small = min(side_counts(points, *edge))
    if small < k - 1:
        return "irrelevant"
    if small == k - 1:
        return "boundary"
    return "relevant"


@dataclass(frozen=True)
class ChordSet:
    points: PointSet
    edges: frozenset[tuple[int, int]]
    k: int = 1

    @cached_property
    def classification(self) -> dict[tuple[int, int], str]:
        return {e: classify_edge(self.points.points, e, self.k) for e in self.edges}

    def __len__(self):
        return len(self.edges)


def primal_edges(dual: DualNetwork, arr: Arrangement, k: int, include_outer: bool = True) -> ChordSet:
    """Point pairs primal to the contacts of ``arr`` (plus the peeled vertices if asked)."""
    if not set(arr.net.ids) <= set(dual.pairs):
        raise IdMapError("arrangement ids do not come from this dual network")
    vs = set(arr.contacts)
    if include_outer:
        kept = set(arr.net.ids)
        vs |= {c.id for c in dual.net.comparators if c.id not in kept}
    return ChordSet(dual.points, frozenset(dual.pairs[v] for v in vs), k)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Proper crossing of segments ab and cd (shared endpoints do not count)."""
    if len({a, b, c, d}) < 4:
        return False
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def is_crossing_free(points: Sequence[Point], edges: Iterable[tuple[int, int]]) -> bool:
    edges = list(edges)
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if segments_cross(points[a], points[b], points[c], points[d]):
            return False
    return True


def _incident(edges, p):
    return [e[1] if e[0] == p else e[0] for e in edges if p in e]


def is_pointed(points: Sequence[Point], edges: Iterable[tuple[int, int]]) -> bool:
    """Every point has an incident edge with all other incident edges strictly to its left."""
    edges = list(edges)
    for p in range(len(points)):
        nbrs = _incident(edges, p)
        if len(nbrs) < 2:
            continue
        dirs = [(points[q][0] - points[p][0], points[q][1] - points[p][1]) for q in nbrs]
        if not any(all(_cross(d, e) > 0 for e in dirs if e is not d) for d in dirs):
            return False
    return True


def is_pseudotriangulation(points: PointSet | Sequence[Point], edges: Iterable[tuple[int, int]]) -> bool:
    pts = points.points if isinstance(points, PointSet) else points
    edges = list(edges)
    return (len(edges) == 2 * len(pts) - 3
            and is_crossing_free(pts, edges)
            and is_pointed(pts, edges))


def pseudotriangulations_bruteforce(points: PointSet) -> set[frozenset[tuple[int, int]]]:
    """All pointed pseudotriangulations: crossing-free pointed sets of 2|P| - 3 edges."""
    pts = points.points
    n = len(pts)
    all_edges = list(itertools.combinations(range(n), 2))
    crossing = {(e, f) for e, f in itertools.combinations(all_edges, 2)
                if segments_cross(pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]])}
    out = set()
    target = 2 * n - 3

    def rec(i, chosen):
        if len(chosen) == target:
            if is_pointed(pts, chosen):
                out.add(frozenset(chosen))
            return
        if len(all_edges) - i < target - len(chosen):
            return
        e = all_edges[i]
        if all((f, e) not in crossing for f in chosen):
            chosen.append(e)
            rec(i + 1, chosen)
            chosen.pop()
        rec(i + 1, chosen)

    rec(0, [])
    return out


def _angle_cmp(u, v):
    """Counterclockwise angular order of nonzero vectors, starting at direction (1, 0)."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = _cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def alternation_check(points: PointSet | Sequence[Point], edges: Iterable[tuple[int, int]], k: int,
                      degree_limit: int = 16) -> tuple[int, tuple[tuple[int, int], ...]] | None:
    """
    Find a k-alternation: 2k + 1 edges at a point whose directions and reversed
    directions alternate around it.  Returns ``(point, edges)`` or ``None``.
    """
    pts = points.points if isinstance(points, PointSet) else points
    edges = list(edges)
    for p in range(len(pts)):
        nbrs = _incident(edges, p)
        if len(nbrs) < 2 * k + 1:
            continue
        if len(nbrs) > degree_limit:
            raise SizeLimitError(f"point {p} has degree {len(nbrs)} > {degree_limit}")
        for sub in itertools.combinations(nbrs, 2 * k + 1):
            vecs = []
            for q in sub:
                d = (pts[q][0] - pts[p][0], pts[q][1] - pts[p][1])
                vecs.append((d, 0))
                vecs.append(((-d[0], -d[1]), 1))
            vecs.sort(key=cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0])))
            kinds = [kind for _, kind in vecs]
            if all(kinds[i] != kinds[i + 1] for i in range(len(kinds) - 1)):
                return p, tuple(tuple(sorted((p, q))) for q in sub)
    return None


def k_pointed_check(points: PointSet | Sequence[Point], edges: Iterable[tuple[int, int]], k: int) -> int | None:
    """
    Probe k-pointedness: return a point every line through which leaves at least
    ``k`` incident edges strictly on each side, or ``None`` if the set is k-pointed.
    """
    pts = points.points if isinstance(points, PointSet) else points
    edges = list(edges)
    for p in range(len(pts)):
        dirs = [(pts[q][0] - pts[p][0], pts[q][1] - pts[p][1]) for q in _incident(edges, p)]
        if not dirs:
            continue
        best = len(dirs)
        # generic lines: rotate the line just past each edge direction
        for d in dirs:
            left = sum(1 for e in dirs if _cross(d, e) > 0)
            right = sum(1 for e in dirs if _cross(d, e) < 0)
            best = min(best, left, right)
        if best > k - 1:
            return p
    return None


def crossing_free_check(points: PointSet | Sequence[Point], edges: Iterable[tuple[int, int]], k: int,
                        limit: int = 200) -> tuple[tuple[int, int], ...] | None:
    """Return k + 1 pairwise crossing edges, or ``None``."""
    pts = points.points if isinstance(points, PointSet) else points
    edges = sorted(edges)
    if len(edges) > limit:
        raise SizeLimitError(f"{len(edges)} edges exceed the limit of {limit}")
    cross = {e: set() for e in edges}
    for e, f in itertools.combinations(edges, 2):
        if segments_cross(pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]]):
            cross[e].add(f)
            cross[f].add(e)

    # clique search in the crossing graph
    def extend(clique, cands):
        if len(clique) == k + 1:
            return clique
        for e in sorted(cands):
            found = extend(clique + [e], {f for f in cands & cross[e] if f > e})
            if found:
                return found
        return None

    found = extend([], set(edges))
    return tuple(found) if found else None


# --- stars ------------------------------------------------------------------

ABOVE = 1
BELOW = -1


@dataclass(frozen=True)
class StarEntry:
    vertex: int          # ambient comparator id
    side: int            # ABOVE if the touching curve lies above the pseudoline
    edge: tuple[int, int]


@dataclass(frozen=True)
class Star:
    wire: int
    entries: tuple[StarEntry, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [e.edge for e in self.entries]

    @property
    def sides(self) -> list[int]:
        return [e.side for e in self.entries]

    def polygon(self) -> list[int]:
        """Cyclic vertex sequence: consecutive star edges share one point."""
        es = self.edges
        out = []
        for a, b in zip(es, es[1:] + es[:1]):
            common = set(a) & set(b)
            if len(common) != 1:
                raise AssertionError(f"consecutive star edges {a}, {b} do not share one point")
            out.append(common.pop())
        return out


def stars(dual: DualNetwork, arr: Arrangement, k: int) -> dict[int, Star]:
    """
    The star of every pseudoline of a k-kernel arrangement.

    Walks the ambient sweep: kernel comparators follow the arrangement, and a
    peeled vertex on level k (resp. n - k) touches the kernel's top (resp.
    bottom) pseudoline from outside.
    """
    amb = dual.net
    n = amb.n
    if not set(arr.net.ids) <= set(amb.ids):
        raise IdMapError("arrangement ids do not come from this dual network")
    n2 = n - 2 * k
    kept = set(arr.net.ids)
    perm = list(range(n2, 0, -1))
    entries: dict[int, list[StarEntry]] = {w: [] for w in range(1, n2 + 1)}
    for c in amb.comparators:
        h = c.level
        if c.id in kept:
            s = h - k
            a, b = perm[s - 1], perm[s]
            if c.id in arr.contacts:
                entries[a].append(StarEntry(c.id, BELOW, dual.pairs[c.id]))
                entries[b].append(StarEntry(c.id, ABOVE, dual.pairs[c.id]))
            else:
                perm[s - 1], perm[s] = b, a
        elif h == k:
            entries[perm[0]].append(StarEntry(c.id, ABOVE, dual.pairs[c.id]))
        elif h == n - k:
            entries[perm[-1]].append(StarEntry(c.id, BELOW, dual.pairs[c.id]))
    out = {}
    for w, es in entries.items():
        if not es:
            raise AssertionError(f"pseudoline {w} has an empty star")
        out[w] = Star(w, tuple(es))
    return out


def star_of(dual: DualNetwork, arr: Arrangement, wire: int, k: int) -> Star:
    return stars(dual, arr, k)[wire]


def corner_count(star: Star) -> int:
    """Side changes between consecutive contacts, the wrap compared against the reflected first side."""
    s = star.sides
    changes = sum(1 for a, b in zip(s, s[1:]) if a != b)
    return changes + (s[-1] != -s[0])


def _winding(poly: Sequence[Point], q: Point) -> int:
    w = 0
    for a, b in zip(poly, list(poly[1:]) + [poly[0]]):
        if a[1] <= q[1] < b[1] and orientation(a, b, q) > 0:
            w += 1
        elif b[1] <= q[1] < a[1] and orientation(a, b, q) < 0:
            w -= 1
    return w


def winding_number(star: Star, points: PointSet, q: Point) -> int:
    """Absolute winding number of the star polygon around ``q``."""
    q = (Fraction(q[0]), Fraction(q[1]))
    poly = [points[i] for i in star.polygon()]
    for a, b in zip(poly, poly[1:] + poly[:1]):
        if orientation(a, b, q) == 0:
            raise DegenerateQueryError("query point lies on a star edge line")
    return abs(_winding(poly, q))


def k_depth(points: PointSet, k: int, q: Point, direction: Point | None = None) -> int:
    """
    Signed count of k-boundary edges crossed by a ray from ``q``: +1 when the
    ray passes from the side holding at least k points to the side holding k - 1.
    """
    pts = points.points
    q = (Fraction(q[0]), Fraction(q[1]))
    for a, b in itertools.combinations(pts, 2):
        if orientation(a, b, q) == 0:
            raise DegenerateQueryError("query point is collinear with two points")
    if direction is None:
        direction = (Fraction(1), Fraction(1, 7919))
    r = (Fraction(direction[0]), Fraction(direction[1]))
    far = (q[0] + r[0], q[1] + r[1])
    if any(orientation(q, far, p) == 0 for p in pts):
        raise DegenerateQueryError("ray passes through a point")
    total = 0
    n = len(pts)
    for i, j in itertools.combinations(range(n), 2):
        left, right = side_counts(pts, i, j)
        if min(left, right) != k - 1:
            continue
        a, b = pts[i], pts[j]
        if orientation(q, far, a) == orientation(q, far, b):
            continue
        ab = (b[0] - a[0], b[1] - a[1])
        s = _cross((a[0] - q[0], a[1] - q[1]), ab) / _cross(r, ab)
        if s <= 0:
            continue
        q_count = left if orientation(a, b, q) > 0 else right
        total += 1 if q_count >= k else -1
    return total
