"""
Enumeration of all arrangements on a support.

``enumerate_greedy_flip`` walks the binary tree of coloured arrangements rooted
at the greedy arrangement.  Each node keeps its blue (still flippable) contacts;
the cut of a node sits just before the last blue contact, so the minimal blue
point for the cut order is the blue contact with the largest sweep position.
Left child: recolour it red.  Right child: flip it; the new contact is blue when
the flip is increasing for the root cut (it lies before the flipped point) and
green otherwise, and a node with a green contact is a discarded leaf.

Only the stack of pending siblings is kept, so memory is bounded by the tree
depth, never by the number of arrangements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .arrangement import Arrangement, flip, greedy
from .network import Network

__all__ = [
    "Color", "ColoredNode", "EnumerationStats", "FlipGraph", "GraphStats",
    "EmptySupportError", "SizeLimitError",
    "iter_greedy_flip", "enumerate_greedy_flip", "enumerate_bruteforce",
    "build_flip_graph", "graph_stats", "find_with_contacts", "find_sub_arrangement",
]


class EmptySupportError(ValueError):
    """No arrangement contains the requested forced contacts."""


class SizeLimitError(ValueError):
    pass


class Color(Enum):
    BLUE = "blue"
    RED = "red"
    GREEN = "green"


@dataclass(frozen=True)
class ColoredNode:
    arr: Arrangement
    blue: frozenset[int]
    green: int | None = None
    cut_pos: int = 0

    @property
    def color(self) -> dict[int, Color]:
        out = {}
        for v in self.arr.contacts:
            if v == self.green:
                out[v] = Color.GREEN
            elif v in self.blue:
                out[v] = Color.BLUE
            else:
                out[v] = Color.RED
        return out


@dataclass
class EnumerationStats:
    nodes: int = 0
    leaves: int = 0
    green_leaves: int = 0
    max_depth: int = 0
    peak_stack: int = 0


def iter_greedy_flip(net: Network, forced: Iterable[int] = (),
                     stats: EnumerationStats | None = None) -> Iterator[Arrangement]:
    """Yield every arrangement on ``net`` containing ``forced``, each exactly once."""
    forced = frozenset(forced)
    root = greedy(net, forced)
    if root is None:
        raise EmptySupportError("no arrangement contains the forced contacts")
    if stats is None:
        stats = EnumerationStats()
    pos = net.position
    depth_limit = net.m + 1
    # stack entries: (node, depth); right child pushed first so left runs first
    stack = [(ColoredNode(root, root.contacts - forced, None, net.m), 0)]
    stats.peak_stack = 1
    while stack:
        node, depth = stack.pop()
        stats.nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        assert depth <= depth_limit, "enumeration tree deeper than the support allows"
        if node.green is not None:
            stats.green_leaves += 1
            continue
        if not node.blue:
            stats.leaves += 1
            yield node.arr
            continue
        v = max(node.blue, key=pos.__getitem__)
        rest = node.blue - {v}
        flipped, w = flip(node.arr, v)
        if pos[w] < pos[v]:
            right = ColoredNode(flipped, rest | {w}, None, pos[v])
        else:
            right = ColoredNode(flipped, rest, w, pos[v])
        stack.append((right, depth + 1))
        stack.append((ColoredNode(node.arr, rest, None, pos[v]), depth + 1))
        stats.peak_stack = max(stats.peak_stack, len(stack))


def enumerate_greedy_flip(net: Network, forced: Iterable[int] = (),
                          visit: Callable[[Arrangement], object] | None = None,
                          stats: EnumerationStats | None = None) -> int:
    """Visit every arrangement containing ``forced``; return how many there are."""
    count = 0
    for arr in iter_greedy_flip(net, forced, stats):
        count += 1
        if visit is not None:
            visit(arr)
    return count


def enumerate_bruteforce(net: Network, forced: Iterable[int] = (), limit: int = 24) -> list[frozenset[int]]:
    """
    All contact sets of arrangements containing ``forced``, by exhaustive backtracking.

    Independent of the greedy machinery: each comparator is tried as a contact
    and, if its pair is still inverted, as a crossing.
    """
    forced = frozenset(forced)
    free = sum(1 for c in net.comparators if c.id not in forced)
    if free > limit:
        raise SizeLimitError(f"{free} free comparators exceed the limit of {limit}")
    comps = net.comparators
    m = len(comps)
    # free comparators remaining from position t onwards
    free_after = [0] * (m + 1)
    for t in range(m - 1, -1, -1):
        free_after[t] = free_after[t + 1] + (comps[t].id not in forced)
    perm = list(range(net.n, 0, -1))
    target = list(range(1, net.n + 1))
    out = []
    contacts: list[int] = []

    def inversions() -> int:
        return sum(1 for i in range(net.n) for j in range(i + 1, net.n) if perm[i] > perm[j])

    def rec(t: int, inv: int) -> None:
        if inv > free_after[t]:
            return
        if t == m:
            if perm == target:
                out.append(frozenset(contacts))
            return
        c = comps[t]
        h = c.level
        contacts.append(c.id)
        rec(t + 1, inv)
        contacts.pop()
        if c.id not in forced and perm[h - 1] > perm[h]:
            perm[h - 1], perm[h] = perm[h], perm[h - 1]
            rec(t + 1, inv - 1)
            perm[h - 1], perm[h] = perm[h], perm[h - 1]

    rec(0, inversions())
    return out


@dataclass
class FlipGraph:
    vertices: list[frozenset[int]]
    edges: set[tuple[int, int]]
    index: dict[frozenset[int], int] = field(repr=False)

    def to_dot(self, net: Network | None = None, name: str = "flips") -> str:
        """Undirected DOT graph; nodes are labelled by 1-based contact positions."""
        lines = [f"graph {name} {{"]
        for i, vs in enumerate(self.vertices):
            if net is not None:
                label = " ".join(str(net.position[v] + 1) for v in sorted(vs, key=net.position.__getitem__))
            else:
                label = " ".join(str(v) for v in sorted(vs))
            lines.append(f'  a{i} [label="{label}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  a{i} -- a{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    degree_histogram: dict[int, int]
    connected: bool
    diameter: int | None


def build_flip_graph(net: Network, forced: Iterable[int] = (), limit: int = 200_000) -> FlipGraph:
    forced = frozenset(forced)
    arrs = []
    for arr in iter_greedy_flip(net, forced):
        arrs.append(arr)
        if len(arrs) > limit:
            raise SizeLimitError(f"more than {limit} arrangements")
    vertices = [a.contacts for a in arrs]
    index = {vs: i for i, vs in enumerate(vertices)}
    edges = set()
    for i, arr in enumerate(arrs):
        for v in arr.flippable():
            new, _ = flip(arr, v)
            j = index[new.contacts]
            edges.add((min(i, j), max(i, j)))
    return FlipGraph(vertices, edges, index)


def graph_stats(graph: FlipGraph, diameter: bool = True, chunk: int = 512) -> GraphStats:
    n = len(graph.vertices)
    deg: Counter = Counter()
    for i, j in graph.edges:
        deg[i] += 1
        deg[j] += 1
    hist = Counter(deg[i] for i in range(n))
    if n == 0:
        return GraphStats(0, {}, False, None)
    rows = [i for i, j in graph.edges] + [j for i, j in graph.edges]
    cols = [j for i, j in graph.edges] + [i for i, j in graph.edges]
    mat = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    ncomp, _ = connected_components(mat, directed=False)
    connected = ncomp == 1
    diam = None
    if diameter and connected:
        diam = 0
        for start in range(0, n, chunk):
            dist = shortest_path(mat, directed=False, unweighted=True,
                                 indices=list(range(start, min(n, start + chunk))))
            diam = max(diam, int(dist.max()))
    return GraphStats(n, dict(sorted(hist.items())), connected, diam)


def find_with_contacts(net: Network, required: Iterable[int], forced: Iterable[int] = ()) -> Arrangement | None:
    """An arrangement whose contacts contain ``required`` (and ``forced``), if any."""
    return greedy(net, frozenset(required) | frozenset(forced))


def find_sub_arrangement(net: Network, allowed: Iterable[int], limit: int = 800) -> Arrangement | None:
    """
    Some arrangement whose contacts all lie in ``allowed``, or ``None``.

    Depth-first over the sweep, contact first.  The state after position ``t``
    is the current permutation alone, so failed states are memoised.
    """
    allowed = frozenset(allowed)
    comps = net.comparators
    m = len(comps)
    if m > limit:
        raise SizeLimitError(f"{m} comparators exceed the limit of {limit}")
    # comparators outside `allowed` must all be crossings
    must_cross = [0] * (m + 1)
    for t in range(m - 1, -1, -1):
        must_cross[t] = must_cross[t + 1] + (comps[t].id not in allowed)
    n = net.n
    target = tuple(range(1, n + 1))
    dead: set[tuple[int, tuple[int, ...]]] = set()
    chosen: list[int] = []

    def rec(t: int, perm: tuple[int, ...], inv: int) -> bool:
        if t == m:
            return perm == target
        if inv > m - t or inv < must_cross[t] or (t, perm) in dead:
            return False
        c = comps[t]
        h = c.level
        if c.id in allowed:
            chosen.append(c.id)
            if rec(t + 1, perm, inv):
                return True
            chosen.pop()
        if perm[h - 1] > perm[h]:
            p = list(perm)
            p[h - 1], p[h] = p[h], p[h - 1]
            if rec(t + 1, tuple(p), inv - 1):
                return True
        dead.add((t, perm))
        return False

    start = tuple(range(n, 0, -1))
    if rec(0, start, n * (n - 1) // 2):
        return Arrangement(net, frozenset(chosen))
    return None
