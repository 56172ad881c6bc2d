"""
Supports of pseudoline arrangements as cut-linearized primitive sorting networks.

A :class:`Network` is a support together with a cut: ``n`` wires (slots numbered
``1`` = top to ``n`` = bottom) and a sequence of comparators in sweep order.
Comparator ``t`` acts on slots ``(level, level + 1)``.  Crossing the cut once
reflects every level ``h`` to ``n - h`` (Möbius antiperiodicity).

Wires are identified by the integers ``1..n``; at the cut they read
``n, n-1, ..., 1`` from top to bottom, and a valid arrangement ends with the
identity order.

>>> net = Network.from_levels(3, [1, 2, 1])
>>> simulate(net, net.ids).final
(1, 2, 3)
>>> rotate_cut(net, 1).levels
(2, 1, 2)
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Mapping

__all__ = [
    "Comparator", "Network", "SimulationResult", "KernelResult",
    "DegenerateKernelError",
    "simulate", "validate", "rotate_cut", "rotate_back", "kernel",
    "random_reduced_network", "random_network",
]


class DegenerateKernelError(ValueError):
    """Raised when peeling leaves fewer than two wires."""


@dataclass(frozen=True)
class Comparator:
    id: int
    level: int


@dataclass(frozen=True)
class Network:
    n: int
    comparators: tuple[Comparator, ...]
    rotation_offset: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"wire count must be positive, got {self.n}")
        seen = set()
        for c in self.comparators:
            if not 1 <= c.level <= self.n - 1:
                raise ValueError(f"comparator {c.id} has level {c.level} outside [1, {self.n - 1}]")
            if c.id in seen:
                raise ValueError(f"duplicate comparator id {c.id}")
            seen.add(c.id)

    @classmethod
    def from_levels(cls, n: int, levels: Iterable[int]) -> Network:
        """Build a network whose comparator ids are their positions ``0..m-1``."""
        return cls(n, tuple(Comparator(i, h) for i, h in enumerate(levels)))

    @property
    def m(self) -> int:
        return len(self.comparators)

    @cached_property
    def levels(self) -> tuple[int, ...]:
        return tuple(c.level for c in self.comparators)

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.comparators)

    @cached_property
    def position(self) -> dict[int, int]:
        """Map comparator id to its index in the sweep order."""
        return {c.id: t for t, c in enumerate(self.comparators)}

    @cached_property
    def level_of(self) -> dict[int, int]:
        return {c.id: c.level for c in self.comparators}

    @property
    def crossing_count(self) -> int:
        """Number of crossings of any arrangement on this support."""
        return comb(self.n, 2)

    @property
    def contact_count(self) -> int:
        return self.m - comb(self.n, 2)


@dataclass(frozen=True)
class SimulationResult:
    final: tuple[int, ...]
    labels: Mapping[int, tuple[int, int]] = field(repr=False)
    swaps: Mapping[tuple[int, int], int] = field(repr=False)


def simulate(net: Network, crossing_set: Iterable[int]) -> SimulationResult:
    """
    Run the inverted permutation through ``net``, swapping exactly at ``crossing_set``.

    Every comparator is labelled by the (sorted) pair of wires occupying its
    slots when it is reached; ``swaps`` counts how often each pair was exchanged.
    """
    crossings = set(crossing_set)
    perm = list(range(net.n, 0, -1))
    labels = {}
    swaps: Counter = Counter()
    for c in net.comparators:
        h = c.level
        a, b = perm[h - 1], perm[h]
        pair = (a, b) if a < b else (b, a)
        labels[c.id] = pair
        if c.id in crossings:
            perm[h - 1], perm[h] = b, a
            swaps[pair] += 1
    return SimulationResult(tuple(perm), labels, dict(swaps))


def validate(net: Network, crossing_set: Iterable[int]) -> bool:
    """
    True iff the crossing set defines a pseudoline arrangement on ``net``.

    Each pair starts inverted and must swap an odd number of times; with exactly
    ``C(n, 2)`` swaps in total this forces one crossing per pair.
    """
    crossings = set(crossing_set)
    if len(crossings) != comb(net.n, 2):
        return False
    return simulate(net, crossings).final == tuple(range(1, net.n + 1))


def rotate_cut(net: Network, steps: int = 1) -> Network:
    """Sweep the cut past the first ``steps`` comparators, reappending them reflected."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    comps = list(net.comparators)
    m = len(comps)
    if m == 0:
        return net
    # Two full turns restore the original sequence.
    steps_mod = steps % (2 * m)
    for _ in range(steps_mod):
        c = comps.pop(0)
        comps.append(Comparator(c.id, net.n - c.level))
    return Network(net.n, tuple(comps), net.rotation_offset + steps)


def rotate_back(net: Network, steps: int = 1) -> Network:
    """Move the cut backwards: the last comparator reappears first, reflected."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    comps = list(net.comparators)
    for _ in range(steps % (2 * max(len(comps), 1))):
        c = comps.pop()
        comps.insert(0, Comparator(c.id, net.n - c.level))
    return Network(net.n, tuple(comps), net.rotation_offset - steps)


@dataclass(frozen=True)
class KernelResult:
    net: Network
    forced: frozenset[int]
    id_map: Mapping[int, int]
    removed: frozenset[int]


def kernel(net: Network, k: int, contacts: Iterable[int] = ()) -> KernelResult:
    """
    Remove the first ``k`` levels of the support.

    The first level consists of the comparators on the extreme slot pairs
    (levels ``1`` and ``n - 1``); peeling ``k`` times keeps the comparators with
    ``k < level < n - k`` and shifts them to ``level - k`` on ``n - 2k`` wires.
    ``forced`` lists the surviving ids that were contacts of the ambient
    arrangement.  Ids are preserved, so ``id_map`` is the identity on survivors.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n2 = net.n - 2 * k
    if n2 < 2:
        raise DegenerateKernelError(f"{k}-kernel of a {net.n}-wire support has {n2} wires")
    contacts = set(contacts)
    kept = []
    removed = []
    for c in net.comparators:
        if k < c.level < net.n - k:
            kept.append(Comparator(c.id, c.level - k))
        else:
            removed.append(c.id)
    sub = Network(n2, tuple(kept), net.rotation_offset)
    forced = frozenset(c.id for c in kept if c.id in contacts)
    return KernelResult(sub, forced, {c.id: c.id for c in kept}, frozenset(removed))


def random_reduced_network(n: int, rng: random.Random) -> Network:
    """A uniformly-stepped random reduced word for the full inversion of ``n`` wires."""
    perm = list(range(n, 0, -1))
    levels = []
    while True:
        desc = [h for h in range(1, n) if perm[h - 1] > perm[h]]
        if not desc:
            break
        h = rng.choice(desc)
        perm[h - 1], perm[h] = perm[h], perm[h - 1]
        levels.append(h)
    return Network.from_levels(n, levels)


def random_network(n: int, extra: int, rng: random.Random) -> Network:
    """A random reduced network with ``extra`` comparators inserted at random spots.

    Inserted comparators are contacts of the underlying reduced arrangement, so
    the result always supports at least one arrangement.
    """
    levels = list(random_reduced_network(n, rng).levels)
    for _ in range(extra):
        levels.insert(rng.randrange(len(levels) + 1), rng.randrange(1, n))
    return Network.from_levels(n, levels)
