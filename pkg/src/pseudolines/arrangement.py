"""
Pseudoline arrangements on a fixed support: construction, flips and greedy arrangements.

An arrangement is determined by its support and its set of contact points.
The greedy arrangement sorts the inverted permutation through the network,
skipping forced contacts; it is the unique source of the graph of increasing
flips.  With the left-to-right sweep used here the greedy places every
crossing as early as possible, so the contact of an increasing flip always
sits *after* the crossing it is exchanged with.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping

from .network import Network, simulate, validate

__all__ = [
    "Arrangement", "Direction", "InvalidArrangementError", "FlipError",
    "from_contacts", "flip", "flip_direction", "greedy",
    "contact_count", "crossing_count", "reduced_arrangement",
]


class InvalidArrangementError(ValueError):
    pass


class FlipError(ValueError):
    pass


class Direction(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class Arrangement:
    net: Network
    contacts: frozenset[int]
    forced: frozenset[int] = frozenset()

    @cached_property
    def crossings(self) -> frozenset[int]:
        return frozenset(self.net.ids) - self.contacts

    @cached_property
    def _sim(self):
        return simulate(self.net, self.crossings)

    @property
    def labels(self) -> Mapping[int, tuple[int, int]]:
        """Wire pair meeting at each comparator id."""
        return self._sim.labels

    @cached_property
    def crossing_of(self) -> dict[tuple[int, int], int]:
        labels = self.labels
        return {labels[c]: c for c in self.crossings}

    def status(self, v: int) -> str:
        return "contact" if v in self.contacts else "crossing"

    def contacts_in_order(self) -> list[int]:
        pos = self.net.position
        return sorted(self.contacts, key=pos.__getitem__)

    def flippable(self) -> list[int]:
        return [v for v in self.contacts_in_order() if v not in self.forced]


def from_contacts(net: Network, contacts: Iterable[int], forced: Iterable[int] = ()) -> Arrangement:
    contacts = frozenset(contacts)
    forced = frozenset(forced)
    unknown = contacts - set(net.ids)
    if unknown:
        raise InvalidArrangementError(f"unknown comparator ids {sorted(unknown)}")
    if not forced <= contacts:
        raise InvalidArrangementError(f"forced ids {sorted(forced - contacts)} are not contacts")
    if not validate(net, set(net.ids) - contacts):
        raise InvalidArrangementError("contact set does not define a pseudoline arrangement")
    return Arrangement(net, contacts, forced)


def reduced_arrangement(net: Network) -> Arrangement:
    """The unique (contact-free) arrangement on a reduced network."""
    return from_contacts(net, ())


def flip(arr: Arrangement, v: int, *, ignore_forced: bool = False) -> tuple[Arrangement, int]:
    """Exchange the contact ``v`` with the crossing ``w`` of the same two pseudolines."""
    if v not in arr.contacts:
        raise FlipError(f"{v} is not a contact point")
    if v in arr.forced and not ignore_forced:
        raise FlipError(f"{v} is a forced contact")
    w = arr.crossing_of[arr.labels[v]]
    new = Arrangement(arr.net, (arr.contacts - {v}) | {w}, arr.forced - {v} if ignore_forced else arr.forced)
    # a flip always yields a valid arrangement; this guards the id bookkeeping
    assert validate(new.net, new.crossings), "flip produced an invalid arrangement"
    return new, w


def flip_direction(arr: Arrangement, v: int) -> Direction:
    """
    Direction of the flip of ``v``: increasing when ``v`` lies after its crossing.

    Both points sit on a common pseudoline, so their sweep positions agree with
    the partial order induced by the cut.
    """
    if v not in arr.contacts:
        raise FlipError(f"{v} is not a contact point")
    if v in arr.forced:
        raise FlipError(f"{v} is a forced contact")
    w = arr.crossing_of[arr.labels[v]]
    pos = arr.net.position
    return Direction.INCREASING if pos[v] > pos[w] else Direction.DECREASING


def greedy(net: Network, forced: Iterable[int] = ()) -> Arrangement | None:
    """
    The greedy arrangement constrained to contain ``forced``, or ``None`` if none exists.

    Single pass: forced comparators are contacts; elsewhere the two slot
    occupants are sorted (smaller wire on top), which is a crossing exactly
    when they were out of order.
    """
    forced = frozenset(forced)
    if not forced <= set(net.ids):
        raise ValueError(f"unknown forced ids {sorted(forced - set(net.ids))}")
    perm = list(range(net.n, 0, -1))
    contacts = set()
    for c in net.comparators:
        h = c.level
        a, b = perm[h - 1], perm[h]
        if c.id in forced or a < b:
            contacts.add(c.id)
        else:
            perm[h - 1], perm[h] = b, a
    if perm != list(range(1, net.n + 1)):
        return None
    return Arrangement(net, frozenset(contacts), forced)


def contact_count(arr: Arrangement) -> int:
    return len(arr.contacts)


def crossing_count(arr: Arrangement) -> int:
    return len(arr.crossings)
