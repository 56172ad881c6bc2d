"""
Text formats for networks and point sets.

Network file::

    plnet 1
    n 3
    m 4
    levels 1 2 1 2
    contacts 4
    forced 4

Comparator positions are 1-based.  ``contacts`` is present only when an
arrangement is attached and ``forced`` only when it is nonempty.  Point files
hold one ``x y`` pair per line, each coordinate an integer or ``p/q``;
``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arrangement import Arrangement, from_contacts
from .geometry import PointSet
from .network import Network

__all__ = [
    "FormatError", "NetworkFile",
    "parse_network", "emit_network", "parse_points", "emit_points",
    "network_file", "arrangement_of",
]

HEADER = "plnet 1"


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class NetworkFile:
    net: Network
    contacts: frozenset[int] | None = None   # comparator ids
    forced: frozenset[int] = frozenset()


def network_file(net: Network, arr: Arrangement | None = None,
                 forced: Iterable[int] = ()) -> NetworkFile:
    if arr is not None:
        return NetworkFile(net, arr.contacts, frozenset(forced) | arr.forced)
    return NetworkFile(net, None, frozenset(forced))


def arrangement_of(nf: NetworkFile) -> Arrangement:
    if nf.contacts is None:
        raise FormatError("file carries no contacts line")
    return from_contacts(nf.net, nf.contacts, nf.forced)


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer entry in {what} line") from None


def parse_network(text: str) -> NetworkFile:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != HEADER:
        raise FormatError(f"expected header {HEADER!r}")
    fields: dict[str, list[str]] = {}
    for ln in lines[1:]:
        key, *rest = ln.split()
        if key in fields:
            raise FormatError(f"repeated {key!r} line")
        if key not in ("n", "m", "levels", "contacts", "forced"):
            raise FormatError(f"unknown line {key!r}")
        fields[key] = rest
    for key in ("n", "m", "levels"):
        if key not in fields:
            raise FormatError(f"missing {key!r} line")
    if len(fields["n"]) != 1 or len(fields["m"]) != 1:
        raise FormatError("'n' and 'm' take one value")
    n = _ints(fields["n"], "n")[0]
    m = _ints(fields["m"], "m")[0]
    levels = _ints(fields["levels"], "levels")
    if len(levels) != m:
        raise FormatError(f"m is {m} but {len(levels)} levels given")
    try:
        net = Network.from_levels(n, levels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None

    def positions(key):
        ps = _ints(fields[key], key)
        if any(not 1 <= p <= m for p in ps):
            raise FormatError(f"{key} position out of range 1..{m}")
        if len(set(ps)) != len(ps):
            raise FormatError(f"repeated {key} position")
        return frozenset(p - 1 for p in ps)

    contacts = positions("contacts") if "contacts" in fields else None
    forced = positions("forced") if "forced" in fields else frozenset()
    if contacts is not None and not forced <= contacts:
        raise FormatError("forced positions must be contacts")
    return NetworkFile(net, contacts, forced)


def emit_network(nf: NetworkFile) -> str:
    net = nf.net
    pos = net.position
    out = [HEADER, f"n {net.n}", f"m {net.m}", "levels " + " ".join(map(str, net.levels))]
    if nf.contacts is not None:
        out.append(" ".join(["contacts", *(str(p + 1) for p in sorted(pos[c] for c in nf.contacts))]))
    if nf.forced:
        out.append(" ".join(["forced", *(str(p + 1) for p in sorted(pos[c] for c in nf.forced))]))
    return "\n".join(out) + "\n"


def parse_points(text: str) -> PointSet:
    pts = []
    for num, raw in enumerate(text.splitlines(), 1):
        ln = raw.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {num}: expected 'x y'")
        try:
            pts.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"line {num}: bad coordinate") from None
    return PointSet(tuple(pts))


def emit_points(ps: PointSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in ps.points)
