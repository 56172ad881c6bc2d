"""
Multipseudotriangulations: greedy k-pseudotriangulations, their iteration,
flips in iterated sequences and the horizon-set description of the greedy one.

An ambient arrangement ``L`` is given as an :class:`Arrangement` (possibly
with contact points).  Its k-pseudotriangulations are arrangements on the
k-kernel of its support whose contacts contain the ambient contacts surviving
in the kernel.  Comparator ids are shared between all levels, so contact sets
compare directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .arrangement import Arrangement, flip, greedy, reduced_arrangement
from .enumeration import EmptySupportError, SizeLimitError, iter_greedy_flip
from .network import KernelResult, Network, kernel

__all__ = [
    "MultiContext", "IteratedSequence", "HorizonSets", "FlipKind", "FlipOutcome",
    "ContactsPresentError", "NestingError",
    "as_arrangement", "multi_context", "greedy_multi", "compose_check",
    "validate_sequence", "iterated_flip_classify", "iterated_enumerate",
    "iterated_flip_graph", "iterated_graph_connected",
    "horizon_sets", "horizon_check", "REVERSED_INDEXING",
]

# ell_i is the pseudoline in slot i at the cut (top first).  Setting this to
# True indexes them bottom first instead.
REVERSED_INDEXING = False


class ContactsPresentError(ValueError):
    pass


class NestingError(ValueError):
    pass


def as_arrangement(L: Arrangement | Network) -> Arrangement:
    """A bare network stands for its unique contact-free arrangement."""
    if isinstance(L, Arrangement):
        return L
    return reduced_arrangement(L)


@dataclass(frozen=True)
class MultiContext:
    ambient: Arrangement
    k: int
    kernel_net: Network
    forced: frozenset[int]
    removed: frozenset[int]


def multi_context(L: Arrangement | Network, k: int) -> MultiContext:
    L = as_arrangement(L)
    kr: KernelResult = kernel(L.net, k, L.contacts)
    return MultiContext(L, k, kr.net, kr.forced, kr.removed)


def greedy_multi(L: Arrangement | Network, k: int) -> Arrangement:
    """The greedy k-pseudotriangulation of ``L`` for the cut of its network."""
    ctx = multi_context(L, k)
    g = greedy(ctx.kernel_net, ctx.forced)
    if g is None:
        raise EmptySupportError("kernel admits no arrangement containing the ambient contacts")
    return g


def compose_check(L: Arrangement | Network, a: int, b: int) -> bool:
    """Greedy at depth a + b equals greedy at depth b of greedy at depth a."""
    if a < 1 or b < 1:
        raise ValueError("depths must be positive integers")
    direct = greedy_multi(L, a + b)
    twice = greedy_multi(greedy_multi(L, a), b)
    return direct.net.levels == twice.net.levels and direct.contacts == twice.contacts


# --- iterated sequences ----------------------------------------------------

@dataclass(frozen=True)
class IteratedSequence:
    base: Arrangement
    levels: tuple[Arrangement, ...]
    signature: tuple[int, ...]

    @property
    def key(self) -> tuple[frozenset[int], ...]:
        return tuple(lv.contacts for lv in self.levels)


def validate_sequence(seq: IteratedSequence) -> None:
    """Raise :class:`NestingError` unless each level is a pseudotriangulation of the previous one."""
    sig = seq.signature
    if len(sig) != len(seq.levels) or any(b <= a for a, b in zip(sig, sig[1:])) or sig[0] < 1:
        raise NestingError(f"bad signature {sig}")
    prev = seq.base
    depth = 0
    for k, lv in zip(sig, seq.levels):
        ctx = multi_context(prev, k - depth)
        if lv.net.levels != ctx.kernel_net.levels or lv.net.ids != ctx.kernel_net.ids:
            raise NestingError(f"level at depth {k} is not on the kernel support")
        if not ctx.forced <= lv.contacts:
            raise NestingError(f"level at depth {k} misses contacts {sorted(ctx.forced - lv.contacts)}")
        prev, depth = lv, k


class FlipKind(Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"
    BLOCKED = "blocked"


@dataclass(frozen=True)
class FlipOutcome:
    kind: FlipKind
    first: int                  # index of the first level holding v as a contact
    last: int                   # index of the last level flipped (or that would be)
    new_contact: int            # w, the contact created by the flip
    result: IteratedSequence | None
    rejected_by: int | None = None   # level index where w is a crossing, when blocked


def iterated_flip_classify(seq: IteratedSequence, v: int) -> FlipOutcome:
    """
    Flip ``v`` through the levels of an iterated sequence.

    The flip is carried into every later level as long as it creates the same
    new contact.  Where it first creates a different one (or the levels run
    out of ``v``), the next level must already have the new contact.
    """
    if v in seq.base.contacts:
        raise ValueError(f"{v} is a contact of the ambient arrangement")
    holding = [j for j, lv in enumerate(seq.levels) if v in lv.contacts]
    if not holding:
        raise ValueError(f"{v} is not a contact of any level")
    i = holding[0]
    flipped = []
    w_i = None
    j = i
    while j < len(seq.levels) and v in seq.levels[j].net.position:
        new, w = flip(seq.levels[j], v, ignore_forced=True)
        if w_i is None:
            w_i = w
        elif w != w_i:
            break
        flipped.append(new)
        j += 1
    last = i + len(flipped) - 1
    nxt = last + 1
    if nxt < len(seq.levels):
        following = seq.levels[nxt]
        if w_i in following.net.position and w_i not in following.contacts:
            return FlipOutcome(FlipKind.BLOCKED, i, last, w_i, None, nxt)
    levels = list(seq.levels)
    levels[i:last + 1] = flipped
    for j in range(i, last + 1):
        lv = levels[j]
        levels[j] = Arrangement(lv.net, lv.contacts, _forced_for(seq, levels, j))
    result = IteratedSequence(seq.base, tuple(levels), seq.signature)
    validate_sequence(result)
    complete = nxt == len(seq.levels) or v not in seq.levels[nxt].net.position
    return FlipOutcome(FlipKind.COMPLETE if complete else FlipKind.PARTIAL, i, last, w_i, result)


def _forced_for(seq: IteratedSequence, levels: list[Arrangement], j: int) -> frozenset[int]:
    prev = seq.base if j == 0 else levels[j - 1]
    depth = 0 if j == 0 else seq.signature[j - 1]
    return multi_context(prev, seq.signature[j] - depth).forced


def iterated_enumerate(L: Arrangement | Network, signature: Iterable[int],
                       limit: int = 200_000) -> Iterator[IteratedSequence]:
    """All iterated multipseudotriangulations of ``L`` with the given signature."""
    L = as_arrangement(L)
    sig = tuple(signature)
    if not sig or any(b <= a for a, b in zip(sig, sig[1:])) or sig[0] < 1:
        raise ValueError(f"signature must be strictly increasing positive depths, got {sig}")
    count = 0

    def rec(prev: Arrangement, depth: int, idx: int, acc: list[Arrangement]):
        nonlocal count
        if idx == len(sig):
            count += 1
            if count > limit:
                raise SizeLimitError(f"more than {limit} iterated sequences")
            yield IteratedSequence(L, tuple(acc), sig)
            return
        ctx = multi_context(prev, sig[idx] - depth)
        for arr in iter_greedy_flip(ctx.kernel_net, ctx.forced):
            acc.append(arr)
            yield from rec(arr, sig[idx], idx + 1, acc)
            acc.pop()

    yield from rec(L, 0, 0, [])


def iterated_flip_graph(L: Arrangement | Network, signature: Iterable[int],
                        limit: int = 200_000) -> tuple[list[IteratedSequence], set[tuple[int, int]]]:
    """Vertices are iterated sequences; edges are complete and partial flips."""
    seqs = list(iterated_enumerate(L, signature, limit))
    index = {s.key: t for t, s in enumerate(seqs)}
    edges = set()
    for t, s in enumerate(seqs):
        cands = set().union(*(lv.contacts for lv in s.levels)) - s.base.contacts
        for v in sorted(cands):
            out = iterated_flip_classify(s, v)
            if out.result is None:
                continue
            u = index[out.result.key]
            if u != t:
                edges.add((min(t, u), max(t, u)))
    return seqs, edges


def iterated_graph_connected(L: Arrangement | Network, signature: Iterable[int],
                             limit: int = 200_000) -> bool:
    seqs, edges = iterated_flip_graph(L, signature, limit)
    if not seqs:
        return False
    adj = {t: [] for t in range(len(seqs))}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        for b in adj[queue.popleft()]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(seqs)


# --- horizon sets ----------------------------------------------------------

@dataclass(frozen=True)
class HorizonSets:
    upper: frozenset[int]
    lower: frozenset[int]
    combined: frozenset[int]
    crossing: dict[tuple[int, int], int]   # (alpha, beta), alpha < beta -> vertex id


def horizon_sets(L: Arrangement | Network, k: int) -> HorizonSets:
    """
    Upper, lower and combined k-horizon sets of a contact-free arrangement.

    On a pseudoline the cut order runs against the sweep: a vertex precedes
    another when it comes later in the comparator sequence.
    """
    L = as_arrangement(L)
    if L.contacts:
        raise ContactsPresentError("horizon sets need an arrangement without contact points")
    net = L.net
    n = net.n
    pos = net.position

    def ell(w: int) -> int:
        return w if REVERSED_INDEXING else n + 1 - w

    crossing = {}
    for c, (a, b) in L.labels.items():
        x, y = sorted((ell(a), ell(b)))
        crossing[(x, y)] = c

    def cr(x: int, y: int) -> int:
        return crossing[(x, y) if x < y else (y, x)]

    upper, lower, combined = set(), set(), set()
    for (alpha, beta), v in crossing.items():
        gam = [g for g in range(alpha + 1, n + 1) if pos[cr(alpha, g)] > pos[v]]
        dlt = [d for d in range(1, beta) if pos[cr(beta, d)] > pos[v]]
        if len(gam) < k:
            upper.add(v)
        if len(dlt) < k:
            lower.add(v)
        # excluded iff k deltas all lie below k gammas
        if not (len(gam) >= k and len(dlt) >= k and sorted(dlt)[k - 1] < sorted(gam)[-k]):
            combined.add(v)
    return HorizonSets(frozenset(upper), frozenset(lower), frozenset(combined), crossing)


def horizon_check(L: Arrangement | Network, k: int) -> bool:
    """Non-crossings of the greedy k-pseudotriangulation equal the combined horizon set."""
    L = as_arrangement(L)
    hs = horizon_sets(L, k)
    if L.net.n - 2 * k < 2:
        # nothing survives the peeling: every vertex lies in the first k levels
        return hs.combined == frozenset(L.net.ids)
    ctx = multi_context(L, k)
    g = greedy_multi(L, k)
    return (g.contacts | ctx.removed) == hs.combined
