import itertools
import random
from graphlib import CycleError, TopologicalSorter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_networks, two_line_support
from pseudolines.arrangement import (Direction, FlipError, InvalidArrangementError, contact_count,
                                     crossing_count, flip, flip_direction, from_contacts, greedy,
                                     reduced_arrangement)
from pseudolines.enumeration import enumerate_bruteforce
from pseudolines.geometry import convex_position, dual_network
from pseudolines.network import Network, kernel, random_network


def test_from_contacts_examples():
    net = Network.from_levels(2, [1, 1, 1])
    arr = from_contacts(net, {1, 2})
    assert arr.crossings == {0}
    assert arr.crossing_of == {(1, 2): 0}
    from_contacts(net, {0, 1})
    for bad in ({0}, {0, 1, 2}):  # two crossings, no crossing
        with pytest.raises(InvalidArrangementError):
            from_contacts(net, bad)
    with pytest.raises(InvalidArrangementError):
        from_contacts(net, {1, 2}, forced={0})
    assert reduced_arrangement(Network.from_levels(3, [1, 2, 1])).contacts == frozenset()


def test_flip_example_and_involution():
    net = Network.from_levels(2, [1, 1, 1])
    arr = from_contacts(net, {1, 2})
    new, w = flip(arr, 1)
    assert w == 0 and new.contacts == {0, 2}
    back, v = flip(new, w)
    assert v == 1 and back.contacts == arr.contacts


def test_flip_errors():
    net = Network.from_levels(2, [1, 1, 1])
    arr = from_contacts(net, {1, 2}, forced={2})
    with pytest.raises(FlipError):
        flip(arr, 0)
    with pytest.raises(FlipError):
        flip(arr, 2)
    new, _ = flip(arr, 2, ignore_forced=True)
    assert 2 not in new.forced


@pytest.mark.parametrize("p", range(1, 8))
def test_two_line_support_flips_reach_every_arrangement(p):
    net = two_line_support(p)
    arr = greedy(net)
    assert contact_count(arr) == p and crossing_count(arr) == 1
    targets = {flip(arr, v)[0].contacts for v in arr.contacts}
    assert len(targets) == p and arr.contacts not in targets


def test_greedy_examples():
    assert greedy(Network.from_levels(2, [1, 1, 1])).contacts == {1, 2}
    assert greedy(Network.from_levels(3, [1, 2, 1]), forced={1}) is None
    with pytest.raises(ValueError):
        greedy(Network.from_levels(3, [1, 2, 1]), forced={7})
    kr = kernel(dual_network(convex_position(5)).net, 1)
    assert len(greedy(kr.net).contacts) == 2


def _all_arrangements(net, forced=()):
    return [from_contacts(net, c, forced) for c in enumerate_bruteforce(net, forced)]


def _all_increasing(arr):
    return all(flip_direction(arr, v) is Direction.INCREASING for v in arr.flippable())


@pytest.mark.parametrize("net", small_networks(40, seed=7, max_n=4, max_extra=5))
def test_greedy_is_the_unique_source(net):
    g = greedy(net)
    arrs = _all_arrangements(net)
    sources = [a.contacts for a in arrs if _all_increasing(a)]
    assert sources == [g.contacts]


@pytest.mark.parametrize("net", small_networks(30, seed=8, max_n=5, max_extra=5))
def test_constrained_greedy_is_the_unique_source(net):
    rng = random.Random(net.m)
    g0 = greedy(net)
    forced = frozenset(rng.sample(sorted(g0.contacts), k=min(2, len(g0.contacts))))
    g = greedy(net, forced)
    arrs = _all_arrangements(net, forced)
    assert [a.contacts for a in arrs if _all_increasing(a)] == [g.contacts]


@pytest.mark.parametrize("net", small_networks(25, seed=9))
def test_direction_antisymmetric(net):
    for arr in _all_arrangements(net):
        for v in arr.flippable():
            new, w = flip(arr, v)
            assert flip_direction(new, w) is not flip_direction(arr, v)


@pytest.mark.parametrize("net", small_networks(25, seed=10))
def test_increasing_flips_are_acyclic(net):
    arrs = _all_arrangements(net)
    ts = TopologicalSorter()
    for arr in arrs:
        ts.add(arr.contacts)
        for v in arr.flippable():
            if flip_direction(arr, v) is Direction.INCREASING:
                ts.add(flip(arr, v)[0].contacts, arr.contacts)
    try:
        list(ts.static_order())
    except CycleError:  # pragma: no cover
        pytest.fail("increasing flips contain a cycle")


@pytest.mark.parametrize("net", small_networks(25, seed=11))
def test_incremental_minimal_contacts_give_the_greedy(net):
    """Adding cut-minimal vertices while staying extendable reproduces the greedy contacts."""
    arrs = [a.contacts for a in _all_arrangements(net)]
    pos = net.position
    chosen: set[int] = set()
    while len(chosen) < net.contact_count:
        ok = [v for v in net.ids if v not in chosen and any(chosen | {v} <= c for c in arrs)]
        chosen.add(max(ok, key=pos.__getitem__))
    assert chosen == greedy(net).contacts


@pytest.mark.parametrize("net", small_networks(25, seed=12))
def test_flip_graph_regular(net):
    arrs = _all_arrangements(net)
    assert {contact_count(a) for a in arrs} == {net.contact_count}
    for arr in arrs:
        assert len({flip(arr, v)[0].contacts for v in arr.flippable()}) == net.contact_count


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_flips_stay_valid(seed):
    rng = random.Random(seed)
    net = random_network(rng.randint(2, 6), rng.randint(0, 6), rng)
    arr = greedy(net)
    for _ in range(10):
        if not arr.contacts:
            break
        arr, _ = flip(arr, rng.choice(sorted(arr.contacts)))
        assert from_contacts(net, arr.contacts).contacts == arr.contacts
