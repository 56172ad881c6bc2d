from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pseudolines.combinatorics import (NotMultitriangulationError, beam_check, beam_report, beams, catalan,
                                       convex_crossing, det_catalan, hankel_det, is_k_triangulation,
                                       zigzag_two_triangulation)
from pseudolines.enumeration import find_sub_arrangement, iter_greedy_flip
from pseudolines.geometry import convex_position, dual_network, primal_edges
from pseudolines.multi import greedy_multi
from pseudolines.network import kernel


def test_catalan_values():
    assert [catalan(m) for m in range(3, 7)] == [5, 14, 42, 132]


@given(st.integers(0, 60))
def test_catalan_recurrence(m):
    assert catalan(m + 1) == sum(catalan(i) * catalan(m - i) for i in range(m + 1))


def test_det_catalan_values():
    assert det_catalan(5, 1) == 5 and det_catalan(6, 1) == 14
    assert det_catalan(8, 2) == 132 * 14 - 42 * 42 == 84
    assert det_catalan(9, 2) == 429 * 42 - 132 ** 2 == 594
    assert det_catalan(10, 2) == 1430 * 132 - 429 ** 2 == 4719
    with pytest.raises(ValueError):
        det_catalan(4, 2)


def _fraction_det(m):
    """Plain Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for p in range(n):
        piv = next((r for r in range(p, n) if a[r][p] != 0), None)
        if piv is None:
            return 0
        if piv != p:
            a[p], a[piv] = a[piv], a[p]
            det = -det
        det *= a[p][p]
        for r in range(p + 1, n):
            f = a[r][p] / a[p][p]
            for c in range(p, n):
                a[r][c] -= f * a[p][c]
    return det


@given(st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_rational_elimination(m):
    assert hankel_det(m) == _fraction_det(m)


@pytest.mark.parametrize("n,k", [(7, 3), (9, 3), (11, 4), (12, 3)])
def test_det_catalan_against_rational_elimination(n, k):
    m = [[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    assert det_catalan(n, k) == _fraction_det(m)


def test_det_catalan_first_minor_is_one():
    # with n = 2k + 1 the only k-triangulation is the complete graph
    for k in range(1, 6):
        assert det_catalan(2 * k + 1, k) == 1


def k_triangulations(n, k):
    d = dual_network(convex_position(n))
    kr = kernel(d.net, k)
    return [primal_edges(d, a, k).edges for a in iter_greedy_flip(kr.net, kr.forced)]


def test_is_k_triangulation():
    for t in k_triangulations(7, 2):
        assert is_k_triangulation(7, 2, t)
    t = sorted(k_triangulations(6, 1)[0])
    assert not is_k_triangulation(6, 1, t[1:])
    assert convex_crossing((0, 2), (1, 3)) and not convex_crossing((0, 2), (2, 3))


def test_pentagon_beams():
    t = k_triangulations(5, 1)[0]
    d = beams(5, 1, t)
    assert len(d.beams) == 3
    assert all(b.reflections == 3 for b in d.beams)
    assert [b.exit for b in d.beams] == [("up", 1), ("up", 2), ("up", 3)]
    assert beam_check(d)


def test_octagon_beams():
    for t in k_triangulations(8, 2):
        d = beams(8, 2, t)
        assert len(d.beams) == 4 and beam_check(d)


def test_every_triangulation_beams():
    for n in range(4, 9):
        for t in k_triangulations(n, 1):
            assert beam_check(beams(n, 1, t))


def test_missing_mirror_breaks_the_diagram():
    for t in k_triangulations(5, 1):
        for e in t:
            report = beam_report(beams(5, 1, set(t) - {e}, check=False))
            assert not all(report.values())


def test_beams_reject_non_triangulations():
    t = k_triangulations(6, 1)[0]
    with pytest.raises(NotMultitriangulationError):
        beams(6, 1, sorted(t)[1:])


def test_zigzag_example():
    edges = zigzag_two_triangulation()
    assert len(edges) == 50
    assert is_k_triangulation(15, 2, edges)


def _contains_triangulation(n, allowed):
    """Interval DP: can the polygon be triangulated with chords from ``allowed``?"""
    ok = {}
    for length in range(1, n):
        for i in range(n - length):
            j = i + length
            if length == 1:
                ok[i, j] = True
                continue
            if (i, j) not in allowed and not (i == 0 and j == n - 1):
                ok[i, j] = False
                continue
            ok[i, j] = any(ok[i, m] and ok[m, j] for m in range(i + 1, j))
    return ok[0, n - 1]


def test_zigzag_contains_no_triangulation_two_ways():
    edges = zigzag_two_triangulation()
    assert not _contains_triangulation(15, edges)
    d = dual_network(convex_position(15))
    k1 = kernel(d.net, 1)
    assert find_sub_arrangement(k1.net, [v for v in k1.net.ids if d.pairs[v] in edges]) is None


def test_interval_dp_agrees_with_search_on_small_polygons():
    d = dual_network(convex_position(8))
    k1 = kernel(d.net, 1)
    for t in k_triangulations(8, 2)[:30]:
        allowed = [v for v in k1.net.ids if d.pairs[v] in t]
        assert (find_sub_arrangement(k1.net, allowed) is not None) == _contains_triangulation(8, t)


def test_greedy_two_triangulation_of_octagon_beams():
    d = dual_network(convex_position(8))
    t = primal_edges(d, greedy_multi(d.net, 2), 2).edges
    assert len(t) == 2 * (16 - 5) and beam_check(beams(8, 2, t))
