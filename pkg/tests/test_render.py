from pseudolines.arrangement import greedy
from pseudolines.combinatorics import beams
from pseudolines.geometry import convex_position, dual_network
from pseudolines.network import Network
from pseudolines.render import beams_svg, wiring_ascii, wiring_svg


def test_ascii_marks_and_labels():
    net = Network.from_levels(3, [1, 2, 1, 2])
    g = greedy(net)
    text = wiring_ascii(net, g)
    assert text.count("o") == len(g.contacts)
    assert text.count("X") == len(g.crossings)
    lines = text.splitlines()
    assert len(lines) == 5
    # left labels top to bottom, right labels give the final order
    assert [ln.split()[0] for ln in lines[::2]] == ["3", "2", "1"]
    assert sorted(ln.split()[-1] for ln in lines[::2]) == ["1", "2", "3"]


def test_svg_one_polyline_per_wire():
    net = dual_network(convex_position(5)).net
    svg = wiring_svg(net, greedy(net))
    assert svg.count("<polyline") == 5
    assert svg.count('r="3" fill="black"') == 10
    assert svg == wiring_svg(net, greedy(net))


def test_beams_svg():
    t = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (0, 3), (0, 4)]
    svg = beams_svg(beams(6, 1, t))
    assert svg.count("<polyline") == 4
    assert svg.count('stroke="steelblue"') == 9
