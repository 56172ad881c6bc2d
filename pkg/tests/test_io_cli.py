import io
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from pseudolines.arrangement import greedy
from pseudolines.cli import main
from pseudolines.io import FormatError, NetworkFile, emit_network, emit_points, parse_network, parse_points
from pseudolines.network import Network
from pseudolines.render import beams_svg, wiring_ascii, wiring_svg

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", ["convex5.plnet", "convex5_greedy_k1.plnet", "two_lines_p3_greedy.plnet",
                                  "two_lines_p2.plnet", "six.plnet"])
def test_network_files_round_trip(name):
    text = (GOLDEN / name).read_text()
    assert emit_network(parse_network(text)) == text


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n - 1), max_size=20), st.booleans())))
def test_parse_of_emit_is_identity(case):
    n, levels, with_contacts = case
    net = Network.from_levels(n, levels)
    g = greedy(net) if with_contacts else None
    nf = NetworkFile(net, g.contacts if g else None, frozenset(sorted(g.contacts)[:1]) if g else frozenset())
    back = parse_network(emit_network(nf))
    assert back == nf


@pytest.mark.parametrize("text", [
    "", "plnet 2\nn 2\nm 1\nlevels 1\n", "plnet 1\nn 2\nm 2\nlevels 1\n", "plnet 1\nn 2\nm 1\nlevels 2\n",
    "plnet 1\nn 2\nm 1\nlevels 1\ncontacts 2\n", "plnet 1\nn 2\nm 2\nlevels 1 1\ncontacts 1\nforced 2\n",
    "plnet 1\nn 2\nlevels 1\n", "plnet 1\nn 2\nm 1\nlevels x\n", "plnet 1\nn 2\nm 1\nlevels 1\nbogus 1\n",
])
def test_bad_network_files(text):
    with pytest.raises(FormatError):
        parse_network(text)


def test_point_files():
    ps = parse_points((GOLDEN / "six.points").read_text())
    assert len(ps) == 6 and ps[2] == (Fraction(3, 2), Fraction(6))
    assert parse_points(emit_points(ps)) == ps
    with pytest.raises(FormatError):
        parse_points("1 2 3\n")
    with pytest.raises(FormatError):
        parse_points("1 a\n")
    with pytest.raises(ValueError):
        parse_points("0 0\n1 1\n2 2\n")


def test_gen_convex():
    code, out = run("gen", "convex", "--n", "5")
    assert code == 0 and out == (GOLDEN / "convex5.plnet").read_text()
    assert parse_network(out).net.m == 10
    assert run("gen", "convex", "--n", "2")[0] == 2


def test_gen_random_is_deterministic():
    a = run("gen", "random", "--n", "4", "--seed", "7")
    b = run("gen", "random", "--n", "4", "--seed", "7")
    assert a == b and a[0] == 0
    pts = run("gen", "random", "--n", "4", "--seed", "7", "--points")[1]
    assert len(parse_points(pts)) == 4


def test_gen_points(tmp_path):
    code, out = run("gen", "points", "--file", str(GOLDEN / "six.points"))
    assert code == 0 and out == (GOLDEN / "six.plnet").read_text()
    assert run("gen", "points")[0] == 2


def test_enum_convex_pentagon():
    code, out = run("enum", str(GOLDEN / "convex5.plnet"), "--k", "1")
    assert code == 0 and len(out.splitlines()) == 5
    assert out == (GOLDEN / "convex5_k1.enum").read_text()
    assert run("enum", str(GOLDEN / "convex5.plnet"), "--k", "1", "--count")[1] == "5\n"


def test_enum_with_forced_positions():
    code, out = run("enum", str(GOLDEN / "two_lines_p2.plnet"), "--forced", "2")
    assert code == 0 and sorted(out.splitlines()) == ["1 2", "2 3"]


def test_greedy_and_kernel():
    code, out = run("greedy", str(GOLDEN / "convex5.plnet"), "--k", "1")
    assert code == 0 and out == (GOLDEN / "convex5_greedy_k1.plnet").read_text()
    code, out = run("kernel", str(GOLDEN / "convex5.plnet"), "--k", "1")
    nf = parse_network(out)
    assert nf.net.n == 3 and nf.net.m == 5 and nf.contacts is None


def test_greedy_empty_is_refuted(tmp_path):
    f = tmp_path / "r.plnet"
    f.write_text("plnet 1\nn 3\nm 3\nlevels 1 2 1\n")
    code, out = run("greedy", str(f), "--forced", "2")
    assert code == 1 and out == "empty\n"


def test_flipgraph_stats_and_dot():
    code, out = run("flipgraph", str(GOLDEN / "convex5.plnet"), "--k", "1")
    assert out == "vertices=5 edges=5 degrees=2:5 connected=yes diameter=2\n"
    code, out = run("flipgraph", str(GOLDEN / "two_lines_p2.plnet"), "--dot")
    assert out == (GOLDEN / "two_lines_p2.dot").read_text()
    assert out.count("[label=") == 3 and out.count(" -- ") == 3


def test_horizon_command(tmp_path):
    code, out = run("horizon", str(GOLDEN / "convex5.plnet"), "--k", "1")
    assert code == 0 and out == (GOLDEN / "convex5_k1.horizon").read_text()
    assert out.endswith("OK\n")
    code, _ = run("horizon", str(GOLDEN / "convex5_greedy_k1.plnet"), "--k", "1")
    assert code == 2


def test_primal_command():
    code, out = run("primal", "--convex", "6", "--k", "1")
    assert code == 0 and len(out.split()) == 9
    code, out = run("primal", "--points", str(GOLDEN / "six.points"), "--k", "1", "--all")
    assert code == 0 and all(len(line.split()) == 9 for line in out.splitlines())
    assert run("primal", "--k", "1")[0] == 2


def test_beams_command():
    code, out = run("beams", "--n", "6", "--k", "1")
    assert code == 0 and out == (GOLDEN / "hexagon_beams.txt").read_text()
    code, out = run("beams", "--n", "5", "--k", "1", "--edges", "0-1 1-2 2-3 3-4 0-4 0-2 0-3", "--svg")
    assert code == 0 and out.count("<polyline") == 3
    assert run("beams", "--n", "5", "--k", "1", "--edges", "0-1 1-2")[0] == 2
    assert run("beams", "--n", "4", "--k", "2")[0] == 2


def test_verify_commands():
    assert run("verify", "catalan", "--n", "8", "--k", "2") == (0, "count=84 det=84 OK\n")
    assert run("verify", "zigzag") == (0, "edges=50 2-triangulation=yes contains-triangulation=no OK\n")
    assert run("verify", "compose", "--convex", "9", "--a", "1", "--b", "2")[0] == 0
    assert run("verify", "horizon", "--convex", "8", "--k", "2")[0] == 0
    assert run("verify", "horizon", str(GOLDEN / "six.plnet"), "--k", "1")[0] == 0
    assert run("verify", "catalan", "--n", "8")[0] == 2


def test_render_commands():
    code, out = run("render", "ascii", str(GOLDEN / "two_lines_p3_greedy.plnet"))
    assert out == (GOLDEN / "two_lines_p3.txt").read_text()
    assert out.count("o") == 3 and out.count("X") == 1
    code, out = run("render", "svg", str(GOLDEN / "two_lines_p3_greedy.plnet"))
    assert out == (GOLDEN / "two_lines_p3.svg").read_text()
    assert out.count('fill="white" stroke') == 3
    assert run("render", "svg", str(GOLDEN / "two_lines_p3_greedy.plnet"))[1] == out


def test_render_support_only():
    net = Network.from_levels(2, [1, 1, 1, 1])
    assert wiring_ascii(net).count("*") == 4
    assert wiring_svg(net).count('fill="gray"') == 4


def test_missing_file_is_an_error():
    assert run("enum", "/nonexistent/file.plnet")[0] == 2


def test_usage_error_exit_code():
    assert run("nonsense")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pseudolines", "verify", "catalan", "--n", "6", "--k", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "count=14 det=14 OK\n"


def test_stdin_input():
    res = subprocess.run([sys.executable, "-m", "pseudolines", "enum", "-", "--count"],
                         input=(GOLDEN / "two_lines_p3.plnet").read_text(), capture_output=True, text=True)
    assert res.stdout == "4\n"


def test_forced_positions_refer_to_the_input_file(tmp_path):
    f = tmp_path / "hex.plnet"
    f.write_text(run("gen", "convex", "--n", "6")[1])
    # a peeled hull vertex cannot be forced; a surviving diagonal splits the hexagon into triangle + pentagon
    assert run("enum", str(f), "--k", "1", "--forced", "3")[0] == 2
    assert run("enum", str(f), "--k", "1", "--forced", "12", "--count") == (0, "5\n")
