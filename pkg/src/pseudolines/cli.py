"""
Command-line workbench.

Exit status: 0 when a command succeeds or a check is verified, 1 when a check
is refuted, 2 on usage or input errors.  Comparator positions printed or read
are 1-based positions in the input network file; point indices are 0-based.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .arrangement import from_contacts, greedy
from .combinatorics import beam_check, beam_report, beams, det_catalan, zigzag_two_triangulation
from .enumeration import build_flip_graph, find_sub_arrangement, graph_stats, iter_greedy_flip
from .geometry import (DualNetwork, convex_position, crossing_free_check,
                       dual_network, primal_edges, random_points)
from .io import FormatError, NetworkFile, arrangement_of, emit_network, emit_points, parse_network, parse_points
from .multi import compose_check, greedy_multi, horizon_check, horizon_sets, multi_context
from .network import Network, kernel
from .render import beams_svg, wiring_ascii, wiring_svg

OK, REFUTED, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_network(path: str) -> NetworkFile:
    return parse_network(_read(path))


def _load_dual(args) -> DualNetwork:
    if args.convex is not None:
        if args.convex < 3:
            raise UsageError("--convex needs at least 3 points")
        return dual_network(convex_position(args.convex))
    if args.points is None:
        raise UsageError("give --points FILE or --convex N")
    return dual_network(parse_points(_read(args.points)))


def _positions(net: Network, ids) -> str:
    pos = net.position
    return " ".join(str(p + 1) for p in sorted(pos[i] for i in ids))


def _parse_positions(net: Network, text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        ps = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad position list {text!r}") from None
    if any(not 1 <= p <= net.m for p in ps):
        raise UsageError(f"positions must lie in 1..{net.m}")
    return frozenset(net.comparators[p - 1].id for p in ps)


def _extra_forced(nf: NetworkFile, net, text: str | None) -> frozenset[int]:
    """Forced positions of the input file, refused if peeling removed them."""
    ids = _parse_positions(nf.net, text)
    gone = ids - set(net.ids)
    if gone:
        pos = sorted(nf.net.position[c] + 1 for c in gone)
        raise UsageError(f"forced positions {pos} lie in the peeled levels")
    return ids


def _edges_line(edges) -> str:
    return " ".join(f"{a}-{b}" for a, b in sorted(edges))


def _kernel_of(nf: NetworkFile, k: int):
    contacts = nf.contacts or frozenset()
    kr = kernel(nf.net, k, contacts)
    return kr.net, kr.forced | (nf.forced & set(kr.net.ids))


# --- commands ----------------------------------------------------------------

def cmd_gen(args, out) -> int:
    if args.what == "convex":
        if args.n < 3:
            raise UsageError("convex position needs --n >= 3")
        ps = convex_position(args.n)
    elif args.what == "random":
        if args.n < 3:
            raise UsageError("random points need --n >= 3")
        ps = random_points(args.n, random.Random(args.seed), args.size)
    else:
        if args.file is None:
            raise UsageError("gen points needs --file")
        ps = parse_points(_read(args.file))
    if args.emit_points:
        out.write(emit_points(ps))
    else:
        out.write(emit_network(NetworkFile(dual_network(ps).net)))
    return OK


def cmd_enum(args, out) -> int:
    nf = _load_network(args.file)
    net, forced = _kernel_of(nf, args.k) if args.k else (nf.net, nf.forced)
    forced |= _extra_forced(nf, net, args.forced)
    count = 0
    for arr in iter_greedy_flip(net, forced):
        count += 1
        if count > args.limit:
            raise UsageError(f"more than {args.limit} arrangements; raise --limit")
        if not args.count:
            out.write(_positions(nf.net, arr.contacts) + "\n")
    if args.count:
        out.write(f"{count}\n")
    return OK


def cmd_greedy(args, out) -> int:
    nf = _load_network(args.file)
    net, forced = _kernel_of(nf, args.k) if args.k else (nf.net, nf.forced)
    forced |= _extra_forced(nf, net, args.forced)
    g = greedy(net, forced)
    if g is None:
        out.write("empty\n")
        return REFUTED
    out.write(emit_network(NetworkFile(net, g.contacts, forced)))
    return OK


def cmd_kernel(args, out) -> int:
    nf = _load_network(args.file)
    net, forced = _kernel_of(nf, args.k)
    out.write(emit_network(NetworkFile(net, None, forced)))
    return OK


def cmd_flipgraph(args, out) -> int:
    nf = _load_network(args.file)
    net, forced = _kernel_of(nf, args.k) if args.k else (nf.net, nf.forced)
    graph = build_flip_graph(net, forced, limit=args.limit)
    if args.dot:
        out.write(graph.to_dot(nf.net))
        return OK
    st = graph_stats(graph, diameter=not args.no_diameter)
    degrees = " ".join(f"{d}:{c}" for d, c in st.degree_histogram.items())
    diam = "-" if st.diameter is None else str(st.diameter)
    out.write(f"vertices={st.vertex_count} edges={len(graph.edges)} degrees={degrees} "
              f"connected={'yes' if st.connected else 'no'} diameter={diam}\n")
    return OK


def cmd_horizon(args, out) -> int:
    nf = _load_network(args.file)
    if nf.contacts:
        raise UsageError("horizon sets need a network file without contacts")
    hs = horizon_sets(nf.net, args.k)
    out.write(f"upper {_positions(nf.net, hs.upper)}\n")
    out.write(f"lower {_positions(nf.net, hs.lower)}\n")
    out.write(f"combined {_positions(nf.net, hs.combined)}\n")
    ok = horizon_check(nf.net, args.k)
    out.write("OK\n" if ok else "MISMATCH\n")
    return OK if ok else REFUTED


def cmd_primal(args, out) -> int:
    dual = _load_dual(args)
    kr = kernel(dual.net, args.k)
    arrs = iter_greedy_flip(kr.net, kr.forced) if args.all else [greedy(kr.net, kr.forced)]
    for arr in arrs:
        out.write(_edges_line(primal_edges(dual, arr, args.k, include_outer=not args.inner).edges) + "\n")
    return OK


def _parse_edges(text: str) -> set[tuple[int, int]]:
    edges = set()
    for tok in text.replace(",", " ").split():
        try:
            a, b = (int(x) for x in tok.split("-"))
        except ValueError:
            raise UsageError(f"bad edge {tok!r}; write edges as a-b") from None
        edges.add((min(a, b), max(a, b)))
    return edges


def cmd_beams(args, out) -> int:
    n, k = args.n, args.k
    if n <= 2 * k:
        raise UsageError("need n > 2k")
    if args.edges is not None:
        edges = _parse_edges(args.edges)
    else:
        dual = dual_network(convex_position(n))
        edges = primal_edges(dual, greedy_multi(dual.net, k), k).edges
    diagram = beams(n, k, edges)
    if args.svg:
        out.write(beams_svg(diagram))
    else:
        for b in diagram.beams:
            pts = " ".join(f"({x},{y})" for x, y in b.points)
            out.write(f"beam {b.index}: reflections={b.reflections} exit={b.exit[0]}:{b.exit[1]} {pts}\n")
        report = beam_report(diagram)
        failed = [key for key, ok in report.items() if not ok]
        out.write("OK\n" if not failed else "FAILED " + " ".join(failed) + "\n")
    return OK if beam_check(diagram) else REFUTED


def cmd_verify(args, out) -> int:
    if args.what == "catalan":
        if args.n is None or args.k is None:
            raise UsageError("verify catalan needs --n and --k")
        dual = dual_network(convex_position(args.n))
        kr = kernel(dual.net, args.k)
        count = sum(1 for _ in iter_greedy_flip(kr.net, kr.forced))
        det = det_catalan(args.n, args.k)
        ok = count == det
        out.write(f"count={count} det={det} {'OK' if ok else 'MISMATCH'}\n")
    elif args.what == "compose":
        net = _network_or_convex(args)
        ok = compose_check(net, args.a, args.b)
        out.write(f"a={args.a} b={args.b} {'OK' if ok else 'MISMATCH'}\n")
    elif args.what == "horizon":
        net = _network_or_convex(args)
        if args.k is None:
            raise UsageError("verify horizon needs --k")
        ok = horizon_check(net, args.k)
        out.write(f"k={args.k} {'OK' if ok else 'MISMATCH'}\n")
    else:
        edges = zigzag_two_triangulation()
        dual = dual_network(convex_position(15))
        ctx2 = multi_context(dual.net, 2)
        contacts = [v for v in ctx2.kernel_net.ids if dual.pairs[v] in edges]
        two_tri = crossing_free_check(dual.points, edges, 2) is None
        try:
            from_contacts(ctx2.kernel_net, contacts)
            valid = True
        except ValueError:
            valid = False
        k1 = kernel(dual.net, 1)
        sub = find_sub_arrangement(k1.net, [v for v in k1.net.ids if dual.pairs[v] in edges])
        ok = len(edges) == 50 and two_tri and valid and sub is None
        out.write(f"edges={len(edges)} 2-triangulation={'yes' if two_tri and valid else 'no'} "
                  f"contains-triangulation={'no' if sub is None else 'yes'} {'OK' if ok else 'MISMATCH'}\n")
    return OK if ok else REFUTED


def _network_or_convex(args) -> Network:
    if args.convex is not None:
        return dual_network(convex_position(args.convex)).net
    if args.file is None:
        raise UsageError("give a network file or --convex N")
    nf = _load_network(args.file)
    return arrangement_of(nf) if nf.contacts is not None else nf.net


def cmd_render(args, out) -> int:
    nf = _load_network(args.file)
    arr = arrangement_of(nf) if nf.contacts is not None else None
    out.write(wiring_svg(nf.net, arr) if args.fmt == "svg" else wiring_ascii(nf.net, arr))
    return OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pseudolines", description="Pseudoline arrangements on sorting-network supports.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a network (or point) file")
    g.add_argument("what", choices=["convex", "points", "random"])
    g.add_argument("--n", type=int, default=5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--size", type=int, default=1000, help="coordinate range for random points")
    g.add_argument("--file", help="point file for 'gen points'")
    g.add_argument("--points", dest="emit_points", action="store_true", help="emit the point file instead")
    g.set_defaults(func=cmd_gen)

    def net_cmd(name, func, help_text, k_default=0):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("file", help="network file, or - for stdin")
        s.add_argument("--k", type=int, default=k_default)
        s.set_defaults(func=func)
        return s

    s = net_cmd("enum", cmd_enum, "list all arrangements (contact positions per line)")
    s.add_argument("--forced", help="extra forced contact positions")
    s.add_argument("--count", action="store_true")
    s.add_argument("--limit", type=int, default=1_000_000)
    s = net_cmd("greedy", cmd_greedy, "the (constrained) greedy arrangement")
    s.add_argument("--forced", help="extra forced contact positions")
    net_cmd("kernel", cmd_kernel, "peel the first k levels", k_default=1)
    s = net_cmd("flipgraph", cmd_flipgraph, "flip graph statistics or DOT")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--no-diameter", action="store_true")
    s.add_argument("--limit", type=int, default=200_000)
    net_cmd("horizon", cmd_horizon, "horizon sets and their comparison with the greedy", k_default=1)

    s = sub.add_parser("primal", help="primal edge sets of k-pseudotriangulations")
    s.add_argument("--points")
    s.add_argument("--convex", type=int)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--all", action="store_true", help="every arrangement instead of the greedy one")
    s.add_argument("--inner", action="store_true", help="omit the peeled edges")
    s.set_defaults(func=cmd_primal)

    s = sub.add_parser("beams", help="beam diagram of a k-triangulation of the n-gon")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--edges", help="edges a-b (default: the greedy k-triangulation)")
    s.add_argument("--svg", action="store_true")
    s.set_defaults(func=cmd_beams)

    s = sub.add_parser("verify", help="run a bundled check")
    s.add_argument("what", choices=["catalan", "compose", "horizon", "zigzag"])
    s.add_argument("file", nargs="?")
    s.add_argument("--convex", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--b", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw a wiring diagram")
    s.add_argument("fmt", choices=["svg", "ascii"])
    s.add_argument("file")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
