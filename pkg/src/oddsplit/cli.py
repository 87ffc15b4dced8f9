"""Command line entry point: ``oddsplit {decompose,verify,oracle,gen,dot}``.

Exit status: 0 decomposable / valid, 1 not decomposable / invalid, 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager

from .decompose import check_witness, decompose, isolated_vertices
from .errors import NotAPartition, NotDecomposable, OddsplitError
from .formats import (
    certificate_from_json,
    coloring_from_result,
    dump_result,
    parse_result,
    read_graph,
    result_document,
    to_dot,
    write_edge_list,
)
from .multigraph import components, induced_subgraph, odd_vertices
from .oracle import BRUTE_FORCE_CAP, GenSpec, Mode, brute_force, generate, verify_decomposition


def default_cap() -> int:
    raw = os.environ.get("ODDSPLIT_CAP")
    return int(raw) if raw else BRUTE_FORCE_CAP


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(doc, args):
    with _output(args.output) as fh:
        if args.format == "json":
            dump_result(doc, fh)
        else:
            fh.write(_as_text(doc))


def _as_text(doc) -> str:
    lines = [f"mode: {doc['mode']}", f"decomposable: {'yes' if doc['decomposable'] else 'no'}"]
    if doc["decomposable"]:
        a, b = Mode(doc["mode"]).class_names
        lines += [f"{a}: {' '.join(map(str, doc['classes'][0]))}",
                  f"{b}: {' '.join(map(str, doc['classes'][1]))}"]
    elif doc.get("exhausted"):
        lines.append("exhausted: all colourings checked")
    else:
        for key, val in doc["certificate"].items():
            lines.append(f"{key}: {val}")
    if doc["normalization"]:
        lines.append(f"ignored isolated vertices: {' '.join(map(str, doc['normalization']))}")
    return "\n".join(lines) + "\n"


def cmd_decompose(args) -> int:
    G = read_graph(args.input)
    mode = Mode(args.mode)
    isolated = isolated_vertices(G)
    try:
        coloring = decompose(G, mode, solver=args.solver)
    except NotDecomposable as exc:
        _emit(result_document(mode, error=exc, isolated=isolated), args)
        return 1
    _emit(result_document(mode, coloring, isolated=isolated), args)
    return 0


def _certificate_valid(G, mode: Mode, cert) -> bool:
    if mode is Mode.TWO_ODD:
        return check_witness(G, cert)
    if mode is Mode.EVEN_ODD:
        H, vmap, _ = induced_subgraph(G, odd_vertices(G))
        comps = [frozenset(vmap[v] for v in c) for c in components(H)]
        return cert in comps and len(cert) % 2 == 1
    return 0 <= cert < G.n and G.degrees[cert] % 2 == 1


def cmd_verify(args) -> int:
    G = read_graph(args.input)
    with open(args.result) as fh:
        doc = parse_result(fh.read())
    mode = doc["mode"]
    if doc["decomposable"]:
        try:
            check = verify_decomposition(G, coloring_from_result(doc), mode)
        except NotAPartition as exc:
            print(f"NotAPartition: {exc}", file=sys.stderr)
            return 1
        for v, cls, d in check.violations:
            print(f"vertex {v}: {cls} degree {d}", file=sys.stderr)
        return 0 if check.ok else 1
    if doc.get("exhausted"):
        found = brute_force(G, mode, cap=args.cap)
        if found is not None:
            print(f"a valid colouring exists: {sorted(found.red)} / {sorted(found.blue)}", file=sys.stderr)
        return 0 if found is None else 1
    cert = certificate_from_json(mode, doc["certificate"])
    if _certificate_valid(G, mode, cert):
        return 0
    print("certificate does not recheck", file=sys.stderr)
    return 1


def cmd_oracle(args) -> int:
    G = read_graph(args.input)
    mode = Mode(args.mode)
    found = brute_force(G, mode, cap=args.cap)
    if found is None:
        _emit(result_document(mode, exhausted=True), args)
        return 1
    _emit(result_document(mode, found), args)
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.m, args.seed, args.max_mult, args.forest)
    G = generate(spec)
    with _output(args.output) as fh:
        fh.write(write_edge_list(G))
    return 0


def cmd_dot(args) -> int:
    G = read_graph(args.input)
    doc = None
    if args.result:
        with open(args.result) as fh:
            doc = parse_result(fh.read())
    with _output(args.output) as fh:
        fh.write(to_dot(G, doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddsplit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    def io(sp, result=False):
        sp.add_argument("-i", "--input", required=True, help="edge-list file")
        sp.add_argument("-o", "--output", help="output file (default stdout)")
        if result:
            sp.add_argument("-r", "--result", help="result JSON file")

    d = sub.add_parser("decompose", help="decompose a graph")
    io(d)
    d.add_argument("--mode", choices=modes, default="two-odd")
    d.add_argument("--format", choices=["json", "text"], default="json")
    d.add_argument("--solver", choices=["matrix", "graph"], default="matrix")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="recheck a result document against a graph")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("-r", "--result", required=True)
    v.add_argument("--cap", type=int, default=default_cap())
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search")
    io(o)
    o.add_argument("--mode", choices=modes, default="two-odd")
    o.add_argument("--format", choices=["json", "text"], default="json")
    o.add_argument("--cap", type=int, default=default_cap())
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="generate a seeded random multigraph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-mult", type=int, default=1)
    g.add_argument("--forest", action="store_true")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    x = sub.add_parser("dot", aliases=["export-dot"], help="export Graphviz DOT")
    io(x, result=True)
    x.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OddsplitError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
