"""Time two-odd decomposition on growing random and planted multigraphs.

    python scripts/scaling.py --sizes 1000 10000 100000 --density 5
"""

import argparse
import time

from oddsplit.decompose import TwoColoring, check_witness, decompose_two_odd
from oddsplit.errors import NotDecomposable
from oddsplit.oracle import GenSpec, Mode, generate, generate_planted, verify_decomposition


def run(G, solver):
    start = time.perf_counter()
    try:
        res = decompose_two_odd(G, solver)
    except NotDecomposable as exc:
        res = exc
    elapsed = time.perf_counter() - start
    if isinstance(res, TwoColoring):
        ok = bool(verify_decomposition(G, res, Mode.TWO_ODD))
        return elapsed, "yes", ok
    return elapsed, "no", check_witness(G, res.certificate)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 50_000])
    ap.add_argument("--density", type=int, default=5, help="edges per vertex")
    ap.add_argument("--solver", choices=["matrix", "graph"], default="matrix")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'kind':8s} {'n':>8s} {'m':>9s} {'seconds':>8s} decomposable checked")
    for n in args.sizes:
        n -= n % 4
        m = args.density * n
        for kind in ("random", "planted"):
            if kind == "random":
                G = generate(GenSpec(n, m, args.seed, max_multiplicity=2))
            else:
                m_planted = m - (m - 3 * n // 4) % 3
                G = generate_planted(n, m_planted, args.seed)
            t, verdict, ok = run(G, args.solver)
            print(f"{kind:8s} {G.n:8d} {G.m:9d} {t:8.2f} {verdict:>12s} {ok}")


if __name__ == "__main__":
    main()
