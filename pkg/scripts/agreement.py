"""Compare the decomposer against exhaustive search on seeded random multigraphs.

    python scripts/agreement.py --count 20000 --max-edges 16 --seed 1
"""

import argparse
import collections
import time

from oddsplit.decompose import TwoColoring, decompose
from oddsplit.errors import NotDecomposable
from oddsplit.oracle import GenSpec, Mode, SplitMix64, brute_force, generate, verify_decomposition


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--max-edges", type=int, default=16)
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = SplitMix64(args.seed)
    tally = collections.Counter()
    start = time.perf_counter()
    for _ in range(args.count):
        n = 2 + rng.below(args.max_n - 1)
        mult = 1 + rng.below(args.max_mult)
        m = rng.below(min(args.max_edges, mult * n * (n - 1) // 2) + 1)
        G = generate(GenSpec(n, m, rng.next_u64(), mult))
        for mode in Mode:
            truth = brute_force(G, mode) is not None
            try:
                c = decompose(G, mode)
            except NotDecomposable:
                c = None
            got = isinstance(c, TwoColoring)
            tally[mode, truth] += 1
            if got != truth or (got and not verify_decomposition(G, c, mode)):
                tally[mode, "mismatch"] += 1
                print(f"mismatch ({mode}): n={G.n} edges={list(G.edges)}")
    print(f"{args.count} graphs in {time.perf_counter() - start:.1f}s")
    for mode in Mode:
        print(f"  {mode.value:9s} feasible {tally[mode, True]:6d}  infeasible {tally[mode, False]:6d}"
              f"  mismatches {tally[mode, 'mismatch']}")


if __name__ == "__main__":
    main()
