"""Count two-odd decomposable multigraphs among all small labelled ones, and
check the decomposer and the subset condition against exhaustive search.

    python scripts/exhaustive.py --max-n 5 --max-m 8 --max-mult 2
"""

import argparse
import collections
import itertools

from oddsplit.decompose import RBPartition, check_ns_condition, two_odd_partition
from oddsplit.errors import NotDecomposable
from oddsplit.multigraph import Multigraph
from oddsplit.oracle import Mode, brute_force


def multigraphs(max_n, max_m, max_mult):
    for n in range(max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
            if sum(mults) <= max_m:
                yield Multigraph(n, tuple(p for p, k in zip(pairs, mults) for _ in range(k)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--max-mult", type=int, default=2)
    args = ap.parse_args()

    by_n = collections.defaultdict(collections.Counter)
    for G in multigraphs(args.max_n, args.max_m, args.max_mult):
        truth = brute_force(G, Mode.TWO_ODD) is not None
        try:
            solver = isinstance(two_odd_partition(G), RBPartition)
        except NotDecomposable:
            solver = False
        ns = check_ns_condition(G) is True
        by_n[G.n]["total"] += 1
        by_n[G.n]["decomposable"] += truth
        by_n[G.n]["disagree"] += not (truth == solver == ns)
    print(f"{'n':>3s} {'graphs':>8s} {'decomposable':>13s} {'disagreements':>14s}")
    for n in sorted(by_n):
        c = by_n[n]
        print(f"{n:3d} {c['total']:8d} {c['decomposable']:13d} {c['disagree']:14d}")


if __name__ == "__main__":
    main()
