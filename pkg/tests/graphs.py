"""Named fixture graphs, exhaustive enumeration and hypothesis strategies."""

import itertools

from hypothesis import strategies as st

from oddsplit.multigraph import Multigraph, from_edge_list

K2 = from_edge_list(2, [(0, 1)])
P3 = from_edge_list(3, [(0, 1), (1, 2)])
P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
K3 = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K13 = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
# rim 0..3, hub 4
W4 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)])
DOUBLE = from_edge_list(2, [(0, 1), (0, 1)])
SHANNON_111 = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
SHANNON_222 = from_edge_list(3, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)])
EMPTY3 = Multigraph(3)


def shannon(p, q, r):
    """Shannon triangle with bundle sizes p, q, r on pairs 01, 12, 20."""
    return from_edge_list(3, [(0, 1)] * p + [(1, 2)] * q + [(2, 0)] * r)


def all_multigraphs(max_n=5, max_m=8, max_mult=2):
    """Every labelled loopless multigraph with n <= max_n, at most max_m edges
    and multiplicity <= max_mult.  Edges are listed pair by pair in
    lexicographic order."""
    for n in range(max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
            if sum(mults) > max_m:
                continue
            edges = [p for p, k in zip(pairs, mults) for _ in range(k)]
            yield Multigraph(n, tuple(edges))


@st.composite
def multigraphs(draw, max_n=7, max_m=12):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Multigraph(n)
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m))
    return Multigraph(n, tuple(edges))


@st.composite
def forests(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()):
            edges.append((v, draw(st.integers(0, v - 1))))
    perm = draw(st.permutations(range(n)))
    return Multigraph(n, tuple((perm[u], perm[v]) for u, v in edges))
