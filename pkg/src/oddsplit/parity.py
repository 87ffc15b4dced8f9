"""Odd factors and T-joins built on a BFS spanning forest.

Both constructions work inside a fixed spanning forest.  In a tree the join
for a given target set is unique: a tree edge belongs to it exactly when the
subtree below it holds an odd number of targets.  That is the same edge set
as the symmetric difference of the tree paths joining any pairing of the
targets, so no explicit pairing or path walk is needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import OddOrderComponent, ParityViolation, VertexOutOfRange
from .multigraph import Multigraph

EdgeSet = frozenset


@dataclass(frozen=True)
class SpanningForest:
    """BFS forest: roots are the smallest vertex of each component and ties
    are broken by edge id.  ``parent_edge[v]`` is -1 at roots."""

    order: tuple[int, ...]
    parent: tuple[int, ...]
    parent_edge: tuple[int, ...]
    root: tuple[int, ...]


def spanning_forest(G: Multigraph) -> SpanningForest:
    parent = [-1] * G.n
    parent_edge = [-1] * G.n
    root = [-1] * G.n
    order = []
    inc = G.incidence
    for s in range(G.n):
        if root[s] != -1:
            continue
        root[s] = s
        order.append(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in inc[v]:
                w = G.other(e, v)
                if root[w] == -1:
                    root[w] = s
                    parent[w] = v
                    parent_edge[w] = e
                    order.append(w)
                    queue.append(w)
    return SpanningForest(tuple(order), tuple(parent), tuple(parent_edge), tuple(root))


def _join_in_forest(G: Multigraph, forest: SpanningForest, target: list[bool]) -> frozenset[int]:
    odd_below = list(target)
    join = []
    for v in reversed(forest.order):
        if forest.parent_edge[v] == -1:
            continue
        if odd_below[v]:
            join.append(forest.parent_edge[v])
            p = forest.parent[v]
            odd_below[p] = not odd_below[p]
    return frozenset(join)


def _check_target_parity(forest: SpanningForest, target: list[bool], error):
    count: dict[int, int] = {}
    for v, t in enumerate(target):
        if t:
            r = forest.root[v]
            count[r] = count.get(r, 0) + 1
    for r in sorted(count):
        if count[r] % 2:
            members = frozenset(v for v in range(len(target)) if forest.root[v] == r)
            raise error(members)


def t_join(G: Multigraph, T: Iterable[int], forest: SpanningForest | None = None) -> frozenset[int]:
    """Edge set ``J`` with ``deg_J(v)`` odd exactly for ``v`` in ``T``.

    Raises ParityViolation naming the first component (by smallest vertex)
    that contains an odd number of vertices of ``T``.
    """
    target = [False] * G.n
    for v in T:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(v, G.n)
        target[v] = True
    if forest is None:
        forest = spanning_forest(G)
    _check_target_parity(forest, target, ParityViolation)
    return _join_in_forest(G, forest, target)


def odd_factor(G: Multigraph) -> frozenset[int]:
    """Spanning subgraph where every vertex has odd degree.

    Keeps the tree edges whose removal splits their tree into two odd-order
    parts.  Raises OddOrderComponent when a component has odd order.
    """
    forest = spanning_forest(G)
    target = [True] * G.n
    _check_target_parity(forest, target, OddOrderComponent)
    return _join_in_forest(G, forest, target)
