"""Loopless multigraphs with stable edge ids.

Edge ``i`` is ``edges[i]``; parallel edges are separate entries.  Vertex sets
are plain ``frozenset[int]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import LoopEdge, OverlappingSets, VertexOutOfRange

VertexSet = frozenset


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(u)
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise VertexOutOfRange(w, self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ids of its incident edges (ascending)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def other(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        return w if u == v else u

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)
        return self.degrees[v]


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Multigraph:
    """Build a multigraph on ``0..n-1``; edge ids follow input order."""
    return Multigraph(n, tuple((int(u), int(v)) for u, v in pairs))


def degree(G: Multigraph, v: int) -> int:
    return G.degree(v)


def odd_vertices(G: Multigraph) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(G.degrees) if d % 2)


def even_vertices(G: Multigraph) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(G.degrees) if d % 2 == 0)


def induced_subgraph(G: Multigraph, U: Iterable[int]) -> tuple[Multigraph, list[int], list[int]]:
    """Return ``(H, vertex_map, edge_map)`` for the subgraph induced by ``U``.

    Vertices of ``H`` are ``U`` relabelled in ascending order; ``vertex_map[i]``
    and ``edge_map[j]`` give the original vertex / edge id.
    """
    vertex_map = sorted(set(U))
    for v in vertex_map:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(v, G.n)
    index = {v: i for i, v in enumerate(vertex_map)}
    pairs = []
    edge_map = []
    for e, (u, v) in enumerate(G.edges):
        if u in index and v in index:
            pairs.append((index[u], index[v]))
            edge_map.append(e)
    return Multigraph(len(vertex_map), tuple(pairs)), vertex_map, edge_map


def component_labels(G: Multigraph) -> list[int]:
    """Label each vertex with its component index (components ordered by min vertex)."""
    label = [-1] * G.n
    count = 0
    inc = G.incidence
    for s in range(G.n):
        if label[s] != -1:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in inc[v]:
                w = G.other(e, v)
                if label[w] == -1:
                    label[w] = count
                    queue.append(w)
        count += 1
    return label


def components(G: Multigraph) -> list[frozenset[int]]:
    label = component_labels(G)
    groups: list[list[int]] = [[] for _ in range(max(label, default=-1) + 1)]
    for v, c in enumerate(label):
        groups[c].append(v)
    return [frozenset(g) for g in groups]


def edges_between(G: Multigraph, U1: Iterable[int], U2: Iterable[int]) -> int:
    A, B = frozenset(U1), frozenset(U2)
    if A & B:
        raise OverlappingSets(f"sets share vertices {sorted(A & B)}")
    return sum(1 for u, v in G.edges if (u in A and v in B) or (u in B and v in A))


@dataclass(frozen=True)
class ComponentClassification:
    """Components of the odd-degree part (X) and the even-degree part split
    by order parity (Y odd order, Z even order)."""

    odd_components: tuple[frozenset[int], ...]
    even_odd_order: tuple[frozenset[int], ...]
    even_even_order: tuple[frozenset[int], ...]

    @property
    def X(self):
        return self.odd_components

    @property
    def Y(self):
        return self.even_odd_order

    @property
    def Z(self):
        return self.even_even_order


def _components_of(G: Multigraph, U: frozenset[int]) -> list[frozenset[int]]:
    H, vmap, _ = induced_subgraph(G, U)
    return [frozenset(vmap[i] for i in c) for c in components(H)]


def classify_components(G: Multigraph) -> ComponentClassification:
    X = _components_of(G, odd_vertices(G))
    even = _components_of(G, even_vertices(G))
    return ComponentClassification(
        tuple(X),
        tuple(c for c in even if len(c) % 2),
        tuple(c for c in even if len(c) % 2 == 0),
    )
