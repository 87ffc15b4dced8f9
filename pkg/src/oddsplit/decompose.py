"""Decomposition into two odd, even + odd, or two even subgraphs.

Every public entry point strips isolated vertices first (they lie in no
edge class and cannot obstruct anything) and reports vertex ids of the
caller's graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import NotDecomposable, OddOrderComponent, TooManyComponents
from .multigraph import (
    ComponentClassification,
    Multigraph,
    classify_components,
    edges_between,
    even_vertices,
    induced_subgraph,
    odd_vertices,
)
from .parity import odd_factor, t_join

TWO_ODD = "two-odd"
EVEN_ODD = "even-odd"
TWO_EVEN = "two-even"
MODES = (TWO_ODD, EVEN_ODD, TWO_EVEN)

NS_CAP = 20


@dataclass(frozen=True)
class TwoColoring:
    red: frozenset[int]
    blue: frozenset[int]

    def swapped(self) -> "TwoColoring":
        return TwoColoring(self.blue, self.red)

    def canonical(self) -> "TwoColoring":
        """Relabel so that the class holding the lowest edge id is red."""
        if self.blue and (not self.red or min(self.blue) < min(self.red)):
            return self.swapped()
        return self


@dataclass(frozen=True)
class RBPartition:
    R_components: tuple[frozenset[int], ...]
    B_components: tuple[frozenset[int], ...]

    @property
    def R(self) -> frozenset[int]:
        return frozenset().union(*self.R_components)

    @property
    def B(self) -> frozenset[int]:
        return frozenset().union(*self.B_components)


@dataclass(frozen=True)
class SubsetWitness:
    """A subfamily of Y and Z components that no X component meets an odd
    number of times (in G*), although it has an odd number of Y members."""

    y_members: tuple[frozenset[int], ...]
    z_members: tuple[frozenset[int], ...]

    @property
    def members(self) -> tuple[frozenset[int], ...]:
        return self.y_members + self.z_members


def normalize(G: Multigraph) -> tuple[Multigraph, list[int]]:
    """Drop degree-0 vertices; ``mapping[new] = old``."""
    keep = [v for v, d in enumerate(G.degrees) if d]
    if len(keep) == G.n:
        return G, keep
    H, vmap, _ = induced_subgraph(G, keep)
    return H, vmap


def isolated_vertices(G: Multigraph) -> list[int]:
    return [v for v, d in enumerate(G.degrees) if d == 0]


def _lift(sets, vmap):
    return tuple(frozenset(vmap[v] for v in s) for s in sets)


def build_gstar(G: Multigraph, cc: ComponentClassification | None = None, with_b: bool = False) -> gf2.StarGraph:
    """Bipartite graph on X versus Y+Z (Y first), adjacent when the number
    of edges between the two components is odd."""
    if cc is None:
        cc = classify_components(G)
    W = cc.Y + cc.Z
    comp_of_x = {}
    for i, comp in enumerate(cc.X):
        for v in comp:
            comp_of_x[v] = i
    comp_of_w = {}
    for j, comp in enumerate(W):
        for v in comp:
            comp_of_w[v] = j
    odd_pairs: set[tuple[int, int]] = set()
    for u, v in G.edges:
        if u in comp_of_x and v in comp_of_w:
            odd_pairs ^= {(comp_of_x[u], comp_of_w[v])}
        elif v in comp_of_x and u in comp_of_w:
            odd_pairs ^= {(comp_of_x[v], comp_of_w[u])}
    nbs: list[set[int]] = [set() for _ in W]
    for i, j in odd_pairs:
        nbs[j].add(i)
    tags = ("Y",) * len(cc.Y) + ("Z",) * len(cc.Z)
    star = gf2.StarGraph(len(cc.X), tags, nbs)
    return star.with_b() if with_b else star


def _witness_from_rows(cc: ComponentClassification, rows) -> SubsetWitness:
    ny = len(cc.Y)
    ys = tuple(cc.Y[j] for j, s in enumerate(rows[:ny]) if s)
    zs = tuple(cc.Z[j] for j, s in enumerate(rows[ny:]) if s)
    return SubsetWitness(ys, zs)


def _partition(G: Multigraph, solver: str) -> tuple[RBPartition, ComponentClassification]:
    """Work on a graph without isolated vertices; raises NotDecomposable."""
    cc = classify_components(G)
    if solver == "matrix":
        out = gf2.solve(build_gstar(G, cc).to_system())
    elif solver == "graph":
        out = gf2.graph_eliminate(build_gstar(G, cc, with_b=True))
    else:
        raise ValueError(f"unknown solver {solver!r}")
    if not out.consistent:
        raise NotDecomposable(TWO_ODD, _witness_from_rows(cc, out.certificate))
    R = tuple(c for c, x in zip(cc.X, out.solution) if x)
    B = tuple(c for c, x in zip(cc.X, out.solution) if not x)
    return RBPartition(R, B), cc


def _lifted_witness(exc: NotDecomposable, vmap) -> NotDecomposable:
    w = exc.certificate
    return NotDecomposable(TWO_ODD, SubsetWitness(_lift(w.y_members, vmap), _lift(w.z_members, vmap)))


def two_odd_partition(G: Multigraph, solver: str = "matrix") -> RBPartition:
    """Split the odd-degree components into R and B so that every Y
    component receives an odd number of edges from each side and every Z
    component an even number.

    ``solver`` is ``"matrix"`` (bit-matrix elimination) or ``"graph"``
    (elimination on the augmented star graph).
    """
    H, vmap = normalize(G)
    try:
        part, _ = _partition(H, solver)
    except NotDecomposable as exc:
        raise _lifted_witness(exc, vmap) from None
    return RBPartition(_lift(part.R_components, vmap), _lift(part.B_components, vmap))


def _color_two_odd(G: Multigraph, part: RBPartition) -> TwoColoring:
    R = part.R
    B = part.B
    red, blue = set(), set()
    red_deg = [0] * G.n
    for e, (u, v) in enumerate(G.edges):
        if u in R or v in R:
            red.add(e)
            red_deg[u] += 1
            red_deg[v] += 1
        elif u in B or v in B:
            blue.add(e)
    even = sorted(even_vertices(G))
    H, vmap, emap = induced_subgraph(G, even)
    T = [i for i, v in enumerate(vmap) if red_deg[v] % 2 == 0]
    join = t_join(H, T)
    for j, e in enumerate(emap):
        (red if j in join else blue).add(e)
    return TwoColoring(frozenset(red), frozenset(blue))


def decompose_two_odd(G: Multigraph, solver: str = "matrix") -> TwoColoring:
    """Edge 2-coloring whose classes are both odd subgraphs.

    Edges at R are red and edges at B are blue; the edges among even-degree
    vertices are then split by a T-join that fixes the red parity there.
    Raises NotDecomposable carrying a SubsetWitness.
    """
    H, vmap = normalize(G)
    try:
        part, _ = _partition(H, solver)
    except NotDecomposable as exc:
        raise _lifted_witness(exc, vmap) from None
    # normalization keeps edge ids (every edge survives, in order)
    return _color_two_odd(H, part).canonical()


def decompose_even_odd(G: Multigraph) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(even, odd)`` edge classes.

    The odd class must be an odd factor of the subgraph induced by the
    odd-degree vertices, since every edge at an even-degree vertex has to be
    in the even class.
    """
    odd = sorted(odd_vertices(G))
    H, vmap, emap = induced_subgraph(G, odd)
    try:
        F = odd_factor(H)
    except OddOrderComponent as exc:
        raise NotDecomposable(EVEN_ODD, frozenset(vmap[v] for v in exc.component)) from None
    odd_class = frozenset(emap[j] for j in F)
    return frozenset(range(G.m)) - odd_class, odd_class


def decompose_two_even(G: Multigraph) -> tuple[frozenset[int], frozenset[int]]:
    for v, d in enumerate(G.degrees):
        if d % 2:
            raise NotDecomposable(TWO_EVEN, v)
    return frozenset(range(G.m)), frozenset()


def decompose(G: Multigraph, mode: str, solver: str = "matrix") -> TwoColoring:
    """Dispatch on ``mode``; for even-odd, red is the even class."""
    if mode == TWO_ODD:
        return decompose_two_odd(G, solver)
    if mode == EVEN_ODD:
        return TwoColoring(*decompose_even_odd(G))
    if mode == TWO_EVEN:
        return TwoColoring(*decompose_two_even(G))
    raise ValueError(f"unknown mode {mode!r}")


def _gstar_degree_in(star: gf2.StarGraph, x: int, chosen) -> int:
    return sum(1 for j in chosen if x in star.w_neighbors[j])


def check_ns_condition(G: Multigraph, cap: int = NS_CAP) -> bool | SubsetWitness:
    """Enumerate every subfamily S of Y+Z with an odd number of Y members
    and look for one that every X component meets an even number of times.

    Subfamilies are visited in binary counting order over the w-nodes (Y
    components first, then Z, each by smallest vertex); the first violating
    one is returned.  Exponential: refuses more than ``cap`` Y+Z components.
    """
    H, vmap = normalize(G)
    cc = classify_components(H)
    star = build_gstar(H, cc)
    k = star.num_w
    if k > cap:
        raise TooManyComponents(f"{k} even-degree components exceed cap {cap}")
    ny = len(cc.Y)
    for mask in range(1, 1 << k):
        chosen = [j for j in range(k) if mask >> j & 1]
        if sum(1 for j in chosen if j < ny) % 2 == 0:
            continue
        if all(_gstar_degree_in(star, x, chosen) % 2 == 0 for x in range(star.num_x)):
            ys = tuple(cc.Y[j] for j in chosen if j < ny)
            zs = tuple(cc.Z[j - ny] for j in chosen if j >= ny)
            return SubsetWitness(_lift(ys, vmap), _lift(zs, vmap))
    return True


def check_witness(G: Multigraph, witness: SubsetWitness) -> bool:
    """Recheck a SubsetWitness against G from scratch."""
    H, vmap = normalize(G)
    back = {old: new for new, old in enumerate(vmap)}
    cc = classify_components(H)
    try:
        ys = [frozenset(back[v] for v in s) for s in witness.y_members]
        zs = [frozenset(back[v] for v in s) for s in witness.z_members]
    except KeyError:
        return False
    if not (set(ys) <= set(cc.Y) and set(zs) <= set(cc.Z)):
        return False
    if len(set(ys)) != len(ys) or len(set(zs)) != len(zs) or len(ys) % 2 == 0:
        return False
    members = ys + zs
    for X in cc.X:
        hits = 0
        for S in members:
            cross = sum(1 for u, v in H.edges if (u in X and v in S) or (u in S and v in X))
            hits += cross % 2
        if hits % 2:
            return False
    return True


def partition_conditions_hold(G: Multigraph, part: RBPartition) -> bool:
    """Both sides send an odd number of edges into each Y component and an
    even number into each Z component; R and B must cover X exactly."""
    H, vmap = normalize(G)
    back = {old: new for new, old in enumerate(vmap)}
    cc = classify_components(H)
    Rc = [frozenset(back[v] for v in c) for c in part.R_components]
    Bc = [frozenset(back[v] for v in c) for c in part.B_components]
    if sorted(map(sorted, Rc + Bc)) != sorted(map(sorted, cc.X)):
        return False
    R, B = frozenset().union(*Rc), frozenset().union(*Bc)
    G = H
    for Y in cc.Y:
        if edges_between(G, R, Y) % 2 == 0 or edges_between(G, B, Y) % 2 == 0:
            return False
    for Z in cc.Z:
        if edges_between(G, R, Z) % 2 or edges_between(G, B, Z) % 2:
            return False
    return True
