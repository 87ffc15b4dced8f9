"""Linear systems over GF(2), solved either as a bit matrix or on the
bipartite equation graph.

Coefficient vectors are Python ints used as bitsets (bit ``i`` is variable
``i``).  Row provenance is another bitset over the original rows, so an
inconsistent system yields the set of rows that sums to ``0 = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import MissingConstantNode

B_NODE = -1
"""Id of the constant node of an augmented star graph (the right-hand side 1)."""


def _bits(mask: int, width: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(width))


def _mask(bits: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class Gf2System:
    num_vars: int
    rows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for coeffs, rhs in self.rows:
            if coeffs >> self.num_vars:
                raise ValueError("coefficient outside variable range")
            if rhs not in (0, 1):
                raise ValueError("rhs must be 0 or 1")

    @classmethod
    def from_lists(cls, num_vars: int, rows: Sequence[tuple[Sequence[int], int]]):
        """Build from dense 0/1 coefficient lists."""
        packed = []
        for coeffs, rhs in rows:
            if len(coeffs) != num_vars:
                raise ValueError("coefficient vector has wrong length")
            packed.append((_mask(coeffs), int(rhs)))
        return cls(num_vars, tuple(packed))

    def is_solution(self, x: Sequence[int]) -> bool:
        xm = _mask(x)
        return all(bin(c & xm).count("1") % 2 == r for c, r in self.rows)

    def is_certificate(self, sel: Sequence[int]) -> bool:
        coeffs, rhs = 0, 0
        for pick, (c, r) in zip(sel, self.rows):
            if pick:
                coeffs ^= c
                rhs ^= r
        return coeffs == 0 and rhs == 1


@dataclass(frozen=True)
class Gf2Outcome:
    """Exactly one of ``solution`` (per variable) or ``certificate`` (per row) is set."""

    solution: tuple[int, ...] | None = None
    certificate: tuple[int, ...] | None = None

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve(system: Gf2System) -> Gf2Outcome:
    """Gauss-Jordan elimination; free variables are set to 0.

    Pivots are taken by ascending variable index, each from the first unused
    row that contains it.
    """
    k = system.num_vars
    coeffs = [c for c, _ in system.rows]
    rhs = [r for _, r in system.rows]
    prov = [1 << i for i in range(len(coeffs))]
    used = [False] * len(coeffs)
    pivots: list[tuple[int, int]] = []
    for col in range(k):
        bit = 1 << col
        p = next((i for i in range(len(coeffs)) if not used[i] and coeffs[i] & bit), None)
        if p is None:
            continue
        used[p] = True
        pivots.append((col, p))
        cp, rp, vp = coeffs[p], rhs[p], prov[p]
        for i in range(len(coeffs)):
            if i != p and coeffs[i] & bit:
                coeffs[i] ^= cp
                rhs[i] ^= rp
                prov[i] ^= vp
    for i in range(len(coeffs)):
        if coeffs[i] == 0 and rhs[i]:
            return Gf2Outcome(certificate=_bits(prov[i], len(coeffs)))
    x = [0] * k
    for col, p in pivots:
        x[col] = rhs[p]
    return Gf2Outcome(solution=tuple(x))


@dataclass
class StarGraph:
    """Bipartite equation graph: x-nodes are variables, w-nodes are equations.

    ``w_neighbors[j]`` is the set of x-node ids adjacent to w-node ``j``; when
    ``has_b`` is set it may also contain ``B_NODE``, the constant vertex that
    stands for a right-hand side of 1.  ``w_tags[j]`` is ``"Y"`` or ``"Z"``.
    ``provenance[j]`` records which original w-nodes were summed into ``j``.
    """

    num_x: int
    w_tags: tuple[str, ...]
    w_neighbors: list[set[int]]
    has_b: bool = False
    provenance: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.provenance:
            self.provenance = [1 << j for j in range(len(self.w_tags))]

    @property
    def num_w(self) -> int:
        return len(self.w_tags)

    def x_neighbors(self, x: int) -> list[int]:
        return [j for j, nb in enumerate(self.w_neighbors) if x in nb]

    def x_degrees(self) -> list[int]:
        deg = [0] * self.num_x
        for nb in self.w_neighbors:
            for x in nb:
                if x != B_NODE:
                    deg[x] += 1
        return deg

    def w_degree(self, j: int) -> int:
        """Degree counting x-nodes only (``b`` excluded)."""
        return sum(1 for x in self.w_neighbors[j] if x != B_NODE)

    def with_b(self) -> "StarGraph":
        """Copy with ``b`` joined to every Y-tagged w-node."""
        nbs = [set(nb) - {B_NODE} for nb in self.w_neighbors]
        for j, tag in enumerate(self.w_tags):
            if tag == "Y":
                nbs[j].add(B_NODE)
        return StarGraph(self.num_x, self.w_tags, nbs, True, list(self.provenance))

    def copy(self) -> "StarGraph":
        return StarGraph(
            self.num_x, self.w_tags, [set(nb) for nb in self.w_neighbors],
            self.has_b, list(self.provenance),
        )

    def to_system(self) -> Gf2System:
        """One row per w-node; the rhs is adjacency to ``b`` (or the Y tag without ``b``)."""
        rows = []
        for j, nb in enumerate(self.w_neighbors):
            c = 0
            for x in nb:
                if x != B_NODE:
                    c |= 1 << x
            if self.has_b:
                r = int(B_NODE in nb)
            else:
                r = int(self.w_tags[j] == "Y")
            rows.append((c, r))
        return Gf2System(self.num_x, tuple(rows))


def elimination_steps(star: StarGraph) -> Iterator[tuple[int, int, StarGraph]]:
    """Run the graph-form elimination, yielding ``(x, w, graph)`` after each step.

    A step picks the lexicographically smallest edge ``x w`` with ``x`` of
    degree at least two and ``w`` not chosen before, then complements the
    adjacency between ``N(w)`` and ``N(x) - {w}``.  That is the row operation
    "add equation ``w`` to every other equation containing ``x``".  The
    yielded graph is the working copy and keeps changing; copy it to keep it.
    """
    if not star.has_b:
        raise MissingConstantNode("elimination needs the constant node b")
    g = star.copy()
    chosen = [False] * g.num_w
    while True:
        deg = g.x_degrees()
        pick = None
        for x in range(g.num_x):
            if deg[x] < 2:
                continue
            for j in range(g.num_w):
                if not chosen[j] and x in g.w_neighbors[j]:
                    pick = (x, j)
                    break
            if pick:
                break
        if pick is None:
            return
        x, w = pick
        chosen[w] = True
        row, prov = g.w_neighbors[w], g.provenance[w]
        for j in range(g.num_w):
            if j != w and x in g.w_neighbors[j]:
                g.w_neighbors[j] ^= row
                g.provenance[j] ^= prov
        yield x, w, g


def eliminate(star: StarGraph) -> StarGraph:
    """Final graph of the elimination (a new object; ``star`` is untouched)."""
    if not star.has_b:
        raise MissingConstantNode("elimination needs the constant node b")
    final = star
    for _, _, g in elimination_steps(star):
        final = g
    return final if final is not star else star.copy()


def graph_eliminate(star: StarGraph) -> Gf2Outcome:
    """Solve the system encoded by ``star`` (which must carry ``b``) on the graph.

    After elimination a w-node adjacent only to ``b`` is an equation
    ``0 = 1``; its provenance is returned as the certificate.  Otherwise the
    x-nodes are split: x-nodes of degree >= 2 are free and set to 0; for a
    w-node adjacent to ``b`` with several (leaf) x-neighbours the smallest is
    set to 1 and the rest to 0; every other x-node is 1 iff it lies in the
    component of ``b``.
    """
    g = eliminate(star)
    for j, nb in enumerate(g.w_neighbors):
        if nb == {B_NODE}:
            return Gf2Outcome(certificate=_bits(g.provenance[j], g.num_w))

    deg = g.x_degrees()
    x = [0] * g.num_x
    decided = [False] * g.num_x
    leaves_of = []
    for nb in g.w_neighbors:
        leaves = sorted(v for v in nb if v != B_NODE and deg[v] < 2)
        leaves_of.append(leaves)
    for v in range(g.num_x):
        if deg[v] >= 2:
            decided[v] = True
    for j, nb in enumerate(g.w_neighbors):
        leaves = leaves_of[j]
        if B_NODE in nb and len(leaves) > 1:
            x[leaves[0]] = 1
            for v in leaves:
                decided[v] = True
    # With free x-nodes cut off, b's component is b plus its w-neighbours
    # plus their leaf x-neighbours.
    for j, nb in enumerate(g.w_neighbors):
        if B_NODE in nb:
            for v in leaves_of[j]:
                if not decided[v]:
                    x[v] = 1
    return Gf2Outcome(solution=tuple(x))
