"""Ground truth for testing: decomposition checks, exhaustive search and a
portable seeded graph generator.

Nothing here depends on the decomposition algorithms in ``decompose``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .decompose import TwoColoring
from .errors import InfeasibleSpec, NotAPartition, TooManyEdges
from .multigraph import Multigraph

BRUTE_FORCE_CAP = 20
_CHUNK = 1 << 15


class Mode(str, enum.Enum):
    TWO_ODD = "two-odd"
    EVEN_ODD = "even-odd"
    TWO_EVEN = "two-even"

    def __str__(self):
        return self.value

    @property
    def class_names(self) -> tuple[str, str]:
        if self is Mode.TWO_ODD:
            return ("red", "blue")
        return ("even", "odd") if self is Mode.EVEN_ODD else ("even-1", "even-2")

    @property
    def parities(self) -> tuple[int, int]:
        """Required degree parity (at incident vertices) of each class."""
        return {Mode.TWO_ODD: (1, 1), Mode.EVEN_ODD: (0, 1), Mode.TWO_EVEN: (0, 0)}[self]


@dataclass
class Verification:
    ok: bool
    violations: list[tuple[int, str, int]] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_decomposition(G: Multigraph, coloring: TwoColoring, mode: Mode | str) -> Verification:
    """Check every vertex's degree parity in each class it touches.

    Violations are ``(vertex, class name, degree)``.  Raises NotAPartition if
    the two classes overlap, miss an edge, or name a non-edge.
    """
    mode = Mode(mode)
    red, blue = set(coloring.red), set(coloring.blue)
    if red & blue:
        raise NotAPartition(f"edges {sorted(red & blue)} are in both classes")
    everything = set(range(G.m))
    if (red | blue) - everything:
        raise NotAPartition(f"unknown edge ids {sorted((red | blue) - everything)}")
    if everything - red - blue:
        raise NotAPartition(f"edges {sorted(everything - red - blue)} are uncoloured")
    violations = []
    for cls, name, want in zip((red, blue), mode.class_names, mode.parities):
        deg = [0] * G.n
        for e in cls:
            u, v = G.edges[e]
            deg[u] += 1
            deg[v] += 1
        for v, d in enumerate(deg):
            if d and d % 2 != want:
                violations.append((v, name, d))
    violations.sort()
    return Verification(not violations, violations)


def brute_force(G: Multigraph, mode: Mode | str, cap: int = BRUTE_FORCE_CAP) -> TwoColoring | None:
    """Try all ``2**m`` colourings in binary order (edge ``i`` is red iff bit
    ``i`` is 0) and return the first valid one, or None if none exists."""
    mode = Mode(mode)
    m = G.m
    if m > cap:
        raise TooManyEdges(f"{m} edges exceed brute-force cap {cap}")
    masks = np.zeros(G.n, dtype=np.int64)
    for i, (u, v) in enumerate(G.edges):
        masks[u] |= 1 << i
        masks[v] |= 1 << i
    masks = masks[masks != 0]
    full = (1 << m) - 1
    want_red, want_blue = mode.parities
    for start in range(0, 1 << m, _CHUNK):
        blue = np.arange(start, min(start + _CHUNK, 1 << m), dtype=np.int64)
        red = full ^ blue
        ok = np.ones(blue.shape, dtype=bool)
        for mask in masks:
            rd = np.bitwise_count(red & mask)
            bd = np.bitwise_count(blue & mask)
            ok &= (rd == 0) | ((rd & 1) == want_red)
            ok &= (bd == 0) | ((bd & 1) == want_blue)
        hit = np.flatnonzero(ok)
        if hit.size:
            k = int(blue[hit[0]])
            return TwoColoring(
                frozenset(i for i in range(m) if not k >> i & 1),
                frozenset(i for i in range(m) if k >> i & 1),
            )
    return None


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014) with rejection-sampled bounded ints.

    State update and output mixing::

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        return z ^ (z >> 31)          # all arithmetic mod 2**64

    ``below(k)`` draws ``r`` until ``r < 2**64 - (2**64 % k)`` and returns
    ``r % k``.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def shuffle(self, items: list) -> None:
        """Fisher-Yates from the back: swap ``i`` with ``below(i + 1)``."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int = 0
    max_multiplicity: int = 1
    forest: bool = False

    def max_edges(self) -> int:
        if self.forest:
            return max(self.n - 1, 0)
        return self.max_multiplicity * self.n * (self.n - 1) // 2

    def validate(self) -> None:
        if self.n < 0 or self.m < 0:
            raise InfeasibleSpec("n and m must be non-negative")
        if self.max_multiplicity < 1:
            raise InfeasibleSpec("max multiplicity must be at least 1")
        if self.m > self.max_edges():
            kind = "a forest" if self.forest else f"multiplicity {self.max_multiplicity}"
            raise InfeasibleSpec(f"{self.m} edges do not fit on {self.n} vertices as {kind}")


def generate(spec: GenSpec) -> Multigraph:
    """Seeded random multigraph, identical for identical specs.

    Multigraph mode: draw ``u = below(n)``, ``v = below(n)`` and reject the
    pair if ``u == v`` or the pair is already at max multiplicity; the edge is
    stored as drawn.  Forest mode: shuffle ``0..n-1`` into ``p``, shuffle the
    slots ``1..n-1`` and keep the first ``m``; for each kept slot ``i`` (in
    that order) add the edge ``(p[i], p[below(i)])``.  Each vertex attaches to
    an earlier one at most once, so the result is acyclic.
    """
    spec.validate()
    rng = SplitMix64(spec.seed)
    n, m = spec.n, spec.m
    if spec.forest:
        perm = list(range(n))
        rng.shuffle(perm)
        slots = list(range(1, n))
        rng.shuffle(slots)
        edges = [(perm[i], perm[rng.below(i)]) for i in slots[:m]]
        return Multigraph(n, tuple(edges))
    mult: dict[tuple[int, int], int] = {}
    edges = []
    while len(edges) < m:
        u, v = rng.below(n), rng.below(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if mult.get(key, 0) >= spec.max_multiplicity:
            continue
        mult[key] = mult.get(key, 0) + 1
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def generate_planted(n: int, m: int, seed: int = 0) -> Multigraph:
    """Random multigraph that is decomposable into two odd subgraphs by construction.

    The red class is a perfect matching on all vertices and the blue class a
    perfect matching on a random half.  Both are padded with random cycles
    inside their own vertex set, alternating red/blue, since adding a cycle
    keeps every degree parity: triangles, plus one or two 4-cycles to hit
    ``m`` exactly.  Cycle vertices are drawn with ``below`` until distinct.
    Edges are shuffled before returning.
    """
    if n % 4 or n < 8:
        raise InfeasibleSpec("planted generator needs n divisible by 4 and n >= 8")
    base = n // 2 + n // 4
    extra = m - base
    if extra < 0 or extra in (1, 2, 5):
        raise InfeasibleSpec(f"cannot pad {base} matching edges to exactly {m}")
    quads = extra % 3
    cycles = [4] * quads + [3] * ((extra - 4 * quads) // 3)
    rng = SplitMix64(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[2 * i], perm[2 * i + 1]) for i in range(n // 2)]
    half = perm[:]
    rng.shuffle(half)
    half = half[: n // 2]
    edges += [(half[2 * i], half[2 * i + 1]) for i in range(n // 4)]
    for t, length in enumerate(cycles):
        pool = perm if t % 2 == 0 else half
        picked: list[int] = []
        while len(picked) < length:
            v = pool[rng.below(len(pool))]
            if v not in picked:
                picked.append(v)
        edges += [(picked[i], picked[(i + 1) % length]) for i in range(length)]
    rng.shuffle(edges)
    return Multigraph(n, tuple(edges))
