"""Finite simple graphs, strong products and disjoint unions.

Vertices are ``0..n-1``. Adjacency is stored as one Python ``int`` bitmask
per vertex, which keeps products and subset tests cheap at the sizes the
exact solvers can handle anyway.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapExceeded, InputError

DEFAULT_MAX_VERTICES = 10**6


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v`` (never containing ``v``).
    """

    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length must equal the vertex count")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            if row >> self.n:
                raise InputError(f"neighbour index out of range at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> "Graph":
        """Build from 0-indexed edges; duplicates and reversed pairs are fine."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), name)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood bitmask ``N[v]``."""
        return self.adj[v] | (1 << v)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u in vertices for v in bits(self.adj[u]) if v in index]
        return Graph.from_edges(len(vertices), edges)

    def is_clique(self, mask: int) -> bool:
        return all((self.closed(v) & mask) == mask for v in bits(mask))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} e={self.num_edges}>"


# -- constructors ------------------------------------------------------------


def build_complete(m: int) -> Graph:
    if m < 1:
        raise InputError("complete graph needs m >= 1")
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << v) for v in range(m)), f"K{m}")


def build_empty(m: int) -> Graph:
    if m < 1:
        raise InputError("empty graph needs m >= 1")
    return Graph(m, (0,) * m, f"E{m}")


def build_cycle(m: int) -> Graph:
    if m < 3:
        raise InputError("cycle needs m >= 3")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)], f"C{m}")


def build_clique_minus_clique(m: int, d: int) -> Graph:
    """``K_m`` with the edges inside the first ``d`` vertices removed."""
    if not 1 <= d <= m:
        raise InputError("need 1 <= d <= m")
    edges = [(u, v) for u in range(m) for v in range(u + 1, m) if v >= d]
    return Graph.from_edges(m, edges, f"K{m}-K{d}")


def build_clique_union(sizes: Iterable[int]) -> Graph:
    sizes = list(sizes)
    if not sizes:
        raise InputError("clique union needs at least one clique")
    if any(s < 1 for s in sizes):
        raise InputError("clique sizes must be positive")
    g = build_complete(sizes[0])
    for s in sizes[1:]:
        g = disjoint_union(g, build_complete(s))
    return Graph(g.n, g.adj, "U:" + ",".join(map(str, sizes)))


# -- composition -------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def strong_product(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Strong product with vertex ``(i, j)`` encoded as ``i * h.n + j``."""
    n = g.n * h.n
    if n > max_vertices:
        raise CapExceeded(f"strong product would have {n} vertices (cap {max_vertices})")
    nh = h.n
    # Blocks of width nh never overlap, so multiplying a block selector by a
    # closed row of h ORs shifted copies without carries.
    selectors = [sum(1 << (i2 * nh) for i2 in bits(g.closed(i))) for i in range(g.n)]
    h_closed = [h.closed(j) for j in range(nh)]
    rows = []
    for i in range(g.n):
        for j in range(nh):
            idx = i * nh + j
            rows.append((selectors[i] * h_closed[j]) & ~(1 << idx))
    return Graph(n, tuple(rows))


def strong_power(g: Graph, n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """``g`` strong-multiplied with itself ``n`` times (``G^n = G^{n-1} x G``)."""
    if n < 1:
        raise InputError("power must be >= 1")
    if g.n**n > max_vertices:
        raise CapExceeded(f"G^{n} would have {g.n**n} vertices (cap {max_vertices})")
    out = g
    for _ in range(n - 1):
        out = strong_product(out, g, max_vertices)
    name = f"{g.name}^{n}" if g.name and n > 1 else g.name
    return Graph(out.n, out.adj, name)


def power_index(coords: Sequence[int], base: int) -> int:
    """Mixed-radix index of a 0-indexed coordinate tuple in ``G^len(coords)``."""
    idx = 0
    for c in coords:
        if not 0 <= c < base:
            raise InputError(f"coordinate {c} out of range for a {base}-vertex base graph")
        idx = idx * base + c
    return idx


def power_coords(index: int, base: int, t: int) -> tuple[int, ...]:
    out = []
    for _ in range(t):
        index, c = divmod(index, base)
        out.append(c)
    return tuple(reversed(out))


# -- queries -----------------------------------------------------------------


@dataclass(frozen=True)
class ComponentPartition:
    components: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


def connected_components(g: Graph) -> ComponentPartition:
    """Components ordered by size (descending), ties by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (-c.bit_count(), (c & -c).bit_length()))
    return ComponentPartition(tuple(frozenset(bits(c)) for c in comps))


def regular_degree(g: Graph) -> int | None:
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def subsets_adjacent(g: Graph, s1: Iterable[int], s2: Iterable[int]) -> bool:
    m1, m2 = to_mask(s1), to_mask(s2)
    if m1 & m2:
        raise InputError("subsets overlap")
    return any(g.adj[v] & m2 for v in bits(m1))


def clique_union_sizes(g: Graph) -> list[int] | None:
    """Component sizes (ascending) if every component is a clique, else None."""
    sizes = []
    for comp in connected_components(g).components:
        if not g.is_clique(to_mask(comp)):
            return None
        sizes.append(len(comp))
    return sorted(sizes)
