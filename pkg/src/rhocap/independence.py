"""Exact k-independence numbers, witness families and clique covers.

A k-independent family is a collection of disjoint vertex subsets, each of
size at least k, with no edge between two different subsets. Subsets may
contain internal edges. ``alpha_k(G, 1)`` is the ordinary independence
number.

The search works on the induced subgraph left after every decision:
choosing a subset ``S`` removes ``S`` and its neighbourhood, and what is left
is again an instance of the same problem. Results are memoised on the
remaining vertex set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, InputError, SearchTimeout
from .graph import Graph, bits, to_mask

DEFAULT_TIMEOUT_S = 60.0
DEFAULT_COVER_CAP = 20


@dataclass(frozen=True)
class VertexFamily:
    """Ordered list of disjoint vertex subsets living in ``G^t``."""

    subsets: tuple[frozenset[int], ...]
    t: int = 1

    @classmethod
    def of(cls, subsets: Iterable[Iterable[int]], t: int = 1) -> "VertexFamily":
        return cls(tuple(frozenset(s) for s in subsets), t)

    def __len__(self) -> int:
        return len(self.subsets)

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.subsets]

    def canonical(self) -> "VertexFamily":
        ordered = sorted(self.subsets, key=lambda s: sorted(s))
        return VertexFamily(tuple(ordered), self.t)


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cliques]


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of a family check; truthy iff the family is independent.

    ``pair`` is ``(i, j, u, v)``: subsets ``i`` and ``j`` clash through
    vertices ``u`` and ``v`` (``u == v`` for an overlap).
    """

    ok: bool
    reason: str = ""
    pair: tuple[int, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _subsets_of(family) -> Sequence[frozenset[int]]:
    if isinstance(family, VertexFamily):
        return family.subsets
    return [frozenset(s) for s in family]


def is_independent_family(g: Graph, family) -> FamilyReport:
    """Check that the subsets are in range, disjoint and pairwise non-adjacent."""
    subsets = _subsets_of(family)
    masks = []
    for i, s in enumerate(subsets):
        for v in s:
            if not 0 <= v < g.n:
                return FamilyReport(False, f"subset {i}: vertex {v} out of range", None)
        masks.append(to_mask(s))
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            shared = masks[i] & masks[j]
            if shared:
                v = next(bits(shared))
                return FamilyReport(False, f"subsets {i} and {j} share vertex {v}", (i, j, v, v))
            for u in bits(masks[i]):
                hit = g.adj[u] & masks[j]
                if hit:
                    v = next(bits(hit))
                    return FamilyReport(False, f"subsets {i} and {j} adjacent via {u}~{v}", (i, j, u, v))
    return FamilyReport(True)


# -- exact k-independence search ---------------------------------------------


class _Search:
    def __init__(self, g: Graph, k: int, timeout_s: float | None):
        self.adj = g.adj
        self.k = k
        self.deadline = None if timeout_s is None else time.perf_counter() + timeout_s
        self.exact: dict[int, tuple[int, tuple[int, ...]]] = {}
        self.upper: dict[int, int] = {}
        self.nodes = 0
        self.incumbent = 0

    def bound(self, a: int) -> int:
        """Upper bound from a greedy clique partition of ``G[a]``.

        Two subsets of a family can never share a clique, so every subset
        draws on its own cliques: cliques of size >= k count once each and
        the smaller ones pool their vertices.
        """
        size = a.bit_count()
        k = self.k
        if size < k:
            return 0
        big = small = 0
        adj = self.adj
        w = a
        while w:
            low = w & -w
            v = low.bit_length() - 1
            clique = low
            cand = adj[v] & w
            while cand:
                lu = cand & -cand
                clique |= lu
                cand &= adj[lu.bit_length() - 1]
            w &= ~clique
            c = clique.bit_count()
            if c >= k:
                big += 1
            else:
                small += c
        return min(size // k, big + small // k)

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0:
            if time.perf_counter() > self.deadline:
                raise SearchTimeout("exact search timed out", self.incumbent)

    def solve(self, a: int, lb: int, depth: int = 0) -> tuple[int, tuple[int, ...] | None]:
        """Return ``(value, family)``.

        If the optimum on ``G[a]`` exceeds ``lb`` it is returned exactly with a
        witness. Otherwise the result is ``(lb, None)`` and only
        ``optimum <= lb`` is known.
        """
        k = self.k
        if a.bit_count() < k:
            return 0, ()
        hit = self.exact.get(a)
        if hit is not None:
            return hit if hit[0] > lb else (lb, None)
        ub = min(self.bound(a), self.upper.get(a, a.bit_count()))
        if ub <= lb:
            return lb, None
        self._tick()
        adj = self.adj

        # closed-twin classes inside G[a]; twins are interchangeable
        classes: dict[int, int] = {}
        for v in bits(a):
            key = (adj[v] | (1 << v)) & a
            classes[key] = classes.get(key, 0) | (1 << v)
        pivot = max(bits(a), key=lambda v: (adj[v] & a).bit_count())
        pivot_class = classes[(adj[pivot] | (1 << pivot)) & a]
        others = [(c, key) for key, c in classes.items() if c != pivot_class]

        best, best_fam = lb, None
        r0 = pivot_class
        for u in bits(pivot_class):
            r0 |= adj[u] & a
        # cheapest classes first: those adding the least to the removed set
        others.sort(key=lambda ck: ((ck[1] | r0) ^ r0).bit_count())

        seen: set[int] = set()
        need0 = k - pivot_class.bit_count()
        stack = [(0, r0, need0, (pivot_class,))]
        while stack:
            start, removed, need, chosen = stack.pop()
            if need > 0:
                # extend with one more class; removal only grows, so prune early
                for idx in range(len(others) - 1, start - 1, -1):
                    cls, key = others[idx]
                    nr = removed | key
                    if 1 + (a & ~nr).bit_count() // k <= best:
                        continue
                    stack.append((idx + 1, nr, need - cls.bit_count(), chosen + (cls,)))
                continue
            if removed in seen:
                continue
            seen.add(removed)
            rest = a & ~removed
            if 1 + min(rest.bit_count() // k, self.upper.get(rest, a.bit_count())) <= best:
                continue
            val, fam = self.solve(rest, best - 1, depth + 1)
            if fam is not None and 1 + val > best:
                best = 1 + val
                best_fam = (self._pick(chosen),) + fam
                self.incumbent = max(self.incumbent, depth + best)
                if best >= ub:
                    break
        if best < ub:
            val, fam = self.solve(a & ~pivot_class, best, depth)
            if fam is not None and val > best:
                best, best_fam = val, fam
        if best_fam is not None:
            self.exact[a] = (best, best_fam)
            return best, best_fam
        self.upper[a] = min(self.upper.get(a, lb), lb)
        return lb, None

    def _pick(self, chosen: tuple[int, ...]) -> int:
        """Concrete k-subset: one vertex per chosen class, then fill in order."""
        k = self.k
        s = 0
        for cls in chosen:
            s |= cls & -cls
        for cls in chosen:
            for v in bits(cls):
                if s.bit_count() >= k:
                    return s
                s |= 1 << v
        return s


def _check_k(g: Graph, k: int):
    if k < 1:
        raise InputError("k must be >= 1")
    if k > g.n:
        raise InputError(f"k={k} exceeds the vertex count {g.n}")


def max_family(g: Graph, k: int, timeout_s: float | None = DEFAULT_TIMEOUT_S, t: int = 1) -> VertexFamily:
    """A maximum k-independent family with every subset trimmed to size k."""
    _check_k(g, k)
    search = _Search(g, k, timeout_s)
    value, fam = search.solve(g.full_mask, 0)
    assert fam is not None and value == len(fam)
    return VertexFamily(tuple(frozenset(bits(m)) for m in fam), t).canonical()


def alpha_k(g: Graph, k: int, timeout_s: float | None = DEFAULT_TIMEOUT_S) -> int:
    return len(max_family(g, k, timeout_s))


def alpha(g: Graph, timeout_s: float | None = DEFAULT_TIMEOUT_S) -> int:
    if g.n == 0:
        return 0
    return alpha_k(g, 1, timeout_s)


# -- clique cover --------------------------------------------------------------


def _greedy_cover(g: Graph, order: Sequence[int]) -> list[int]:
    cliques: list[int] = []
    for v in order:
        for i, c in enumerate(cliques):
            if c & ~g.adj[v] == 0:
                cliques[i] |= 1 << v
                break
        else:
            cliques.append(1 << v)
    return cliques


def clique_cover(g: Graph, cap: int = DEFAULT_COVER_CAP, timeout_s: float | None = DEFAULT_TIMEOUT_S) -> CliqueCover:
    """Minimum vertex clique cover (a minimum colouring of the complement)."""
    if g.n > cap:
        raise CapExceeded(f"clique cover search capped at {cap} vertices (graph has {g.n})")
    if g.n == 0:
        return CliqueCover(())
    # few neighbours = few cliques to join, so place those vertices first
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    best = _greedy_cover(g, order)
    floor = alpha(g, timeout_s)
    deadline = None if timeout_s is None else time.perf_counter() + timeout_s
    cliques: list[int] = []
    adj = g.adj
    nodes = 0

    def rec(i: int):
        nonlocal best, nodes
        if len(best) == floor or len(cliques) >= len(best):
            return
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.perf_counter() > deadline:
            raise SearchTimeout("clique cover search timed out", None)
        if i == len(order):
            best = list(cliques)
            return
        v = order[i]
        for idx in range(len(cliques)):
            if cliques[idx] & ~adj[v] == 0:
                cliques[idx] |= 1 << v
                rec(i + 1)
                cliques[idx] ^= 1 << v
        if len(cliques) + 1 < len(best):
            cliques.append(1 << v)
            rec(i + 1)
            cliques.pop()

    rec(0)
    out = sorted((frozenset(bits(c)) for c in best), key=lambda c: sorted(c))
    return CliqueCover(tuple(out))


def clique_cover_number(g: Graph, cap: int = DEFAULT_COVER_CAP) -> int:
    return len(clique_cover(g, cap))


def saturate_family(g: Graph, family: VertexFamily) -> VertexFamily:
    """Grow subsets with unused vertices that touch no other subset.

    Larger subsets only strengthen the family-based lower bounds, and the
    result stays independent by construction.
    """
    masks = [to_mask(s) for s in family.subsets]
    used = 0
    for m in masks:
        used |= m
    for v in range(g.n):
        if used >> v & 1:
            continue
        touching = [i for i, m in enumerate(masks) if g.adj[v] & m]
        if len(touching) > 1:
            continue
        target = touching[0] if touching else min(range(len(masks)), key=lambda i: masks[i].bit_count())
        masks[target] |= 1 << v
        used |= 1 << v
    return VertexFamily(tuple(frozenset(bits(m)) for m in masks), family.t).canonical()
