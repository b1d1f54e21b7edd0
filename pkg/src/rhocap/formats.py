"""Text formats: graph files, built-in graph names and vertex families.

Everything user-facing is 1-indexed; the library is 0-indexed.
"""

from __future__ import annotations

import os
import re

from .errors import InputError
from .graph import (
    Graph,
    build_clique_minus_clique,
    build_clique_union,
    build_complete,
    build_cycle,
    power_coords,
    power_index,
)
from .independence import VertexFamily

_CYCLE = re.compile(r"^C(\d+)$")
_COMPLETE = re.compile(r"^K(\d+)$")
_KMINUS = re.compile(r"^K(\d+)-K(\d+)$")
_TUPLE = re.compile(r"\(([^()]*)\)|(\d+)")


def parse_sizes(spec: str) -> list[int]:
    """``"1,2"`` or ``"12x2,6x8"`` to a flat size list."""
    sizes: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            raise InputError(f"empty entry in size list {spec!r}")
        try:
            if "x" in part:
                count, size = part.split("x", 1)
                sizes += [int(size)] * int(count)
            else:
                sizes.append(int(part))
        except ValueError:
            raise InputError(f"bad size entry {part!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise InputError(f"sizes must be positive: {spec!r}")
    return sizes


def parse_builtin(name: str) -> Graph | None:
    name = name.strip()
    if name.startswith("U:"):
        sizes = parse_sizes(name[2:])
        return build_clique_union(sizes)
    if m := _KMINUS.match(name):
        return build_clique_minus_clique(int(m.group(1)), int(m.group(2)))
    if m := _COMPLETE.match(name):
        return build_complete(int(m.group(1)))
    if m := _CYCLE.match(name):
        return build_cycle(int(m.group(1)))
    return None


def parse_graph_text(text: str, name: str | None = None) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p" and len(tok) == 2 and n is None:
            try:
                n = int(tok[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad vertex count") from None
            if n < 1:
                raise InputError(f"line {lineno}: vertex count must be positive")
        elif tok[0] == "e" and len(tok) == 3:
            if n is None:
                raise InputError(f"line {lineno}: edge before the 'p <n>' line")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise InputError(f"line {lineno}: bad edge") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise InputError(f"line {lineno}: self-loop")
            edges.append((u - 1, v - 1))
        else:
            raise InputError(f"line {lineno}: cannot parse {line!r}")
    if n is None:
        raise InputError("missing 'p <n>' line")
    return Graph.from_edges(n, edges, name)


def format_graph(g: Graph) -> str:
    lines = [f"# {g.name}"] if g.name else []
    lines.append(f"p {g.n}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_graph(source: str) -> Graph:
    """A built-in name, or a path to a graph file."""
    g = parse_builtin(source)
    if g is not None:
        return g
    if not os.path.exists(source):
        raise InputError(f"{source!r} is neither a built-in graph name nor a file")
    with open(source) as fh:
        return parse_graph_text(fh.read(), os.path.basename(source))


def parse_family_text(text: str, base_n: int, t: int = 1) -> VertexFamily:
    """One subset per line; a vertex is ``a`` or, in a power, ``(a,b,...)``."""
    subsets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        members = []
        pos = 0
        for m in _TUPLE.finditer(line):
            gap = line[pos : m.start()].strip(" ,")
            if gap:
                raise InputError(f"line {lineno}: cannot parse {gap!r}")
            pos = m.end()
            if m.group(1) is not None:
                try:
                    coords = [int(c) for c in m.group(1).split(",")]
                except ValueError:
                    raise InputError(f"line {lineno}: bad tuple {m.group(0)!r}") from None
                if len(coords) != t:
                    raise InputError(f"line {lineno}: tuple {m.group(0)} has {len(coords)} coordinates, expected {t}")
                if any(not 1 <= c <= base_n for c in coords):
                    raise InputError(f"line {lineno}: coordinate out of range 1..{base_n}")
                members.append(power_index([c - 1 for c in coords], base_n))
            else:
                v = int(m.group(2))
                if t != 1:
                    raise InputError(f"line {lineno}: plain vertex {v} in a power-graph family")
                if not 1 <= v <= base_n:
                    raise InputError(f"line {lineno}: vertex {v} out of range 1..{base_n}")
                members.append(v - 1)
        if line[pos:].strip(" ,"):
            raise InputError(f"line {lineno}: cannot parse {line[pos:]!r}")
        if len(set(members)) != len(members):
            raise InputError(f"line {lineno}: repeated vertex")
        subsets.append(frozenset(members))
    return VertexFamily(tuple(subsets), t)


def format_vertex(v: int, base_n: int, t: int) -> str:
    if t == 1:
        return str(v + 1)
    return "(" + ",".join(str(c + 1) for c in power_coords(v, base_n, t)) + ")"


def format_family(family: VertexFamily, base_n: int) -> str:
    lines = [" ".join(format_vertex(v, base_n, family.t) for v in sorted(s)) for s in family.subsets]
    return "\n".join(lines) + ("\n" if lines else "")
