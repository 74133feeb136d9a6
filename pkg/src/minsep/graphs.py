"""Finite multigraphs with loops, and their canonical labeling."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class MultiGraph:
    """Vertices 1..vertex_count; edges as sorted (u, v) pairs with u <= v.

    Loops are (v, v); parallel edges repeat.  The edge tuple is kept sorted so
    equal graphs under the same labeling compare equal.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        for u, v in norm:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.vertex_count}")
        object.__setattr__(self, "edges", norm)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> MultiGraph:
        return cls(vertex_count, tuple(tuple(e) for e in edges))

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def loop_counts(self) -> list[int]:
        loops = [0] * self.vertex_count
        for u, v in self.edges:
            if u == v:
                loops[u - 1] += 1
        return loops

    def relabel(self, labels: dict[int, int] | list[int]) -> MultiGraph:
        """Vertex v becomes labels[v] (a dict) or labels[v - 1] (a list)."""
        if isinstance(labels, dict):
            f = labels.__getitem__
        else:
            f = lambda v: labels[v - 1]  # noqa: E731
        return MultiGraph(self.vertex_count, tuple((f(u), f(v)) for u, v in self.edges))

    @cached_property
    def canonical(self) -> MultiGraph:
        return canonical_form(self)

    def key(self) -> str:
        """Canonical text; equal keys iff isomorphic graphs."""
        c = self.canonical
        return json.dumps({"vertices": c.vertex_count, "edges": [list(e) for e in c.edges]},
                          separators=(",", ":"))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, d: dict) -> MultiGraph:
        return cls.from_edges(d["vertices"], d["edges"])


def _multiplicity_matrix(g: MultiGraph) -> list[list[int]]:
    m = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for u, v in g.edges:
        m[u - 1][v - 1] += 1
        if u != v:
            m[v - 1][u - 1] += 1
    return m


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    """Equitable refinement; colors are renumbered 0..k-1 in signature order."""
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted((colors[u], adj[v][u]) for u in range(n) if u != v and adj[v][u])
            sigs.append((colors[v], adj[v][v], tuple(nbr)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _search(adj, colors, best):
    colors = _refine(adj, colors)
    n = len(colors)
    if len(set(colors)) == n:
        edges = []
        for u in range(n):
            for v in range(u, n):
                a, b = sorted((colors[u], colors[v]))
                edges.extend([(a + 1, b + 1)] * adj[u][v])
        cert = tuple(sorted(edges))
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, k in sizes.items() if k > 1)
    for v in range(n):
        if colors[v] != target:
            continue
        # individualize v ahead of its cell-mates
        branch = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
        _search(adj, branch, best)


def canonical_form(g: MultiGraph) -> MultiGraph:
    """A relabeled copy that depends only on the isomorphism class of g.

    Color refinement on (degree, loop count, neighbor multiset) followed by
    individualization of the first non-singleton cell; the certificate is the
    lexicographically least sorted edge list over all search leaves.
    """
    if g.vertex_count == 0:
        return g
    adj = _multiplicity_matrix(g)
    best = [None]
    _search(adj, [0] * g.vertex_count, best)
    return MultiGraph(g.vertex_count, best[0])


def graph_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return a.canonical == b.canonical
