"""From R_g hypermaps to the graph counts |C_g|, |L_g| and |M_g|."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Mapping, Sequence

from .engine import RgEntry
from .graphs import MultiGraph
from .maps import dual, map_from_hypermap, underlying_multigraph

CIRCLE = MultiGraph(1, ((1, 1),))


def graph_of_entry(e: RgEntry) -> MultiGraph:
    """Underlying graph of the ribbon graph whose 2-colored dual is e.hypermap."""
    m, _ = map_from_hypermap(e.hypermap)
    return underlying_multigraph(dual(m))


def reduce_to_Cg(r_lists: Mapping[int, Sequence[RgEntry]], g: int) -> dict[int, list[MultiGraph]]:
    """Canonical representatives of C_0..C_g, each list sorted by canonical key.

    A graph from R_g belongs to C_g unless it already arises from some R_h
    with h < g.  C_0 is the circle.
    """
    missing = [h for h in range(1, g + 1) if h not in r_lists]
    if missing:
        raise KeyError(f"missing R lists for genus {missing}")
    out = {0: [CIRCLE.canonical]}
    seen = {CIRCLE.key()}
    for h in range(1, g + 1):
        fresh: dict[str, MultiGraph] = {}
        for e in r_lists[h]:
            gr = graph_of_entry(e)
            k = gr.key()
            if k not in seen and k not in fresh:
                fresh[k] = gr.canonical
        out[h] = [fresh[k] for k in sorted(fresh)]
        seen.update(fresh)
    return out


def preimage_counts(entries: Sequence[RgEntry]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for e in entries:
        k = graph_of_entry(e).key()
        counts[k] = counts.get(k, 0) + 1
    return counts


def multichoose(n: int, k: int) -> int:
    """Multisets of size k drawn from n kinds."""
    if k == 0:
        return 1
    return comb(n + k - 1, k)


def genus_compositions(g: int) -> Iterator[tuple[int, ...]]:
    """All (k_0..k_g) >= 0 with sum (i+1) k_i = g + 1."""

    def rec(i, left, acc):
        if i < 0:
            if left == 0:
                yield tuple(reversed(acc))
            return
        for k in range(left // (i + 1), -1, -1):
            yield from rec(i - 1, left - k * (i + 1), acc + [k])

    yield from rec(g, g + 1, [])


def count_Lg(c_sizes: Sequence[int], g: int | None = None) -> int:
    """Number of graphs (connected or not) with least separating genus g."""
    g = len(c_sizes) - 1 if g is None else g
    if len(c_sizes) <= g:
        raise ValueError("need |C_0| .. |C_g|")
    total = 0
    for ks in genus_compositions(g):
        term = 1
        for size, k in zip(c_sizes, ks):
            term *= multichoose(size, k)
        total += term
    return total


@dataclass
class GenusTable:
    r: list[int] = field(default_factory=list)
    c: list[int] = field(default_factory=list)
    l: list[int] = field(default_factory=list)  # noqa: E741
    m: list[int] = field(default_factory=list)

    def rows(self) -> list[tuple[int, int, int, int, int]]:
        return [(g, self.r[g], self.c[g], self.l[g], self.m[g]) for g in range(len(self.r))]

    def to_csv(self) -> str:
        lines = ["genus,R,C,L,M"]
        lines += [",".join(map(str, row)) for row in self.rows()]
        return "\n".join(lines) + "\n"


def build_table(r_sizes: Sequence[int], c_sizes: Sequence[int]) -> GenusTable:
    """Rows 0..G from |R_g| and |C_g|; M accumulates L starting from M_0 = 1."""
    if len(r_sizes) != len(c_sizes):
        raise ValueError("R and C sizes cover different genus ranges")
    t = GenusTable(list(r_sizes), list(c_sizes))
    for g in range(len(c_sizes)):
        lg = count_Lg(c_sizes[: g + 1], g)
        t.l.append(lg)
        t.m.append(1 if g == 0 else t.m[-1] + lg)
    return t
