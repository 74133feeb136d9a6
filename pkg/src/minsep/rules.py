"""Which hypermaps are duals of minimal separating ribbon graphs, and where to look for them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .maps import CombinatorialMap, Hypermap, dual, vertex_bipartition
from .perm import Partition, partitions


@dataclass(frozen=True)
class TypeTriple:
    """Cycle types (S, A, F) of (sigma, alpha, phi) on E brins."""

    E: int
    S: Partition
    A: Partition
    F: Partition

    def __post_init__(self):
        if not (sum(self.S) == sum(self.A) == sum(self.F) == self.E):
            raise ValueError(f"cycle types do not all partition {self.E}")
        if 1 in self.F:
            raise ValueError("phi may not have fixed points")

    @property
    def key(self) -> str:
        def fmt(p):
            return "-".join(map(str, p))

        return f"E{self.E}_S{fmt(self.S)}_A{fmt(self.A)}_F{fmt(self.F)}"

    @classmethod
    def from_key(cls, key: str) -> TypeTriple:
        e, s, a, f = key.split("_")
        parse = lambda t: tuple(int(x) for x in t[1:].split("-"))  # noqa: E731
        return cls(int(e[1:]), parse(s), parse(a), parse(f))

    def sort_key(self):
        # E ascending, then each type in descending partition order
        neg = lambda p: tuple(-x for x in p) + (0,)  # noqa: E731
        return (self.E, neg(self.S), neg(self.A), neg(self.F))


def edge_bounds(g: int) -> tuple[int, int]:
    """Closed range of edge counts of ribbon graphs in R_g."""
    if g < 1:
        raise ValueError("genus 0 handled as special case")
    return g + 1, 4 * g


def minsep_genus(h: Hypermap) -> Optional[int]:
    """Least genus in which the ribbon graph dual to h is minimal separating.

    None when phi has a fixed point (a degree-2 vertex on the ribbon graph).
    """
    if any(h.phi(x) == x for x in range(1, h.n + 1)):
        return None
    s, a, f = h.counts()
    twice = h.n - f + s + a
    assert twice % 2 == 0
    return twice // 2 - 1


def check_map_in_Rg(m: CombinatorialMap, g: int) -> bool:
    if vertex_bipartition(dual(m)) is None:
        return False
    if any(len(c) == 2 for c in m.sigma.cycles()):
        return False
    v, e, f = m.counts()
    return -v + e + f == 2 * g + 2


def admissible_type_triples(g: int, E: int) -> list[TypeTriple]:
    """All (S, A, F) on E brins that can realize minsep genus g, with S <= A."""
    lo, hi = edge_bounds(g)
    if not lo <= E <= hi:
        raise ValueError(f"E={E} outside edge bounds [{lo}, {hi}] for genus {g}")
    by_parts: dict[int, list[Partition]] = {}
    for p in partitions(E):
        by_parts.setdefault(len(p), []).append(p)
    out = []
    for F in partitions(E, 2):
        parts = 2 * g + 2 - E + len(F)  # c(S) + c(A)
        if parts + len(F) > E + 2:
            continue
        for cs in range(1, parts):
            for S in by_parts.get(cs, ()):
                for A in by_parts.get(parts - cs, ()):
                    if S <= A:
                        out.append(TypeTriple(E, S, A, F))
    out.sort(key=TypeTriple.sort_key)
    return out


def all_type_triples(g: int) -> list[TypeTriple]:
    lo, hi = edge_bounds(g)
    return [t for E in range(lo, hi + 1) for t in admissible_type_triples(g, E)]
