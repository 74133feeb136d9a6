"""Combinatorial maps, hypermaps, duality and the Walsh correspondence.

A map or hypermap is a triple (sigma, alpha, phi) with
``compose(sigma, compose(alpha, phi))`` the identity, i.e. phi is
``inverse(compose(sigma, alpha))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import MultiGraph
from .perm import Permutation, compose, inverse, is_transitive, num_cycles

BLACK, WHITE = 0, 1


class InvalidMap(ValueError):
    pass


def _face_of(sigma: Permutation, alpha: Permutation) -> Permutation:
    return inverse(compose(sigma, alpha))


@dataclass(frozen=True)
class CombinatorialMap:
    sigma: Permutation
    alpha: Permutation
    phi: Permutation

    def __post_init__(self):
        n2 = self.sigma.n
        if self.alpha.n != n2 or self.phi.n != n2:
            raise InvalidMap("degree mismatch")
        if n2 % 2:
            raise InvalidMap("a map acts on an even number of edge-ends")
        if any(self.alpha(self.alpha(x)) != x or self.alpha(x) == x for x in range(1, n2 + 1)):
            raise InvalidMap("alpha must be a fixed-point-free involution")
        if not compose(self.sigma, compose(self.alpha, self.phi)).is_identity():
            raise InvalidMap("sigma . alpha . phi is not the identity")
        if not is_transitive([self.sigma, self.alpha], n2):
            raise InvalidMap("<sigma, alpha> is not transitive")

    @classmethod
    def from_sigma_alpha(cls, sigma: Permutation, alpha: Permutation) -> CombinatorialMap:
        return cls(sigma, alpha, _face_of(sigma, alpha))

    @property
    def edge_count(self) -> int:
        return self.sigma.n // 2

    def counts(self) -> tuple[int, int, int]:
        """(vertices, edges, faces)."""
        return num_cycles(self.sigma), num_cycles(self.alpha), num_cycles(self.phi)

    def to_json(self) -> dict:
        return {"n": self.edge_count, "sigma": self.sigma.to_text(),
                "alpha": self.alpha.to_text(), "phi": self.phi.to_text()}


@dataclass(frozen=True)
class Hypermap:
    sigma: Permutation
    alpha: Permutation
    phi: Permutation

    def __post_init__(self):
        n = self.sigma.n
        if self.alpha.n != n or self.phi.n != n:
            raise InvalidMap("degree mismatch")
        if not compose(self.sigma, compose(self.alpha, self.phi)).is_identity():
            raise InvalidMap("sigma . alpha . phi is not the identity")
        if not is_transitive([self.sigma, self.alpha, self.phi], n):
            raise InvalidMap("<sigma, alpha, phi> is not transitive")

    @classmethod
    def from_sigma_alpha(cls, sigma: Permutation, alpha: Permutation) -> Hypermap:
        return cls(sigma, alpha, _face_of(sigma, alpha))

    @property
    def n(self) -> int:
        return self.sigma.n

    def counts(self) -> tuple[int, int, int]:
        return num_cycles(self.sigma), num_cycles(self.alpha), num_cycles(self.phi)

    def to_json(self) -> dict:
        return {"n": self.n, "sigma": self.sigma.to_text(),
                "alpha": self.alpha.to_text(), "phi": self.phi.to_text()}

    @classmethod
    def from_json(cls, d: dict) -> Hypermap:
        n = d["n"]
        return cls(*(Permutation.from_cycles(d[k], n) for k in ("sigma", "alpha", "phi")))


def map_genus(m: CombinatorialMap) -> int:
    v, e, f = m.counts()
    twice = 2 - v + e - f
    assert twice % 2 == 0 and twice >= 0, (v, e, f)
    return twice // 2


def hypermap_genus(h: Hypermap) -> int:
    s, a, f = h.counts()
    twice = 2 - s - a + h.n - f
    assert twice % 2 == 0 and twice >= 0, (s, a, f, h.n)
    return twice // 2


def dual(m: CombinatorialMap) -> CombinatorialMap:
    """Exchange vertices and faces.

    Returns (phi^-1, alpha, sigma^-1): the vertex cycles of the dual are the
    face cycles of m as point sets and vice versa.  Inverting both keeps the
    product identity intact, and applying dual twice gives m back.
    """
    return CombinatorialMap(inverse(m.phi), m.alpha, inverse(m.sigma))


def vertex_cycles(m: CombinatorialMap) -> list[tuple[int, ...]]:
    """Cycles of sigma ordered by their minimum point; vertex i is entry i."""
    return m.sigma.cycles()


def vertex_bipartition(m: CombinatorialMap) -> Optional[tuple[int, ...]]:
    """Two-color the vertices so every edge joins BLACK to WHITE, or None.

    The vertex holding point 1 is BLACK, which pins the coloring on a
    connected map.
    """
    cycles = vertex_cycles(m)
    owner = {}
    for i, cyc in enumerate(cycles):
        for x in cyc:
            owner[x] = i
    color = [None] * len(cycles)
    color[0] = BLACK
    stack = [0]
    while stack:
        v = stack.pop()
        for x in cycles[v]:
            w = owner[m.alpha(x)]
            if color[w] is None:
                color[w] = 1 - color[v]
                stack.append(w)
            elif color[w] == color[v]:
                return None
    return tuple(color)


def face_two_colorable(m: CombinatorialMap) -> bool:
    return vertex_bipartition(dual(m)) is not None


def map_from_hypermap(h: Hypermap) -> tuple[CombinatorialMap, tuple[int, ...]]:
    """Walsh's bipartite map of h, with its vertex coloring.

    Brin i becomes the edge (2i-1, 2i); 2i-1 is its black end and 2i its
    white end.  Black vertices follow sigma, white vertices follow alpha.
    """
    n = h.n
    images = [0] * (2 * n)
    for i in range(1, n + 1):
        images[2 * i - 2] = 2 * h.sigma(i) - 1
        images[2 * i - 1] = 2 * h.alpha(i)
    sigma = Permutation(images, check=False)
    alpha = Permutation([x + 1 if x % 2 else x - 1 for x in range(1, 2 * n + 1)], check=False)
    m = CombinatorialMap.from_sigma_alpha(sigma, alpha)
    colors = tuple(BLACK if cyc[0] % 2 else WHITE for cyc in vertex_cycles(m))
    return m, colors


def hypermap_from_map(m: CombinatorialMap, coloring: tuple[int, ...]) -> Hypermap:
    """Inverse of map_from_hypermap for a properly 2-colored map.

    Edge i is the alpha-pair with the i-th smallest minimum point.
    """
    cycles = vertex_cycles(m)
    if len(coloring) != len(cycles):
        raise ValueError("coloring does not match the vertices")
    point_color = {}
    for cyc, c in zip(cycles, coloring):
        for x in cyc:
            point_color[x] = c
    pairs = sorted({tuple(sorted((x, m.alpha(x)))) for x in range(1, m.sigma.n + 1)})
    edge_of = {}
    black_end = []
    white_end = []
    for i, (a, b) in enumerate(pairs, 1):
        if point_color[a] == point_color[b]:
            raise ValueError("not bipartite")
        edge_of[a] = edge_of[b] = i
        black, white = (a, b) if point_color[a] == BLACK else (b, a)
        black_end.append(black)
        white_end.append(white)
    sigma = Permutation([edge_of[m.sigma(x)] for x in black_end], check=False)
    alpha = Permutation([edge_of[m.sigma(x)] for x in white_end], check=False)
    return Hypermap.from_sigma_alpha(sigma, alpha)


def underlying_multigraph(m: CombinatorialMap) -> MultiGraph:
    """Vertices are sigma-cycles (numbered by minimum point), one edge per alpha-pair."""
    cycles = vertex_cycles(m)
    owner = {}
    for i, cyc in enumerate(cycles, 1):
        for x in cyc:
            owner[x] = i
    edges = [(owner[x], owner[m.alpha(x)]) for x in range(1, m.sigma.n + 1) if x < m.alpha(x)]
    return MultiGraph(len(cycles), tuple(edges))


def map_isomorphism(m1: CombinatorialMap, m2: CombinatorialMap) -> Optional[Permutation]:
    """A rho with rho^-1 sigma1 rho = sigma2 and rho^-1 alpha1 rho = alpha2, or None.

    Connectedness means rho is fixed by the image of one point, so only the
    2n choices of rho(1) are tried.
    """
    n2 = m1.sigma.n
    if m2.sigma.n != n2 or m1.counts() != m2.counts():
        return None
    for target in range(1, n2 + 1):
        rho = {1: target}
        stack = [1]
        ok = True
        while stack and ok:
            x = stack.pop()
            for p1, p2 in ((m1.sigma, m2.sigma), (m1.alpha, m2.alpha)):
                # rho(p2(x)) must equal p1(rho(x))
                y, z = p2(x), p1(rho[x])
                if y in rho:
                    if rho[y] != z:
                        ok = False
                        break
                else:
                    rho[y] = z
                    stack.append(y)
        if ok and len(rho) == n2 and len(set(rho.values())) == n2:
            return Permutation([rho[x] for x in range(1, n2 + 1)], check=False)
    return None
