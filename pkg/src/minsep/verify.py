"""Property suites run by ``minsep verify``.

Each suite returns None on success or a JSON-serializable counterexample.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Callable, Optional

from .characters import character, dimension, frobenius_count
from .engine import enumerate_Rg, plan_tasks, scan_task
from .maps import (BLACK, WHITE, CombinatorialMap, Hypermap, InvalidMap, dual, hypermap_from_map,
                   hypermap_genus, map_from_hypermap, map_genus, map_isomorphism,
                   underlying_multigraph, vertex_bipartition)
from .oracle import brute_count_products, brute_force_Rg, hypermap_orbit_key
from .perm import (Permutation, canonical_of_type, centralizer_stream, class_size, conjugate,
                   cycle_type, iterate_class, num_cycles, partitions)
from .reduce import graph_of_entry
from .rules import all_type_triples, check_map_in_Rg, minsep_genus

Result = Optional[dict]


def all_hypermaps(n: int):
    """Every transitive hypermap on n brins."""
    perms = [Permutation(p, check=False) for p in itertools.permutations(range(1, n + 1))]
    for s in perms:
        for a in perms:
            try:
                yield Hypermap.from_sigma_alpha(s, a)
            except InvalidMap:
                continue


def all_maps(edges: int):
    """Every connected combinatorial map with the given number of edges."""
    n2 = 2 * edges
    perms = [Permutation(p, check=False) for p in itertools.permutations(range(1, n2 + 1))]
    involutions = [p for p in perms if cycle_type(p) == (2,) * edges]
    for s in perms:
        for a in involutions:
            try:
                yield CombinatorialMap.from_sigma_alpha(s, a)
            except InvalidMap:
                continue


def fpf_involutions(n: int):
    """Fixed-point-free involutions of {1..n} as image tuples."""
    if n == 0:
        yield ()
        return
    for partner in range(2, n + 1):
        rest = [x for x in range(2, n + 1) if x != partner]
        for sub in fpf_involutions(n - 2):
            images = [0] * n
            images[0], images[partner - 1] = partner, 1
            for i, j in enumerate(sub, 1):
                images[rest[i - 1] - 1] = rest[j - 1]
            yield tuple(images)


def map_representatives(edges: int):
    """Connected maps with sigma a canonical class representative.

    Conjugating any map sends its sigma to one of these, so up to relabeling
    this covers every map with the given number of edges.
    """
    n2 = 2 * edges
    for t in partitions(n2):
        sigma = canonical_of_type(t)
        for a in fpf_involutions(n2):
            try:
                yield CombinatorialMap.from_sigma_alpha(sigma, Permutation(a, check=False))
            except InvalidMap:
                continue


def suite_perm(max_n: int) -> Result:
    for n in range(1, max_n + 1):
        if sum(class_size(t) for t in partitions(n)) != factorial(n):
            return {"n": n, "failure": "class sizes do not sum to n!"}
        for t in partitions(n):
            got = {p.images for p in iterate_class(t)}
            if len(got) != class_size(t) or any(cycle_type(Permutation(p)) != t for p in got):
                return {"type": list(t), "failure": "iterate_class incomplete"}
    for n in range(1, min(max_n, 5) + 1):
        perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        for p in perms:
            brute = {r for r in perms if conjugate(p, r) == p}
            if set(centralizer_stream(p)) != brute:
                return {"p": p.to_text(), "n": n, "failure": "centralizer mismatch"}
    return None


def suite_characters(max_n: int = 8) -> Result:
    for n in range(1, max_n + 1):
        lams = partitions(n)
        if sum(dimension(l) ** 2 for l in lams) != factorial(n):
            return {"n": n, "failure": "sum of squared dimensions"}
        for mu in lams:
            if sum(character(l, mu) ** 2 for l in lams) != factorial(n) // class_size(mu):
                return {"n": n, "mu": list(mu), "failure": "column orthogonality"}
    for n in (3, 4):
        for triple in itertools.combinations_with_replacement(partitions(n), 3):
            if frobenius_count(triple) != brute_count_products(triple, n):
                return {"classes": [list(c) for c in triple], "failure": "Frobenius vs enumeration"}
    return None


def suite_frobenius_stream(max_E: int, genera=(1, 2)) -> Result:
    for g in genera:
        for t in all_type_triples(g):
            if t.E > max_E:
                continue
            streamed = sum(scan_task(task, keep=False).type_matches for task in plan_tasks(t))
            expected = frobenius_count([t.S, t.A, t.F]) // class_size(t.S)
            if streamed != expected:
                return {"triple": t.key, "streamed": streamed, "expected": expected}
    return None


def suite_maps(max_brins: int) -> Result:
    for n in range(1, max_brins + 1):
        for h in all_hypermaps(n):
            m, colors = map_from_hypermap(h)
            if hypermap_from_map(m, colors) != h:
                return {"hypermap": h.to_json(), "failure": "Walsh round trip"}
            if hypermap_genus(h) != map_genus(m):
                return {"hypermap": h.to_json(), "failure": "genus"}
            faces_m = sorted(len(c) for c in m.phi.cycles())
            faces_h = sorted(2 * len(c) for c in h.phi.cycles())
            if faces_m != faces_h:
                return {"hypermap": h.to_json(), "failure": "face lengths not doubled"}
            swapped = hypermap_from_map(m, tuple(WHITE if c == BLACK else BLACK for c in colors))
            if (swapped.sigma, swapped.alpha) != (h.alpha, h.sigma):
                return {"hypermap": h.to_json(), "failure": "color swap"}
            k = minsep_genus(h)
            if k is not None and not check_map_in_Rg(dual(m), k):
                return {"hypermap": h.to_json(), "failure": "minsep genus vs map criterion"}
    for edges in range(1, min(3, max_brins) + 1):
        for m in all_maps(edges):
            coloring = vertex_bipartition(m)
            if coloring is None:
                continue
            back, _ = map_from_hypermap(hypermap_from_map(m, coloring))
            if map_isomorphism(back, m) is None:
                return {"map": m.to_json(), "failure": "Walsh map round trip"}
    return None


def suite_dual(max_edges: int) -> Result:
    for edges in range(1, max_edges + 1):
        for m in map_representatives(edges):
            d = dual(m)
            if (dual(d) != m or map_genus(d) != map_genus(m) or d.edge_count != m.edge_count
                    or num_cycles(d.sigma) != num_cycles(m.phi)):
                return {"map": m.to_json(), "failure": "dual"}
    return None


def suite_dedup(max_brins: int, genera=(1, 2), color_swap: bool = True) -> Result:
    for g in genera:
        oracle = sorted(hypermap_orbit_key(h) for h in brute_force_Rg(g, max_brins))
        ours = [e for e in enumerate_Rg(g, color_swap=color_swap, max_growth=None) if e.hypermap.n <= max_brins]
        keys = sorted(hypermap_orbit_key(e.hypermap) for e in ours)
        if keys != oracle:
            seen = set()
            for e in ours:
                k = hypermap_orbit_key(e.hypermap)
                if k in seen:
                    return {"genus": g, "duplicate": e.to_json()}
                seen.add(k)
            return {"genus": g, "oracle": len(oracle), "enumerated": len(keys)}
    return None


def suite_entries(genera=(1, 2)) -> Result:
    for g in genera:
        for e in enumerate_Rg(g):
            if minsep_genus(e.hypermap) != g or hypermap_genus(e.hypermap) != e.ribbon_genus:
                return {"entry": e.to_json(), "failure": "recorded genus"}
            m, _ = map_from_hypermap(e.hypermap)
            if not check_map_in_Rg(dual(m), g):
                return {"entry": e.to_json(), "failure": "not in R_g"}
            gr = graph_of_entry(e)
            if any(d < 4 or d % 2 for d in gr.degrees()):
                return {"entry": e.to_json(), "failure": "vertex degree"}
    return None


def suite_figures() -> Result:
    P = Permutation.from_cycles
    s, a = P("(1,3,5)(4,8,6)(2,7,10,9)", 10), P("(1,2)(3,4)(5,6)(7,8)(9,10)", 10)
    m = CombinatorialMap.from_sigma_alpha(s, a)
    if m.phi != P("(1,6,7)(2,10,8,3)(4,5)(9)", 10):
        return {"figure": "map", "phi": m.phi.to_text()}
    h = Hypermap.from_sigma_alpha(P("(1,2,3,4)", 4), P("(2,3)", 4))
    if h.phi != P("(1,4,2)", 4):
        return {"figure": "hypermap", "phi": h.phi.to_text()}
    fig = CombinatorialMap.from_sigma_alpha(P("(1,2,3,4)(6,7)", 8), P("(1,5)(2,6)(3,7)(4,8)", 8))
    if fig.phi != P("(1,8,4,7,2,5)(3,6)", 8):
        return {"figure": "bipartite map", "phi": fig.phi.to_text()}
    g = underlying_multigraph(m)
    if (g.vertex_count, len(g.edges), sum(u == v for u, v in g.edges)) != (3, 5, 1):
        return {"figure": "map graph", "graph": g.to_json()}
    return None


def suites(max_brins: int, inject_skip_swap: bool = False) -> list[tuple[str, Callable[[], Result]]]:
    return [
        ("perm-core", lambda: suite_perm(min(max_brins + 2, 7))),
        ("figures", suite_figures),
        ("characters", suite_characters),
        ("frobenius-stream", lambda: suite_frobenius_stream(min(max_brins + 2, 7))),
        ("maps-walsh", lambda: suite_maps(max_brins)),
        ("dual", lambda: suite_dual(max_brins)),
        ("entries", suite_entries),
        ("dedup-oracle", lambda: suite_dedup(max_brins, color_swap=not inject_skip_swap)),
    ]
