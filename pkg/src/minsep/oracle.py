"""Exhaustive reference computations, kept independent of the search engine."""

from __future__ import annotations

import itertools
from math import factorial

from .maps import Hypermap
from .perm import Permutation, cycle_type

MAX_BRUTE_E = 7


def _conj(p, r, rinv):
    # r^-1 p r on 0-based tuples
    return tuple(rinv[p[r[x]]] for x in range(len(p)))


def _inv(p):
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def _ncycles(p):
    seen = [False] * len(p)
    c = 0
    for s in range(len(p)):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = p[x]
    return c


def _orbit_transitive(a, b):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (a[x], b[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(a)


def orbit_key(sigma: tuple[int, ...], alpha: tuple[int, ...], swap: bool = True) -> tuple:
    """Least (sigma, alpha) encoding over all relabelings, optionally also of (alpha, sigma)."""
    n = len(sigma)
    pairs = [(sigma, alpha), (alpha, sigma)] if swap else [(sigma, alpha)]
    best = None
    for r in itertools.permutations(range(n)):
        rinv = _inv(r)
        for s, a in pairs:
            enc = (_conj(s, r, rinv), _conj(a, r, rinv))
            if best is None or enc < best:
                best = enc
    return best


def hypermap_orbit_key(h: Hypermap, swap: bool = True) -> tuple:
    s = tuple(x - 1 for x in h.sigma.images)
    a = tuple(x - 1 for x in h.alpha.images)
    return orbit_key(s, a, swap)


def brute_force_Rg(g: int, max_E: int) -> list[Hypermap]:
    """Every hypermap class (with color swap) dual to R_g with at most max_E brins.

    Scans all of S_E x S_E, keeps pairs passing the minimal separating test,
    and splits them into classes by trying every relabeling.
    """
    if g < 1:
        raise ValueError("genus 0 handled as special case")
    if max_E > MAX_BRUTE_E:
        raise ValueError(f"max_E={max_E} means scanning {factorial(max_E) ** 2} pairs; limit is {MAX_BRUTE_E}")
    reps = []
    for E in range(g + 1, min(max_E, 4 * g) + 1):
        perms = list(itertools.permutations(range(E)))
        inverses = {p: _inv(p) for p in perms}
        seen: set[tuple] = set()
        for s in perms:
            cs = _ncycles(s)
            for a in perms:
                if (s, a) in seen:
                    continue
                phi = inverses[tuple(s[a[x]] for x in range(E))]
                if any(phi[x] == x for x in range(E)):
                    continue
                if E - _ncycles(phi) + cs + _ncycles(a) != 2 * g + 2:
                    continue
                if not _orbit_transitive(s, a):
                    continue
                orbit = set()
                for r in perms:
                    rinv = inverses[r]
                    cs_, ca_ = _conj(s, r, rinv), _conj(a, r, rinv)
                    orbit.add((cs_, ca_))
                    orbit.add((ca_, cs_))
                seen |= orbit
                rs, ra = min(orbit)
                reps.append(Hypermap.from_sigma_alpha(Permutation([x + 1 for x in rs], check=False),
                                                      Permutation([x + 1 for x in ra], check=False)))
    reps.sort(key=lambda h: (h.n, h.sigma.images, h.alpha.images))
    return reps


def brute_count_products(classes, n: int) -> int:
    """Tuples from the given cycle-type classes of S_n whose product is the identity."""
    perms = [Permutation([x + 1 for x in p], check=False) for p in itertools.permutations(range(n))]
    by_type: dict[tuple, list[tuple]] = {}
    for p in perms:
        by_type.setdefault(cycle_type(p), []).append(tuple(x - 1 for x in p.images))
    pools = [by_type.get(tuple(c), []) for c in classes]
    ident = tuple(range(n))
    last = set(pools[-1])
    count = 0
    for combo in itertools.product(*pools[:-1]):
        prod = ident
        for p in combo:
            prod = tuple(prod[p[x]] for x in range(n))
        # the last factor must be the inverse of the running product
        if _inv(prod) in last:
            count += 1
    return count
