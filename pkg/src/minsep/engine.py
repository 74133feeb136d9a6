"""Search for one hypermap per isomorphism class (up to color swap) dual to R_g.

For every admissible cycle-type triple (S, A, F) sigma is fixed to
``canonical_of_type(S)`` and the smaller of the classes A, F is streamed by
rank.  A candidate survives when the derived permutation has the remaining
cycle type, <sigma, alpha> is transitive, and alpha is the lexicographically
least conjugate of itself under the centralizer of sigma (and, when S == A,
no smaller than the best encoding of the color-swapped hypermap).

Inner loops work on 0-based image lists; ``Permutation`` objects are only
built for emitted entries.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .characters import capacity_estimate
from .maps import Hypermap, hypermap_genus
from .perm import ClassRanker, Partition, Permutation, canonical_of_type, class_size, cycle_type
from .rules import TypeTriple, admissible_type_triples, all_type_triples, edge_bounds, minsep_genus

log = logging.getLogger(__name__)

DEFAULT_CHUNK = 10**6


class CapacityError(RuntimeError):
    def __init__(self, triple_key: str, capacity: int, needed: int):
        super().__init__(f"triple {triple_key}: {needed} entries exceed capacity {capacity}")
        self.triple_key = triple_key


@dataclass(frozen=True)
class RgEntry:
    hypermap: Hypermap
    genus: int
    ribbon_genus: int
    triple_key: str

    @property
    def text(self) -> str:
        return json.dumps(self.hypermap.to_json(), separators=(",", ":"))

    def to_json(self) -> dict:
        d = {"triple": self.triple_key, "genus": self.genus, "ribbon_genus": self.ribbon_genus}
        d.update(self.hypermap.to_json())
        return d

    @classmethod
    def from_json(cls, d: dict) -> RgEntry:
        return cls(Hypermap.from_json(d), d["genus"], d["ribbon_genus"], d["triple"])


@dataclass(frozen=True)
class SearchTask:
    triple: TypeTriple
    iterate_over: str  # "A" or "F"
    start: int
    stop: int
    color_swap: bool = True

    @property
    def sigma(self) -> Permutation:
        return canonical_of_type(self.triple.S)


@dataclass
class TaskResult:
    task: SearchTask
    entries: list[RgEntry] = field(default_factory=list)
    streamed: int = 0
    type_matches: int = 0
    transitive: int = 0


# -- 0-based helpers -----------------------------------------------------------


def _cycle_type(p: Sequence[int]) -> Partition:
    n = len(p)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        k = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        lengths.append(k)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _invert(p: Sequence[int]) -> list[int]:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return inv


def _transitive(a: Sequence[int], b: Sequence[int]) -> bool:
    n = len(a)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in (a[x], b[x]):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


class BlockStructure:
    """Cycle layout of canonical_of_type(t): consecutive blocks in part order."""

    def __init__(self, t: Partition):
        self.type = tuple(t)
        self.n = sum(t)
        self.starts = []
        self.lengths = list(t)
        self.block_of = []
        self.pos = []
        start = 0
        for b, length in enumerate(t):
            self.starts.append(start)
            self.block_of.extend([b] * length)
            self.pos.extend(range(length))
            start += length
        self.by_length: dict[int, list[int]] = {}
        for b, length in enumerate(t):
            self.by_length.setdefault(length, []).append(b)
        self.sigma = [0] * self.n
        for b, length in enumerate(t):
            s = self.starts[b]
            for k in range(length):
                self.sigma[s + k] = s + (k + 1) % length

    def min_conjugate(self, p: Sequence[int], bound: Optional[Sequence[int]] = None) -> list[int]:
        """Least rho^-1 p rho over rho commuting with sigma, or ``bound`` if nothing beats it.

        Positions are filled left to right.  When the image of x lands on an
        unmapped block, giving it the smallest free source block of that
        length is the only choice that keeps the value minimal, so it is
        forced.  A branch is needed only when x itself opens an unmapped
        block: every free target block of the same length and every rotation
        is tried, pruned against the best sequence found so far.
        """
        n = self.n
        starts, lengths, block_of, pos, by_length = self.starts, self.lengths, self.block_of, self.pos, self.by_length
        rho = [-1] * n
        rinv = [-1] * n
        used = [False] * len(starts)
        out = [0] * n
        best = list(bound) if bound is not None else None

        def assign(src, tgt, shift):
            s, t, L = starts[src], starts[tgt], lengths[src]
            for k in range(L):
                y = t + (k + shift) % L
                rho[s + k] = y
                rinv[y] = s + k
            used[src] = True

        def release(src):
            s = starts[src]
            for k in range(lengths[src]):
                rinv[rho[s + k]] = -1
                rho[s + k] = -1
            used[src] = False

        def extend(x, smaller):
            # smaller: out[:x] is already below best[:x] (or there is no best)
            nonlocal best
            forced = []
            while x < n:
                rx = rho[x]
                if rx < 0:
                    b = block_of[x]
                    L = lengths[b]
                    prefix = out[:x]
                    for tgt in by_length[L]:
                        if rinv[starts[tgt]] >= 0:
                            continue
                        for shift in range(L):
                            if best is not None:
                                # a sibling branch may have lowered best
                                head = best[:x]
                                if prefix > head:
                                    break
                                smaller = prefix < head
                            assign(b, tgt, shift)
                            extend(x, smaller)
                            release(b)
                    break
                y = p[rx]
                v = rinv[y]
                if v < 0:
                    for src in by_length[lengths[block_of[y]]]:
                        if not used[src]:
                            break
                    assign(src, block_of[y], pos[y])
                    forced.append(src)
                    v = starts[src]
                if not smaller:
                    if v > best[x]:
                        break
                    smaller = v < best[x]
                out[x] = v
                x += 1
            else:
                if best is None or out < best:
                    best = out[:]
            for src in forced:
                release(src)

        extend(0, best is None)
        return best


@lru_cache(maxsize=None)
def block_structure(t: Partition) -> BlockStructure:
    return BlockStructure(t)


def _swap_encoding(bs: BlockStructure, sigma: Sequence[int], alpha: Sequence[int]) -> list[int]:
    """Conjugate (alpha, sigma) so that alpha becomes the canonical sigma; return the image of sigma."""
    n = bs.n
    cycles = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = alpha[x]
        cycles.append(cyc)
    cycles.sort(key=len, reverse=True)  # stable: ties keep order of minimum
    rho0 = [0] * n
    for b, cyc in enumerate(cycles):
        s = bs.starts[b]
        for k, x in enumerate(cyc):
            rho0[s + k] = x
    inv0 = _invert(rho0)
    return [inv0[sigma[rho0[x]]] for x in range(n)]


def is_canonical(sigma: Permutation, alpha: Permutation, swap_allowed: bool) -> bool:
    """True iff alpha is the stored representative of its class for this sigma.

    ``sigma`` must be ``canonical_of_type`` of its own cycle type.
    """
    t = cycle_type(sigma)
    bs = block_structure(t)
    s0 = [x - 1 for x in sigma.images]
    if s0 != bs.sigma:
        raise ValueError("sigma is not the canonical representative of its type")
    a0 = [x - 1 for x in alpha.images]
    return _accept(bs, a0, swap_allowed and cycle_type(alpha) == t)


def _accept(bs: BlockStructure, a0: list[int], swap: bool) -> bool:
    if bs.min_conjugate(a0, bound=a0) != a0:
        return False
    if swap:
        s1 = _swap_encoding(bs, bs.sigma, a0)
        if bs.min_conjugate(s1, bound=a0) != a0:
            return False
    return True


def iteration_class(t: TypeTriple) -> str:
    return "A" if class_size(t.A) <= class_size(t.F) else "F"


def plan_tasks(triple: TypeTriple, chunk_size: int = DEFAULT_CHUNK, color_swap: bool = True) -> list[SearchTask]:
    which = iteration_class(triple)
    size = class_size(triple.A if which == "A" else triple.F)
    return [SearchTask(triple, which, lo, min(lo + chunk_size, size), color_swap)
            for lo in range(0, size, chunk_size)]


def scan_task(task: SearchTask, keep: bool = True) -> TaskResult:
    """Stream the task's rank range; count and (optionally) keep accepted hypermaps."""
    t = task.triple
    bs = block_structure(t.S)
    sigma = bs.sigma
    n = t.E
    g = (len(t.S) + len(t.A) + n - len(t.F)) // 2 - 1
    swap = task.color_swap and t.S == t.A
    res = TaskResult(task)
    if task.iterate_over == "A":
        ranker = ClassRanker(t.A)
        want = t.F
    else:
        ranker = ClassRanker(t.F)
        want = t.A
    for c in ranker.iter_images(task.start, task.stop):
        res.streamed += 1
        if task.iterate_over == "A":
            alpha = c
            # phi = (sigma alpha)^-1 has the type of sigma alpha
            if _cycle_type([sigma[alpha[x]] for x in range(n)]) != want:
                continue
        else:
            # alpha = (phi sigma)^-1
            fs = [c[sigma[x]] for x in range(n)]
            if _cycle_type(fs) != want:
                continue
            alpha = _invert(fs)
        res.type_matches += 1
        if not _transitive(sigma, alpha):
            continue
        res.transitive += 1
        if not _accept(bs, alpha, swap):
            continue
        if keep:
            h = Hypermap.from_sigma_alpha(Permutation([x + 1 for x in sigma], check=False),
                                          Permutation([x + 1 for x in alpha], check=False))
            res.entries.append(RgEntry(h, g, hypermap_genus(h), t.key))
    return res


def run_task(task: SearchTask) -> list[RgEntry]:
    return scan_task(task).entries


def _run_for_pool(task: SearchTask) -> TaskResult:
    return scan_task(task)


class _TripleStore:
    """Preallocated result buffer for one triple; may double once."""

    def __init__(self, key: str, capacity: int, max_growth: int):
        self.key = key
        self.capacity = max(1, capacity)
        self.max_growth = max_growth
        self.growths = 0
        self.items: list[RgEntry] = []

    def extend(self, entries: Iterable[RgEntry]) -> None:
        for e in entries:
            if len(self.items) >= self.capacity:
                if self.growths >= self.max_growth:
                    raise CapacityError(self.key, self.capacity, len(self.items) + 1)
                self.capacity *= 2
                self.growths += 1
                log.debug("triple %s grew to capacity %d", self.key, self.capacity)
            self.items.append(e)


def _triples_for(g: int, edges: Optional[int]) -> list[TypeTriple]:
    if edges is None:
        return all_type_triples(g)
    return admissible_type_triples(g, edges)


def enumerate_by_triple(g: int, workers: int = 1, chunk_size: int = DEFAULT_CHUNK,
                        edges: Optional[int] = None, color_swap: bool = True,
                        max_growth: Optional[int] = 1) -> list[tuple[TypeTriple, list[RgEntry]]]:
    """Per-triple sorted results, in triple order.

    ``max_growth=None`` disables the capacity guard.
    """
    if g < 1:
        raise ValueError("genus 0 handled as special case")
    edge_bounds(g)
    triples = _triples_for(g, edges)
    tasks = [task for t in triples for task in plan_tasks(t, chunk_size, color_swap)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_for_pool, tasks, chunksize=max(1, len(tasks) // (8 * workers))))
    else:
        results = [scan_task(task) for task in tasks]
    by_key: dict[str, list[RgEntry]] = {t.key: [] for t in triples}
    for r in results:
        by_key[r.task.triple.key].extend(r.entries)
    out = []
    for t in triples:
        entries = sorted(by_key[t.key], key=lambda e: e.text)
        if max_growth is not None:
            store = _TripleStore(t.key, capacity_estimate(t.S, t.A, t.F), max_growth)
            store.extend(entries)
        out.append((t, entries))
    return out


def enumerate_Rg(g: int, workers: int = 1, chunk_size: int = DEFAULT_CHUNK,
                 edges: Optional[int] = None, color_swap: bool = True,
                 max_growth: Optional[int] = 1) -> list[RgEntry]:
    """One representative hypermap per element of R_g, deterministically ordered."""
    return [e for _, entries in enumerate_by_triple(g, workers, chunk_size, edges, color_swap, max_growth)
            for e in entries]


def check_entry(e: RgEntry) -> bool:
    return minsep_genus(e.hypermap) == e.genus and hypermap_genus(e.hypermap) == e.ribbon_genus


def brute_force_Rg(g: int, max_E: int) -> list[Hypermap]:
    """Exhaustive reference enumeration; see ``minsep.oracle``."""
    from .oracle import brute_force_Rg as _brute

    return _brute(g, max_E)
