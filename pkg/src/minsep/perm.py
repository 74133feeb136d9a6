"""Permutations, integer partitions and conjugacy classes of S_n.

Points are 1-based throughout.  ``compose(p, q)`` applies ``q`` first, so
``compose(p, q)(x) == p(q(x))``.  Partitions are plain tuples of positive
integers in non-increasing order; tuple comparison is the partition order
used everywhere (``(2,) > (1, 1)``).
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of {1..n}, stored in one-line form.

    ``images[i]`` is the image of the point ``i + 1``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        self.images = tuple(images)
        if check:
            n = len(self.images)
            if n < 1:
                raise ValueError("permutation degree must be at least 1")
            if sorted(self.images) != list(range(1, n + 1)):
                raise ValueError(f"{self.images} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]] | str, n: int) -> Permutation:
        """Build from disjoint cycles, e.g. ``"(1,3,5)(2,4)"`` or ``[[1, 3, 5], [2, 4]]``."""
        if isinstance(cycles, str):
            cycles = [
                [int(tok) for tok in body.replace(" ", ",").split(",") if tok]
                for body in _CYCLE_RE.findall(cycles)
            ]
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {n}")
                seen.add(x)
                images[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(images, check=False)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __le__(self, other: Permutation) -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({self.to_text()!r}, {self.n})"

    def cycles(self, fixed: bool = True) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, ordered by minimum."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x - 1]
            if fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def to_text(self) -> str:
        """Normalized cycle text with fixed points omitted; identity is ``"()"``."""
        cyc = self.cycles(fixed=False)
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, 1))


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise ValueError("degree mismatch")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return x -> p(q(x))."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation([pi[y - 1] for y in q.images], check=False)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for x, y in enumerate(p.images, 1):
        inv[y - 1] = x
    return Permutation(inv, check=False)


def conjugate(p: Permutation, r: Permutation) -> Permutation:
    """Return r^-1 . p . r."""
    _check_degrees(p, r)
    return compose(inverse(r), compose(p, r))


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def num_cycles(p: Permutation) -> int:
    return len(p.cycles())


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted(parts, reverse=True))
    if not parts or parts[-1] < 1:
        raise ValueError(f"invalid partition {parts}")
    return parts


def canonical_of_type(t: Partition) -> Permutation:
    """Cycles on consecutive blocks in part order: [3,2] -> (1,2,3)(4,5)."""
    images = []
    start = 1
    for length in t:
        images.extend(range(start + 1, start + length))
        images.append(start)
        start += length
    return Permutation(images, check=False)


def centralizer_order(t: Partition) -> int:
    out = 1
    for length, mult in Counter(t).items():
        out *= length**mult * factorial(mult)
    return out


def class_size(t: Partition) -> int:
    """Number of permutations of degree sum(t) with cycle type t."""
    return factorial(sum(t)) // centralizer_order(t)


def partitions(n: int, min_part: int = 1) -> list[Partition]:
    """All partitions of n with parts >= min_part, descending lexicographic."""

    def gen(rest: int, largest: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, largest), min_part - 1, -1):
            for tail in gen(rest - k, k):
                yield (k,) + tail

    return list(gen(n, n))


# -- conjugacy class ranking -------------------------------------------------
#
# A permutation of type t is encoded by mixed-radix digits.  Cycle lengths are
# processed in part order, one group per distinct length l with multiplicity m:
#   * a combination digit picks the l*m points of the group (lex order of
#     subsets of the points still unused);
#   * for each of the m cycles, a digit picks the other l-1 points of the cycle
#     (the smallest remaining group point always opens it) together with their
#     cyclic arrangement: comb(remaining-1, l-1) * (l-1)! choices.
# The first digit is the most significant.


def _class_radices(t: Partition) -> list[tuple[str, int, int, int]]:
    digits = []
    remaining = sum(t)
    for length, mult in sorted(Counter(t).items(), reverse=True):
        group = length * mult
        digits.append(("group", comb(remaining, group), remaining, group))
        for j in range(mult):
            left = group - j * length
            digits.append(("cycle", comb(left - 1, length - 1) * factorial(length - 1), left, length))
        remaining -= group
    return digits


def _unrank_combination(pool: list[int], k: int, r: int) -> list[int]:
    out = []
    i = 0
    while k:
        c = comb(len(pool) - i - 1, k - 1)
        if r < c:
            out.append(pool[i])
            k -= 1
        else:
            r -= c
        i += 1
    return out


def _unrank_arrangement(items: list[int], r: int) -> list[int]:
    items = list(items)
    out = []
    for i in range(len(items), 0, -1):
        f = factorial(i - 1)
        q, r = divmod(r, f)
        out.append(items.pop(q))
    return out


class ClassRanker:
    """Bijection between [0, class_size(t)) and the permutations of type t."""

    def __init__(self, t: Partition):
        self.type = tuple(t)
        self.n = sum(t)
        self.size = class_size(self.type)
        self._digits = _class_radices(self.type)

    def unrank_images(self, rank: int) -> list[int]:
        """0-based one-line images of the permutation with the given rank."""
        values = []
        for _, radix, _, _ in reversed(self._digits):
            rank, d = divmod(rank, radix)
            values.append(d)
        values.reverse()
        images = [0] * self.n
        unused = list(range(self.n))
        pool: list[int] = []
        for (kind, _, _, size), d in zip(self._digits, values):
            if kind == "group":
                pool = _unrank_combination(unused, size, d)
                taken = set(pool)
                unused = [x for x in unused if x not in taken]
                continue
            head, rest = pool[0], pool[1:]
            sub, arr = divmod(d, factorial(size - 1))
            members = _unrank_combination(rest, size - 1, sub)
            cyc = [head] + _unrank_arrangement(members, arr)
            for k, x in enumerate(cyc):
                images[x] = cyc[(k + 1) % size]
            taken = set(members)
            pool = [x for x in rest if x not in taken]
        return images

    def iter_images(self, start: int = 0, stop: int | None = None) -> Iterator[list[int]]:
        """Images for ranks start..stop-1 in rank order, walking forward from one unranking."""
        stop = self.size if stop is None else stop
        if not 0 <= start <= stop <= self.size:
            raise IndexError(f"range [{start}, {stop}) out of bounds for class of size {self.size}")
        if start == stop:
            return
        digits = self._digits
        first_values = []
        rank = start
        for _, radix, _, _ in reversed(digits):
            rank, d = divmod(rank, radix)
            first_values.append(d)
        first_values.reverse()
        images = [0] * self.n
        depth = len(digits)

        def level(i, unused, pool, first):
            if i == depth:
                yield images[:]
                return
            kind, _, _, size = digits[i]
            d0 = first_values[i] if first else 0
            if kind == "group":
                for j, chosen in enumerate(itertools.islice(itertools.combinations(unused, size), d0, None)):
                    taken = set(chosen)
                    yield from level(i + 1, [x for x in unused if x not in taken], chosen, first and j == 0)
                return
            head, rest = pool[0], pool[1:]
            sub0, arr0 = divmod(d0, factorial(size - 1))
            for j, members in enumerate(itertools.islice(itertools.combinations(rest, size - 1), sub0, None)):
                taken = set(members)
                left = [x for x in rest if x not in taken]
                lead = first and j == 0
                arrangements = itertools.permutations(members)
                if lead:
                    arrangements = itertools.islice(arrangements, arr0, None)
                for k, arr in enumerate(arrangements):
                    prev = head
                    for x in arr:
                        images[prev] = x
                        prev = x
                    images[prev] = head
                    yield from level(i + 1, unused, left, lead and k == 0)

        yield from itertools.islice(level(0, list(range(self.n)), (), True), stop - start)

    def unrank(self, rank: int) -> Permutation:
        if not 0 <= rank < self.size:
            raise IndexError(f"rank {rank} out of range for class {self.type}")
        return Permutation([x + 1 for x in self.unrank_images(rank)], check=False)


def iterate_class(t: Partition, start: int = 0, stop: int | None = None) -> Iterator[Permutation]:
    """Permutations of type t with ranks in [start, stop)."""
    for images in ClassRanker(t).iter_images(start, stop):
        yield Permutation([x + 1 for x in images], check=False)


def centralizer_stream(p: Permutation) -> Iterator[Permutation]:
    """All r with r.p == p.r: permute equal-length cycles and rotate each one."""
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for cyc in p.cycles():
        by_len.setdefault(len(cyc), []).append(cyc)
    choices = []
    for length, cycs in sorted(by_len.items()):
        options = []
        for order in itertools.permutations(range(len(cycs))):
            for shifts in itertools.product(range(length), repeat=len(cycs)):
                options.append([(cycs[i], cycs[order[i]], shifts[i]) for i in range(len(cycs))])
        choices.append(options)
    for combo in itertools.product(*choices):
        images = [0] * p.n
        for group in combo:
            for src, dst, shift in group:
                length = len(src)
                for k, x in enumerate(src):
                    images[x - 1] = dst[(k + shift) % length]
        yield Permutation(images, check=False)


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    """True iff the group generated by gens acts transitively on {1..n}."""
    for g in gens:
        if g.n != n:
            raise ValueError("degree mismatch")
    seen = [False] * (n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        x = stack.pop()
        for g in gens:
            y = g.images[x - 1]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n
