"""Irreducible characters of S_n and Frobenius' count of class products equal to the identity."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .perm import Partition, class_size, partitions


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: Partition) -> int:
    # Murnaghan-Nakayama on a beta-set: removing a rim hook of length r moves a
    # bead b to the empty position b - r; the sign counts beads jumped over.
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beta:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        sign = -1 if height % 2 else 1
        total += sign * _mn(beta - {b} | {b - r}, rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lambda evaluated on the class of cycle type mu, as an exact integer."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must partition the same integer")
    k = len(lam)
    beta = frozenset(part + k - 1 - i for i, part in enumerate(lam))
    return _mn(beta, mu)


def dimension(lam: Sequence[int]) -> int:
    return character(lam, (1,) * sum(lam))


def frobenius_count(classes: Sequence[Sequence[int]]) -> int:
    """Number of tuples (g_1..g_k), g_i in class i, with g_1 g_2 ... g_k = 1."""
    classes = [tuple(sorted(c, reverse=True)) for c in classes]
    if len(classes) < 2:
        raise ValueError("need at least two classes")
    n = sum(classes[0])
    if any(sum(c) != n for c in classes):
        raise ValueError("classes must live in the same symmetric group")
    k = len(classes)
    total = Fraction(0)
    for lam in partitions(n):
        num = 1
        for c in classes:
            num *= character(lam, c)
        if num:
            total += Fraction(num, dimension(lam) ** (k - 2))
    prefactor = 1
    for c in classes:
        prefactor *= class_size(c)
    result = total * prefactor / factorial(n)
    if result.denominator != 1:
        raise ArithmeticError(f"non-integral Frobenius count {result} for {classes}")
    return int(result)


def capacity_estimate(S: Partition, A: Partition, F: Partition) -> int:
    """Expected number of stored hypermaps for one (S, A, F) triple.

    N(S, A, F) / (|S| * E), rounded up: one fixed sigma, and roughly E
    relabelings per isomorphism class when sigma is an E-cycle.
    """
    E = sum(S)
    q = Fraction(frobenius_count([S, A, F]), class_size(S) * E)
    return -(-q.numerator // q.denominator)
