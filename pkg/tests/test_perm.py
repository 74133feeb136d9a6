import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from minsep.perm import (ClassRanker, Permutation, canonical_of_type, centralizer_order, centralizer_stream,
                         class_size, compose, conjugate, cycle_type, inverse, is_transitive, iterate_class,
                         num_cycles, partitions)

from conftest import P


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 8))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_pairs(draw):
    n = draw(st.integers(1, 8))
    return draw(perms(n)), draw(perms(n))


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def test_construction_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(())
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,2)(2,3)", 3)


def test_cycle_text_round_trip():
    p = P("(3,1,5)(2,4)", 6)
    assert p.to_text() == "(1,5,3)(2,4)"
    assert Permutation.from_cycles(p.to_text(), 6) == p
    assert Permutation.identity(3).to_text() == "()"
    assert P([[2, 3]], 3).images == (1, 3, 2)


def test_compose_examples():
    assert compose(P("(1,2)", 2), P("(1,2)", 2)).is_identity()
    sigma = P("(1,3,5)(4,8,6)(2,7,10,9)", 10)
    alpha = P("(1,2)(3,4)(5,6)(7,8)(9,10)", 10)
    assert inverse(compose(sigma, alpha)) == P("(1,6,7)(2,10,8,3)(4,5)(9)", 10)
    assert inverse(compose(P("(1,2,3,4)", 4), P("(2,3)", 4))) == P("(1,4,2)", 4)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError, match="degree mismatch"):
        compose(Permutation.identity(2), Permutation.identity(3))
    with pytest.raises(ValueError, match="degree mismatch"):
        conjugate(Permutation.identity(2), Permutation.identity(3))


def test_inverse_examples():
    assert inverse(Permutation.identity(4)).is_identity()
    assert inverse(P("(1,2,3)", 3)) == P("(1,3,2)", 3)
    assert inverse(P("(1,3)(2,4)", 4)) == P("(1,3)(2,4)", 4)


def test_cycle_type_examples():
    assert cycle_type(P("(1,2,3)(4,5)", 5)) == (3, 2)
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    phi = P("(1,6,7)(2,10,8,3)(4,5)(9)", 10)
    assert cycle_type(phi) == (4, 3, 2, 1)
    assert num_cycles(phi) == 4


def test_canonical_of_type_examples():
    assert canonical_of_type((3, 2)) == P("(1,2,3)(4,5)", 5)
    assert canonical_of_type((1, 1)).is_identity()
    assert canonical_of_type((4,)) == P("(1,2,3,4)", 4)


def test_conjugate_examples():
    p = P("(1,2)(3,4,5)", 5)
    assert conjugate(p, Permutation.identity(5)) == p
    assert conjugate(P("(1,2)", 3), P("(1,3)", 3)) == P("(2,3)", 3)


def test_class_size_examples():
    assert class_size((2, 1)) == 3
    assert sum(1 for p in all_perms(3) if cycle_type(p) == (2, 1)) == 3
    for n in range(1, 8):
        assert class_size((n,)) == factorial(n - 1)
    assert class_size((1,) * 6) == 1


def test_class_sizes_sum_to_factorial():
    for n in range(1, 9):
        assert sum(class_size(t) for t in partitions(n)) == factorial(n)


def test_iterate_class_examples():
    assert list(iterate_class((2,))) == [P("(1,2)", 2)]
    got = set(iterate_class((2, 1)))
    assert got == {p for p in all_perms(3) if cycle_type(p) == (2, 1)}
    first, second = set(iterate_class((4,), 0, 3)), set(iterate_class((4,), 3, 6))
    assert not first & second and len(first | second) == 6


def test_iterate_class_out_of_range():
    with pytest.raises(IndexError):
        list(iterate_class((2, 1), 0, 4))
    with pytest.raises(IndexError):
        list(iterate_class((3,), -1, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_iterate_class_is_complete(n):
    for t in partitions(n):
        got = list(iterate_class(t))
        assert len(got) == len(set(got)) == class_size(t)
        assert all(cycle_type(p) == t for p in got)


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions(n))), st.data())
def test_ranking_is_chunk_independent(t, data):
    size = class_size(t)
    cuts = sorted(data.draw(st.lists(st.integers(0, size), max_size=4)))
    bounds = [0] + cuts + [size]
    pieces = [p for lo, hi in zip(bounds, bounds[1:]) for p in iterate_class(t, lo, hi)]
    assert pieces == list(iterate_class(t))


def test_ranker_unrank_matches_iteration():
    r = ClassRanker((3, 2, 2, 1))
    assert r.size == class_size((3, 2, 2, 1))
    assert [r.unrank(k) for k in range(r.size)] == list(iterate_class((3, 2, 2, 1)))


def test_centralizer_examples():
    four = P("(1,2,3,4)", 4)
    assert set(centralizer_stream(four)) == set(_powers(four))
    assert len(set(centralizer_stream(Permutation.identity(3)))) == 6
    assert len(set(centralizer_stream(P("(1,2)(3,4)", 4)))) == 8


def _powers(p):
    out, q = [], Permutation.identity(p.n)
    for _ in range(p.n):
        out.append(q)
        q = compose(p, q)
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_centralizer_matches_brute_force(n):
    group = all_perms(n)
    for t in partitions(n):
        p = canonical_of_type(t)
        brute = {r for r in group if compose(r, p) == compose(p, r)}
        streamed = list(centralizer_stream(p))
        assert len(streamed) == centralizer_order(t) == len(brute)
        assert set(streamed) == brute


def test_partitions_examples():
    assert partitions(4, 2) == [(4,), (2, 2)]
    assert partitions(3, 1) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions(10)) == 42


def _count_partitions(n, largest):
    if n == 0:
        return 1
    return sum(_count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


@pytest.mark.parametrize("n", [1, 5, 12, 20])
def test_partitions_are_ordered_and_complete(n):
    ps = partitions(n)
    assert len(ps) == _count_partitions(n, n)
    assert ps == sorted(ps, reverse=True)
    assert all(list(p) == sorted(p, reverse=True) and sum(p) == n for p in ps)
    assert partitions(n, 2) == [p for p in ps if min(p) >= 2]


def test_is_transitive_examples():
    assert not is_transitive([P("(1,2)(3,4)", 4)], 4)
    assert is_transitive([P("(1,2,3,4)", 4)], 4)
    sigma = P("(1,3,5)(4,8,6)(2,7,10,9)", 10)
    alpha = P("(1,2)(3,4)(5,6)(7,8)(9,10)", 10)
    assert is_transitive([sigma, alpha], 10)
    assert not is_transitive([sigma], 10)


@given(perm_pairs())
def test_compose_is_pointwise(pq):
    p, q = pq
    r = compose(p, q)
    assert all(r(x) == p(q(x)) for x in range(1, p.n + 1))


@given(perms())
def test_inverse_cancels(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


@given(perm_pairs())
def test_conjugate_preserves_cycle_type(pr):
    p, r = pr
    c = conjugate(p, r)
    assert cycle_type(c) == cycle_type(p)
    assert c == compose(inverse(r), compose(p, r))


@settings(max_examples=50)
@given(perms())
def test_cycles_cover_points(p):
    cyc = p.cycles()
    assert sorted(x for c in cyc for x in c) == list(range(1, p.n + 1))
    assert all(c[0] == min(c) for c in cyc)
    assert Permutation.from_cycles(cyc, p.n) == p


@pytest.mark.parametrize("n", range(1, 6))
def test_conjugate_preserves_cycle_type_exhaustively(n):
    group = all_perms(n)
    for p in group:
        t = cycle_type(p)
        assert all(cycle_type(conjugate(p, r)) == t for r in group)
