import pytest

from minsep.maps import CombinatorialMap, Hypermap, dual, hypermap_genus, map_from_hypermap
from minsep.perm import Permutation, num_cycles
from minsep.rules import (TypeTriple, admissible_type_triples, all_type_triples, check_map_in_Rg, edge_bounds,
                          minsep_genus)
from minsep.verify import all_hypermaps

from conftest import P


def test_edge_bounds():
    assert edge_bounds(1) == (2, 4)
    assert edge_bounds(2) == (3, 8)
    assert edge_bounds(5) == (6, 20)
    with pytest.raises(ValueError, match="genus 0"):
        edge_bounds(0)


def test_minsep_genus_examples():
    assert minsep_genus(Hypermap.from_sigma_alpha(P("(1,2)", 2), Permutation.identity(2))) == 1
    tri = P("(1,2,3)", 3)
    assert minsep_genus(Hypermap.from_sigma_alpha(tri, tri)) == 1
    one = Permutation.identity(1)
    assert minsep_genus(Hypermap(one, one, one)) is None


def test_check_map_in_Rg_examples():
    eight = CombinatorialMap.from_sigma_alpha(P("(1,4,3,2)", 4), P("(1,2)(3,4)", 4))
    assert check_map_in_Rg(eight, 1)
    assert not check_map_in_Rg(eight, 2)
    edge = CombinatorialMap.from_sigma_alpha(Permutation.identity(2), P("(1,2)", 2))
    assert not any(check_map_in_Rg(edge, g) for g in range(1, 4))


def test_admissible_examples():
    assert admissible_type_triples(1, 2) == [TypeTriple(2, (1, 1), (2,), (2,))]
    assert admissible_type_triples(1, 3) == [TypeTriple(3, (3,), (3,), (3,))]
    assert admissible_type_triples(1, 4) == [TypeTriple(4, (4,), (4,), (2, 2))]
    with pytest.raises(ValueError):
        admissible_type_triples(1, 5)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_admissible_triples_properties(g):
    triples = all_type_triples(g)
    lo, hi = edge_bounds(g)
    assert triples == sorted(triples, key=TypeTriple.sort_key)
    assert len({t.key for t in triples}) == len(triples)
    for t in triples:
        assert lo <= t.E <= hi
        assert 1 not in t.F and t.S <= t.A
        assert len(t.S) + len(t.A) + t.E - len(t.F) == 2 * g + 2
        assert TypeTriple.from_key(t.key) == t


def test_triple_counts():
    assert [len(all_type_triples(g)) for g in (1, 2, 3)] == [3, 18, 104]


def test_triple_validation():
    assert TypeTriple(4, (4,), (4,), (2, 2)).key == "E4_S4_A4_F2-2"
    with pytest.raises(ValueError):
        TypeTriple(4, (4,), (3,), (2, 2))
    with pytest.raises(ValueError):
        TypeTriple(3, (3,), (3,), (2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_minsep_genus_agrees_with_map_criterion(n):
    for h in all_hypermaps(n):
        g = minsep_genus(h)
        if g is None:
            assert any(len(c) == 1 for c in h.phi.cycles())
            continue
        m, _ = map_from_hypermap(h)
        assert check_map_in_Rg(dual(m), g)
        assert g >= hypermap_genus(h)
        faces = num_cycles(h.sigma) + num_cycles(h.alpha)
        assert (g == hypermap_genus(h)) == (faces == 2)


@pytest.mark.parametrize("n", range(2, 6))
def test_realized_types_are_admissible(n):
    listed = {}
    for h in all_hypermaps(n):
        g = minsep_genus(h)
        if g is None or g < 1:
            continue
        s, a = sorted([h.sigma, h.alpha], key=lambda p: tuple(sorted((len(c) for c in p.cycles()), reverse=True)))
        t = TypeTriple(n, *(tuple(sorted((len(c) for c in p.cycles()), reverse=True)) for p in (s, a, h.phi)))
        if g not in listed:
            listed[g] = set(all_type_triples(g))
        assert t in listed[g], t.key
