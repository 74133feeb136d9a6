import pytest

from minsep.graphs import MultiGraph, graph_isomorphic
from minsep.reduce import (CIRCLE, build_table, count_Lg, genus_compositions, graph_of_entry, multichoose,
                           preimage_counts, reduce_to_Cg)


@pytest.fixture(scope="module")
def c_lists(r_lists):
    return reduce_to_Cg(r_lists, 3)


def test_reduce_counts(c_lists):
    assert [len(c_lists[g]) for g in range(4)] == [1, 3, 17, 164]
    assert c_lists[0] == [CIRCLE]


def test_reduce_lower_genus_only(r_lists):
    c = reduce_to_Cg({1: r_lists[1], 2: r_lists[2]}, 2)
    assert [len(c[g]) for g in range(3)] == [1, 3, 17]
    assert reduce_to_Cg({}, 0) == {0: [CIRCLE]}


def test_reduce_needs_every_lower_genus(r_lists):
    with pytest.raises(KeyError):
        reduce_to_Cg({2: r_lists[2]}, 2)


def test_figure_eight_is_in_C1(c_lists):
    eight = MultiGraph(1, ((1, 1), (1, 1)))
    assert any(graph_isomorphic(eight, g) for g in c_lists[1])


def test_classes_are_distinct_and_even(c_lists):
    keys = [g.key() for gs in c_lists.values() for g in gs]
    assert len(keys) == len(set(keys))
    for g in range(1, 4):
        for gr in c_lists[g]:
            assert all(d >= 4 and d % 2 == 0 for d in gr.degrees())


def test_preimages_cover_R(r_lists, c_lists):
    for g in range(1, 4):
        counts = preimage_counts(r_lists[g])
        assert sum(counts.values()) == len(r_lists[g])
        assert all(counts.get(gr.key(), 0) >= 1 for gr in c_lists[g])
        lower = {gr.key() for h in range(g) for gr in c_lists[h]}
        assert set(counts) - lower == {gr.key() for gr in c_lists[g]}


def test_graph_of_entry_vertices_are_hyperfaces(r_lists):
    for e in r_lists[2]:
        gr = graph_of_entry(e)
        faces = sorted(len(c) for c in e.hypermap.phi.cycles())
        assert gr.vertex_count == len(faces)
        assert sorted(gr.degrees()) == sorted(2 * f for f in faces)
        assert len(gr.edges) == e.hypermap.n


def test_multichoose():
    assert multichoose(1, 2) == 1
    assert multichoose(3, 1) == 3
    assert multichoose(3, 2) == 6
    assert multichoose(0, 0) == 1
    assert multichoose(5, 0) == 1


def test_genus_compositions():
    assert sorted(genus_compositions(0)) == [(1,)]
    assert sorted(genus_compositions(1)) == [(0, 1), (2, 0)]
    assert sorted(genus_compositions(2)) == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    for g in range(6):
        for ks in genus_compositions(g):
            assert sum((i + 1) * k for i, k in enumerate(ks)) == g + 1


def test_count_Lg_examples():
    assert count_Lg([1], 0) == 1
    assert count_Lg([1, 3], 1) == 4
    assert count_Lg([1, 3, 17], 2) == 21
    assert count_Lg([1, 3, 17, 164], 3) == 191
    with pytest.raises(ValueError):
        count_Lg([1, 3], 2)


def test_build_table_rows():
    t = build_table([1, 3, 31, 1831], [1, 3, 17, 164])
    assert t.rows() == [(0, 1, 1, 1, 1), (1, 3, 3, 4, 5), (2, 31, 17, 21, 26), (3, 1831, 164, 191, 217)]
    assert t.to_csv().splitlines()[0] == "genus,R,C,L,M"
    assert all(b > a for a, b in zip(t.m, t.m[1:]))
    assert all(t.l[g] >= t.c[g] for g in range(1, 4))
    with pytest.raises(ValueError):
        build_table([1, 3], [1])


def test_table_with_four():
    t = build_table([1, 3, 31, 1831, 462638], [1, 3, 17, 164, 3096])
    assert t.rows()[-1] == (4, 462638, 3096, 3338, 3555)
