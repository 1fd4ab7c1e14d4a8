"""Twin relation, partition, classification, and reconstruction."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from twindex import (
    ClassKind,
    are_twins,
    is_connected,
    new_graph,
    permuted,
    recompose,
    twin_partition,
)
from twindex.generators import as_graph, complete_graph, power_graph, power_graph_zn
from twindex.algebra import dihedral_group

from conftest import random_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, keep in zip(pairs, mask) if keep])


class TestAreTwins:
    def test_universal_vertices_of_z6_power_graph(self):
        g = as_graph(power_graph_zn(6))
        assert are_twins(g, 0, 1)

    def test_non_twins_in_z6_power_graph(self):
        # N(2) = {0,1,4,5} while N(3) = {0,1,5}
        g = as_graph(power_graph_zn(6))
        assert g.neighbors(2) == {0, 1, 4, 5}
        assert g.neighbors(3) == {0, 1, 5}
        assert not are_twins(g, 2, 3)

    def test_reflexive(self):
        g = as_graph(power_graph_zn(6))
        assert all(are_twins(g, v, v) for v in range(g.n))

    @given(graphs())
    @settings(max_examples=50)
    def test_symmetric(self, g):
        for u in range(g.n):
            for v in range(g.n):
                assert are_twins(g, u, v) == are_twins(g, v, u)


class TestTwinPartition:
    def test_z6_power_graph_classes(self):
        d = twin_partition(as_graph(power_graph_zn(6)))
        assert d.classes == ((0, 1, 5), (2, 4), (3,))
        assert d.kinds == (ClassKind.COMPLETE, ClassKind.COMPLETE, ClassKind.SINGLETON)
        assert d.representatives == (0, 2, 3)

    def test_d12_power_graph_classes(self):
        g = as_graph(power_graph(dihedral_group(6)))
        d = twin_partition(g)
        # identity, {r, r^5}, {r^2, r^4}, {r^3}, and the six reflections
        assert set(map(frozenset, d.classes)) == {
            frozenset({0}),
            frozenset({1, 5}),
            frozenset({2, 4}),
            frozenset({3}),
            frozenset(range(6, 12)),
        }
        by_class = dict(zip(d.classes, d.kinds))
        assert by_class[tuple(range(6, 12))] is ClassKind.EMPTY

    def test_complete_graph_single_class(self):
        d = twin_partition(complete_graph(5))
        assert d.classes == ((0, 1, 2, 3, 4),)
        assert d.kinds == (ClassKind.COMPLETE,)

    def test_reduced_is_induced_on_representatives(self):
        g = as_graph(power_graph_zn(6))
        d = twin_partition(g)
        assert d.reduced.n == 3
        assert set(d.reduced.edges()) == {(0, 1), (0, 2)}

    def test_partition_matches_pairwise_predicate(self):
        rng = random.Random(11)
        sizes = [0, 1, 2, 5, 9, 16, 33, 64]
        for n in sizes:
            g = random_graph(rng, n, 0.4)
            d = twin_partition(g)
            for u in range(n):
                for v in range(n):
                    same = d.class_of(u) == d.class_of(v)
                    assert same == are_twins(g, u, v), (n, u, v)

    @given(graphs())
    @settings(max_examples=60)
    def test_kind_soundness(self, g):
        d = twin_partition(g)
        for cls, kind in zip(d.classes, d.kinds):
            if len(cls) == 1:
                assert kind is ClassKind.SINGLETON
                continue
            pairs = [(u, v) for i, u in enumerate(cls) for v in cls[i + 1 :]]
            if kind is ClassKind.COMPLETE:
                assert all(g.has_edge(u, v) for u, v in pairs)
            else:
                assert kind is ClassKind.EMPTY
                assert not any(g.has_edge(u, v) for u, v in pairs)

    @given(graphs())
    @settings(max_examples=60)
    def test_connectivity_transfer(self, g):
        d = twin_partition(g)
        if d.k >= 2:
            assert is_connected(g) == is_connected(d.reduced)

    def test_relabeling_equivariance(self, rng):
        for _ in range(25):
            n = rng.randint(1, 12)
            g = random_graph(rng, n, 0.5)
            perm = list(range(n))
            rng.shuffle(perm)
            h = permuted(g, perm)
            dg, dh = twin_partition(g), twin_partition(h)
            assert sorted(map(len, dg.classes)) == sorted(map(len, dh.classes))
            assert sorted(k.value for k in dg.kinds) == sorted(k.value for k in dh.kinds)
            mapped = {frozenset(perm[v] for v in cls) for cls in dg.classes}
            assert mapped == set(map(frozenset, dh.classes))


class TestRecompose:
    def test_z6_power_graph(self):
        g = as_graph(power_graph_zn(6))
        assert recompose(twin_partition(g)) == g

    def test_complete_bipartite(self):
        g = new_graph(7, [(u, v) for u in range(3) for v in range(3, 7)])
        assert recompose(twin_partition(g)) == g

    def test_single_vertex(self):
        g = new_graph(1, [])
        assert recompose(twin_partition(g)) == g

    @given(graphs())
    @settings(max_examples=80)
    def test_identity_everywhere(self, g):
        assert recompose(twin_partition(g)) == g
