"""Enumeration: counts vs published sequences, dedup cross-check, classes."""

import random

import pytest

from conftest import CONNECTED_COUNTS, TREE_COUNTS
from totecc import families
from totecc.canon import canonical_form
from totecc.enumeration import (
    ClassConstraint,
    connected_graph_list,
    connected_graphs,
    connected_graphs_dedup,
    count_class,
    filter_graphs,
    labeled_connected_count,
    labeled_graphs,
    parse_constraint,
)
from totecc.graph import is_connected


class TestStream:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts_match_published(self, n):
        assert len(connected_graph_list(n)) == CONNECTED_COUNTS[n]

    def test_all_connected_no_duplicates(self):
        for n in range(1, 7):
            forms = set()
            for g in connected_graphs(n):
                assert g.n == n and is_connected(g)
                f = canonical_form(g)
                assert f not in forms
                forms.add(f)

    def test_deterministic_order(self):
        assert list(connected_graphs(6)) == list(connected_graphs(6))

    def test_shards_partition_stream(self):
        full = [canonical_form(g) for g in connected_graphs(7)]
        sharded = []
        for i in range(3):
            sharded.extend(canonical_form(g) for g in connected_graphs(7, shard=(i, 3)))
        assert sorted(full) == sorted(sharded)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            list(connected_graphs(0))
        with pytest.raises(ValueError):
            list(connected_graphs(10))  # needs allow_large
        with pytest.raises(ValueError):
            list(connected_graphs(11, allow_large=True))
        with pytest.raises(ValueError):
            list(connected_graphs(5, shard=(3, 3)))

    def test_order_10_optin_streams(self):
        # full order-10 enumeration is impractical; the stream must start
        first = next(iter(connected_graphs(10, allow_large=True)))
        assert first.n == 10 and is_connected(first)


class TestDedupFallback:
    def test_agrees_with_stream(self):
        for n in range(1, 8):
            a = sorted(canonical_form(g) for g in connected_graphs(n))
            b = sorted(canonical_form(g) for g in connected_graphs_dedup(n))
            assert a == b


class TestLabeledOracle:
    def test_completeness_small(self):
        # every connected labeled graph maps into the emitted representatives
        for n in range(1, 6):
            emitted = {canonical_form(g) for g in connected_graph_list(n)}
            for g in labeled_graphs(n):
                if is_connected(g):
                    assert canonical_form(g) in emitted

    def test_completeness_n6(self):
        emitted = {canonical_form(g) for g in connected_graph_list(6)}
        count = 0
        for g in labeled_graphs(6):
            if is_connected(g):
                assert canonical_form(g) in emitted
                count += 1
        assert count == labeled_connected_count(6) == 26704

    def test_completeness_n7_sampled(self):
        emitted = {canonical_form(g) for g in connected_graph_list(7)}
        rng = random.Random(17)
        pairs = [(u, v) for u in range(7) for v in range(u + 1, 7)]
        hits = 0
        while hits < 2000:
            rows = [0] * 7
            for u, v in pairs:
                if rng.random() < 0.35:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            from totecc.graph import Graph

            g = Graph(7, tuple(rows))
            if is_connected(g):
                assert canonical_form(g) in emitted
                hits += 1

    @pytest.mark.slow
    def test_completeness_n7_exhaustive(self):
        emitted = {canonical_form(g) for g in connected_graph_list(7)}
        count = 0
        for g in labeled_graphs(7):
            if is_connected(g):
                assert canonical_form(g) in emitted
                count += 1
        assert count == 1866256

    def test_labeled_connected_counts(self):
        assert [labeled_connected_count(n) for n in range(1, 6)] == [1, 1, 4, 38, 728]


class TestClasses:
    def test_tree_counts(self):
        for n in range(1, 8):
            assert count_class(n, ClassConstraint("tree")) == TREE_COUNTS[n]

    def test_trees_on_5(self):
        trees = list(filter_graphs(connected_graph_list(5), ClassConstraint("tree")))
        assert len(trees) == 3

    def test_one_cut_vertex_small(self):
        assert count_class(3, ClassConstraint("cut_count", 1)) == 1
        assert count_class(4, ClassConstraint("cut_count", 1)) == 2

    def test_cut41_members(self):
        members = list(
            filter_graphs(connected_graph_list(4), ClassConstraint("cut_count", 1))
        )
        forms = {canonical_form(g) for g in members}
        assert forms == {
            canonical_form(families.star(4)),
            canonical_form(families.tadpole_l(4, 3)),
        }

    @pytest.mark.parametrize("n", range(3, 8))
    def test_path_is_only_max_cut_graph(self, n):
        members = list(
            filter_graphs(connected_graph_list(n), ClassConstraint("cut_count", n - 2))
        )
        assert len(members) == 1
        assert canonical_form(members[0]) == canonical_form(families.path(n))

    def test_pendant_zero_means_min_degree_2(self):
        for g in filter_graphs(connected_graph_list(6), ClassConstraint("pendant_count", 0)):
            assert min(g.degree(v) for v in range(g.n)) >= 2

    def test_star_is_only_max_pendant_graph(self):
        for n in range(3, 8):
            members = list(
                filter_graphs(
                    connected_graph_list(n), ClassConstraint("pendant_count", n - 1)
                )
            )
            assert [canonical_form(g) for g in members] == [
                canonical_form(families.star(n))
            ]

    def test_all_pendants_only_k2(self):
        assert count_class(2, ClassConstraint("pendant_count", 2)) == 1
        for n in range(3, 8):
            assert count_class(n, ClassConstraint("pendant_count", n)) == 0

    def test_partition_identities(self):
        for n in range(2, 8):
            total = CONNECTED_COUNTS[n]
            by_pendants = sum(
                count_class(n, ClassConstraint("pendant_count", k)) for k in range(n + 1)
            )
            by_cuts = sum(
                count_class(n, ClassConstraint("cut_count", s)) for s in range(n - 1)
            )
            assert by_pendants == by_cuts == total

    def test_trees_by_cuts_equal_trees_by_pendants(self):
        # in a tree every vertex is a cut vertex or a pendant vertex
        for n in range(3, 8):
            for s in range(0, n - 1):
                with_cuts = {
                    canonical_form(g)
                    for g in filter_graphs(
                        connected_graph_list(n), ClassConstraint("cut_count", s)
                    )
                    if g.edge_count == g.n - 1
                }
                with_pendants = {
                    canonical_form(g)
                    for g in filter_graphs(
                        connected_graph_list(n),
                        ClassConstraint("tree_with_pendants", n - s),
                    )
                }
                assert with_cuts == with_pendants

    def test_unicyclic_girth_filter(self):
        members = list(
            filter_graphs(connected_graph_list(6), ClassConstraint("unicyclic_girth", 4))
        )
        assert all(g.edge_count == g.n for g in members)
        tad = families.tadpole_l(6, 4)
        assert canonical_form(tad) in {canonical_form(g) for g in members}


class TestConstraintType:
    def test_parse(self):
        assert parse_constraint("all") == ClassConstraint("all")
        assert parse_constraint("pendant_count=2") == ClassConstraint("pendant_count", 2)
        assert parse_constraint("cut-count=3") == ClassConstraint("cut_count", 3)
        assert parse_constraint("tree") == ClassConstraint("tree")

    def test_str(self):
        assert str(ClassConstraint("unicyclic_girth", 4)) == "unicyclic_girth=4"

    def test_invalid(self):
        with pytest.raises(ValueError):
            ClassConstraint("sparse")
        with pytest.raises(ValueError):
            ClassConstraint("tree", 3)
        with pytest.raises(ValueError):
            ClassConstraint("pendant_count")
        with pytest.raises(ValueError):
            ClassConstraint("unicyclic_girth", 2)
        with pytest.raises(ValueError):
            count_class(5, ClassConstraint("cut_count", 4))
