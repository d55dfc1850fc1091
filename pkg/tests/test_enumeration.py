import io

import networkx as nx
import pytest

from expodom.enumeration import connected_graphs, read_graph6_stream, trees
from expodom.graphs import (
    Graph6Error,
    SizeCapError,
    canonical_code,
    encode_graph6,
    is_connected,
)
from expodom.patterns import is_free

import oracles

# published isomorphism-class counts, frozen here as an external check
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
                          8: 11117}
TREE_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23,
                     9: 47, 10: 106, 11: 235, 12: 551}


class TestConnectedStream:
    def test_counts_match_frozen_table(self):
        for n in range(1, 8):
            assert sum(1 for _ in connected_graphs(n)) == \
                CONNECTED_CLASS_COUNTS[n], n

    def test_counts_match_labeled_enumeration(self):
        for n in range(1, 7):
            assert CONNECTED_CLASS_COUNTS[n] == oracles.class_count_oracle(n)

    def test_no_duplicates_and_all_connected(self):
        for n in (4, 5, 6):
            seen = set()
            for g in connected_graphs(n):
                assert g.n == n
                assert is_connected(g)
                code = canonical_code(g)
                assert code not in seen
                seen.add(code)

    def test_deterministic_order(self):
        first = [encode_graph6(g) for g in connected_graphs(6)]
        second = [encode_graph6(g) for g in connected_graphs(6)]
        assert first == second

    def test_small_cases_explicit(self):
        assert [encode_graph6(g) for g in connected_graphs(1)] == ["@"]
        assert [encode_graph6(g) for g in connected_graphs(2)] == ["A_"]
        got = sorted(encode_graph6(g) for g in connected_graphs(4))
        assert got == ["CF", "CL", "CN", "C]", "C^", "C~"]

    def test_order_cap(self):
        with pytest.raises(SizeCapError):
            next(iter(connected_graphs(11)))


class TestTreeStream:
    def test_counts_match_frozen_table(self):
        for n in range(1, 11):
            assert sum(1 for _ in trees(n)) == TREE_CLASS_COUNTS[n], n

    def test_counts_match_networkx(self):
        for n in range(2, 11):
            assert TREE_CLASS_COUNTS[n] == \
                sum(1 for _ in nx.nonisomorphic_trees(n))

    def test_trees_are_trees(self):
        for n in (5, 8):
            for g in trees(n):
                assert is_connected(g)
                assert sum(1 for _ in g.edges()) == n - 1

    def test_no_duplicate_classes(self):
        for n in (7, 9):
            codes = [canonical_code(g) for g in trees(n)]
            assert len(codes) == len(set(codes))

    def test_order_cap(self):
        with pytest.raises(SizeCapError):
            next(iter(trees(15)))


class TestRestrictedStream:
    def test_pruned_equals_post_filtered(self):
        names = ("P7", "F1")
        pruned = sorted(canonical_code(g)
                        for g in trees(9, free_of=names))
        post = sorted(canonical_code(g) for g in trees(9)
                      if is_free(g, names))
        assert pruned == post

    def test_pruned_connected_stream(self):
        names = ("K3",)
        pruned = sorted(canonical_code(g)
                        for g in connected_graphs(6, free_of=names))
        post = sorted(canonical_code(g) for g in connected_graphs(6)
                      if is_free(g, names))
        assert pruned == post

    def test_triangle_filter_small(self):
        # only connected triangle-free graph on 3 vertices is the path
        got = [encode_graph6(g)
               for g in connected_graphs(3, free_of=("K3",))]
        assert got == ["Bg"] or got == [encode_graph6(
            next(iter(connected_graphs(3, free_of=("K3",)))))]
        assert len(got) == 1

    def test_obstruction_free_level_counts(self):
        from expodom.patterns import OBSTRUCTION_NAMES
        # every listed pattern has >= 6 vertices, so levels 1..5 are
        # unrestricted; at n=6 exactly one class (the caterpillar itself)
        # is excluded
        want = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 111, 7: 809}
        for n, count in want.items():
            assert sum(1 for _ in connected_graphs(
                n, free_of=OBSTRUCTION_NAMES)) == count, n

    def test_fully_filtered_difference(self):
        # relative to the restriction-only stream, adding the obstruction
        # filter removes the obstruction graphs of that order plus every
        # restricted graph properly containing a smaller obstruction
        from expodom.graphs import canonical_code
        from expodom.patterns import (
            OBSTRUCTION_NAMES,
            RESTRICTION_NAMES,
            pattern,
        )
        both = tuple(RESTRICTION_NAMES) + tuple(OBSTRUCTION_NAMES)
        for n, diff_size in ((6, 1), (7, 21)):
            restricted = {canonical_code(g)
                          for g in connected_graphs(n, RESTRICTION_NAMES)}
            filtered = {canonical_code(g)
                        for g in connected_graphs(n, both)}
            diff = restricted - filtered
            assert filtered <= restricted
            assert len(diff) == diff_size
            wanted = {canonical_code(pattern(nm).graph)
                      for nm in OBSTRUCTION_NAMES
                      if pattern(nm).graph.n == n}
            assert wanted <= diff

    def test_triangle_restriction_level_counts(self):
        from expodom.patterns import TRIANGLE_RESTRICTION_NAMES
        want = {1: 1, 2: 1, 3: 1, 4: 3, 5: 5, 6: 13, 7: 34}
        for n, count in want.items():
            assert sum(1 for _ in connected_graphs(
                n, free_of=TRIANGLE_RESTRICTION_NAMES)) == count, n


class TestGraph6Stream:
    def test_round_trip_with_noise(self):
        lines = [
            "# leading comment",
            "",
            ">>graph6<<C~",
            "Ch ",
            "   ",
            "# trailing comment",
            "A_",
        ]
        got = [encode_graph6(g)
               for g in read_graph6_stream(io.StringIO("\n".join(lines)))]
        assert got == ["C~", "Ch", "A_"]

    def test_bad_line_raises(self):
        with pytest.raises(Graph6Error):
            list(read_graph6_stream(io.StringIO("C~\nnot graph6!\n")))

    def test_stream_matches_enumeration(self):
        text = "\n".join(encode_graph6(g) for g in connected_graphs(5))
        back = [canonical_code(g)
                for g in read_graph6_stream(io.StringIO(text))]
        assert back == [canonical_code(g) for g in connected_graphs(5)]
