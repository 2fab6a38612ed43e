"""Free-tree enumeration: counts, canonical uniqueness, and a reference
cross-check against networkx."""

import pytest

from lafr.graphs import is_connected, to_graph6
from lafr.trees import (
    free_trees,
    rooted_level_sequences,
    tree_certificate,
    tree_from_level_sequence,
)

# unlabeled free trees (n = 1..12)
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
# unlabeled rooted trees (n = 1..12)
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766]


class TestRootedEnumeration:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_rooted_counts(self, n):
        assert sum(1 for _ in rooted_level_sequences(n)) == ROOTED_TREE_COUNTS[n - 1]

    def test_sequences_start_with_path(self):
        first = next(rooted_level_sequences(5))
        assert first == (0, 1, 2, 3, 4)

    def test_level_sequence_to_tree(self):
        t = tree_from_level_sequence((0, 1, 1, 1))
        assert t.num_edges == 3 and sorted(t.degrees()) == [1, 1, 1, 3]


class TestFreeTrees:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts(self, n):
        assert len(free_trees(n)) == FREE_TREE_COUNTS[n - 1]

    def test_all_are_trees(self):
        for n in range(2, 10):
            for t in free_trees(n):
                assert t.n == n and t.num_edges == n - 1 and is_connected(t)

    def test_pairwise_nonisomorphic(self):
        for n in range(2, 11):
            certs = [tree_certificate(t) for t in free_trees(n)]
            assert len(set(certs)) == len(certs)

    def test_deterministic(self):
        a = [to_graph6(t) for t in free_trees(9)]
        b = [to_graph6(t) for t in free_trees(9)]
        assert a == b

    def test_size_guard(self):
        with pytest.raises(ValueError):
            free_trees(15)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_matches_networkx_corpus(self, n):
        import networkx as nx

        from lafr.graphs import Graph

        ours = {tree_certificate(t) for t in free_trees(n)}
        theirs = {
            tree_certificate(Graph.from_edges(n, G.edges()))
            for G in nx.nonisomorphic_trees(n)
        }
        assert ours == theirs
