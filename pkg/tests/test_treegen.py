import random

import pytest

from catmouse import Tree, contains_spider333
from catmouse.treegen import (
    all_labeled_trees,
    random_spider333_supertree,
    random_tree,
    tree_from_prufer,
)


def test_prufer_decode_star():
    t = tree_from_prufer((2, 2))
    assert t.degree(2) == 3  # repeated symbol is the centre


def test_prufer_decode_known_path():
    # (1, 2) on 4 vertices: leaves 0 and 3 attach in order, giving the
    # path 0-1-2-3.
    t = tree_from_prufer((1, 2))
    assert t.edges() == [(0, 1), (1, 2), (2, 3)]


def test_prufer_out_of_range():
    with pytest.raises(ValueError):
        tree_from_prufer((5,))


def test_enumeration_counts_and_uniqueness():
    for n in (2, 3, 4, 5, 6):
        seen = set()
        for t in all_labeled_trees(n):
            assert isinstance(t, Tree)
            assert t.n == n
            seen.add(tuple(t.edges()))
        assert len(seen) == max(1, n ** (n - 2))


def test_random_tree_seeded_and_valid():
    a = random_tree(9, random.Random(20))
    b = random_tree(9, random.Random(20))
    assert a.adjacency == b.adjacency
    for _ in range(20):
        t = random_tree(11, random.Random())
        assert t.n == 11 and t.edge_count() == 10


def test_supertrees_contain_the_spider():
    rng = random.Random(21)
    for _ in range(30):
        t = random_spider333_supertree(rng.randrange(10, 17), rng)
        assert contains_spider333(t)
    with pytest.raises(ValueError):
        random_spider333_supertree(9, rng)
