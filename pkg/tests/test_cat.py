import random
from collections import Counter

import pytest

from catmouse import (
    NoWinningSequenceError,
    beat,
    cat_sequence,
    contains_spider333,
    is_double_star,
    is_star,
    plan_path,
    required_visits,
    total_required_visits,
    tree_from_edges,
    verify_unbeatable,
)
from catmouse.mouse import SPIDER333
from catmouse.treegen import all_labeled_trees, random_tree

from conftest import path_tree, spider_tree, star_tree


def test_plan_six_path():
    plan = plan_path(path_tree(6))
    assert plan.path == (2, 3)
    assert plan.internal_degrees == (2, 2)
    assert plan.offsets == (2, 3)
    assert plan.half_length == 4
    assert plan.probe_orders == ((1, 3), (2, 4))


def test_plan_spider222():
    plan = plan_path(spider_tree(2, 2, 2))
    assert plan.path == (0,)
    assert plan.internal_degrees == (3,)
    assert plan.offsets == (2,)
    assert plan.half_length == 5
    assert plan.half_length * 2 == total_required_visits(spider_tree(2, 2, 2))


def test_plan_spider221():
    t = spider_tree(2, 2, 1)
    plan = plan_path(t)
    assert plan.path == (0,)
    assert plan.internal_degrees == (2,)
    assert plan.half_length == 3
    assert total_required_visits(t) == 6


def test_plan_rejects_special_shapes():
    with pytest.raises(ValueError, match="star"):
        plan_path(star_tree(4))
    with pytest.raises(ValueError, match="double star"):
        plan_path(path_tree(4))
    with pytest.raises(NoWinningSequenceError):
        plan_path(SPIDER333)


def test_sequence_double_star():
    assert cat_sequence(path_tree(4)) == [1, 2, 2, 1]


def test_sequence_six_path():
    assert cat_sequence(path_tree(6)) == [1, 2, 3, 4, 4, 3, 2, 1]


def test_sequence_star_and_two_vertices():
    assert cat_sequence(star_tree(4)) == [0, 0]
    assert cat_sequence(tree_from_edges([(0, 1)])) == [0, 0]


def test_sequence_spider_raises():
    with pytest.raises(NoWinningSequenceError):
        cat_sequence(SPIDER333)


def test_sequence_is_mirror_symmetric():
    rng = random.Random(6)
    for _ in range(30):
        t = random_tree(rng.randrange(3, 10), rng)
        if contains_spider333(t):
            continue
        seq = cat_sequence(t)
        assert seq == seq[::-1]


def _assert_tight(t):
    seq = cat_sequence(t)
    assert len(seq) == total_required_visits(t) or is_star(t)
    if is_star(t):
        assert len(seq) == 2
    counts = Counter(seq)
    for v in range(t.n):
        assert counts.get(v, 0) == required_visits(t, v)
    assert verify_unbeatable(t, seq)
    assert beat(t, seq[:-1]) is not None


def test_tightness_small_corpus():
    for n in (3, 4, 5, 6):
        for t in all_labeled_trees(n):
            _assert_tight(t)


def test_tightness_random_larger_trees():
    rng = random.Random(7)
    checked = 0
    while checked < 30:
        t = random_tree(rng.randrange(7, 12), rng)
        if contains_spider333(t):
            continue
        checked += 1
        _assert_tight(t)


def test_leaves_never_probed():
    rng = random.Random(8)
    for _ in range(20):
        t = random_tree(rng.randrange(3, 10), rng)
        if contains_spider333(t):
            continue
        seq = set(cat_sequence(t))
        if is_star(t) or is_double_star(t):
            continue
        assert all(t.degree(v) >= 2 for v in seq)
