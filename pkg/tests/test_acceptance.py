"""Acceptance suite: one test per criterion, each exact.

The exhaustive corpus (every labeled tree on 3..8 vertices) is checked
once and shared across criteria. Expect a few minutes of runtime; run
with `pytest tests/test_acceptance.py -v -s` to watch the pass lines.
"""

import itertools
import math
import os
import random

import pytest

from catmouse import (
    beat,
    beats,
    graph_from_edges,
    min_capture_time,
    spider333_mouse,
    verify_unbeatable,
)
from catmouse.cli import CHECK_NAMES, run_corpus_checks
from catmouse.graphs import is_connected
from catmouse.mouse import SPIDER333
from catmouse.treegen import random_spider333_supertree

EXPECTED_COUNTS = {3: 3, 4: 16, 5: 125, 6: 1296, 7: 16807, 8: 262144}
WORKERS = min(os.cpu_count() or 1, 8)


@pytest.fixture(scope="session")
def corpus():
    """(tree count, failures) per n for all five cross-checks."""
    results = {}
    for n in sorted(EXPECTED_COUNTS):
        workers = WORKERS if n >= 7 else 1
        results[n] = run_corpus_checks(n, CHECK_NAMES, workers=workers)
    return results


def _corpus_failures(corpus, check):
    return [(n, detail) for n, (_, failures) in corpus.items()
            for name, detail in failures if name == check]


def _report(num, ok, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_formula_matches_solver_exhaustively(corpus):
    for n, (count, _) in corpus.items():
        assert count == EXPECTED_COUNTS[n], f"n={n}: enumerated {count} trees"
    bad = _corpus_failures(corpus, "formula")
    _report(1, not bad, f"formula == solver on all "
            f"{sum(EXPECTED_COUNTS.values())} labeled trees, n=3..8 {bad[:3]}")


def test_criterion_2_cat_sequence_tightness(corpus):
    bad = _corpus_failures(corpus, "catseq")
    _report(2, not bad, f"cat sequences have optimal length, are unbeatable, "
            f"and their truncations are beatable {bad[:3]}")


def test_criterion_3_visit_counts(corpus):
    bad = _corpus_failures(corpus, "visits")
    _report(3, not bad, f"every vertex probed exactly as required {bad[:3]}")


def test_criterion_4_spider_survival_and_supertrees():
    rng = random.Random(333)
    for i in range(1000):
        c = [rng.randrange(10) for _ in range(rng.randrange(1, 41))]
        walk = spider333_mouse(c)
        assert beats(SPIDER333, c, walk), f"sequence #{i} not beaten: {c}"
    assert min_capture_time(SPIDER333).steps == math.inf
    for i in range(100):
        t = random_spider333_supertree(rng.randrange(10, 17), rng)
        assert min_capture_time(t).steps == math.inf, f"supertree #{i} finite"
    _report(4, True, "1000 random sequences beaten on the spider; solver infinite "
            "on the spider and 100 random supertrees (n <= 16)")


def test_criterion_5_cycles_are_uncatchable():
    for n in range(3, 13):
        g = graph_from_edges([(i, (i + 1) % n) for i in range(n)], n=n)
        assert min_capture_time(g).steps == math.inf, f"C_{n} finite"
    _report(5, True, "solver reports infinite for every cycle C_3..C_12")


def test_criterion_6_prune_invariance_and_size(corpus):
    bad = _corpus_failures(corpus, "prune")
    _report(6, not bad, f"pruning preserves capture time; pruned size is n+t-l "
            f"for non-stars {bad[:3]}")


def test_criterion_7_spider_detection_equals_covering_absence(corpus):
    bad = _corpus_failures(corpus, "spider")
    _report(7, not bad, f"subgraph test == covering-path absence {bad[:3]}")


def test_criterion_8_double_star_brute_force():
    p4 = graph_from_edges([(0, 1), (1, 2), (2, 3)], n=4)
    assert verify_unbeatable(p4, [1, 2, 2, 1])
    winners = [c for c in itertools.product(range(4), repeat=3)
               if verify_unbeatable(p4, list(c))]
    _report(8, not winners, "probe-inner-inner-probe wins on the 4-path; none of "
            f"the 64 length-3 sequences does {winners[:3]}")


def _connected_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        if len(edges) < n - 1:
            continue
        g = graph_from_edges(edges, n=n)
        if is_connected(g):
            yield g


def _walk_exists(adj, c, i, v):
    if i + 1 == len(c):
        return True
    nxt = c[i + 1]
    return any(_walk_exists(adj, c, i + 1, u) for u in adj[v] if u != nxt)


def test_criterion_9_oracle_soundness_and_completeness():
    # Soundness: every produced escape walk is a real escape walk.
    rng = random.Random(999)
    from catmouse.treegen import random_tree

    escapes = 0
    for _ in range(100_000):
        t = random_tree(rng.randrange(2, 11), rng)
        edges = set(t.edges())
        for _ in range(rng.randrange(0, 3)):
            a, b = rng.randrange(t.n), rng.randrange(t.n)
            if a != b:
                edges.add((min(a, b), max(a, b)))
        g = graph_from_edges(sorted(edges), n=t.n)
        c = [rng.randrange(g.n) for _ in range(rng.randrange(1, 11))]
        walk = beat(g, c)
        if walk is not None:
            escapes += 1
            assert beats(g, c, walk), f"unsound escape on {g.edges()} vs {c}"
    assert escapes > 10_000

    # Completeness: agree with plain enumeration of every mouse walk on
    # every connected graph with n <= 5 and every sequence of length <= 5.
    pairs = 0
    for n in range(2, 6):
        for g in _connected_graphs(n):
            adj = g.adjacency
            for length in range(1, 6):
                for c in itertools.product(range(n), repeat=length):
                    pairs += 1
                    oracle = beat(g, list(c)) is not None
                    brute = any(_walk_exists(adj, c, 0, v)
                                for v in range(n) if v != c[0])
                    assert oracle == brute, f"disagree on {g.edges()} vs {c}"
    _report(9, True, f"{escapes} escape walks all valid; oracle matches walk "
            f"enumeration on {pairs} (graph, sequence) pairs")
