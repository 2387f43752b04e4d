"""Labeled-tree generation: Prüfer decoding, exhaustive enumeration,
and seeded random sampling for property checks."""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .graphs import Tree, tree_from_edges
from .mouse import SPIDER333


def tree_from_prufer(seq: Sequence[int]) -> Tree:
    """Decode a Prüfer sequence into the labeled tree on len(seq)+2
    vertices."""
    n = len(seq) + 2
    if n == 2:
        return tree_from_edges([(0, 1)], n=2)
    degree = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise ValueError(f"Prüfer symbol {v} out of range for n={n}")
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        u = heapq.heappop(heap)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((a, b))
    return tree_from_edges(edges, n=n)


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """All n^(n-2) labeled trees on n vertices, in Prüfer order."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if n == 2:
        yield tree_from_prufer(())
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labeled tree via a random Prüfer sequence."""
    if n == 2:
        return tree_from_prufer(())
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def random_spider333_supertree(n: int, rng: random.Random) -> Tree:
    """Random tree on n >= 10 vertices containing the canonical spider:
    extra vertices are attached to uniformly random earlier vertices."""
    if n < SPIDER333.n:
        raise ValueError(f"need at least {SPIDER333.n} vertices")
    edges = SPIDER333.edges()
    for v in range(SPIDER333.n, n):
        edges.append((rng.randrange(v), v))
    return tree_from_edges(edges, n=n)
