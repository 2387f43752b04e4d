"""Per-vertex visit requirements, leaf pruning, and the closed-form
capture time.

Every unbeatable probe sequence must visit each vertex v at least
required_visits(v) times, so their total is a lower bound on the
capture time; on spider-free trees it is exactly the capture time.
The closed form is evaluated through leaf/twig counts after observing
that deleting a leaf next to a branching vertex never changes the game.
"""

from __future__ import annotations

import math

from .classify import contains_spider333, is_star
from .graphs import Tree, internal_degree, leaves, twigs


def required_visits(t: Tree, v: int) -> int:
    """Minimum number of times an unbeatable sequence must probe v.

    2*(internal degree)-2 when v has >= 2 internal neighbours, 2 for any
    other internal vertex, 0 for leaves.
    """
    if t.n < 3:
        raise ValueError("visit requirements are defined for trees with >= 3 vertices")
    d_int = internal_degree(t, v)
    if d_int >= 2:
        return 2 * d_int - 2
    if t.degree(v) >= 2:
        return 2
    # A leaf in a connected tree on >= 3 vertices has an internal neighbour.
    assert d_int == 1, "leaf with a leaf neighbour implies the two-vertex tree"
    return 0


def total_required_visits(t: Tree) -> int:
    return sum(required_visits(t, v) for v in range(t.n))


def prune(t: Tree) -> Tree:
    """Repeatedly delete a leaf whose neighbour has degree >= 3.

    Deleting such leaves never changes the capture time, and the result
    (a "pruned" tree: every leaf hangs off a degree-2 vertex) makes the
    closed form a one-liner. Deterministic: the smallest-id eligible leaf
    goes first, ids taken in the input tree. Surviving vertices are
    re-indexed densely but keep their original labels.
    """
    if t.n < 3:
        raise ValueError("prune needs at least 3 vertices")
    nbrs = [set(t.adjacency[v]) for v in range(t.n)]
    alive = set(range(t.n))
    while True:
        victim = -1
        for v in sorted(alive):
            if len(nbrs[v]) == 1 and len(nbrs[next(iter(nbrs[v]))]) >= 3:
                victim = v
                break
        if victim == -1:
            break
        u = next(iter(nbrs[victim]))
        nbrs[u].discard(victim)
        nbrs[victim].clear()
        alive.discard(victim)
    order = sorted(alive)
    new_id = {v: i for i, v in enumerate(order)}
    adjacency = tuple(tuple(sorted(new_id[u] for u in nbrs[v])) for v in order)
    return Tree(len(order), adjacency, tuple(t.labels[v] for v in order))


def capture_time(t: Tree) -> int | float:
    """Least length of an unbeatable probe sequence; math.inf if none exists.

    Two vertices take 2 probes (same vertex twice). Trees containing the
    spider S(3,3,3) are unwinnable. Stars take 2. Everything else takes
    2n + 2*twigs - 2*leaves - 4.
    """
    if t.n == 1:
        raise ValueError("the game is not feasible on a single vertex")
    if t.n == 2:
        return 2
    if contains_spider333(t):
        return math.inf
    if is_star(t):
        return 2
    return 2 * t.n + 2 * len(twigs(t)) - 2 * len(leaves(t)) - 4
