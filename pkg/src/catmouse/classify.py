"""Tree classification for the probe-evasion game.

The cat can win exactly on trees that avoid the spider S(3,3,3) --
three disjoint arms of three edges hanging off one hub. Equivalently
(and this is the form the cat strategy consumes) the tree must contain
a path that every vertex is within distance 2 of. Both tests are
implemented independently so they can cross-check each other.
"""

from __future__ import annotations

from .graphs import Tree, bfs_distances, tree_path


def _require_small_tree(t: Tree) -> None:
    if t.n < 3:
        raise ValueError(f"classification needs at least 3 vertices, got {t.n}")


def is_star(t: Tree) -> bool:
    """True iff exactly one vertex has degree >= 2."""
    _require_small_tree(t)
    return sum(1 for v in range(t.n) if t.degree(v) >= 2) == 1


def is_double_star(t: Tree) -> bool:
    """True iff exactly two vertices have degree >= 2 and they are adjacent."""
    _require_small_tree(t)
    internal = [v for v in range(t.n) if t.degree(v) >= 2]
    return len(internal) == 2 and internal[1] in t.adjacency[internal[0]]


def covering_path(t: Tree) -> list[int] | None:
    """Shortest path such that every vertex is within distance 2 of it.

    Returns None iff no path of any length has the property. Ties are
    broken by the lexicographically smallest (endpoint, endpoint) pair
    with endpoints ascending, and the result runs from the smaller
    endpoint. Plain enumeration over all O(n^2) tree paths; ample at the
    sizes the exact solver can handle anyway.
    """
    _require_small_tree(t)
    # Path between a and b has dist(a,b)+1 vertices; sort candidates by
    # length so the first qualifying pair wins.
    dist_from = [bfs_distances(t, [v]) for v in range(t.n)]
    candidates = sorted(
        (dist_from[a][b] + 1, a, b)
        for a in range(t.n) for b in range(a, t.n)
    )
    for _, a, b in candidates:
        path = tree_path(t, a, b)
        if max(bfs_distances(t, path)) <= 2:
            return path
    return None


def _branch_depth(t: Tree, root: int, blocked: int) -> int:
    """Depth of the branch hanging from root, not crossing blocked."""
    depth = 0
    frontier = [root]
    seen = {blocked, root}
    while frontier:
        nxt = []
        for v in frontier:
            for u in t.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if not nxt:
            return depth
        depth += 1
        frontier = nxt
    return depth


def contains_spider333(t: Tree) -> bool:
    """True iff some hub has three disjoint arms of three edges each.

    Checked directly on branch depths: a hub needs >= 3 neighbours whose
    branches (away from the hub) reach depth >= 2. Independent of
    covering_path, so the two characterisations genuinely cross-check.
    """
    _require_small_tree(t)
    for hub in range(t.n):
        deep = 0
        for w in t.adjacency[hub]:
            if _branch_depth(t, w, hub) >= 2:
                deep += 1
                if deep == 3:
                    return True
    return False
