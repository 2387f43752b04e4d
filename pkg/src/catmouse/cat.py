"""Cat-side play: synthesis of a shortest unbeatable probe sequence.

On a spider-free tree the cat sweeps a covering path, probing each path
vertex interleaved with its internal neighbours, then replays the whole
first half in reverse to catch the other parity class. The result has
length exactly total_required_visits(t), which is optimal. Stars,
double stars and the two-vertex tree are handled by their own short
sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .capture import total_required_visits
from .classify import covering_path, is_double_star, is_star
from .graphs import Tree


class NoWinningSequenceError(ValueError):
    """The tree admits no unbeatable probe sequence; the mouse can
    survive forever."""


@dataclass(frozen=True)
class PathPlan:
    """Sweep schedule along a covering path.

    For path vertex i, probe_orders[i] lists its internal neighbours in
    sweep order (previous path vertex first, next path vertex last,
    others by ascending id) and offsets[i] is the 1-based position where
    its stay-probes start. The full sequence is the first half_length
    probes followed by their mirror image.
    """

    path: tuple[int, ...]
    internal_degrees: tuple[int, ...]
    probe_orders: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    half_length: int


def plan_path(t: Tree) -> PathPlan:
    """Build the sweep schedule for a spider-free, non-star,
    non-double-star tree."""
    if t.n < 3:
        raise ValueError("path plans need at least 3 vertices")
    if is_star(t):
        raise ValueError("tree is a star; no path plan (probe the centre twice)")
    if is_double_star(t):
        raise ValueError("tree is a double star; no path plan")
    path = covering_path(t)
    if path is None:
        raise NoWinningSequenceError(
            "no covering path: the tree contains a three-arm spider of depth 3")

    degrees = []
    orders = []
    r = len(path)
    for i, v in enumerate(path):
        internal = [u for u in t.adjacency[v] if t.degree(u) >= 2]
        if len(internal) < 2:
            raise RuntimeError(
                f"covering-path vertex {v} has fewer than 2 internal neighbours; "
                "sweep schedule is unsound for this tree")
        order = []
        if i > 0:
            order.append(path[i - 1])
        pinned = {path[i - 1] if i > 0 else -1, path[i + 1] if i < r - 1 else -1}
        order.extend(u for u in internal if u not in pinned)
        if i < r - 1:
            order.append(path[i + 1])
        degrees.append(len(internal))
        orders.append(tuple(order))

    offsets = [2]
    for b in degrees[:-1]:
        offsets.append(offsets[-1] + 2 * b - 3)
    half = offsets[-1] + 2 * degrees[-1] - 3

    if 2 * half != total_required_visits(t):
        raise RuntimeError("sweep schedule length disagrees with the visit lower bound")
    return PathPlan(tuple(path), tuple(degrees), tuple(orders), tuple(offsets), half)


def cat_sequence(t: Tree) -> list[int]:
    """A shortest unbeatable probe sequence for the tree.

    Raises NoWinningSequenceError when the tree contains the spider
    S(3,3,3) (then no finite sequence wins).
    """
    if t.n < 2:
        raise ValueError("the game needs at least 2 vertices")
    if t.n == 2:
        return [0, 0]
    if is_star(t):
        center = next(v for v in range(t.n) if t.degree(v) >= 2)
        return [center, center]
    if is_double_star(t):
        v, w = sorted(u for u in range(t.n) if t.degree(u) >= 2)
        return [v, w, w, v]

    plan = plan_path(t)
    half: dict[int, int] = {}

    def put(pos: int, vertex: int) -> None:
        if half.setdefault(pos, vertex) != vertex:
            raise RuntimeError(f"sweep schedule wrote position {pos} twice inconsistently")

    for i, v in enumerate(plan.path):
        b = plan.internal_degrees[i]
        start = plan.offsets[i]
        for pos in range(start, start + 2 * b - 3, 2):
            put(pos, v)
        for k, w in enumerate(plan.probe_orders[i], 1):
            put(start + 2 * k - 3, w)

    tlen = plan.half_length
    if sorted(half) != list(range(1, tlen + 1)):
        raise RuntimeError("sweep schedule left gaps")
    first = [half[pos] for pos in range(1, tlen + 1)]
    return first + first[::-1]
