"""Graph and tree primitives for the probe-evasion game.

Vertices are dense 0-based ids. Graphs parsed from edge-list text keep
their original integer labels so results can be reported in the input's
own vocabulary. Neighbour lists are kept sorted, which makes every
"pick the smallest" tie-break downstream deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed edge-list input, or a graph that is not a tree."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``adjacency[v]`` is the sorted tuple of neighbours of v and
    ``labels[v]`` is the original input label of v (defaults to v).
    Instances are immutable and safe to share between tasks.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if len(self.adjacency) != self.n or len(self.labels) != self.n:
            raise GraphError("adjacency/labels size does not match vertex count")
        edge_set = set()
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise GraphError(f"neighbours of {v} not sorted/unique")
                prev = u
                edge_set.add((v, u))
        for v, u in edge_set:
            if (u, v) not in edge_set:
                raise GraphError(f"edge {v}-{u} is not symmetric")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(v, u) for v in range(self.n) for u in self.adjacency[v] if v < u]

    @cached_property
    def label_to_id(self) -> dict[int, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def id_of(self, label: int) -> int:
        try:
            return self.label_to_id[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label}") from None


class Tree(Graph):
    """Connected acyclic graph; the only arena where the cat can win."""

    def __post_init__(self):
        super().__post_init__()
        if self.edge_count() >= self.n:
            raise GraphError("graph has a cycle, not a tree")
        if not is_connected(self):
            raise GraphError("graph is disconnected, not a tree")


def graph_from_edges(edges: Iterable[tuple[int, int]], n: int | None = None,
                     labels: Sequence[int] = ()) -> Graph:
    """Build a Graph from id pairs; n defaults to max id + 1."""
    edges = list(edges)
    if n is None:
        n = max((max(u, v) for u, v in edges), default=-1) + 1
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n, adjacency, tuple(labels))


def tree_from_edges(edges: Iterable[tuple[int, int]], n: int | None = None,
                    labels: Sequence[int] = ()) -> Tree:
    return as_tree(graph_from_edges(edges, n, labels))


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one "u v" integer pair per line.

    Lines starting with '#' and blank lines are ignored. Labels need not
    be contiguous; they are mapped to dense ids in ascending label order.
    Raises GraphError naming the offending line on duplicate edges,
    self-loops, or non-integer tokens.
    """
    labeled_edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphError(f"line {lineno}: expected two vertex labels, got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token in {line!r}") from None
        if a == b:
            raise GraphError(f"line {lineno}: self-loop at {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {a} {b} (first on line {seen[key]})")
        seen[key] = lineno
        labeled_edges.append((a, b))

    labels = sorted({x for e in labeled_edges for x in e})
    ids = {lab: i for i, lab in enumerate(labels)}
    return graph_from_edges([(ids[a], ids[b]) for a, b in labeled_edges],
                            n=len(labels), labels=labels)


def serialize_graph(g: Graph) -> str:
    """Edge-list text: one edge per line as original labels, endpoints
    ascending within a line, lines sorted. parse_graph round-trips it."""
    lines = sorted(tuple(sorted((g.labels[u], g.labels[v]))) for u, v in g.edges())
    return "".join(f"{a} {b}\n" for a, b in lines)


def as_tree(g: Graph) -> Tree:
    """Refine a Graph into a Tree; GraphError if it has a cycle or is
    disconnected."""
    if isinstance(g, Tree):
        return g
    return Tree(g.n, g.adjacency, g.labels)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    return count == g.n


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Distance from the nearest source to every vertex (-1 if unreachable)."""
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        if dist[s] == -1:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.adjacency[v]:
            if dist[u] == -1:
                dist[u] = d
                queue.append(u)
    return dist


def tree_path(t: Tree, a: int, b: int) -> list[int]:
    """The unique path from a to b."""
    parent = {a: a}
    queue = deque([a])
    while b not in parent:
        v = queue.popleft()
        for u in t.adjacency[v]:
            if u not in parent:
                parent[u] = v
                queue.append(u)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def internal_degree(t: Tree, v: int) -> int:
    """Number of neighbours of v that are not leaves."""
    return sum(1 for u in t.adjacency[v] if len(t.adjacency[u]) >= 2)


def leaves(t: Tree) -> frozenset[int]:
    """Vertices of degree 1."""
    return frozenset(v for v in range(t.n) if len(t.adjacency[v]) == 1)


def twigs(t: Tree) -> frozenset[int]:
    """Vertices of degree >= 2 with at least degree-1 leaf neighbours."""
    out = set()
    for v in range(t.n):
        d = len(t.adjacency[v])
        if d < 2:
            continue
        leaf_nbrs = sum(1 for u in t.adjacency[v] if len(t.adjacency[u]) == 1)
        if leaf_nbrs >= d - 1:
            out.add(v)
    return frozenset(out)
