"""Exact game solver: shortest unbeatable probe sequence by BFS over
evasion sets.

An evasion set is the set of vertices the mouse could currently occupy
given the probes so far, encoded as an int bitmask. Probing removes one
vertex; the forced move replaces the set with the union of its members'
neighbourhoods. The cat has won exactly when a set empties right after a
probe. Plain BFS over these sets from the full vertex set gives the
minimum capture time, a witness sequence, or -- when the empty set is
unreachable -- a finite closed certificate that the mouse survives
forever. No pruning is applied, so BFS layers equal exact sequence
lengths.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, is_connected

# 2^n states must stay enumerable; beyond this the search is hopeless anyway.
MAX_SOLVER_VERTICES = 20


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def neighbor_masks(g: Graph) -> list[int]:
    """Per-vertex bitmask of neighbours."""
    return [mask_of(g.adjacency[v]) for v in range(g.n)]


def evasion_step(g: Graph, s: int, probe: int) -> tuple[int, int]:
    """One probe against evasion set s.

    Returns (after_probe, after_move): s minus the probed vertex, then
    the union of neighbourhoods of what is left (the mouse must move).
    The empty after_probe means the cat has certainly won.
    """
    if not 0 <= probe < g.n:
        raise ValueError(f"probe {probe} out of range")
    after_probe = s & ~(1 << probe)
    after_move = 0
    m = after_probe
    adjacency = g.adjacency
    while m:
        low = m & -m
        for u in adjacency[low.bit_length() - 1]:
            after_move |= 1 << u
        m ^= low
    return after_probe, after_move


def forward_evasion_sets(g: Graph, probes: Sequence[int]) -> list[int]:
    """After-probe evasion sets for a probe sequence, starting from the
    full vertex set; stops early once a set empties (cat has won)."""
    if not probes:
        raise ValueError("empty probe sequence")
    masks = neighbor_masks(g)
    out = []
    s = (1 << g.n) - 1
    for c in probes:
        if not 0 <= c < g.n:
            raise ValueError(f"probe {c} out of range")
        s &= ~(1 << c)
        out.append(s)
        if s == 0:
            break
        nxt = 0
        m = s
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        s = nxt
    return out


def verify_unbeatable(g: Graph, probes: Sequence[int]) -> bool:
    """True iff the probe sequence certainly catches the mouse."""
    if g.n < 2:
        raise ValueError("the game needs at least 2 vertices")
    sets = forward_evasion_sets(g, probes)
    return sets[-1] == 0


@dataclass(frozen=True)
class CaptureResult:
    """Outcome of the exact search.

    steps is math.inf when the mouse survives forever; then certificate
    holds every reachable evasion set (closed under all probe
    transitions, never empty). Otherwise witness is a shortest
    unbeatable probe sequence of length steps.
    """

    steps: int | float
    witness: tuple[int, ...] | None
    certificate: frozenset[int] | None

    @property
    def finite(self) -> bool:
        return self.steps != math.inf


def _move_tables(masks: list[int], n: int) -> list[tuple[int, list[int]]]:
    # Union-of-neighbourhoods per 8-bit chunk, so a move costs one table
    # lookup per chunk instead of a loop over set bits.
    tables = []
    for base in range(0, n, 8):
        width = min(8, n - base)
        tbl = [0] * (1 << width)
        for m in range(1, 1 << width):
            low = m & -m
            tbl[m] = tbl[m ^ low] | masks[base + low.bit_length() - 1]
        tables.append((base, tbl))
    return tables


def min_capture_time(g: Graph) -> CaptureResult:
    """Minimum capture time of a connected graph by exhaustive search."""
    if g.n == 1:
        raise ValueError("the game is not feasible on a single vertex")
    if g.n > MAX_SOLVER_VERTICES:
        raise ValueError(f"solver limited to {MAX_SOLVER_VERTICES} vertices, got {g.n}")
    if not is_connected(g):
        raise ValueError("graph is disconnected")

    n = g.n
    tables = _move_tables(neighbor_masks(g), n)
    full = (1 << n) - 1
    # parent[state] = (previous state, probe) for witness reconstruction.
    parent: dict[int, tuple[int, int] | None] = {full: None}
    queue = deque([full])

    if len(tables) == 1:
        tbl = tables[0][1]
        while queue:
            s = queue.popleft()
            for probe in range(n):
                after = s & ~(1 << probe)
                if after == 0:
                    return _finite_result(parent, s, probe)
                succ = tbl[after]
                if succ not in parent:
                    parent[succ] = (s, probe)
                    queue.append(succ)
    else:
        while queue:
            s = queue.popleft()
            for probe in range(n):
                after = s & ~(1 << probe)
                if after == 0:
                    return _finite_result(parent, s, probe)
                succ = 0
                for base, tbl in tables:
                    succ |= tbl[(after >> base) & 0xFF]
                if succ not in parent:
                    parent[succ] = (s, probe)
                    queue.append(succ)

    return CaptureResult(math.inf, None, frozenset(parent))


def _finite_result(parent: dict, state: int, last_probe: int) -> CaptureResult:
    probes = [last_probe]
    link = parent[state]
    while link is not None:
        state, probe = link
        probes.append(probe)
        link = parent[state]
    probes.reverse()
    return CaptureResult(len(probes), tuple(probes), None)
