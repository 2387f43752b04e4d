"""Mouse-side play: a complete escape oracle for arbitrary graphs plus
the two explicit evasion recipes that certify the lower bounds.

The oracle (beat) decides whether any walk dodges a given probe
sequence and reconstructs one if so. The recipes are constructive: one
survives any finite sequence on the spider S(3,3,3), the other beats
any sequence that probes some vertex fewer times than required. Both
consume the whole probe sequence up front -- the mouse may need to know
the future arbitrarily far ahead to commit to an arm.

Canonical spider labelling, exported as SPIDER333: hub = 0; arm j in
{0,1,2} is the path leaf 3j+1 -- mid 3j+2 -- inner 3j+3 -- hub.
"""

from __future__ import annotations

from .capture import required_visits
from .graphs import Graph, Tree, internal_degree
from .solver import forward_evasion_sets, vertices_of

HUB = 0
_ARMS = ((1, 2, 3), (4, 5, 6), (7, 8, 9))  # (leaf, mid, inner) per arm

SPIDER333 = Tree(
    10,
    adjacency=(
        (3, 6, 9),
        (2,), (1, 3), (0, 2),
        (5,), (4, 6), (0, 5),
        (8,), (7, 9), (0, 8),
    ),
)


def beats(g: Graph, probes: list[int], positions: list[int]) -> bool:
    """True iff positions is a valid mouse walk that dodges every probe."""
    if len(positions) != len(probes) or not probes:
        return False
    for i, (m, c) in enumerate(zip(positions, probes)):
        if not 0 <= m < g.n or m == c:
            return False
        if i > 0 and m not in g.adjacency[positions[i - 1]]:
            return False
    return True


def beat(g: Graph, probes: list[int]) -> list[int] | None:
    """A mouse walk dodging every probe, or None iff none exists.

    Runs the forward evasion sets and, when the final set is nonempty,
    walks a witness backwards, taking the smallest vertex at each step.
    """
    if g.n < 2:
        raise ValueError("the game needs at least 2 vertices")
    sets = forward_evasion_sets(g, probes)
    if len(sets) < len(probes) or sets[-1] == 0:
        return None
    walk = [min(vertices_of(sets[-1]))]
    for i in range(len(probes) - 2, -1, -1):
        nxt = walk[-1]
        walk.append(min(v for v in vertices_of(sets[i]) if nxt in g.adjacency[v]))
    walk.reverse()
    return walk


def spider333_mouse(probes: list[int]) -> list[int]:
    """A walk on SPIDER333 that beats the given probe sequence.

    The mouse sits on the hub at every odd time it safely can. While the
    hub is probed over a stretch of odd times it retreats down one arm,
    chosen so that both the descent and the return move are safe; the
    smallest such arm is taken. Even times are filled in from the
    neighbouring odd positions.
    """
    if not probes:
        raise ValueError("empty probe sequence")
    if any(not 0 <= c < 10 for c in probes):
        raise ValueError("probe sequence is not over the canonical 10-vertex spider")

    want = len(probes)
    # The recipe defines even positions from both odd neighbours, so work
    # on an odd-length sequence and truncate afterwards. The padding
    # probe is arbitrary; a leaf keeps it out of the hub bookkeeping.
    c = list(probes) if want % 2 == 1 else list(probes) + [_ARMS[0][0]]
    t = len(c)
    c = [None] + c  # 1-indexed
    m: list[int | None] = [None] * (t + 1)

    for i in range(1, t + 1, 2):
        if c[i] != HUB:
            m[i] = HUB

    # Maximal runs of consecutive odd hub-probes share one arm.
    i = 1
    while i <= t:
        if c[i] == HUB:
            end = i
            while end + 2 <= t and c[end + 2] == HUB:
                end += 2
            arm = _pick_arm_spider(c, t, i, end)
            for j in range(i, end + 1, 2):
                m[j] = _ARMS[arm][1]
            i = end + 2
        else:
            i += 2

    for i in range(2, t + 1, 2):
        a, b = m[i - 1], m[i + 1]
        if a == HUB and b == HUB:
            m[i] = next(_ARMS[j][2] for j in range(3) if c[i] != _ARMS[j][2])
        elif a == HUB or b == HUB:
            mid = b if a == HUB else a
            arm = next(j for j in range(3) if _ARMS[j][1] == mid)
            inner = _ARMS[arm][2]
            if c[i] == inner:
                raise RuntimeError("spider evasion recipe broke: return move is probed")
            m[i] = inner
        else:
            # Both odd neighbours retreated; the run structure forces the
            # same arm on both sides.
            if a != b:
                raise RuntimeError("spider evasion recipe broke: arms disagree across an even step")
            arm = next(j for j in range(3) if _ARMS[j][1] == a)
            leaf, _, inner = _ARMS[arm]
            m[i] = leaf if c[i] != leaf else inner

    walk = [v for v in m[1 : want + 1]]
    if not beats(SPIDER333, list(probes), walk):
        raise RuntimeError("spider evasion recipe produced an invalid walk")
    return walk


def _pick_arm_spider(c: list, t: int, start: int, end: int) -> int:
    # The move onto the arm (at start-1) and back off it (at end+1) must
    # dodge that arm's inner vertex; at most two arms are ruled out.
    banned = set()
    if start > 1:
        banned.add(c[start - 1])
    if end + 1 <= t:
        banned.add(c[end + 1])
    for j in range(3):
        if _ARMS[j][2] not in banned:
            return j
    raise RuntimeError("spider evasion recipe broke: every arm is blocked")


def undervisited_mouse(t: Tree, v: int, probes: list[int]) -> list[int]:
    """A walk beating any sequence that probes v fewer times than required.

    The mouse camps on v at every time of one parity class -- the class
    chosen so its v-probes are sparse enough -- and dodges among v's
    neighbours at the other times. When v itself is probed during camp
    times, it retreats past one internal neighbour, picked so the whole
    excursion is safe.
    """
    if t.n < 3:
        raise ValueError("needs a tree with >= 3 vertices")
    if t.degree(v) < 2:
        raise ValueError("the camped vertex must be internal")
    need = required_visits(t, v)
    visits = probes.count(v)
    if visits >= need:
        raise ValueError(f"vertex {v} is probed {visits} times, not fewer than {need}")
    if not probes:
        raise ValueError("empty probe sequence")

    length = len(probes)
    c = [None] + list(probes)  # 1-indexed
    odd_visits = sum(1 for i in range(1, length + 1, 2) if c[i] == v)
    even_visits = visits - odd_visits

    if need == 2:
        parity = 1 if odd_visits == 0 else 2
        assert (odd_visits if parity == 1 else even_visits) == 0
        return _camp_and_dodge(t, v, c, length, parity)

    r = internal_degree(t, v)
    budget = r - 2
    parity = 1 if odd_visits <= budget else 2
    if parity == 2 and even_visits > budget:
        raise RuntimeError("undervisited recipe broke: both parity classes over budget")
    return _camp_and_retreat(t, v, c, length, parity)


def _camp_and_dodge(t: Tree, v: int, c: list, length: int, parity: int) -> list[int]:
    # required_visits == 2: v is never probed at camp times, so the mouse
    # never leaves distance 1. Dodge between the two smallest neighbours.
    u, w = t.adjacency[v][:2]
    m = [None] * (length + 1)
    for i in range(1, length + 1):
        if i % 2 == parity % 2:
            m[i] = v
        else:
            m[i] = u if c[i] != u else w
    walk = m[1:]
    if not beats(t, c[1:], walk):
        raise RuntimeError("camp-and-dodge recipe produced an invalid walk")
    return walk


def _camp_and_retreat(t: Tree, v: int, c: list, length: int, parity: int) -> list[int]:
    # required_visits > 2: r >= 3 internal neighbours. Runs of camp-time
    # v-probes send the mouse out to w[j], two steps from v, through
    # u[j]; the arm is chosen so no surrounding off-time probe hits u[j].
    us = [u for u in t.adjacency[v] if t.degree(u) >= 2]
    ws = [min(x for x in t.adjacency[u] if x != v) for u in us]
    r = len(us)
    m = [None] * (length + 1)

    camp = [i for i in range(1, length + 1) if i % 2 == parity % 2]
    for i in camp:
        if c[i] != v:
            m[i] = v
    idx = 0
    while idx < len(camp):
        i = camp[idx]
        if c[i] == v:
            end_idx = idx
            while end_idx + 1 < len(camp) and c[camp[end_idx + 1]] == v:
                end_idx += 1
            end = camp[end_idx]
            k = (end - i) // 2
            if k > r - 3:
                raise RuntimeError("undervisited recipe broke: camp-probe run too long")
            banned = {c[j] for j in range(i - 1, end + 2) if 1 <= j <= length and j % 2 != parity % 2}
            arm = next((j for j in range(r) if us[j] not in banned), -1)
            if arm == -1:
                raise RuntimeError("undervisited recipe broke: every retreat arm is blocked")
            for j in range(i, end + 1, 2):
                m[j] = ws[arm]
            idx = end_idx + 1
        else:
            idx += 1

    for i in range(1, length + 1):
        if i % 2 == parity % 2:
            continue
        a = m[i - 1] if i > 1 else None
        b = m[i + 1] if i < length else None
        side = a if a is not None and a != v else b
        if side is None or side == v:
            # Between two camp stays (or at the boundary next to one):
            # step onto any internal neighbour the probe misses.
            arm = next(j for j in range(r) if c[i] != us[j])
            m[i] = us[arm]
        else:
            if a is not None and b is not None and a != v and b != v and a != b:
                raise RuntimeError("undervisited recipe broke: retreats disagree across a step")
            arm = ws.index(side)
            if c[i] == us[arm]:
                raise RuntimeError("undervisited recipe broke: retreat path is probed")
            m[i] = us[arm]

    walk = m[1:]
    if not beats(t, c[1:], walk):
        raise RuntimeError("camp-and-retreat recipe produced an invalid walk")
    return walk
