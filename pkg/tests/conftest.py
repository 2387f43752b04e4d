"""Shared tree builders."""

from catmouse import tree_from_edges


def path_tree(k):
    return tree_from_edges([(i, i + 1) for i in range(k - 1)], n=k)


def star_tree(k):
    """Star with centre 0 and k leaves."""
    return tree_from_edges([(0, i) for i in range(1, k + 1)])


def spider_tree(*leg_lengths):
    """Spider with centre 0; legs numbered off sequentially."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_from_edges(edges)
