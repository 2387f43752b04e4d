"""Cat-and-mouse probe-evasion game on graphs.

The cat probes one vertex per time step; the invisible mouse must move
along an edge after every miss. This package classifies the trees on
which the cat can force a win, synthesizes shortest unbeatable probe
sequences and matching mouse escapes, and checks everything against an
exact evasion-set solver.
"""

from .capture import capture_time, prune, required_visits, total_required_visits
from .cat import NoWinningSequenceError, PathPlan, cat_sequence, plan_path
from .classify import contains_spider333, covering_path, is_double_star, is_star
from .graphs import (
    Graph,
    GraphError,
    Tree,
    as_tree,
    graph_from_edges,
    internal_degree,
    leaves,
    parse_graph,
    serialize_graph,
    tree_from_edges,
    twigs,
)
from .mouse import SPIDER333, beat, beats, spider333_mouse, undervisited_mouse
from .solver import (
    CaptureResult,
    evasion_step,
    forward_evasion_sets,
    mask_of,
    min_capture_time,
    neighbor_masks,
    verify_unbeatable,
    vertices_of,
)
from .treegen import all_labeled_trees, random_spider333_supertree, random_tree, tree_from_prufer

__version__ = "0.1.0"

__all__ = [
    "CaptureResult",
    "Graph",
    "GraphError",
    "NoWinningSequenceError",
    "PathPlan",
    "SPIDER333",
    "Tree",
    "all_labeled_trees",
    "as_tree",
    "beat",
    "beats",
    "capture_time",
    "cat_sequence",
    "contains_spider333",
    "covering_path",
    "evasion_step",
    "forward_evasion_sets",
    "graph_from_edges",
    "internal_degree",
    "is_double_star",
    "is_star",
    "leaves",
    "mask_of",
    "min_capture_time",
    "neighbor_masks",
    "parse_graph",
    "plan_path",
    "prune",
    "random_spider333_supertree",
    "random_tree",
    "required_visits",
    "serialize_graph",
    "spider333_mouse",
    "total_required_visits",
    "tree_from_edges",
    "tree_from_prufer",
    "twigs",
    "undervisited_mouse",
    "verify_unbeatable",
    "vertices_of",
]
