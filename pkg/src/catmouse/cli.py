"""Command-line surface: classification, capture times, strategy
synthesis, the escape oracle, exhaustive cross-checking over all labeled
trees, and an interactive play mode.

Every command takes --json for a machine-readable report carrying the
same payload as the human output. Exit code 0 means no error and no
counterexample; cross-check counterexamples exit 2.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
import time
from collections import Counter
from pathlib import Path

from .capture import capture_time, prune, required_visits, total_required_visits
from .cat import NoWinningSequenceError, cat_sequence
from .classify import contains_spider333, covering_path, is_double_star, is_star
from .graphs import Graph, GraphError, Tree, as_tree, parse_graph, serialize_graph, leaves, twigs
from .mouse import beat
from .solver import min_capture_time, vertices_of, verify_unbeatable
from .treegen import all_labeled_trees, random_tree, tree_from_prufer

# ---------------------------------------------------------------------------
# Tree cross-checks used by `enumerate` and by the acceptance suite
# ---------------------------------------------------------------------------

CHECK_NAMES = ("formula", "catseq", "visits", "prune", "spider")


def _edge_text(t: Graph) -> str:
    return ";".join(f"{t.labels[u]} {t.labels[v]}" for u, v in t.edges())


def check_tree(tree: Tree, names) -> list[tuple[str, str]]:
    """Run the named cross-checks on one tree; returns (check, detail)
    failure pairs, empty when everything agrees."""
    failures = []
    where = _edge_text(tree)
    exact_steps = None

    def exact():
        nonlocal exact_steps
        if exact_steps is None:
            exact_steps = min_capture_time(tree).steps
        return exact_steps

    if "formula" in names:
        predicted = capture_time(tree)
        if exact() != predicted:
            failures.append(("formula", f"[{where}] formula={predicted} solver={exact()}"))

    seq = None
    if "catseq" in names or "visits" in names:
        try:
            seq = cat_sequence(tree)
        except NoWinningSequenceError:
            seq = None  # uncatchable tree; nothing to construct

    if "catseq" in names and seq is not None:
        want = total_required_visits(tree)
        if len(seq) != want:
            failures.append(("catseq", f"[{where}] length {len(seq)} != required total {want}"))
        if not verify_unbeatable(tree, seq):
            failures.append(("catseq", f"[{where}] constructed sequence is beatable"))
        if len(seq) > 1 and beat(tree, seq[:-1]) is None:
            failures.append(("catseq", f"[{where}] truncated sequence is still unbeatable"))

    if "visits" in names and seq is not None:
        counts = Counter(seq)
        for v in range(tree.n):
            if counts.get(v, 0) != required_visits(tree, v):
                failures.append((
                    "visits",
                    f"[{where}] vertex {tree.labels[v]} probed {counts.get(v, 0)} times, "
                    f"required {required_visits(tree, v)}"))
                break

    if "prune" in names:
        pruned = prune(tree)
        if pruned.n != tree.n and min_capture_time(pruned).steps != exact():
            failures.append((
                "prune",
                f"[{where}] m changed under pruning: {min_capture_time(pruned).steps} != {exact()}"))
        if not is_star(tree) and not is_star(pruned):
            want = tree.n + len(twigs(tree)) - len(leaves(tree))
            if pruned.n != want:
                failures.append(("prune", f"[{where}] pruned size {pruned.n} != n+t-l = {want}"))

    if "spider" in names:
        if contains_spider333(tree) != (covering_path(tree) is None):
            failures.append(("spider", f"[{where}] spider detection and covering path disagree"))

    return failures


def _corpus_shard(args):
    n, names, first = args
    count = 0
    failures = []
    for rest in itertools.product(range(n), repeat=n - 3):
        count += 1
        failures.extend(check_tree(tree_from_prufer((first,) + rest), names))
    return count, failures


def run_corpus_checks(n: int, names, limit: int | None = None,
                      sample: int | None = None, seed: int = 0,
                      workers: int = 1) -> tuple[int, list[tuple[str, str]]]:
    """Cross-check trees on n vertices: every labeled tree when
    3 <= n <= 8, or `sample` seeded random trees for larger n."""
    if sample is not None:
        rng = random.Random(seed)
        count = 0
        failures = []
        for _ in range(sample):
            count += 1
            failures.extend(check_tree(random_tree(n, rng), names))
        return count, failures

    if not 3 <= n <= 8:
        raise ValueError("exhaustive mode covers 3 <= n <= 8; use sampling beyond that")

    if workers > 1 and limit is None:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_corpus_shard, [(n, names, first) for first in range(n)])
        count = sum(c for c, _ in parts)
        failures = [f for _, fs in parts for f in fs]
        return count, failures

    count = 0
    failures = []
    trees = all_labeled_trees(n)
    if limit is not None:
        trees = itertools.islice(trees, limit)
    for tree in trees:
        count += 1
        failures.extend(check_tree(tree, names))
    return count, failures


# ---------------------------------------------------------------------------
# Command implementations: each returns (payload, exit_code)
# ---------------------------------------------------------------------------


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _labels(g: Graph, seq) -> list[int]:
    return [g.labels[v] for v in seq]


def _time_field(value) -> dict:
    finite = value != math.inf
    return {"finite": finite, "steps": int(value) if finite else None}


def _fmt_time(value) -> str:
    return "infinite" if value == math.inf else str(value)


def _say(args):
    """Human-output printer; silenced under --json."""
    if args.json:
        return lambda *a, **k: None
    return print


def cmd_classify(args) -> tuple[dict, int]:
    say = _say(args)
    g = _load_graph(args.graph)
    result: dict = {"n": g.n, "edges": g.edge_count()}
    try:
        t = as_tree(g)
        result["is_tree"] = True
    except GraphError as exc:
        result.update(is_tree=False, reason=str(exc), star=None, double_star=None,
                      spider_free=None, covering_path=None, capture_time=None)
        say(f"not a tree: {result['reason']} ({g.n} vertices, {result['edges']} edges)")
        return result, 0

    if t.n < 3:
        result.update(star=None, double_star=None, spider_free=None, covering_path=None,
                      capture_time=_time_field(capture_time(t)))
        say(f"tree on {t.n} vertices; capture time {_fmt_time(capture_time(t))}")
        return result, 0

    path = covering_path(t)
    spider = contains_spider333(t)
    mval = capture_time(t)
    result.update(
        star=is_star(t),
        double_star=is_double_star(t),
        spider_free=not spider,
        covering_path=None if path is None else _labels(t, path),
        capture_time=_time_field(mval),
    )
    kinds = []
    if result["star"]:
        kinds.append("star")
    if result["double_star"]:
        kinds.append("double star")
    shape = ", ".join(kinds) if kinds else "tree"
    if spider:
        say(f"{shape} on {t.n} vertices; contains the spider S(3,3,3); capture time infinite")
    else:
        path_text = " ".join(map(str, result["covering_path"]))
        say(f"{shape} on {t.n} vertices; spider-free; covering path {path_text}; "
            f"capture time {_fmt_time(mval)}")
    return result, 0


def cmd_mval(args) -> tuple[dict, int]:
    t = as_tree(_load_graph(args.graph))
    mval = capture_time(t)
    _say(args)(f"capture time {_fmt_time(mval)}")
    return {"n": t.n, "capture_time": _time_field(mval)}, 0


def cmd_solve(args) -> tuple[dict, int]:
    say = _say(args)
    g = _load_graph(args.graph)
    res = min_capture_time(g)
    result: dict = {"n": g.n, "capture_time": _time_field(res.steps)}
    if res.finite:
        result["witness"] = _labels(g, res.witness)
        result["certificate"] = None
        say(f"capture time {res.steps}; witness: {' '.join(map(str, result['witness']))}")
    else:
        cert = sorted(sorted(_labels(g, vertices_of(m))) for m in res.certificate)
        result["witness"] = None
        result["certificate"] = cert
        say(f"capture time infinite; {len(cert)} reachable evasion sets, none empty")
    return result, 0


def cmd_catseq(args) -> tuple[dict, int]:
    t = as_tree(_load_graph(args.graph))
    seq = cat_sequence(t)
    _say(args)(" ".join(str(t.labels[v]) for v in seq))
    return {"n": t.n, "length": len(seq), "sequence": _labels(t, seq)}, 0


def cmd_beat(args) -> tuple[dict, int]:
    say = _say(args)
    g = _load_graph(args.graph)
    probes = [g.id_of(int(tok)) for tok in args.sequence]
    walk = beat(g, probes)
    if walk is None:
        say("no escape")
        return {"n": g.n, "escape": False, "walk": None}, 0
    say("escape: " + " ".join(str(g.labels[v]) for v in walk))
    return {"n": g.n, "escape": True, "walk": _labels(g, walk)}, 0


def cmd_prune(args) -> tuple[dict, int]:
    t = as_tree(_load_graph(args.graph))
    pruned = prune(t)
    if not args.json:
        sys.stdout.write(serialize_graph(pruned))
    edges = [[pruned.labels[u], pruned.labels[v]] for u, v in pruned.edges()]
    return {"n_before": t.n, "n_after": pruned.n, "edges": edges}, 0


def cmd_enumerate(args) -> tuple[dict, int]:
    names = CHECK_NAMES if args.check == "all" else (args.check,)
    if args.n > 8:
        if args.limit is None:
            raise ValueError("n > 8 needs --limit to set the sample size")
        count, failures = run_corpus_checks(args.n, names, sample=args.limit, seed=args.seed)
    else:
        count, failures = run_corpus_checks(args.n, names, limit=args.limit,
                                            workers=args.workers)
    say = _say(args)
    say(f"{count} trees checked, {len(failures)} mismatches")
    for name, detail in failures:
        say(f"  {name}: {detail}")
    payload = {
        "n": args.n,
        "checks": list(names),
        "trees": count,
        "failures": [{"check": name, "detail": detail} for name, detail in failures],
    }
    return payload, (2 if failures else 0)


# ---------------------------------------------------------------------------
# Interactive play
# ---------------------------------------------------------------------------


def _ask(prompt: str) -> str | None:
    try:
        return input(prompt).strip()
    except EOFError:
        return None


def _ask_vertex(g: Graph, prompt: str, allowed=None) -> int | None:
    while True:
        text = _ask(prompt)
        if text is None or text.lower() in ("q", "quit"):
            return None
        try:
            v = g.id_of(int(text))
        except (ValueError, GraphError):
            print(f"  not a vertex label: {text}")
            continue
        if allowed is not None and v not in allowed:
            labels = " ".join(str(g.labels[u]) for u in sorted(allowed))
            print(f"  not adjacent; legal moves: {labels}")
            continue
        return v


def cmd_play(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    print(f"graph on {g.n} vertices: " + ", ".join(
        f"{g.labels[u]}-{g.labels[v]}" for u, v in g.edges()))
    if args.role == "mouse":
        return _play_human_mouse(as_tree(g))
    return _play_human_cat(g)


def _play_human_mouse(t: Tree) -> tuple[dict, int]:
    try:
        seq = cat_sequence(t)
    except NoWinningSequenceError as exc:
        raise ValueError(f"{exc}; play the cat side instead") from None
    print(f"you are the mouse; the cat has {len(seq)} probes. Pick a start hole.")
    transcript: dict = {"mode": "mouse", "probes": _labels(t, seq), "positions": [],
                        "caught": False, "steps": None}
    pos = _ask_vertex(t, "start> ")
    for i, probe in enumerate(seq, 1):
        if pos is None:
            print("session abandoned")
            return transcript, 0
        transcript["positions"].append(t.labels[pos])
        print(f"step {i}: cat probes {t.labels[probe]}")
        if pos == probe:
            print(f"caught at step {i}")
            transcript.update(caught=True, steps=i)
            return transcript, 0
        if i < len(seq):
            pos = _ask_vertex(t, "move> ", allowed=set(t.adjacency[pos]))
    print("you escaped the whole sequence")
    return transcript, 0


def _play_human_cat(g: Graph) -> tuple[dict, int]:
    print("you are the cat; probe holes until the mouse cannot have dodged you.")
    full = (1 << g.n) - 1
    s = full
    probes: list[int] = []
    transcript: dict = {"mode": "cat", "probes": [], "positions": None,
                        "caught": False, "steps": None}
    while True:
        probe = _ask_vertex(g, "probe> ")
        if probe is None:
            if probes:
                walk = beat(g, probes)
                if walk is not None:
                    print("the mouse survived, e.g.: " +
                          " ".join(str(g.labels[v]) for v in walk))
                    transcript["positions"] = _labels(g, walk)
            return transcript, 0
        probes.append(probe)
        transcript["probes"].append(g.labels[probe])
        s &= ~(1 << probe)
        if s == 0:
            n = len(probes)
            print(f"caught the mouse in {n} probes")
            transcript.update(caught=True, steps=n)
            return transcript, 0
        print(f"  no catch ({bin(s).count('1')} holes still possible)")
        nxt = 0
        for v in vertices_of(s):
            for u in g.adjacency[v]:
                nxt |= 1 << u
        s = nxt


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmouse",
        description="Cat-and-mouse probe-evasion game on graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("classify", cmd_classify, "tree? star? double star? spider-free? covering path")
    p.add_argument("graph")
    p = add("mval", cmd_mval, "capture time by the closed-form tree formula")
    p.add_argument("graph")
    p = add("solve", cmd_solve, "capture time by exhaustive search, with witness")
    p.add_argument("graph")
    p = add("catseq", cmd_catseq, "synthesize a shortest unbeatable probe sequence")
    p.add_argument("graph")
    p = add("beat", cmd_beat, "find a mouse walk dodging the given probes")
    p.add_argument("graph")
    p.add_argument("sequence", nargs="+", help="probe sequence as vertex labels")
    p = add("prune", cmd_prune, "delete leaves next to branching vertices")
    p.add_argument("graph")
    p = add("enumerate", cmd_enumerate, "cross-check all labeled trees on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--check", choices=CHECK_NAMES + ("all",), default="all")
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many trees (sample size when n > 8)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed for n > 8")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p = add("play", cmd_play, "interactive game in the terminal")
    p.add_argument("graph")
    p.add_argument("--role", choices=("mouse", "cat"), default="mouse")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        result, code = args.fn(args)
    except (GraphError, NoWinningSequenceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        report = {
            "command": args.command,
            "input": {"graph": getattr(args, "graph", None), "n": getattr(args, "n", None)},
            "result": result,
            "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
        }
        print(json.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
