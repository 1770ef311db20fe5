"""Command-line interface.

Subcommands: validate, minimize, equiv, solve, export-dot.  Exit codes:
0 success (or "equivalent"), 1 negative verdict or invalid input,
2 usage or I/O error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .errors import NonTermination, RbrError
from .formats import export_dot, parse_game, read_graph, serialize_rbr
from .games import Game, make_binary_game, make_guess_average_game, make_sequence_game
from .games import strategy_label
from .graph import NO_NODE, RbrGraph
from .minimize import minimise
from .partition import finest_partition, disjoint_union
from .solve import doxastic_rationalisability, rational_solution
from . import __version__


def _load_graph(path: str) -> RbrGraph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def _resolve_game(spec: str, g: RbrGraph) -> Game:
    """A builtin game spec string, or a path to a game document."""
    if spec == "binary":
        return make_binary_game(g.agents)
    if spec.startswith("gk:"):
        return make_sequence_game(g.agents, int(spec.split(":", 1)[1]))
    if spec.startswith("guess23:"):
        _, count, max_int = spec.split(":")
        count = int(count)
        if count != g.num_agents:
            raise RbrError(
                f"guess23 wants {count} agents but the graph has {g.num_agents}"
            )
        return make_guess_average_game(count, int(max_int), agents=g.agents)
    with open(spec, encoding="utf-8") as fh:
        game = parse_game(fh.read())
    if game.agents != g.agents:
        raise RbrError(
            f"game agents {game.agents} differ from graph agents {g.agents}"
        )
    return game


def _set_text(game: Game, a: int, entry: frozenset) -> str:
    ordered = sorted(entry, key=game.strategies[a].index)
    return "{" + ",".join(strategy_label(game, s) for s in ordered) + "}"


def cmd_validate(args) -> int:
    try:
        g = _load_graph(args.graph)
    except RbrError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    print(f"valid: {g.num_nodes} nodes, {g.num_agents} agents")
    return 0


def cmd_minimize(args) -> int:
    g = _load_graph(args.graph)
    report = minimise(g)
    text = serialize_rbr(report.output)
    print(f"{g.num_nodes} -> {report.output.num_nodes} nodes "
          f"({report.refinement_rounds} refinement rounds)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_equiv(args) -> int:
    ga = _load_graph(args.graph_a)
    gb = _load_graph(args.graph_b)
    if ga.agents != gb.agents:
        print("not equivalent: agent universes differ", file=sys.stderr)
        return 1
    da, db = ga.designation_domain(), gb.designation_domain()
    if da != db:
        print("not equivalent: designation domains differ")
        return 1
    p = finest_partition(disjoint_union(ga, gb))
    verdict = 0
    for a in sorted(da):
        same = p.same_block(ga.designated[a], ga.num_nodes + gb.designated[a])
        state = "same" if same else "differ"
        print(f"agent {ga.agents[a]}: hierarchies {state}")
        if not same:
            verdict = 1
    print("equivalent" if verdict == 0 else "not equivalent")
    return verdict


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    game = _resolve_game(args.game, g)
    if args.trace:
        report = rational_solution(
            g, game, keep_trace=True, max_iterations=args.max_iterations
        )
        rounds = len(report.trace) - 1
        cells = [
            [_set_text(game, g.labels[n], report.trace[i][n]) for i in range(1, rounds + 1)]
            for n in g.nodes()
        ]
        widths = [
            max(len(cells[n][i]) for n in g.nodes()) for i in range(rounds)
        ]
        name_w = max(len(name) for name in g.node_names)
        header = " ".join(f"{i + 1:>{widths[i]}}" for i in range(rounds))
        print(f"{'node':<{name_w}} {header}")
        for n in g.nodes():
            row = " ".join(f"{cells[n][i]:>{widths[i]}}" for i in range(rounds))
            print(f"{g.node_names[n]:<{name_w}} {row}")
    result = doxastic_rationalisability(g, game)
    for a in range(g.num_agents):
        print(f"agent {g.agents[a]}: {_set_text(game, a, result[a])}")
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(_load_graph(args.graph)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbr",
        description="RBR graphs: validation, minimisation, equivalence, "
        "and doxastic rationalisability.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph document")
    p.add_argument("graph")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("minimize", help="compress to minimal canonical form")
    p.add_argument("graph")
    p.add_argument("--out", help="write the minimised graph to this path")
    p.set_defaults(run=cmd_minimize)

    p = sub.add_parser("equiv", help="decide equivalence of two graphs")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.set_defaults(run=cmd_equiv)

    p = sub.add_parser("solve", help="doxastic rationalisability of a game")
    p.add_argument("graph")
    p.add_argument(
        "game",
        help="game document path, or builtin spec: "
        "guess23:<agents>:<max> | gk:<k> | binary",
    )
    p.add_argument("--trace", action="store_true", help="print per-round sets")
    p.add_argument(
        "--max-iterations",
        type=int,
        default=None,
        help="override the iteration safety bound (testing only)",
    )
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("export-dot", help="write DOT to standard output")
    p.add_argument("graph")
    p.set_defaults(run=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonTermination, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except RbrError as exc:
        # Bad input to any command other than validate (which reports
        # invalid graphs as its own negative verdict).
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
