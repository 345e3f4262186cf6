"""Command-line interface.

Exit codes: 0 success (or: extension holds), 1 solve/oracle failure (or:
extension violated), 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import fileio
from .explore import (DriverConfig, ExplorationStrategy, GameExpander,
                      run_driver)
from .game import Player, check_extension
from .generators import (GenSpec, complete_randomly, gen_extension,
                         gen_random, gen_safety_family)
from .solvers import SolverKind, brute_force_oracle, partial_solve

_SOLVER_NAMES = [k.value for k in SolverKind]
_STRATEGY_NAMES = [s.value for s in ExplorationStrategy]


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    loaded = fileio.load(args.file)
    players = (Player.EVEN, Player.ODD)
    if args.player == "even":
        players = (Player.EVEN,)
    elif args.player == "odd":
        players = (Player.ODD,)
    kind = SolverKind.from_name(args.solver)
    t0 = time.perf_counter()
    sol = partial_solve(loaded.game, kind, players)
    ms = (time.perf_counter() - t0) * 1000
    _write(fileio.format_result(sol, loaded.game,
                                explored=loaded.game.num_vertices,
                                solver_calls=1, explore_ms=0, solve_ms=ms,
                                original_ids=loaded.original_ids),
           args.output)
    return 0


def _cmd_explore(args) -> int:
    loaded = fileio.load(args.file)
    if not loaded.game.is_complete():
        raise ValueError("universe file must describe a complete game")
    root = loaded.compact_id(args.root)
    designated = loaded.compact_id(args.designated)
    cfg = DriverConfig(
        solver=SolverKind.from_name(args.solver),
        strategy=ExplorationStrategy.from_name(args.strategy),
        designated=designated,
        solve_time_ratio=args.ratio,
        batch_min=args.batch_min,
        seed=args.seed,
        logical_cost=args.logical_cost,
    )
    report = run_driver(GameExpander(loaded.game), root, cfg)
    winner = "?" if report.decided_winner is None else str(int(report.decided_winner))
    # map snapshot ids back to the universe file's original ids
    orig = np.asarray([int(loaded.original_ids[k]) for k in report.keys])
    out = [f"designated {args.designated} winner {winner}"]
    out.append(fileio.format_result(
        report.final_solution, report.final_game,
        explored=report.vertices_explored, solver_calls=report.solver_calls,
        explore_ms=report.explore_seconds * 1000,
        solve_ms=report.solve_seconds * 1000,
        original_ids=orig).rstrip("\n"))
    _write("\n".join(out) + "\n", args.output)
    return 0


def _cmd_gen(args) -> int:
    if args.family == "random":
        spec = GenSpec(vertex_count=args.vertices,
                       max_out_degree=args.max_out_degree,
                       priority_range=(0, args.max_priority),
                       sink_probability=args.sink_prob,
                       incomplete_fraction=args.incomplete_frac,
                       seed=args.seed)
        _write(fileio.serialize(gen_random(spec)), args.output)
        return 0
    if args.family == "safety":
        _write(fileio.serialize(gen_safety_family(args.depth, args.violation)),
               args.output)
        return 0
    # extension-chain: a base game plus ⊑-increasing completions
    spec = GenSpec(vertex_count=args.vertices,
                   max_out_degree=args.max_out_degree,
                   priority_range=(0, args.max_priority),
                   sink_probability=args.sink_prob,
                   incomplete_fraction=max(args.incomplete_frac, 0.3),
                   seed=args.seed)
    g = gen_random(spec)
    prefix = args.output or "chain"
    chain = [g]
    for _ in range(args.steps - 1):
        chain.append(gen_extension(chain[-1], seed=args.seed + len(chain)))
    chain.append(complete_randomly(chain[-1], seed=args.seed + len(chain)))
    for i, snap in enumerate(chain):
        with open(f"{prefix}-{i}.pg", "w", encoding="utf-8") as fh:
            fh.write(fileio.serialize(snap))
    print(f"wrote {len(chain)} files: {prefix}-0.pg .. {prefix}-{len(chain)-1}.pg")
    return 0


def _cmd_oracle(args) -> int:
    loaded = fileio.load(args.file)
    t0 = time.perf_counter()
    sol = brute_force_oracle(loaded.game, max_vertices=args.max_vertices)
    ms = (time.perf_counter() - t0) * 1000
    _write(fileio.format_result(sol, loaded.game,
                                explored=loaded.game.num_vertices,
                                solver_calls=1, explore_ms=0, solve_ms=ms,
                                original_ids=loaded.original_ids),
           args.output)
    return 0


def _cmd_check_extension(args) -> int:
    g1 = fileio.load(args.file1).game
    g2 = fileio.load(args.file2).game
    return 0 if check_extension(g1, g2) else 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pgsolve",
                                description="Parity game solving, on the fly")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve a game file")
    sp.add_argument("file")
    sp.add_argument("--solver", choices=_SOLVER_NAMES, default="full")
    sp.add_argument("--player", choices=["even", "odd", "both"], default="both")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_solve)

    ep = sub.add_parser("explore",
                        help="explore a stored universe with on-the-fly solving")
    ep.add_argument("file")
    ep.add_argument("--root", type=int, required=True)
    ep.add_argument("--designated", type=int, required=True)
    ep.add_argument("--solver", choices=_SOLVER_NAMES, default="partial")
    ep.add_argument("--strategy", choices=_STRATEGY_NAMES, default="bfs")
    ep.add_argument("--ratio", type=float, default=0.10)
    ep.add_argument("--batch-min", type=int, default=64)
    ep.add_argument("--seed", type=int, default=0)
    ep.add_argument("--logical-cost", action="store_true")
    ep.add_argument("-o", "--output", default=None)
    ep.set_defaults(func=_cmd_explore)

    gp = sub.add_parser("gen", help="generate game files")
    gp.add_argument("family", choices=["random", "safety", "extension-chain"])
    gp.add_argument("--vertices", type=int, default=20)
    gp.add_argument("--max-out-degree", type=int, default=3)
    gp.add_argument("--max-priority", type=int, default=5)
    gp.add_argument("--sink-prob", type=float, default=0.1)
    gp.add_argument("--incomplete-frac", type=float, default=0.0)
    gp.add_argument("--depth", type=int, default=10)
    gp.add_argument("--violation", action="store_true")
    gp.add_argument("--steps", type=int, default=3)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("-o", "--output", default=None)
    gp.set_defaults(func=_cmd_gen)

    op = sub.add_parser("oracle", help="brute-force solve a small game file")
    op.add_argument("file")
    op.add_argument("--max-vertices", type=int, default=12)
    op.add_argument("-o", "--output", default=None)
    op.set_defaults(func=_cmd_oracle)

    cp = sub.add_parser("check-extension",
                        help="exit 0 iff the second game extends the first")
    cp.add_argument("file1")
    cp.add_argument("file2")
    cp.set_defaults(func=_cmd_check_extension)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
