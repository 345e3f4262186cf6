"""Acceptance suite: worked-example goldens, equivalence and stability
properties at full scale, driver soundness over the whole strategy/solver
matrix, and the early-termination analogue on the safety family.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one summary
line per criterion.
"""

import time

import numpy as np

import pgsolve as pg
from pgsolve import (DriverConfig, ExplorationStrategy, GameExpander,
                     IncompleteGame, Player, SolverKind, VertexSet)
from pgsolve.generators import (GenSpec, adversarial_extension,
                                complete_randomly, gen_random,
                                gen_safety_family)

from conftest import fig1 as make_fig1
from conftest import fig2_full as make_fig2_full
from conftest import fig2_solid as make_fig2_solid

E, O = Player.EVEN, Player.ODD
PARTIAL_KINDS = [k for k in SolverKind if k is not SolverKind.FULL]


def report(n: int, ok: bool, text: str) -> None:
    print(f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {text}")
    assert ok, f"criterion {n} failed: {text}"


def vs(n, ids):
    return VertexSet.of(n, ids)


def test_criterion_1_fig1_goldens():
    g = make_fig1()
    ig = IncompleteGame.complete(g)
    u2 = vs(5, [2])
    # warm call, then time the exact golden computations
    pg.zielonka(g), pg.cpre(ig, E, u2), pg.attr(ig, E, u2)
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        sol = pg.zielonka(g)
        c = pg.cpre(ig, E, u2)
        a = pg.attr(ig, E, u2)
        best = min(best, time.perf_counter() - t0)
    ok = (sol.won_even == vs(5, [0, 1, 2]) and sol.won_odd == vs(5, [3, 4])
          and c == vs(5, [0]) and a.set == vs(5, [0, 2]) and best < 1e-3)
    report(1, ok, f"full solve + cpre + attr exact, {best * 1e3:.3f} ms")


def test_criterion_2_fig2_goldens():
    snap = make_fig2_solid()
    full = make_fig2_full()
    safe_e = pg.safe_set(snap, E)
    safe_o = pg.safe_set(snap, O)
    region = pg.solve_on_safe(snap, E)
    final = pg.zielonka(full)
    ok = (safe_e == vs(6, [0, 1, 2, 3])
          and safe_o == vs(6, [0, 1, 2, 4, 5])
          and region == vs(6, [0, 1, 2, 3])
          and final.won_even == vs(6, [0, 1, 2, 3]))
    report(2, ok, "safe sets, Even-safe partial solve, and persistence exact")


def test_criterion_3_safe_operator_equivalences():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    mismatches = 0
    games = 0
    for seed in range(1000):
        n = int(rng.integers(10, 201))
        g = gen_random(GenSpec(n, priority_range=(0, 5),
                               incomplete_fraction=float(rng.uniform(0.1, 0.5)),
                               sink_probability=0.1, seed=seed))
        games += 1
        fa = pg.fatal_attractors(g, use_safe_ops=False)
        fb = pg.fatal_attractors(g, use_safe_ops=True)
        if fa.won_even != fb.won_even or fa.won_odd != fb.won_odd:
            mismatches += 1
        for p in (E, O):
            if pg.forced_cycles(g, p, False) != pg.forced_cycles(g, p, True):
                mismatches += 1
            s = pg.safe_set(g, p)
            sub = pg.subgame(g, s)
            x = VertexSet(s.mask & (rng.random(g.size) < 0.3))
            c = int(rng.integers(0, 6))
            if pg.sattr(g, p, x).set != pg.attr(sub, p, x).set:
                mismatches += 1
            if pg.smattr(g, p, x, c) != pg.mattr(sub, p, x, c):
                mismatches += 1
            if pg.spre(g, p, x) != pg.cpre(sub, p, x):
                mismatches += 1
    took = time.perf_counter() - t0
    ok = mismatches == 0 and took < 60
    report(3, ok, f"{games} games, {mismatches} mismatches, {took:.1f}s")


def test_criterion_4_oracle_equivalence():
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    mismatches = 0
    for seed in range(1000):
        n = int(rng.integers(3, 13))
        g = gen_random(GenSpec(n, max_out_degree=3, sink_probability=0.15,
                               seed=seed + 50000))
        sol = pg.zielonka(g)
        ora = pg.brute_force_oracle(g)
        if sol.won_even != ora.won_even or sol.won_odd != ora.won_odd:
            mismatches += 1
    took = time.perf_counter() - t0
    ok = mismatches == 0 and took < 60
    report(4, ok, f"1000 games vs oracle, {mismatches} mismatches, {took:.1f}s")


def test_criterion_5_stability_and_adversarial_flips():
    rng = np.random.default_rng(5)
    violations = 0
    flips_checked = 0
    for seed in range(500):
        n = int(rng.integers(8, 60))
        g = gen_random(GenSpec(n, incomplete_fraction=float(rng.uniform(0.2, 0.6)),
                               sink_probability=0.1, seed=seed + 90000))
        sols = {k: pg.partial_solve(g, k) for k in PARTIAL_KINDS}
        for i in range(3):
            done = complete_randomly(g, seed=seed * 7 + i)
            full = pg.zielonka(done.game)
            for kind, sol in sols.items():
                for p in (E, O):
                    for v in sol.won(p).ids():
                        if full.winner_of(int(v)) != p:
                            violations += 1
        # Lemma 2: dominions leaking outside the safe set can be punished
        base = pg.zielonka(g.game)
        for p in (E, O):
            outside = base.won(p) - pg.safe_set(g, p)
            if not outside:
                continue
            punished = pg.zielonka(adversarial_extension(g, p).game)
            for v in outside.ids():
                flips_checked += 1
                if punished.winner_of(int(v)) != p.opponent:
                    violations += 1
    ok = violations == 0 and flips_checked > 500
    report(5, ok, f"500 games x 7 solvers x 3 completions and "
                  f"{flips_checked} forced flips, {violations} violations")


def test_criterion_6_driver_soundness_full_matrix():
    rng = np.random.default_rng(6)
    t0 = time.perf_counter()
    violations = 0
    runs = 0
    for seed in range(500):
        n = int(rng.integers(8, 201))
        g = gen_random(GenSpec(n, sink_probability=0.12,
                               priority_range=(0, 5), seed=seed + 130000))
        reach = pg.reachable_from(g, vs(g.size, [0]))
        designated = int(rng.choice(reach.ids()))
        expected = pg.zielonka(g.game).winner_of(designated)
        for strategy in ExplorationStrategy:
            for kind in SolverKind:
                cfg = DriverConfig(solver=kind, strategy=strategy,
                                   designated=designated, batch_min=16,
                                   seed=seed, logical_cost=True)
                rep = pg.run_driver(GameExpander(g.game), 0, cfg)
                runs += 1
                if rep.decided_winner != expected:
                    violations += 1
    took = time.perf_counter() - t0
    ok = violations == 0 and took < 300
    report(6, ok, f"{runs} driver runs (500 universes x 4 strategies x "
                  f"8 solvers), {violations} violations, {took:.1f}s")


def test_criterion_7_early_termination_speedup():
    depth = 200
    noisy = gen_safety_family(depth, violation=True)
    base = dict(designated=0, logical_cost=True)
    rep_s = pg.run_driver(GameExpander(noisy), 0,
                          DriverConfig(solver=SolverKind.SOLITAIRE_SAFE, **base))
    rep_f = pg.run_driver(GameExpander(noisy), 0,
                          DriverConfig(solver=SolverKind.FULL, **base))
    explored_ratio = rep_s.vertices_explored / rep_f.vertices_explored
    ok1 = (rep_s.decided_winner is O and rep_f.decided_winner is O
           and explored_ratio <= 0.05)

    quiet = gen_safety_family(depth, violation=False)
    rep_sq = pg.run_driver(GameExpander(quiet), 0,
                           DriverConfig(solver=SolverKind.SOLITAIRE_SAFE, **base))
    rep_fq = pg.run_driver(GameExpander(quiet), 0,
                           DriverConfig(solver=SolverKind.FULL, **base))
    cost = rep_sq.explore_time + rep_sq.solve_time
    cost_full = rep_fq.explore_time + rep_fq.solve_time
    overhead = cost / cost_full
    ok2 = (rep_sq.decided_winner is E and rep_fq.decided_winner is E
           and overhead <= 1.5)
    report(7, ok1 and ok2,
           f"violation run explored {rep_s.vertices_explored}/"
           f"{rep_f.vertices_explored} = {explored_ratio:.1%} (<=5%); "
           f"overhead on full exploration {overhead:.2f}x (<=1.5x)")


def test_criterion_8_format_round_trip():
    rng = np.random.default_rng(8)
    diffs = 0
    for seed in range(1000):
        n = int(rng.integers(1, 80))
        g = gen_random(GenSpec(n, incomplete_fraction=float(rng.uniform(0, 0.5)),
                               sink_probability=0.2, seed=seed + 170000))
        text = pg.serialize(g)
        h = pg.loads(text).game
        if not (h.game.structurally_equal(g.game)
                and h.incomplete == g.incomplete
                and pg.serialize(h) == text):
            diffs += 1
    ok = diffs == 0
    report(8, ok, f"1000 round trips, {diffs} diffs")
