"""Compare the numba worklist kernels with the pure-numpy fallback.

Times the hot fixpoint operations on random games of growing size and on
the safety family, under both backends:

    python3 benchmarks/bench_kernels.py [--sizes 1000,10000,100000] [--reps 5]
"""

import argparse
import time

import numpy as np

import pgsolve as pg
from pgsolve import Player, VertexSet, backend
from pgsolve.generators import GenSpec, gen_random, gen_safety_family

E, O = Player.EVEN, Player.ODD


def bench(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(n, seed=0):
    g = gen_random(GenSpec(n, max_out_degree=4, incomplete_fraction=0.2,
                           sink_probability=0.05, seed=seed))
    rng = np.random.default_rng(seed)
    u = VertexSet(g.vertices & (rng.random(g.size) < 0.1))
    complete = gen_random(GenSpec(n, max_out_degree=4, sink_probability=0.05,
                                  seed=seed + 1)).game
    return [
        ("attr", lambda: pg.attr(g, E, u)),
        ("sattr", lambda: pg.sattr(g, O, u)),
        ("mattr c=2", lambda: pg.mattr(g, O, u, 2)),
        ("solitaire gfp", lambda: pg.solitaire_cycles(g, E)),
        ("forced gfp", lambda: pg.forced_cycles(g, E, True)),
        ("safe_set", lambda: pg.safe_set(g, E)),
        ("zielonka", lambda: pg.zielonka(complete)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="1000,10000,100000")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = list(backend.available_backends())

    # trigger JIT compilation outside the timings
    for name in backends:
        backend.set_backend(name)
        for _, fn in workloads(64):
            fn()

    print(f"{'workload':<16}{'|V|':>9}" +
          "".join(f"{b + ' (ms)':>14}" for b in backends) +
          (f"{'speedup':>10}" if len(backends) == 2 else ""))
    for n in sizes:
        rows = {}
        for name in backends:
            backend.set_backend(name)
            for label, fn in workloads(n):
                rows.setdefault(label, {})[name] = bench(fn, args.reps)
        for label, times in rows.items():
            line = f"{label:<16}{n:>9}"
            for name in backends:
                line += f"{times[name] * 1e3:>14.2f}"
            if len(backends) == 2:
                line += f"{times['numpy'] / times['numba']:>9.1f}x"
            print(line)
        print()

    # the driver end to end on the safety family
    depth = 150
    noisy = gen_safety_family(depth, violation=True)
    for name in backends:
        backend.set_backend(name)
        t = bench(lambda: pg.run_driver(
            pg.GameExpander(noisy), 0,
            pg.DriverConfig(solver=pg.SolverKind.SOLITAIRE_SAFE, designated=0,
                            logical_cost=True)), max(2, args.reps // 2))
        print(f"driver safety(depth={depth}) [{name}]: {t * 1e3:.1f} ms")
    backend.set_backend(backends[0])


if __name__ == "__main__":
    main()
