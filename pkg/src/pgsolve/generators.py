"""Seeded generators: random incomplete games, random extensions, the
winner-flipping adversarial extension, and the safety benchmark family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .game import Game, IncompleteGame, Player
from .sets import VertexSet


@dataclass
class GenSpec:
    """Parameters of gen_random; identical seeds give identical games."""

    vertex_count: int
    max_out_degree: int = 3
    priority_range: Tuple[int, int] = (0, 5)
    sink_probability: float = 0.1
    incomplete_fraction: float = 0.0
    seed: int = 0


def gen_random(spec: GenSpec) -> IncompleteGame:
    if spec.vertex_count <= 0:
        raise ValueError("vertex_count must be positive")
    if spec.max_out_degree < 1:
        raise ValueError("max_out_degree must be at least 1")
    lo, hi = spec.priority_range
    rng = np.random.default_rng(spec.seed)
    n = spec.vertex_count
    owners = rng.integers(0, 2, n)
    priorities = rng.integers(lo, hi + 1, n)
    succs: List[List[int]] = []
    for v in range(n):
        if rng.random() < spec.sink_probability:
            succs.append([])
            continue
        deg = int(rng.integers(1, min(spec.max_out_degree, n) + 1))
        succs.append(sorted(rng.choice(n, size=deg, replace=False).tolist()))
    game = Game.build(owners.tolist(), priorities.tolist(), succs)
    inc = rng.random(n) < spec.incomplete_fraction
    return IncompleteGame(game, VertexSet(inc))


def _lists_of(g: IncompleteGame):
    game = g.game
    owners = game.owner.tolist()
    priorities = game.priority.tolist()
    succs = [game.successors(v).tolist() if game.vertices[v] else []
             for v in range(game.size)]
    return owners, priorities, succs


def gen_extension(g: IncompleteGame, seed: int = 0,
                  complete_probability: float = 0.5,
                  fresh_probability: float = 0.3,
                  max_new_successors: int = 2,
                  rng: Optional[np.random.Generator] = None) -> IncompleteGame:
    """A random extension of ``g``: incomplete vertices gain edges (some to
    fresh vertices) and some become complete.  The result always satisfies
    the extension order from ``g``."""
    if rng is None:
        rng = np.random.default_rng(seed)
    owners, priorities, succs = _lists_of(g)
    active = g.game.vertices.copy().tolist()
    incomplete = set(int(v) for v in g.incomplete.ids())
    prio_hi = max((p for p, a in zip(priorities, active) if a), default=1)
    existing = [v for v, a in enumerate(active) if a]

    for v in sorted(incomplete):
        extra = int(rng.integers(0, max_new_successors + 1))
        for _ in range(extra):
            if rng.random() < fresh_probability:
                w = len(owners)
                owners.append(int(rng.integers(0, 2)))
                priorities.append(int(rng.integers(0, prio_hi + 1)))
                succs.append([])
                active.append(True)
                existing.append(w)
                incomplete.add(w)
            else:
                w = int(existing[int(rng.integers(len(existing)))])
            if w not in succs[v]:
                succs[v].append(w)
        if rng.random() < complete_probability:
            incomplete.discard(v)

    game = Game.build(owners, priorities, succs, active=np.asarray(active))
    return IncompleteGame(game, VertexSet.of(game.size, incomplete))


def complete_randomly(g: IncompleteGame, seed: int = 0,
                      soft_rounds: int = 2) -> IncompleteGame:
    """Extend ``g`` until no incomplete vertices remain."""
    rng = np.random.default_rng(seed)
    for _ in range(soft_rounds):
        if g.is_complete():
            return g
        g = gen_extension(g, rng=rng)
    while not g.is_complete():
        g = gen_extension(g, rng=rng, complete_probability=1.0,
                          fresh_probability=0.0)
    return g


def adversarial_extension(g: IncompleteGame, player: Player) -> IncompleteGame:
    """Complete extension that punishes reliance on incomplete vertices.

    Adds one fresh ``player``-owned priority-0 sink reachable from every
    incomplete vertex, then declares the game complete.  Finite plays
    ending in the fresh sink are won by the opponent, so every vertex from
    which the opponent could force a visit to one of its incomplete
    vertices is now won by the opponent.
    """
    owners, priorities, succs = _lists_of(g)
    active = g.game.vertices.copy().tolist()
    z = len(owners)
    owners.append(int(player))
    priorities.append(0)
    succs.append([])
    active.append(True)
    for v in g.incomplete.ids():
        succs[int(v)].append(z)
    game = Game.build(owners, priorities, succs, active=np.asarray(active))
    return IncompleteGame.complete(game)


def gen_safety_family(depth: int, violation: bool) -> Game:
    """Benchmark family for early-termination runs.

    A single-player game (the refuter owns every choice): a spine of
    ``depth`` vertices leads to a quadratic lattice of bounded counters
    that loops back to the root, every priority 0.  With ``violation`` the
    end of the spine additionally reaches a refuter-winning sink at
    distance exactly ``depth`` from the root; solving then only requires
    attracting along the spine, while the lattice dominates exploration.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    d = depth
    n_spine = d
    lattice_index: dict = {}
    nxt = n_spine
    for i in range(d):
        for j in range(i + 1):
            lattice_index[(i, j)] = nxt
            nxt += 1
    sink = nxt if violation else None
    total = nxt + (1 if violation else 0)

    owners = [int(Player.ODD)] * total
    priorities = [0] * total
    succs: List[List[int]] = [[] for _ in range(total)]
    if violation:
        owners[sink] = int(Player.EVEN)

    for i in range(n_spine - 1):
        succs[i].append(i + 1)
    end = n_spine - 1
    if violation:
        succs[end].append(sink)
    succs[end].append(lattice_index[(0, 0)])
    for (i, j), v in lattice_index.items():
        if i + 1 < d:
            succs[v].append(lattice_index[(i + 1, j)])
            succs[v].append(lattice_index[(i + 1, j + 1)])
        else:
            succs[v].append(0)
    return Game.build(owners, priorities, succs)
