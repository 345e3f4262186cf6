"""Incremental game construction and the on-the-fly solving driver.

The driver alternates exploration batches with solver passes under a
time-ratio heuristic, retains previously decided regions across snapshots
(re-extending them with safe attractors), and stops as soon as the
designated vertex's winner is known.
"""

from __future__ import annotations

import enum
import heapq
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Protocol, Sequence, Tuple

import numpy as np

from .fixpoints import sattr, work_meter
from .game import Game, IncompleteGame, Player, Solution, check_extension
from .sets import VertexSet
from .solvers import SolverKind, partial_solve, zielonka


class ExplorationError(RuntimeError):
    pass


class Expander(Protocol):
    """The hidden universe: successor discovery for incomplete vertices.

    Keys are opaque universe identifiers; expanding the same key twice
    must yield the same answer.  ``attributes`` is queried once, when a
    key is first seen.
    """

    def attributes(self, key: Hashable) -> Tuple[Player, int]:
        """Owner and priority of a vertex."""
        ...

    def successors(self, key: Hashable) -> Sequence[Hashable]:
        """Full successor list; marks the vertex complete."""
        ...


class GameExpander:
    """Expander over a fully stored complete game (keys are vertex ids)."""

    def __init__(self, universe):
        if isinstance(universe, IncompleteGame):
            if universe.incomplete:
                raise ValueError("universe game must be complete")
            universe = universe.game
        self.universe = universe

    def attributes(self, key):
        if not self.universe.vertices[key]:
            raise KeyError(f"vertex {key} not in universe")
        return Player(int(self.universe.owner[key])), int(self.universe.priority[key])

    def successors(self, key):
        return [int(w) for w in self.universe.successors(int(key))]


class GameBuilder:
    """Single-threaded builder of a growing incomplete game.

    Every snapshot extends the previous one: vertices are appended in
    discovery order, only incomplete vertices may gain edges, and a vertex
    becomes complete exactly when it is expanded.
    """

    def __init__(self):
        self._owner: List[int] = []
        self._priority: List[int] = []
        self._succ: List[List[int]] = []
        self._incomplete: set = set()

    @classmethod
    def from_game(cls, g: IncompleteGame) -> "GameBuilder":
        """Resume construction from an existing snapshot (which must not
        carry inactive vertex slots)."""
        if not g.game.vertices.all():
            raise ExplorationError("cannot resume from a restricted subgame")
        b = cls()
        b._owner = g.game.owner.tolist()
        b._priority = g.game.priority.tolist()
        b._succ = [g.game.successors(v).tolist() for v in range(g.size)]
        b._incomplete = set(int(v) for v in g.incomplete.ids())
        return b

    @property
    def num_vertices(self) -> int:
        return len(self._owner)

    def incomplete_ids(self) -> frozenset:
        return frozenset(self._incomplete)

    def add_vertex(self, owner: Player, priority: int) -> int:
        if priority < 0:
            raise ValueError("priorities are non-negative")
        v = len(self._owner)
        self._owner.append(int(owner))
        self._priority.append(int(priority))
        self._succ.append([])
        self._incomplete.add(v)
        return v

    def expand(self, v: int, successors: Sequence[int]) -> None:
        """Add the given successors to ``v`` and mark it complete.

        Expanding a complete vertex is a hard error: edges never enter or
        leave a vertex once its successor list is known.
        """
        if not 0 <= v < len(self._owner):
            raise ExplorationError(f"unknown vertex {v}")
        if v not in self._incomplete:
            raise ExplorationError(
                f"vertex {v} is complete; cannot add edges to it")
        out = sorted(set(self._succ[v]) | set(int(w) for w in successors))
        if out and (out[0] < 0 or out[-1] >= len(self._owner)):
            raise ExplorationError(f"successor of {v} out of range")
        self._succ[v] = out
        self._incomplete.discard(v)

    def snapshot(self) -> IncompleteGame:
        game = Game.build(self._owner, self._priority, self._succ)
        inc = VertexSet.of(game.size, self._incomplete)
        return IncompleteGame(game, inc)


def incremental_add(builder: GameBuilder, v: int,
                    successors: Sequence[int]) -> None:
    """Alias of GameBuilder.expand, the one mutation of the exploration
    data model."""
    builder.expand(v, successors)


class ExplorationStrategy(enum.Enum):
    BFS = "bfs"
    DFS = "dfs"
    RANDOM = "random"
    LOWEST_PRIORITY = "lowprio"

    @classmethod
    def from_name(cls, name: str) -> "ExplorationStrategy":
        for s in cls:
            if s.value == name:
                return s
        raise ValueError(f"unknown exploration strategy {name!r}")


@dataclass
class DriverConfig:
    solver: SolverKind = SolverKind.PARTIAL
    strategy: ExplorationStrategy = ExplorationStrategy.BFS
    designated: Hashable = None
    solve_time_ratio: float = 0.10
    batch_min: int = 64
    seed: int = 0
    logical_cost: bool = False
    debug: bool = False

    def __post_init__(self):
        if not 0 < self.solve_time_ratio <= 1:
            raise ValueError("solve_time_ratio must be in (0, 1]")
        if self.batch_min < 1:
            raise ValueError("batch_min must be at least 1")


@dataclass
class DriverReport:
    decided_winner: Optional[Player]
    vertices_explored: int
    solver_calls: int
    explore_time: float
    solve_time: float
    explore_seconds: float
    solve_seconds: float
    final_solution: Solution
    final_game: IncompleteGame
    keys: List[Hashable]
    history: List[tuple] = field(default_factory=list)

    def id_of(self, key: Hashable) -> Optional[int]:
        try:
            return self.keys.index(key)
        except ValueError:
            return None


class _Frontier:
    """Incomplete vertices pending expansion, ordered per strategy."""

    def __init__(self, strategy: ExplorationStrategy, seed: int):
        self.strategy = strategy
        self.rng = np.random.default_rng(seed)
        self.fifo: deque = deque()
        self.heap: list = []

    def push(self, v: int, priority: int) -> None:
        if self.strategy is ExplorationStrategy.LOWEST_PRIORITY:
            heapq.heappush(self.heap, (priority, v))
        else:
            self.fifo.append(v)

    def pop(self) -> int:
        if self.strategy is ExplorationStrategy.LOWEST_PRIORITY:
            return heapq.heappop(self.heap)[1]
        if self.strategy is ExplorationStrategy.BFS:
            return self.fifo.popleft()
        if self.strategy is ExplorationStrategy.DFS:
            return self.fifo.pop()
        i = int(self.rng.integers(len(self.fifo)))
        self.fifo.rotate(-i)
        v = self.fifo.popleft()
        return v

    def __len__(self) -> int:
        return len(self.fifo) + len(self.heap)


def run_driver(expander: Expander, root: Hashable,
               cfg: DriverConfig) -> DriverReport:
    """Explore from ``root`` while solving on-the-fly.

    A solver pass runs whenever accumulated solving cost is below
    ``solve_time_ratio`` of the total cost so far; passes are never
    interrupted.  Dominions found earlier are kept and re-extended with
    safe attractors before the remainder is solved.  Exploration stops
    once the designated vertex is decided, or finishes with the full
    solver when the universe is exhausted.
    """
    builder = GameBuilder()
    frontier = _Frontier(cfg.strategy, cfg.seed)
    keys: List[Hashable] = []
    id_of: Dict[Hashable, int] = {}

    def discover(key) -> int:
        owner, priority = expander.attributes(key)
        v = builder.add_vertex(owner, priority)
        keys.append(key)
        id_of[key] = v
        frontier.push(v, priority)
        return v

    discover(root)

    won: Dict[Player, set] = {Player.EVEN: set(), Player.ODD: set()}
    explored = 0
    solver_calls = 0
    explore_cost = 0
    solve_cost = 0
    explore_sec = 0.0
    solve_sec = 0.0
    history: List[tuple] = []
    prev_snapshot: Optional[IncompleteGame] = None

    def snapshot() -> IncompleteGame:
        nonlocal prev_snapshot
        g = builder.snapshot()
        if cfg.debug and prev_snapshot is not None:
            if not check_extension(prev_snapshot, g):
                raise AssertionError("snapshot chain broke the extension order")
        prev_snapshot = g
        return g

    def decided_player() -> Optional[Player]:
        d = id_of.get(cfg.designated)
        if d is None:
            return None
        for p in (Player.EVEN, Player.ODD):
            if d in won[p]:
                return p
        return None

    def reextend_and_remove(g: IncompleteGame) -> np.ndarray:
        """Grow retained dominions to their safe attractors in the current
        snapshot, then return the mask of still-undecided vertices.  The
        re-extension is what keeps removing them sound: after it, no
        opponent vertex outside a region has an edge into it."""
        for p in (Player.EVEN, Player.ODD):
            if won[p]:
                ext = sattr(g, p, VertexSet.of(g.size, won[p]))
                won[p] = set(ext.set.ids().tolist())
        if won[Player.EVEN] & won[Player.ODD]:
            raise AssertionError("retained dominions overlap")
        rest = g.vertices.copy()
        for p in won:
            for v in won[p]:
                rest[v] = False
        return rest

    def solver_pass(g: IncompleteGame) -> None:
        nonlocal solver_calls
        solver_calls += 1
        rest = reextend_and_remove(g)
        sol = partial_solve(g.restrict(VertexSet(rest)), cfg.solver)
        won[Player.EVEN] |= set(sol.won_even.ids().tolist())
        won[Player.ODD] |= set(sol.won_odd.ids().tolist())
        if cfg.debug:
            history.append((explored, frozenset(won[Player.EVEN]),
                            frozenset(won[Player.ODD])))

    while True:
        if decided_player() is not None:
            final_game = snapshot()
            break
        if not len(frontier):
            # exhausted: finish with the full solver on the remainder
            final_game = snapshot()
            t0 = time.perf_counter()
            with work_meter() as meter:
                rest = reextend_and_remove(final_game)
                if rest.any():
                    sol = zielonka(final_game.game.restrict(VertexSet(rest)))
                    won[Player.EVEN] |= set(sol.won_even.ids().tolist())
                    won[Player.ODD] |= set(sol.won_odd.ids().tolist())
            solve_cost += meter[0]
            solve_sec += time.perf_counter() - t0
            solver_calls += 1
            if cfg.debug:
                history.append((explored, frozenset(won[Player.EVEN]),
                                frozenset(won[Player.ODD])))
            break

        t0 = time.perf_counter()
        batch = 0
        while len(frontier) and batch < cfg.batch_min:
            v = frontier.pop()
            succ_keys = expander.successors(keys[v])
            succ_ids = [id_of[k] if k in id_of else discover(k)
                        for k in succ_keys]
            builder.expand(v, succ_ids)
            explored += 1
            batch += 1
            explore_cost += 1 + len(succ_ids)
        explore_sec += time.perf_counter() - t0

        if cfg.solver is SolverKind.FULL:
            continue
        if cfg.logical_cost:
            spent, total = solve_cost, explore_cost + solve_cost
        else:
            spent, total = solve_sec, explore_sec + solve_sec
        if spent < cfg.solve_time_ratio * total:
            t0 = time.perf_counter()
            with work_meter() as meter:
                solver_pass(snapshot())
            solve_cost += meter[0]
            solve_sec += time.perf_counter() - t0

    n = final_game.size
    we = VertexSet.of(n, won[Player.EVEN])
    wo = VertexSet.of(n, won[Player.ODD])
    undecided = VertexSet(final_game.vertices & ~(we.mask | wo.mask))
    solution = Solution(we, wo, undecided)
    return DriverReport(
        decided_winner=decided_player(),
        vertices_explored=explored,
        solver_calls=solver_calls,
        explore_time=float(explore_cost if cfg.logical_cost else explore_sec),
        solve_time=float(solve_cost if cfg.logical_cost else solve_sec),
        explore_seconds=explore_sec,
        solve_seconds=solve_sec,
        final_solution=solution,
        final_game=final_game,
        keys=keys,
        history=history,
    )
