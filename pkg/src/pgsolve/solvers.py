"""Game solvers: the full recursive solver, three partial solvers in
safe-subgame and safe-operator variants, and a strategy-enumeration
oracle for small games.

Partial solvers return sound but possibly incomplete solutions on
incomplete games: every vertex they decide keeps its winner in every
extension of the game.  The full solver requires (or pretends) a complete
game.
"""

from __future__ import annotations

import enum
import itertools
import sys
from typing import Callable, Dict, Iterable, Sequence

import numpy as np

from . import backend
from .fixpoints import attr, sattr, safe_set, _charge
from .game import (Game, IncompleteGame, Player, Solution, _as_pair,
                   parity_of, sinks, sinks_of_player, subgame)
from .sets import VertexSet


class SolverKind(enum.Enum):
    """On-the-fly solving strategies: each partial solver comes as the
    standard variant run on the safe subgame and (suffix ``_SAFE``) the
    variant built from safe operators run on the whole incomplete game."""

    FULL = "full"
    SOLITAIRE = "solitaire"
    SOLITAIRE_SAFE = "solitaire-safe"
    CYCLES = "cycles"
    CYCLES_SAFE = "cycles-safe"
    FATAL = "fatal"
    FATAL_SAFE = "fatal-safe"
    PARTIAL = "partial"

    @classmethod
    def from_name(cls, name: str) -> "SolverKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown solver kind {name!r}")


PARTIAL_KINDS = tuple(k for k in SolverKind if k is not SolverKind.FULL)


# ---------------------------------------------------------------------------
# parity classes

def parity_region(g, player: Player) -> VertexSet:
    """Non-sink vertices whose priority parity matches ``player``."""
    game, _ = _as_pair(g)
    snk = sinks(game)
    par = (game.priority & 1) == int(player)
    return VertexSet(game.vertices & ~snk.mask & par)


def prio_at_least(g, c: int) -> VertexSet:
    game, _ = _as_pair(g)
    return VertexSet(game.vertices & (game.priority >= c))


def prio_exactly(g, c: int) -> VertexSet:
    game, _ = _as_pair(g)
    return VertexSet(game.vertices & (game.priority == c))


# ---------------------------------------------------------------------------
# full solver (Zielonka-style recursion, min-priority semantics)

def _attr_masked(game: Game, region: np.ndarray, player: Player,
                 target: np.ndarray):
    sub = game.restrict(VertexSet(region))
    return attr(sub, player, VertexSet(target))


def _zielonka(game: Game, region: np.ndarray):
    won = {Player.EVEN: np.zeros(game.size, bool),
           Player.ODD: np.zeros(game.size, bool)}
    strat: Dict[int, int] = {}
    if not region.any():
        return won, strat

    # sink pre-pass: a sink is lost by its owner, so the opponent attracts
    sub = game.restrict(VertexSet(region))
    snk = region & (sub.out_degrees() == 0)
    if snk.any():
        rest = region.copy()
        for player in (Player.EVEN, Player.ODD):
            tgt = snk & (game.owner == int(player.opponent)) & rest
            if tgt.any():
                res = _attr_masked(game, rest, player, tgt)
                won[player] |= res.set.mask
                strat.update(res.strategy)
                rest &= ~res.set.mask
        wr, sr = _zielonka(game, rest)
        for p in won:
            won[p] |= wr[p]
        strat.update(sr)
        return won, strat

    c = int(game.priority[region].min())
    alpha = parity_of(c)
    top = region & (game.priority == c)
    ares = _attr_masked(game, region, alpha, top)
    rest = region & ~ares.set.mask
    w1, s1 = _zielonka(game, rest)

    if not w1[alpha.opponent].any():
        won[alpha] = region.copy()
        strat.update(s1)
        strat.update(ares.strategy)
        # on the top set any successor inside the region will do
        for v in np.flatnonzero(top & (game.owner == int(alpha))):
            succ = game.succ_indices[game.succ_indptr[v]:game.succ_indptr[v + 1]]
            succ = succ[region[succ]]
            strat[int(v)] = int(succ.min())
        return won, strat

    bres = _attr_masked(game, region, alpha.opponent, w1[alpha.opponent])
    rest2 = region & ~bres.set.mask
    w2, s2 = _zielonka(game, rest2)
    won[alpha.opponent] = bres.set.mask | w2[alpha.opponent]
    won[alpha] = w2[alpha]
    strat.update(s1)
    strat.update(bres.strategy)
    strat.update(s2)
    return won, strat


def zielonka(g) -> Solution:
    """Total solution with positional strategies.  Incompleteness is
    ignored: the game is solved as if every vertex were complete."""
    game, _ = _as_pair(g)
    limit = sys.getrecursionlimit()
    needed = 4 * game.num_vertices + 100
    if needed > limit:
        sys.setrecursionlimit(needed)
    try:
        won, strat = _zielonka(game, game.vertices.copy())
    finally:
        if needed > limit:
            sys.setrecursionlimit(limit)
    we, wo = won[Player.EVEN], won[Player.ODD]
    keep = {v: w for v, w in strat.items()
            if (we[v] and game.owner[v] == 0) or (wo[v] and game.owner[v] == 1)}
    return Solution(VertexSet(we), VertexSet(wo),
                    VertexSet(np.zeros(game.size, bool)), keep)


# ---------------------------------------------------------------------------
# partial solvers

def solve_on_safe(g: IncompleteGame, player: Player,
                  inner: Callable[[IncompleteGame], Solution] = zielonka,
                  ) -> VertexSet:
    """Winning region of ``player`` per ``inner`` on the player's safe
    subgame; stable under every extension of ``g``."""
    sub = subgame(g, safe_set(g, player))
    return inner(sub).won(player)


def _gfp(g, player: Player, candidate: VertexSet, solitaire: bool) -> VertexSet:
    game, inc = _as_pair(g)
    if solitaire:
        need_all = np.zeros(game.size, bool)
    else:
        need_all = game.owner != int(player)
    k = backend.kernels()
    member, work = k.cycle_gfp(
        game.owner, game.vertices, inc,
        game.succ_indptr, game.succ_indices, game.succ_src,
        game.pred_indptr, game.pred_indices,
        candidate.mask & game.vertices, need_all)
    _charge(work)
    return VertexSet(member)


def solitaire_cycles(g, player: Player) -> VertexSet:
    """Largest set of cycles through vertices owned by ``player`` with only
    priorities of the player's parity.  A dominion, and contained in the
    player's safe set without ever computing it."""
    game, _ = _as_pair(g)
    cand = parity_region(g, player) & game.owned_by(player)
    return _gfp(g, player, cand, solitaire=True)


def forced_cycles(g, player: Player, use_safe_ops: bool = False) -> VertexSet:
    """Largest set of cycles ``player`` can force to stay in its parity
    class.  The two variants compute the same set: over the safe set with
    the plain control predecessor, or everywhere with the safe one."""
    game, inc = _as_pair(g)
    cand = parity_region(g, player)
    if use_safe_ops:
        # spre bars opponent-owned incomplete vertices
        cand = VertexSet(cand.mask & ~(inc & (game.owner != int(player))))
    else:
        cand = cand & safe_set(g, player)
    return _gfp(g, player, cand, solitaire=False)


def _fatal_dominion(h: IncompleteGame, player: Player, c: int,
                    use_safe_ops: bool):
    """Extended dominion of the fatal attractor for priority ``c`` in the
    working game ``h``, or None when the fatal set is empty."""
    from .fixpoints import mattr, smattr

    if use_safe_ops:
        f = prio_exactly(h, c)
        while True:
            ma = smattr(h, player, f, c)
            f2 = f & ma
            if f2 == f:
                break
            f = f2
        if not f:
            return None
        return sattr(h, player, ma).set
    s = safe_set(h, player)
    sub = h.restrict(s)
    f = prio_exactly(h, c) & s
    while True:
        ma = mattr(sub, player, f, c)
        f2 = f & ma
        if f2 == f:
            break
        f = f2
    if not f:
        return None
    return attr(sub, player, ma).set


def fatal_attractors(g: IncompleteGame, use_safe_ops: bool = False) -> Solution:
    """Descending-priority sweep collecting fatal-attractor dominions.

    For each priority c present in the game, the largest set of priority-c
    vertices closed under the monotone attractor for c yields a dominion
    for the player of c's parity; dominions are attractor-extended,
    removed, and the sweep continues.  One sweep per invocation.
    """
    if isinstance(g, Game):
        g = IncompleteGame.complete(g)
    game = g.game
    active = game.vertices.copy()
    won = {Player.EVEN: np.zeros(game.size, bool),
           Player.ODD: np.zeros(game.size, bool)}
    for c in sorted(np.unique(game.priority[active]).tolist(), reverse=True):
        player = parity_of(c)
        if not active.any():
            break
        work = g.restrict(VertexSet(active))
        ext = _fatal_dominion(work, player, c, use_safe_ops)
        if ext is not None and ext:
            won[player] |= ext.mask
            active &= ~ext.mask
    return Solution(VertexSet(won[Player.EVEN]), VertexSet(won[Player.ODD]),
                    VertexSet(active))


def _sink_seed(h: IncompleteGame, player: Player) -> VertexSet:
    """Complete opponent-owned sinks: always safely attractable."""
    return sinks_of_player(h, player.opponent) - h.incomplete


def _kind_dominion(h: IncompleteGame, kind: SolverKind,
                   player: Player) -> VertexSet:
    """Extended dominion of one partial-solver kind for one player."""
    if kind is SolverKind.SOLITAIRE:
        sub = h.restrict(safe_set(h, player))
        tgt = _sink_seed(sub, player) | solitaire_cycles(sub, player)
        if not tgt:
            return tgt
        return attr(sub, player, tgt).set
    if kind is SolverKind.SOLITAIRE_SAFE:
        tgt = _sink_seed(h, player) | solitaire_cycles(h, player)
        if not tgt:
            return tgt
        return sattr(h, player, tgt).set
    if kind is SolverKind.CYCLES:
        sub = h.restrict(safe_set(h, player))
        tgt = _sink_seed(sub, player) | forced_cycles(h, player, False)
        if not tgt:
            return tgt
        return attr(sub, player, tgt).set
    if kind is SolverKind.CYCLES_SAFE:
        tgt = _sink_seed(h, player) | forced_cycles(h, player, True)
        if not tgt:
            return tgt
        return sattr(h, player, tgt).set
    if kind is SolverKind.PARTIAL:
        return solve_on_safe(h, player, zielonka)
    raise ValueError(f"no per-player dominion routine for {kind}")


def partial_solve(g: IncompleteGame, kind: SolverKind,
                  players: Sequence[Player] = (Player.EVEN, Player.ODD),
                  ) -> Solution:
    """Run one solver kind over an (incomplete) game snapshot.

    FULL solves the underlying game outright; all other kinds return a
    partial solution whose decided vertices survive every extension.
    """
    if isinstance(g, Game):
        g = IncompleteGame.complete(g)
    if kind is SolverKind.FULL:
        return zielonka(g)
    if kind in (SolverKind.FATAL, SolverKind.FATAL_SAFE):
        sol = fatal_attractors(g, use_safe_ops=(kind is SolverKind.FATAL_SAFE))
        if Player.EVEN not in players:
            sol = Solution(VertexSet.empty(g.size), sol.won_odd,
                           sol.undecided | sol.won_even, sol.strategy)
        if Player.ODD not in players:
            sol = Solution(sol.won_even, VertexSet.empty(g.size),
                           sol.undecided | sol.won_odd, sol.strategy)
        return sol
    game = g.game
    won = {Player.EVEN: np.zeros(game.size, bool),
           Player.ODD: np.zeros(game.size, bool)}
    for player in players:
        won[player] |= _kind_dominion(g, kind, player).mask
    if (won[Player.EVEN] & won[Player.ODD]).any():
        raise AssertionError("partial solver claimed a vertex for both players")
    undecided = game.vertices & ~(won[Player.EVEN] | won[Player.ODD])
    return Solution(VertexSet(won[Player.EVEN]), VertexSet(won[Player.ODD]),
                    VertexSet(undecided))


# ---------------------------------------------------------------------------
# brute-force oracle

def brute_force_oracle(g, max_vertices: int = 12,
                       max_semantics: bool = False) -> Solution:
    """Solve a small game by enumerating Even's positional strategies.

    For each strategy the induced one-player graph is checked directly:
    Even wins a vertex iff no reachable sink is Even-owned and every
    reachable cycle is dominated by an Even priority.  Memoryless
    determinacy makes the per-player enumeration exhaustive.  Runtime is
    exponential; ``max_vertices`` guards against misuse.

    ``max_semantics`` switches the winner rule to max-priority parity,
    which serves as the independent check for priority-shift conversion.
    """
    game, _ = _as_pair(g)
    ids = [int(v) for v in np.flatnonzero(game.vertices)]
    if len(ids) > max_vertices:
        raise ValueError(
            f"oracle cap exceeded: {len(ids)} vertices > {max_vertices}")
    succ = {v: [int(w) for w in game.successors(v)] for v in ids}
    prio = {v: int(game.priority[v]) for v in ids}
    is_even = {v: int(game.owner[v]) == 0 for v in ids}
    even_movers = [v for v in ids if is_even[v] and succ[v]]
    bad_parities = sorted({prio[v] for v in ids if prio[v] % 2 == 1})

    won_even: set = set()
    all_ids = set(ids)
    even_sinks = {v for v in ids if is_even[v] and not succ[v]}
    for combo in itertools.product(*(succ[v] for v in even_movers)):
        induced = dict(succ)
        for v, w in zip(even_movers, combo):
            induced[v] = [w]
        bad = set(even_sinks)
        for p in bad_parities:
            if max_semantics:
                keep = {v for v in ids if prio[v] <= p}
            else:
                keep = {v for v in ids if prio[v] >= p}
            for anchor in (v for v in keep if prio[v] == p):
                if _on_cycle(anchor, induced, keep):
                    bad.add(anchor)
        lose = _backward_closure(bad, induced, ids)
        won_even |= all_ids - lose
        if won_even == all_ids:
            break
    n = game.size
    we = VertexSet.of(n, won_even)
    wo = VertexSet.of(n, all_ids - won_even)
    return Solution(we, wo, VertexSet.empty(n))


def _on_cycle(anchor: int, induced: Dict[int, list], keep: set) -> bool:
    frontier = [w for w in induced[anchor] if w in keep]
    seen = set(frontier)
    while frontier:
        v = frontier.pop()
        if v == anchor:
            return True
        for w in induced[v]:
            if w in keep and w not in seen:
                seen.add(w)
                frontier.append(w)
    return False


def _backward_closure(bad: set, induced: Dict[int, list],
                      ids: Iterable[int]) -> set:
    preds: Dict[int, list] = {v: [] for v in ids}
    for v in ids:
        for w in induced[v]:
            preds[w].append(v)
    lose = set(bad)
    frontier = list(bad)
    while frontier:
        v = frontier.pop()
        for p in preds[v]:
            if p not in lose:
                lose.add(p)
                frontier.append(p)
    return lose
