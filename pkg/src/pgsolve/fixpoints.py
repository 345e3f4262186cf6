"""Predecessor and attractor operators over (incomplete) parity games.

All operators are pure functions of immutable snapshots.  The standard
operators (pre, cpre, attr) ignore incompleteness; their safe variants
(spre, sattr, ...) refuse to force play through opponent-owned incomplete
vertices, which is what makes winners computed from them stable under
every extension of the game.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from . import backend
from .game import Game, Player, _as_pair
from .sets import VertexSet

_INF = np.iinfo(np.int64).max

# ---------------------------------------------------------------------------
# logical work accounting (used by the exploration driver's cost mode)

_METER: Optional[list] = None


@contextmanager
def work_meter():
    """Collect kernel work units of all operator calls in the block.

    Not reentrancy-proof across threads; the exploration driver, its only
    in-package consumer, is single-threaded.
    """
    global _METER
    prev = _METER
    box = [0]
    _METER = box
    try:
        yield box
    finally:
        _METER = prev


def _charge(units: int) -> None:
    if _METER is not None:
        _METER[0] += int(units)


# ---------------------------------------------------------------------------
# single-step operators (plain numpy on both backends)

def _alive(game: Game) -> np.ndarray:
    return game.vertices[game.succ_src] & game.vertices[game.succ_indices]


def pre(g, u: VertexSet) -> VertexSet:
    """Vertices with at least one successor in ``u``."""
    game, _ = _as_pair(g)
    m = u.mask & game.vertices
    sel = _alive(game) & m[game.succ_indices]
    cnt = np.bincount(game.succ_src[sel], minlength=game.size)
    return VertexSet(game.vertices & (cnt > 0))


def _cpre_mask(game: Game, inc: np.ndarray, player: Player, u: np.ndarray,
               safe: bool) -> np.ndarray:
    alive = _alive(game)
    sel = alive & u[game.succ_indices]
    cnt_in = np.bincount(game.succ_src[sel], minlength=game.size)
    deg = np.bincount(game.succ_src[alive], minlength=game.size)
    mine = game.vertices & (game.owner == int(player))
    part1 = mine & (cnt_in > 0)
    part2 = game.vertices & ~mine & (deg > 0) & (cnt_in == deg)
    if safe:
        part2 &= ~inc
    return part1 | part2


def cpre(g, player: Player, u: VertexSet) -> VertexSet:
    """Vertices from which ``player`` can force entering ``u`` in one step.

    Blind to incomplete vertices; see spre for the safe variant.
    """
    game, inc = _as_pair(g)
    return VertexSet(_cpre_mask(game, inc, player, u.mask & game.vertices, False))


def spre(g, player: Player, u: VertexSet) -> VertexSet:
    """cpre that never relies on opponent-owned incomplete vertices."""
    game, inc = _as_pair(g)
    return VertexSet(_cpre_mask(game, inc, player, u.mask & game.vertices, True))


def mpre(g, player: Player, z: VertexSet, u: VertexSet, c: int) -> VertexSet:
    """Monotone control predecessor: cpre of z|u, floored at priority c."""
    game, inc = _as_pair(g)
    m = _cpre_mask(game, inc, player, (z.mask | u.mask) & game.vertices, False)
    return VertexSet(m & (game.priority >= c))


def smpre(g, player: Player, z: VertexSet, u: VertexSet, c: int) -> VertexSet:
    game, inc = _as_pair(g)
    m = _cpre_mask(game, inc, player, (z.mask | u.mask) & game.vertices, True)
    return VertexSet(m & (game.priority >= c))


# ---------------------------------------------------------------------------
# attractors

@dataclass
class AttractorResult:
    """An attractor set plus the forcing strategy of its player.

    ``strategy[v]`` is recorded for attracted vertices owned by the
    attracting player: the lowest-id successor one BFS level closer to the
    target.  ``levels`` holds that BFS round per member, -1 outside.
    """

    set: VertexSet
    strategy: Dict[int, int] = field(default_factory=dict)
    levels: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))


def _strategy_from_levels(game: Game, member: np.ndarray, levels: np.ndarray,
                          player: Player) -> Dict[int, int]:
    src, dst = game.succ_src, game.succ_indices
    sel = (_alive(game)
           & member[src] & (game.owner[src] == int(player)) & (levels[src] > 0)
           & (levels[dst] >= 0) & (levels[dst] < levels[src]))
    best = np.full(game.size, _INF, np.int64)
    np.minimum.at(best, src[sel], dst[sel])
    return {int(v): int(best[v]) for v in np.flatnonzero(best < _INF)}


def _run_attractor(g, player: Player, u: VertexSet, safe: bool,
                   min_prio: int, include_target: bool):
    game, inc = _as_pair(g)
    target = u.mask & game.vertices
    k = backend.kernels()
    member, levels, work = k.attractor(
        game.owner, game.priority, game.vertices, inc,
        game.succ_indptr, game.succ_indices, game.succ_src,
        game.pred_indptr, game.pred_indices,
        target, int(player), safe, min_prio, include_target)
    _charge(work)
    return game, member, levels


def attr(g, player: Player, u: VertexSet) -> AttractorResult:
    """Least fixpoint of Z -> u | cpre(Z): where ``player`` forces a visit
    to ``u``."""
    game, member, levels = _run_attractor(g, player, u, False, -1, True)
    return AttractorResult(VertexSet(member),
                           _strategy_from_levels(game, member, levels, player),
                           levels)


def sattr(g, player: Player, u: VertexSet) -> AttractorResult:
    """Safe attractor: forces a visit to ``u`` without ever crossing an
    opponent-owned incomplete vertex."""
    game, member, levels = _run_attractor(g, player, u, True, -1, True)
    return AttractorResult(VertexSet(member),
                           _strategy_from_levels(game, member, levels, player),
                           levels)


def mattr(g, player: Player, u: VertexSet, c: int) -> VertexSet:
    """Monotone attractor for priority ``c``: least fixpoint of
    Z -> mpre(Z, u, c).  The target enables attraction but is not part of
    the result unless re-attracted."""
    _, member, _levels = _run_attractor(g, player, u, False, c, False)
    return VertexSet(member)


def smattr(g, player: Player, u: VertexSet, c: int) -> VertexSet:
    """Safe monotone attractor (mattr over spre)."""
    _, member, _levels = _run_attractor(g, player, u, True, c, False)
    return VertexSet(member)


def safe_set(g, player: Player) -> VertexSet:
    """Vertices where a win for ``player`` survives every extension: the
    complement of the opponent's attractor to its own incomplete vertices.
    """
    game, inc = _as_pair(g)
    opp = player.opponent
    lure = VertexSet(game.vertices & inc & (game.owner == int(opp)))
    reach = attr(g, opp, lure)
    return VertexSet(game.vertices & ~reach.set.mask)


def reachable_from(g, start: VertexSet) -> VertexSet:
    """Vertices reachable from ``start`` along active edges."""
    game, _ = _as_pair(g)
    k = backend.kernels()
    seen = k.reachable(game.vertices, game.succ_indptr, game.succ_indices,
                       start.mask & game.vertices)
    return VertexSet(seen)
