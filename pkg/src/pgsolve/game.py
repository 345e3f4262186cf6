"""Explicit-state model of (incomplete) parity games.

Games are frozen CSR graphs over dense vertex ids.  Restriction to a
subgame never renumbers: it intersects the active-vertex mask, so a
vertex id stays valid across every restriction and extension snapshot.
Winner semantics are min-priority: an infinite play is won by the player
whose parity equals the minimal priority seen infinitely often.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np

from .sets import VertexSet


class Player(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self.value)


def parity_of(priority: int) -> Player:
    """Player whose parity matches the priority; parity_of(0) is EVEN."""
    if priority < 0:
        raise ValueError("priorities are non-negative")
    return Player(priority & 1)


class Game:
    """A parity game graph: owner, priority and adjacency per vertex.

    ``vertices`` is the active-vertex mask; ids outside it are not part of
    the game but keep their slots so that restrictions preserve identity.
    Edges are interpreted through the mask: an edge exists iff both
    endpoints are active.  Instances are immutable after construction.
    """

    __slots__ = (
        "owner",
        "priority",
        "succ_indptr",
        "succ_indices",
        "succ_src",
        "pred_indptr",
        "pred_indices",
        "vertices",
    )

    def __init__(
        self,
        owner: np.ndarray,
        priority: np.ndarray,
        succ_indptr: np.ndarray,
        succ_indices: np.ndarray,
        succ_src: np.ndarray,
        pred_indptr: np.ndarray,
        pred_indices: np.ndarray,
        vertices: np.ndarray,
    ):
        self.owner = owner
        self.priority = priority
        self.succ_indptr = succ_indptr
        self.succ_indices = succ_indices
        self.succ_src = succ_src
        self.pred_indptr = pred_indptr
        self.pred_indices = pred_indices
        self.vertices = vertices
        for a in (owner, priority, succ_indptr, succ_indices, succ_src,
                  pred_indptr, pred_indices, vertices):
            a.setflags(write=False)

    @classmethod
    def build(
        cls,
        owners: Sequence[int],
        priorities: Sequence[int],
        successors: Sequence[Sequence[int]],
        active: Optional[np.ndarray] = None,
    ) -> "Game":
        """Build a game from per-vertex data; duplicate edges are dropped."""
        n = len(owners)
        if len(priorities) != n or len(successors) != n:
            raise ValueError("owners, priorities and successors must align")
        owner = np.asarray([int(o) for o in owners], dtype=np.int8)
        priority = np.asarray(priorities, dtype=np.int64)
        if n and priority.min() < 0:
            raise ValueError("priorities are non-negative")

        indptr = np.zeros(n + 1, dtype=np.int64)
        cols = []
        for v, succs in enumerate(successors):
            uniq = sorted(set(int(w) for w in succs))
            if uniq and (uniq[0] < 0 or uniq[-1] >= n):
                raise ValueError(f"successor id out of range for vertex {v}")
            cols.extend(uniq)
            indptr[v + 1] = indptr[v] + len(uniq)
        succ_indices = np.asarray(cols, dtype=np.int64)
        succ_src = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))

        pred_indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(pred_indptr, succ_indices + 1, 1)
        np.cumsum(pred_indptr, out=pred_indptr)
        order = np.argsort(succ_indices, kind="stable")
        pred_indices = succ_src[order]

        if active is None:
            active = np.ones(n, dtype=bool)
        else:
            active = np.asarray(active, dtype=bool).copy()
        return cls(owner, priority, indptr, succ_indices, succ_src,
                   pred_indptr, pred_indices, active)

    # -- basic queries ---------------------------------------------------

    @property
    def size(self) -> int:
        """Size of the id space (including inactive slots)."""
        return self.owner.shape[0]

    @property
    def num_vertices(self) -> int:
        return int(np.count_nonzero(self.vertices))

    def vertex_set(self) -> VertexSet:
        return VertexSet(self.vertices.copy())

    def successors(self, v: int) -> np.ndarray:
        """Active successors of an active vertex."""
        s = self.succ_indices[self.succ_indptr[v]:self.succ_indptr[v + 1]]
        return s[self.vertices[s]]

    def predecessors(self, v: int) -> np.ndarray:
        p = self.pred_indices[self.pred_indptr[v]:self.pred_indptr[v + 1]]
        return p[self.vertices[p]]

    def owned_by(self, player: Player) -> VertexSet:
        return VertexSet(self.vertices & (self.owner == int(player)))

    def out_degrees(self) -> np.ndarray:
        """Number of active successors per vertex (0 for inactive slots)."""
        alive = self.vertices[self.succ_src] & self.vertices[self.succ_indices]
        deg = np.bincount(self.succ_src[alive], minlength=self.size)
        deg[~self.vertices] = 0
        return deg

    def edge_list(self) -> set:
        """Active edge set as python pairs (test and comparison helper)."""
        alive = self.vertices[self.succ_src] & self.vertices[self.succ_indices]
        return set(zip(self.succ_src[alive].tolist(),
                       self.succ_indices[alive].tolist()))

    def restrict(self, region: VertexSet) -> "Game":
        """Subgame on ``region``: same id space, masked vertices and edges."""
        return Game(self.owner, self.priority, self.succ_indptr,
                    self.succ_indices, self.succ_src, self.pred_indptr,
                    self.pred_indices, self.vertices & region.mask)

    def structurally_equal(self, other: "Game") -> bool:
        return (
            self.size == other.size
            and np.array_equal(self.vertices, other.vertices)
            and np.array_equal(self.owner[self.vertices], other.owner[other.vertices])
            and np.array_equal(self.priority[self.vertices],
                               other.priority[other.vertices])
            and self.edge_list() == other.edge_list()
        )

    def __repr__(self) -> str:
        return f"Game(|V|={self.num_vertices}, |slots|={self.size})"


@dataclass(frozen=True)
class IncompleteGame:
    """A game plus the set of vertices whose successor lists may still grow."""

    game: Game
    incomplete: VertexSet

    def __post_init__(self):
        if self.incomplete.size != self.game.size:
            raise ValueError("incomplete set over wrong universe")
        if (self.incomplete.mask & ~self.game.vertices).any():
            raise ValueError("incomplete vertices must be active")

    @classmethod
    def complete(cls, game: Game) -> "IncompleteGame":
        return cls(game, VertexSet.empty(game.size))

    @property
    def size(self) -> int:
        return self.game.size

    @property
    def num_vertices(self) -> int:
        return self.game.num_vertices

    @property
    def vertices(self) -> np.ndarray:
        return self.game.vertices

    def vertex_set(self) -> VertexSet:
        return self.game.vertex_set()

    def is_complete(self) -> bool:
        return not self.incomplete

    def restrict(self, region: VertexSet) -> "IncompleteGame":
        return IncompleteGame(self.game.restrict(region),
                              self.incomplete & region)


def _as_pair(g) -> tuple:
    """Accept either a Game or an IncompleteGame."""
    if isinstance(g, IncompleteGame):
        return g.game, g.incomplete.mask
    return g, np.zeros(g.size, dtype=bool)


def sinks(g) -> VertexSet:
    """Active vertices without active successors."""
    game, _ = _as_pair(g)
    return VertexSet(game.vertices & (game.out_degrees() == 0))


def sinks_of_player(g, player: Player) -> VertexSet:
    game, _ = _as_pair(g)
    return sinks(game) & game.owned_by(player)


def play_winner(g, end: int) -> Player:
    """Winner of a maximal finite play ending in the sink ``end``."""
    game, _ = _as_pair(g)
    if not game.vertices[end]:
        raise ValueError(f"vertex {end} is not in the game")
    if game.successors(end).size:
        raise ValueError(f"vertex {end} has successors; play is not maximal")
    return Player(int(game.owner[end])).opponent


def subgame(g: IncompleteGame, region: VertexSet) -> IncompleteGame:
    """Restriction to ``region``; vertex ids stay stable."""
    if isinstance(g, Game):
        g = IncompleteGame.complete(g)
    return g.restrict(region)


def check_extension(g1: IncompleteGame, g2: IncompleteGame) -> bool:
    """Whether ``g2`` extends ``g1``: knowledge grows, complete vertices are
    frozen, priorities and owners are preserved, nothing complete becomes
    incomplete again.  Complete vertices of ``g1`` may gain no successors at
    all, fresh ones included."""
    a, ia = _as_pair(g1)
    b, ib = _as_pair(g2)
    n1, n2 = a.size, b.size

    ids1 = np.flatnonzero(a.vertices)
    if ids1.size and ids1.max() >= n2:
        return False
    # (1) vertices carried over with their owner, (3) with their priority
    if not b.vertices[ids1].all():
        return False
    if not np.array_equal(a.owner[ids1], b.owner[ids1]):
        return False
    if not np.array_equal(a.priority[ids1], b.priority[ids1]):
        return False
    # (4) no complete vertex reverts to incomplete
    if (ib[ids1] & ~ia[ids1]).any():
        return False
    # (2) edges grow, and only out of incomplete vertices
    for v in ids1:
        s1 = set(a.successors(v).tolist())
        s2 = set(b.successors(int(v)).tolist())
        if not s1 <= s2:
            return False
        if not ia[v] and s2 != s1:
            return False
    return True


@dataclass
class Solution:
    """Winning regions (possibly partial) plus positional strategies.

    ``strategy[v]`` is the successor the winner of ``v`` moves to; it is
    only populated for vertices owned by their winning player, and partial
    solvers may leave it empty.
    """

    won_even: VertexSet
    won_odd: VertexSet
    undecided: VertexSet
    strategy: Dict[int, int] = field(default_factory=dict)

    def won(self, player: Player) -> VertexSet:
        return self.won_even if player == Player.EVEN else self.won_odd

    def winner_of(self, v: int) -> Optional[Player]:
        if v in self.won_even:
            return Player.EVEN
        if v in self.won_odd:
            return Player.ODD
        return None

    def check(self, g) -> None:
        """Raise if the regions do not partition the game's vertices or a
        recorded strategy move is not an actual edge."""
        game, _ = _as_pair(g)
        masks = (self.won_even.mask, self.won_odd.mask, self.undecided.mask)
        total = masks[0].astype(np.int8) + masks[1] + masks[2]
        if not np.array_equal(total > 0, game.vertices) or (total > 1).any():
            raise AssertionError("regions do not partition the vertex set")
        for v, w in self.strategy.items():
            if w not in set(game.successors(v).tolist()):
                raise AssertionError(f"strategy {v}->{w} is not an edge")
            winner = self.winner_of(v)
            if winner is None or int(game.owner[v]) != int(winner):
                raise AssertionError(f"strategy recorded for {v} outside its "
                                     f"owner's winning region")
