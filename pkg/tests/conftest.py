import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import pgsolve as pg


def fig1() -> pg.Game:
    """Five-vertex worked example: u1 is an Odd sink, u0/u2 form an even
    cycle, u3/u4 an odd one."""
    return pg.Game.build(
        owners=[0, 1, 0, 1, 0],
        priorities=[2, 3, 0, 1, 2],
        successors=[[1, 2], [], [0, 4], [2, 4], [3]],
    )


def fig2_solid() -> pg.IncompleteGame:
    """Exploration snapshot of the six-vertex example: u3 and u5 are still
    incomplete; the edges u3->u5 and u5->u4 are not yet known."""
    game = pg.Game.build(
        owners=[0, 1, 0, 0, 1, 1],
        priorities=[2, 3, 0, 2, 1, 2],
        successors=[[1, 2], [], [0], [2], [2, 3, 5], []],
    )
    return pg.IncompleteGame(game, pg.VertexSet.of(6, [3, 5]))


def fig2_full() -> pg.Game:
    game = pg.Game.build(
        owners=[0, 1, 0, 0, 1, 1],
        priorities=[2, 3, 0, 2, 1, 2],
        successors=[[1, 2], [], [0], [2, 5], [2, 3, 5], [4]],
    )
    return game


@pytest.fixture(name="fig1")
def fig1_fixture():
    return fig1()


@pytest.fixture(name="fig2_solid")
def fig2_solid_fixture():
    return fig2_solid()


@pytest.fixture(name="fig2_full")
def fig2_full_fixture():
    return fig2_full()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so timed tests measure solving only."""
    g = pg.IncompleteGame.complete(fig1())
    pg.attr(g, pg.Player.EVEN, pg.VertexSet.of(5, [2]))
    pg.solitaire_cycles(g, pg.Player.EVEN)
    pg.reachable_from(g, pg.VertexSet.of(5, [0]))
    yield
