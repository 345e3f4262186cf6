"""pgsolve: parity-game solving during exploration.

Explicit-state parity games with incomplete knowledge, safe attractors,
partial solvers that stay correct under every future extension of the
game, and a driver that interleaves exploration with solving to decide a
designated vertex early.
"""

from .backend import available_backends, current_backend, set_backend
from .explore import (DriverConfig, DriverReport, Expander, ExplorationError,
                      ExplorationStrategy, GameBuilder, GameExpander,
                      incremental_add, run_driver)
from .fixpoints import (AttractorResult, attr, cpre, mattr, mpre, pre,
                        reachable_from, safe_set, sattr, smattr, smpre, spre,
                        work_meter)
from .fileio import LoadedGame, ParseError, load, loads, parse, serialize
from .game import (Game, IncompleteGame, Player, Solution, check_extension,
                   parity_of, play_winner, sinks, sinks_of_player, subgame)
from .generators import (GenSpec, adversarial_extension, complete_randomly,
                         gen_extension, gen_random, gen_safety_family)
from .sets import VertexSet
from .solvers import (SolverKind, brute_force_oracle, fatal_attractors,
                      forced_cycles, parity_region, partial_solve,
                      prio_at_least, prio_exactly, solitaire_cycles,
                      solve_on_safe, zielonka)

__version__ = "0.1.0"

__all__ = [
    "AttractorResult", "DriverConfig", "DriverReport", "Expander",
    "ExplorationError", "ExplorationStrategy", "Game", "GameBuilder",
    "GameExpander", "GenSpec", "IncompleteGame", "LoadedGame", "ParseError",
    "Player", "Solution", "SolverKind", "VertexSet",
    "adversarial_extension", "attr", "available_backends",
    "brute_force_oracle", "check_extension", "complete_randomly", "cpre",
    "current_backend", "fatal_attractors", "forced_cycles", "gen_extension",
    "gen_random", "gen_safety_family", "incremental_add", "load", "loads",
    "mattr", "mpre", "parity_of", "parity_region", "parse", "partial_solve",
    "play_winner", "pre", "prio_at_least", "prio_exactly", "reachable_from",
    "run_driver", "safe_set", "sattr", "serialize", "set_backend", "sinks",
    "sinks_of_player", "smattr", "smpre", "solitaire_cycles", "solve_on_safe",
    "spre", "subgame", "work_meter", "zielonka",
]
