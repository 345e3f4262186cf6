"""Naive set-based reference implementations used as oracles.

Everything here works on python sets, straight from the operator
definitions, with no shared code with the package kernels.  Deliberately
slow and obvious.
"""

from pgsolve import IncompleteGame, Player


def parts(g):
    game = g.game if isinstance(g, IncompleteGame) else g
    inc = set(g.incomplete.ids().tolist()) if isinstance(g, IncompleteGame) else set()
    vs = set(int(v) for v in game.vertex_set().ids())
    succ = {v: set(int(w) for w in game.successors(v)) for v in vs}
    owner = {v: int(game.owner[v]) for v in vs}
    prio = {v: int(game.priority[v]) for v in vs}
    return vs, succ, owner, prio, inc


def ref_pre(g, u):
    vs, succ, _, _, _ = parts(g)
    u = set(u) & vs
    return {v for v in vs if succ[v] & u}


def ref_cpre(g, player, u, safe=False):
    vs, succ, owner, _, inc = parts(g)
    u = set(u) & vs
    player = int(player)
    out = set()
    for v in vs:
        if owner[v] == player:
            if succ[v] & u:
                out.add(v)
        else:
            if succ[v] and succ[v] <= u and not (safe and v in inc):
                out.add(v)
    return out


def ref_attr(g, player, u, safe=False):
    vs, _, _, _, _ = parts(g)
    z = set(u) & vs
    while True:
        nxt = z | ref_cpre(g, player, z, safe)
        if nxt == z:
            return z
        z = nxt


def ref_mattr(g, player, u, c, safe=False):
    vs, _, _, prio, _ = parts(g)
    u = set(u) & vs
    z = set()
    while True:
        nxt = {v for v in ref_cpre(g, player, z | u, safe) if prio[v] >= c}
        if nxt == z:
            return z
        z = nxt


def ref_safe_set(g, player):
    vs, _, owner, _, inc = parts(g)
    opp = int(Player(player).opponent)
    lure = {v for v in vs if v in inc and owner[v] == opp}
    return vs - ref_attr(g, Player(opp), lure)


def ref_solitaire_cycles(g, player):
    vs, succ, owner, prio, _ = parts(g)
    player = int(player)
    z = {v for v in vs if succ[v] and prio[v] % 2 == player
         and owner[v] == player}
    while True:
        nxt = {v for v in z if succ[v] & z}
        if nxt == z:
            return z
        z = nxt


def ref_forced_cycles(g, player):
    vs, succ, owner, prio, _ = parts(g)
    p = int(player)
    safe = ref_safe_set(g, player)
    z = {v for v in vs if succ[v] and prio[v] % 2 == p} & safe
    while True:
        nxt = {v for v in z
               if (succ[v] & z if owner[v] == p else succ[v] and succ[v] <= z)}
        if nxt == z:
            return z
        z = nxt


def ref_check_extension(g1, g2):
    vs1, succ1, owner1, prio1, inc1 = parts(g1)
    vs2, succ2, owner2, prio2, inc2 = parts(g2)
    if not vs1 <= vs2:
        return False
    for v in vs1:
        if owner1[v] != owner2[v] or prio1[v] != prio2[v]:
            return False
        if not succ1[v] <= succ2[v]:
            return False
        if v not in inc1 and succ2[v] != succ1[v]:
            return False
        if v in inc2 and v not in inc1:
            return False
    return True
