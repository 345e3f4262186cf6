"""Worklist kernels, numba-compiled.

Shared semantics with _kernels_numpy (the fallback backend): both must
return identical sets and identical BFS levels; only the reported work
counters may differ.  Levels are the canonical round indices of the
round-based fixpoint, which makes strategy extraction deterministic and
backend-independent.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def attractor(owner, priority, active, incomplete,
              succ_indptr, succ_indices, succ_src,
              pred_indptr, pred_indices,
              target, player, safe, min_prio, include_target):
    """Least fixpoint of Z -> cpre(Z u target) restricted by the flags.

    include_target unions the target into the result (plain attractor);
    without it the kernel computes the monotone-attractor fixpoint, where
    the target only enables predecessors.  ``safe`` drops opponent-owned
    incomplete vertices from the forced side; ``min_prio`` (or -1) keeps
    only vertices of at least that priority.

    Returns (member mask, level per member (-1 outside), work units).
    """
    n = owner.shape[0]
    in_s = np.zeros(n, np.bool_)
    in_z = np.zeros(n, np.bool_)
    level = np.full(n, -1, np.int64)
    slevel = np.zeros(n, np.int64)
    # active successors not yet in the enabling set
    cnt = np.zeros(n, np.int64)
    work = 0
    for v in range(n):
        if active[v]:
            c = 0
            for e in range(succ_indptr[v], succ_indptr[v + 1]):
                if active[succ_indices[e]]:
                    c += 1
            cnt[v] = c
            work += 1 + c

    queue = np.empty(n, np.int64)
    qt = 0
    for v in range(n):
        if target[v] and active[v]:
            in_s[v] = True
            if include_target:
                in_z[v] = True
                level[v] = 0
            queue[qt] = v
            qt += 1
    qh = 0
    while qh < qt:
        w = queue[qh]
        qh += 1
        lw = slevel[w]
        for e in range(pred_indptr[w], pred_indptr[w + 1]):
            v = pred_indices[e]
            work += 1
            if not active[v] or in_z[v]:
                continue
            if owner[v] == player:
                if min_prio >= 0 and priority[v] < min_prio:
                    continue
                in_z[v] = True
                level[v] = lw + 1
                if not in_s[v]:
                    in_s[v] = True
                    slevel[v] = lw + 1
                    queue[qt] = v
                    qt += 1
            else:
                cnt[v] -= 1
                if cnt[v] == 0:
                    # all active successors inside; sinks never trigger
                    if safe and incomplete[v]:
                        continue
                    if min_prio >= 0 and priority[v] < min_prio:
                        continue
                    in_z[v] = True
                    level[v] = lw + 1
                    if not in_s[v]:
                        in_s[v] = True
                        slevel[v] = lw + 1
                        queue[qt] = v
                        qt += 1
    return in_z, level, work


@njit(cache=True)
def cycle_gfp(owner, active, incomplete,
              succ_indptr, succ_indices, succ_src,
              pred_indptr, pred_indices,
              candidate, need_all):
    """Greatest fixpoint pruning for cycle detection.

    Keeps the largest Z inside ``candidate`` such that every v in Z has a
    successor in Z (need_all[v] false) or all its active successors in Z
    and at least one (need_all[v] true).  Candidates must already encode
    every per-vertex membership condition (parity class, safety, owner).

    Returns (member mask, work units).
    """
    n = owner.shape[0]
    in_z = np.zeros(n, np.bool_)
    for v in range(n):
        if candidate[v] and active[v]:
            in_z[v] = True
    # counts snapshot the full candidate set; removals correct them later
    cnt_in = np.zeros(n, np.int64)
    work = 0
    for v in range(n):
        if not in_z[v]:
            continue
        ci = 0
        co = 0
        for e in range(succ_indptr[v], succ_indptr[v + 1]):
            w = succ_indices[e]
            if active[w]:
                if in_z[w]:
                    ci += 1
                else:
                    co += 1
        cnt_in[v] = ci
        work += 1 + ci + co
    stack = np.empty(n, np.int64)
    st = 0
    for v in range(n):
        if not in_z[v]:
            continue
        so_far = cnt_in[v]
        deg_in = 0
        for e in range(succ_indptr[v], succ_indptr[v + 1]):
            if active[succ_indices[e]]:
                deg_in += 1
        if need_all[v]:
            bad = so_far != deg_in or deg_in == 0
        else:
            bad = so_far == 0
        if bad:
            in_z[v] = False
            stack[st] = v
            st += 1
    while st > 0:
        st -= 1
        w = stack[st]
        for e in range(pred_indptr[w], pred_indptr[w + 1]):
            v = pred_indices[e]
            work += 1
            if not in_z[v]:
                continue
            cnt_in[v] -= 1
            if need_all[v] or cnt_in[v] == 0:
                in_z[v] = False
                stack[st] = v
                st += 1
    return in_z, work


@njit(cache=True)
def reachable(active, succ_indptr, succ_indices, start):
    """Forward reachability over active vertices from the start mask."""
    n = active.shape[0]
    seen = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    qt = 0
    for v in range(n):
        if start[v] and active[v]:
            seen[v] = True
            queue[qt] = v
            qt += 1
    qh = 0
    while qh < qt:
        v = queue[qh]
        qh += 1
        for e in range(succ_indptr[v], succ_indptr[v + 1]):
            w = succ_indices[e]
            if active[w] and not seen[w]:
                seen[w] = True
                queue[qt] = w
                qt += 1
    return seen
