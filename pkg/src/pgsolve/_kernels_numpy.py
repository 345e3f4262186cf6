"""Vectorized pure-numpy fallback kernels.

Round-based counterparts of the numba worklist kernels; see
_kernels_numba for the contract.  Each round recomputes successor counts
with bincount over the alive edge list, so a fixpoint costs
O(rounds * |E|) instead of O(|E|), which is acceptable at the scales the
fallback is meant for.
"""

import numpy as np


def _counts(src_sel, n):
    return np.bincount(src_sel, minlength=n)


def attractor(owner, priority, active, incomplete,
              succ_indptr, succ_indices, succ_src,
              pred_indptr, pred_indices,
              target, player, safe, min_prio, include_target):
    n = owner.shape[0]
    alive = active[succ_src] & active[succ_indices]
    deg = _counts(succ_src[alive], n)
    work = int(np.count_nonzero(active)) + int(np.count_nonzero(alive))

    is_alpha = active & (owner == player)
    opp_ok = active & (owner != player) & (deg > 0)
    if safe:
        opp_ok &= ~incomplete
    if min_prio >= 0:
        floor = priority >= min_prio
        is_alpha = is_alpha & floor
        opp_ok = opp_ok & floor

    in_s = target & active
    in_z = in_s.copy() if include_target else np.zeros(n, bool)
    level = np.full(n, -1, np.int64)
    if include_target:
        level[in_s] = 0

    rnd = 0
    while True:
        rnd += 1
        sel = alive & in_s[succ_indices]
        cnt_in = _counts(succ_src[sel], n)
        new = (is_alpha & (cnt_in > 0)) | (opp_ok & (cnt_in == deg))
        new &= ~in_z
        if not new.any():
            break
        in_z |= new
        in_s |= new
        level[new] = rnd
        work += int(np.count_nonzero(alive)) // 8 + int(np.count_nonzero(new))
    return in_z, level, work


def cycle_gfp(owner, active, incomplete,
              succ_indptr, succ_indices, succ_src,
              pred_indptr, pred_indices,
              candidate, need_all):
    n = owner.shape[0]
    alive = active[succ_src] & active[succ_indices]
    in_z = candidate & active
    work = int(np.count_nonzero(alive))
    while True:
        sel_in = alive & in_z[succ_indices]
        cnt_in = _counts(succ_src[sel_in], n)
        sel_out = alive & ~in_z[succ_indices]
        cnt_out = _counts(succ_src[sel_out], n)
        keep = in_z & np.where(need_all,
                               (cnt_out == 0) & (cnt_in > 0),
                               cnt_in > 0)
        if np.array_equal(keep, in_z):
            break
        in_z = keep
        work += int(np.count_nonzero(alive)) // 8
    return in_z, work


def reachable(active, succ_indptr, succ_indices, start):
    n = active.shape[0]
    succ_src = np.repeat(np.arange(n, dtype=np.int64), np.diff(succ_indptr))
    alive = active[succ_src] & active[succ_indices]
    seen = start & active
    while True:
        step = alive & seen[succ_src] & ~seen[succ_indices]
        if not step.any():
            break
        seen = seen.copy()
        seen[succ_indices[step]] = True
    return seen
