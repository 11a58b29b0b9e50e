"""Pure-Python/numpy implementations of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or when ``FINDUAL_PUREPY=1``.
"""
import numpy as np

_BLOCK = 512


def box_table(succ, n):
    u = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for x, s in enumerate(succ):
        out |= ((int(s) & ~u) == 0).astype(np.int64) << x
    return out


def tables_from_masks(masks):
    masks = np.asarray(masks, dtype=np.uint64)
    n = len(masks)
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    for lo in range(0, n, _BLOCK):
        rows = masks[lo:lo + _BLOCK, None]
        for out, vals in ((meet, rows & masks[None, :]), (join, rows | masks[None, :])):
            idx = np.searchsorted(masks, vals)
            np.clip(idx, 0, n - 1, out=idx)
            idx[masks[idx] != vals] = -1
            out[lo:lo + _BLOCK] = idx
    return meet, join


def residual_table(meet, join, leq, bottom):
    meet = np.asarray(meet)
    leq = np.asarray(leq, dtype=bool)
    n = meet.shape[0]
    join = np.asarray(join)
    arrow = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        cand = leq[meet[a]]  # cand[c, b]: a & c <= b
        acc = np.full(n, bottom, dtype=np.int32)
        for c in range(n):
            acc = np.where(cand[c], join[acc, c], acc)
        arrow[a] = acc
    return arrow


def residuation_violation(meet, leq, arrow):
    meet = np.asarray(meet)
    leq = np.asarray(leq, dtype=bool)
    arrow = np.asarray(arrow)
    n = meet.shape[0]
    for a in range(n):
        lhs = leq[meet[a]]              # [c, b]
        rhs = leq[:, arrow[a]]          # [c, b]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            c, b = bad[0]
            return (a, int(b), int(c))
    return None


def distributivity_violation(meet, join):
    meet = np.asarray(meet)
    join = np.asarray(join)
    n = meet.shape[0]
    for a in range(n):
        lhs = meet[a][join]
        ma = meet[a]
        rhs = join[ma[:, None], ma[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            return (a, int(b), int(c))
    return None


def box_meet_violation(box, meet):
    box = np.asarray(box)
    meet = np.asarray(meet)
    bad = np.argwhere(box[meet] != meet[box[:, None], box[None, :]])
    if len(bad):
        return (int(bad[0][0]), int(bad[0][1]))
    return None


def conjugate_violation(box_f, box_p, n):
    full = (1 << n) - 1
    box_f = np.asarray(box_f, dtype=np.int64)
    box_p = np.asarray(box_p, dtype=np.int64)
    a = np.arange(1 << n, dtype=np.int64)
    dia_p = full ^ box_p[full ^ a]
    dia_f = full ^ box_f[full ^ a]
    bad = ((a & ~box_f[dia_p]) != 0) | ((a & ~box_p[dia_f]) != 0)
    hits = np.flatnonzero(bad)
    return int(hits[0]) if len(hits) else -1
