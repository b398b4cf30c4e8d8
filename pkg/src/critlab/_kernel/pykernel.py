"""Pure-Python edge-coloring decision kernel.

Exhaustive backtracking over edges, most-constrained first, colors tried in
first-use order (sound symmetry breaking for a decision problem), one Kempe
repair attempt per dead end before backtracking.  The compiled kernel in
_cykernel mirrors this logic step for step: same branch order, same node
counts, same answers.
"""

from __future__ import annotations

import time

YES, NO, BUDGET = 0, 1, 2


def solve(n, pairs, k, node_limit=0, wall_limit=0.0):
    """Decide whether the given edges admit a proper k-coloring.

    Returns (status, colors, nodes); colors is a list parallel to `pairs`
    with entries in 1..k when status is YES, else None.  A NO answer is
    exhaustive; budget exhaustion is reported, never conflated with NO.
    """
    m = len(pairs)
    if m == 0:
        return YES, [], 0
    if k <= 0:
        return NO, None, 0
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    if max(deg) > k:
        return NO, None, 0
    if m > k * (n // 2):
        # every color class is a matching of at most floor(n/2) edges
        return NO, None, 0

    full = (1 << k) - 1
    free = [full] * n
    eat = [[-1] * k for _ in range(n)]
    col = [-1] * m
    nodes = 0
    deadline = time.monotonic() + wall_limit if wall_limit > 0 else 0.0

    def out_of_budget():
        if node_limit and nodes >= node_limit:
            return True
        if deadline and nodes % 1024 == 0 and time.monotonic() > deadline:
            return True
        return False

    def pick():
        best, best_cnt = -1, k + 1
        for e in range(m):
            if col[e] >= 0:
                continue
            u, v = pairs[e]
            cnt = (free[u] & free[v]).bit_count()
            if cnt < best_cnt:
                best, best_cnt = e, cnt
                if cnt == 0:
                    break
        return best

    def put(e, c):
        u, v = pairs[e]
        col[e] = c
        bit = 1 << c
        free[u] &= ~bit
        free[v] &= ~bit
        eat[u][c] = e
        eat[v][c] = e

    def take(e):
        c = col[e]
        u, v = pairs[e]
        col[e] = -1
        bit = 1 << c
        free[u] |= bit
        free[v] |= bit
        eat[u][c] = -1
        eat[v][c] = -1

    def repair(e, u, v):
        """One Kempe-repair attempt for a stuck edge; flips a chain so that
        some color becomes free at both endpoints.  Returns the flipped path
        (for undo) or None if no flip helps."""
        fu, fv = free[u], free[v]
        if not fu or not fv:
            return None
        a = (fu & -fu).bit_length() - 1
        b = (fv & -fv).bit_length() - 1
        path = []
        w, c = v, a
        while True:
            e2 = eat[w][c]
            if e2 < 0:
                break
            path.append(e2)
            pu, pv = pairs[e2]
            w = pv if pu == w else pu
            if w == u:
                return None
            c = b if c == a else a
        # swap a <-> b along the path
        olds = [col[x] for x in path]
        for x in path:
            take(x)
        for x, c0 in zip(path, olds):
            put(x, b if c0 == a else a)
        return path, olds, a

    def unflip(path, olds):
        for x in path:
            take(x)
        for x, c0 in zip(path, olds):
            put(x, c0)

    def rec(colored, maxc):
        nonlocal nodes
        if colored == m:
            return 1
        e = pick()
        u, v = pairs[e]
        raw = free[u] & free[v]
        limit = min(k, maxc + 2)  # first-use cap: colors 0..maxc+1
        bits = raw & ((1 << limit) - 1)
        while bits:
            bit = bits & -bits
            bits ^= bit
            c = bit.bit_length() - 1
            nodes += 1
            if out_of_budget():
                return -1
            put(e, c)
            r = rec(colored + 1, max(maxc, c))
            if r:
                return r
            take(e)
        if raw == 0:
            fixed = repair(e, u, v)
            if fixed is not None:
                path, olds, a = fixed
                nodes += 1
                if out_of_budget():
                    unflip(path, olds)
                    return -1
                put(e, a)
                r = rec(colored + 1, max(maxc, a))
                if r:
                    return r
                take(e)
                unflip(path, olds)
        return 0

    r = rec(0, -1)
    if r == 1:
        return YES, [c + 1 for c in col], nodes
    if r == -1:
        return BUDGET, None, nodes
    return NO, None, nodes
