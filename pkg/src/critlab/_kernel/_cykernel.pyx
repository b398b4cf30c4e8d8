# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edge-coloring decision kernel.

Mirrors pykernel.solve exactly: same ordering heuristic, same first-use
color cap, same single Kempe-repair per dead end, same node accounting.
Palette is limited to 62 colors (masks live in one 64-bit word); the
dispatcher falls back to the pure kernel beyond that.
"""

from libc.stdlib cimport malloc, free as cfree

import time

YES, NO, BUDGET = 0, 1, 2

ctypedef unsigned long long u64


cdef struct State:
    int n, m, k
    int *eu          # edge endpoints
    int *ev
    int *col         # -1 = uncolored
    u64 *vfree       # per-vertex free-color mask
    int *eat         # v*k + c -> edge id or -1
    int *path        # scratch for kempe repair
    int *olds
    long long nodes
    long long node_limit
    double deadline


cdef inline int popcount(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int lowbit_index(u64 x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef inline void put(State *s, int e, int c) nogil:
    cdef u64 bit = (<u64>1) << c
    s.col[e] = c
    s.vfree[s.eu[e]] &= ~bit
    s.vfree[s.ev[e]] &= ~bit
    s.eat[s.eu[e] * s.k + c] = e
    s.eat[s.ev[e] * s.k + c] = e


cdef inline void take(State *s, int e) nogil:
    cdef int c = s.col[e]
    cdef u64 bit = (<u64>1) << c
    s.col[e] = -1
    s.vfree[s.eu[e]] |= bit
    s.vfree[s.ev[e]] |= bit
    s.eat[s.eu[e] * s.k + c] = -1
    s.eat[s.ev[e] * s.k + c] = -1


cdef int out_of_budget(State *s):
    if s.node_limit > 0 and s.nodes >= s.node_limit:
        return 1
    if s.deadline > 0 and s.nodes % 1024 == 0:
        if time.monotonic() > s.deadline:
            return 1
    return 0


cdef int pick(State *s) nogil:
    cdef int best = -1, best_cnt = s.k + 1, e, cnt
    for e in range(s.m):
        if s.col[e] >= 0:
            continue
        cnt = popcount(s.vfree[s.eu[e]] & s.vfree[s.ev[e]])
        if cnt < best_cnt:
            best = e
            best_cnt = cnt
            if cnt == 0:
                break
    return best


cdef int repair(State *s, int e, int u, int v, int *path_len, int *color_a) nogil:
    """Flip one (a,b) chain so the stuck edge gains a common free color.
    Returns 1 and fills path/olds on success, 0 if no flip helps."""
    cdef u64 fu = s.vfree[u], fv = s.vfree[v]
    if fu == 0 or fv == 0:
        return 0
    cdef int a = lowbit_index(fu)
    cdef int b = lowbit_index(fv)
    cdef int plen = 0, w = v, c = a, e2, pu, pv, i
    while True:
        e2 = s.eat[w * s.k + c]
        if e2 < 0:
            break
        s.path[plen] = e2
        plen += 1
        pu = s.eu[e2]
        pv = s.ev[e2]
        w = pv if pu == w else pu
        if w == u:
            return 0
        c = b if c == a else a
    for i in range(plen):
        s.olds[i] = s.col[s.path[i]]
    for i in range(plen):
        take(s, s.path[i])
    for i in range(plen):
        put(s, s.path[i], b if s.olds[i] == a else a)
    path_len[0] = plen
    color_a[0] = a
    return 1


cdef void unflip(State *s, int plen) nogil:
    cdef int i
    for i in range(plen):
        take(s, s.path[i])
    for i in range(plen):
        put(s, s.path[i], s.olds[i])


cdef int rec(State *s, int colored, int maxc):
    if colored == s.m:
        return 1
    cdef int e = pick(s)
    cdef int u = s.eu[e], v = s.ev[e]
    cdef u64 raw = s.vfree[u] & s.vfree[v]
    cdef int limit = maxc + 2
    if limit > s.k:
        limit = s.k
    cdef u64 bits = raw & (((<u64>1) << limit) - 1)
    cdef u64 bit
    cdef int c, r, plen = 0, a = 0
    cdef int *saved_path
    cdef int *saved_olds
    cdef int i
    while bits:
        bit = bits & (~bits + 1)
        bits ^= bit
        c = lowbit_index(bit)
        s.nodes += 1
        if out_of_budget(s):
            return -1
        put(s, e, c)
        r = rec(s, colored + 1, maxc if maxc >= c else c)
        if r:
            return r
        take(s, e)
    if raw == 0:
        if repair(s, e, u, v, &plen, &a):
            # the shared scratch buffers are clobbered by deeper repairs;
            # save this frame's path for the undo
            saved_path = <int *> malloc(plen * sizeof(int))
            saved_olds = <int *> malloc(plen * sizeof(int))
            for i in range(plen):
                saved_path[i] = s.path[i]
                saved_olds[i] = s.olds[i]
            s.nodes += 1
            if out_of_budget(s):
                for i in range(plen):
                    s.path[i] = saved_path[i]
                    s.olds[i] = saved_olds[i]
                unflip(s, plen)
                cfree(saved_path)
                cfree(saved_olds)
                return -1
            put(s, e, a)
            r = rec(s, colored + 1, maxc if maxc >= a else a)
            if r:
                cfree(saved_path)
                cfree(saved_olds)
                return r
            take(s, e)
            for i in range(plen):
                s.path[i] = saved_path[i]
                s.olds[i] = saved_olds[i]
            unflip(s, plen)
            cfree(saved_path)
            cfree(saved_olds)
    return 0


def solve(int n, pairs, int k, node_limit=0, wall_limit=0.0):
    """Decide proper k-edge-colorability; see pykernel.solve for semantics."""
    cdef int m = len(pairs)
    if m == 0:
        return YES, [], 0
    if k <= 0:
        return NO, None, 0
    if k > 62:
        raise ValueError("compiled kernel supports k <= 62")
    cdef list degl = [0] * n
    for u, v in pairs:
        degl[u] += 1
        degl[v] += 1
    if max(degl) > k:
        return NO, None, 0
    if m > k * (n // 2):
        return NO, None, 0

    cdef State s
    s.n = n
    s.m = m
    s.k = k
    s.nodes = 0
    s.node_limit = int(node_limit) if node_limit else 0
    s.deadline = (time.monotonic() + wall_limit) if wall_limit and wall_limit > 0 else 0.0
    s.eu = <int *> malloc(m * sizeof(int))
    s.ev = <int *> malloc(m * sizeof(int))
    s.col = <int *> malloc(m * sizeof(int))
    s.vfree = <u64 *> malloc(n * sizeof(u64))
    s.eat = <int *> malloc(n * k * sizeof(int))
    s.path = <int *> malloc((m + 1) * sizeof(int))
    s.olds = <int *> malloc((m + 1) * sizeof(int))
    cdef int i
    try:
        for i in range(m):
            s.eu[i] = pairs[i][0]
            s.ev[i] = pairs[i][1]
            s.col[i] = -1
        for i in range(n):
            s.vfree[i] = (((<u64>1) << k) - 1)
        for i in range(n * k):
            s.eat[i] = -1
        r = rec(&s, 0, -1)
        if r == 1:
            return YES, [s.col[i] + 1 for i in range(m)], s.nodes
        if r == -1:
            return BUDGET, None, s.nodes
        return NO, None, s.nodes
    finally:
        cfree(s.eu)
        cfree(s.ev)
        cfree(s.col)
        cfree(s.vfree)
        cfree(s.eat)
        cfree(s.path)
        cfree(s.olds)
