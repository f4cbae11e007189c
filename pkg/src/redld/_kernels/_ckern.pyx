# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: same algorithms as pybits.py on multi-word bitsets.

The decision order (propagation, pruning, branch choice) is transcribed from
the pure backend line for line, so branch-and-bound node counts are identical.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

cdef extern from *:
    """
    #define POPCLL(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZLL(x) __builtin_ctzll((unsigned long long)(x))
    """
    int POPCLL(unsigned long long) nogil
    int CTZLL(unsigned long long) nogil

ctypedef unsigned long long u64

DEF MAXW = 8  # up to 512 vertices

BACKEND = "c"

MODE_LD = 0
MODE_REDLD = 1
MODE_REDLD_DEF = 2


cdef double _monotime() nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef class Ctx:
    cdef public int n
    cdef int W
    cdef u64 *open_
    cdef u64 *closed
    cdef int *deg
    cdef public int maxdeg
    # scratch used by single-threaded entry points
    cdef u64 *tr
    cdef int *ints

    def __cinit__(self, adj):
        cdef int n = len(adj)
        if n < 1 or n > 64 * MAXW:
            raise ValueError(f"kernel supports 1..{64 * MAXW} vertices")
        self.n = n
        self.W = (n + 63) >> 6
        self.open_ = <u64 *> malloc(n * self.W * sizeof(u64))
        self.closed = <u64 *> malloc(n * self.W * sizeof(u64))
        self.deg = <int *> malloc(n * sizeof(int))
        self.tr = <u64 *> malloc((n + 2) * self.W * sizeof(u64))
        self.ints = <int *> malloc(2 * n * sizeof(int))
        if not (self.open_ and self.closed and self.deg and self.tr and self.ints):
            raise MemoryError()
        memset(self.open_, 0, n * self.W * sizeof(u64))
        cdef int v, w
        self.maxdeg = 0
        for v in range(n):
            nbrs = adj[v]
            self.deg[v] = len(nbrs)
            if self.deg[v] > self.maxdeg:
                self.maxdeg = self.deg[v]
            for w in nbrs:
                self.open_[v * self.W + (w >> 6)] |= (<u64> 1) << (w & 63)
        memcpy(self.closed, self.open_, n * self.W * sizeof(u64))
        for v in range(n):
            self.closed[v * self.W + (v >> 6)] |= (<u64> 1) << (v & 63)

    def __dealloc__(self):
        free(self.open_)
        free(self.closed)
        free(self.deg)
        free(self.tr)
        free(self.ints)


def make_ctx(adj):
    return Ctx(adj)


cdef inline void _mask_from_int(object mask, int W, u64 *out):
    cdef int w
    for w in range(W):
        out[w] = <u64> ((mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)


cdef object _mask_to_int(u64 *m, int W):
    out = 0
    cdef int w
    for w in range(W):
        if m[w]:
            out |= int(m[w]) << (64 * w)
    return out


cdef inline int _popcount(u64 *m, int W) nogil:
    cdef int w, c = 0
    for w in range(W):
        c += POPCLL(m[w])
    return c


cdef inline bint _get(u64 *m, int v) nogil:
    return (m[v >> 6] >> (v & 63)) & 1


cdef inline void _set(u64 *m, int v) nogil:
    m[v >> 6] |= (<u64> 1) << (v & 63)


# ---- predicates -----------------------------------------------------------

cdef bint _is_ld_core(Ctx c, u64 *s) nogil:
    # traces of non-detectors must be nonempty and pairwise distinct
    cdef int n = c.n, W = c.W
    cdef u64 *tr = c.tr
    cdef int *non = c.ints
    cdef int cnt = 0, v, w, i, j
    cdef u64 acc
    cdef bint same
    for v in range(n):
        if _get(s, v):
            continue
        acc = 0
        for w in range(W):
            tr[cnt * W + w] = c.open_[v * W + w] & s[w]
            acc |= tr[cnt * W + w]
        if acc == 0:
            return 0
        non[cnt] = v
        cnt += 1
    for i in range(cnt):
        for j in range(i + 1, cnt):
            same = 1
            for w in range(W):
                if tr[i * W + w] != tr[j * W + w]:
                    same = 0
                    break
            if same:
                return 0
    return 1


cdef bint _is_redld_core(Ctx c, u64 *s) nogil:
    cdef int n = c.n, W = c.W
    cdef u64 *tr = c.tr
    cdef int *non = c.ints
    cdef int cnt = 0, v, w, i, j, pc
    cdef u64 d
    for v in range(n):
        pc = 0
        for w in range(W):
            pc += POPCLL(c.closed[v * W + w] & s[w])
        if pc < 2:
            return 0
    for v in range(n):
        if _get(s, v):
            continue
        for w in range(W):
            tr[cnt * W + w] = c.open_[v * W + w] & s[w]
        non[cnt] = v
        cnt += 1
    for i in range(cnt):
        for j in range(i + 1, cnt):
            pc = 0
            for w in range(W):
                pc += POPCLL(tr[i * W + w] ^ tr[j * W + w])
                if pc >= 2:
                    break
            if pc < 2:
                return 0
    cdef u64 *tv = c.tr + n * c.W
    cdef bint empty
    for v in range(n):
        if not _get(s, v):
            continue
        for w in range(W):
            tv[w] = c.open_[v * W + w] & s[w]
        for j in range(cnt):
            empty = 1
            for w in range(W):
                d = tv[w] ^ tr[j * W + w]
                if w == (v >> 6):
                    d &= ~((<u64> 1) << (v & 63))
                if d:
                    empty = 0
                    break
            if empty:
                return 0
    return 1


cdef bint _is_redld_def_core(Ctx c, u64 *s) nogil:
    cdef int v
    if not _is_ld_core(c, s):
        return 0
    for v in range(c.n):
        if _get(s, v) and not _is_ld_removed(c, s, v):
            return 0
    return 1


cdef bint _is_ld_removed(Ctx c, u64 *s, int rem) nogil:
    # is_ld on s minus vertex `rem`, without clobbering caller scratch
    cdef int n = c.n, W = c.W
    cdef u64 sm[MAXW]
    cdef int w
    for w in range(W):
        sm[w] = s[w]
    sm[rem >> 6] &= ~((<u64> 1) << (rem & 63))
    cdef u64 tr[MAXW]
    cdef u64 tr2[MAXW]
    cdef int v, u
    cdef u64 acc
    cdef bint same
    # pairwise without shared scratch: quadratic over non-detectors
    for v in range(n):
        if _get(sm, v):
            continue
        acc = 0
        for w in range(W):
            tr[w] = c.open_[v * W + w] & sm[w]
            acc |= tr[w]
        if acc == 0:
            return 0
        for u in range(v + 1, n):
            if _get(sm, u):
                continue
            same = 1
            for w in range(W):
                tr2[w] = c.open_[u * W + w] & sm[w]
                if tr2[w] != tr[w]:
                    same = 0
                    break
            if same:
                return 0
    return 1


def is_ld(Ctx c, mask):
    cdef u64 s[MAXW]
    _mask_from_int(mask, c.W, s)
    return bool(_is_ld_core(c, s))


def is_redld(Ctx c, mask):
    cdef u64 s[MAXW]
    _mask_from_int(mask, c.W, s)
    return bool(_is_redld_core(c, s))


def is_redld_def(Ctx c, mask):
    cdef u64 s[MAXW]
    _mask_from_int(mask, c.W, s)
    return bool(_is_redld_def_core(c, s))


# ---- brute force -----------------------------------------------------------

def brute_force_min(Ctx c, int mode):
    """Minimum valid set by cardinality then lexicographic order."""
    cdef int n = c.n, W = c.W
    cdef int k, i, v
    cdef u64 s[MAXW]
    cdef int idx[512]
    cdef bint ok, done
    for k in range(n + 1):
        for i in range(k):
            idx[i] = i
        done = 0
        while not done:
            memset(s, 0, W * sizeof(u64))
            for i in range(k):
                _set(s, idx[i])
            if mode == 0:
                ok = _is_ld_core(c, s)
            elif mode == 1:
                ok = _is_redld_core(c, s)
            else:
                ok = _is_redld_def_core(c, s)
            if ok:
                return k, _mask_to_int(s, W)
            # advance combination (lexicographic odometer)
            done = 1
            for i in range(k - 1, -1, -1):
                if idx[i] != i + n - k:
                    idx[i] += 1
                    for v in range(i + 1, k):
                        idx[v] = idx[v - 1] + 1
                    done = 0
                    break
            if k == 0:
                done = 1
    return -1, 0


# ---- localized pair checks -------------------------------------------------

cdef bint _pairs_ok_core(Ctx c, u64 *s, int npairs, int *us, int *vs) nogil:
    cdef int n = c.n, W = c.W
    cdef int i, u, v, w, pc, det
    cdef bint du, dv, empty
    cdef u64 d
    for v in range(n):
        pc = 0
        for w in range(W):
            pc += POPCLL(c.closed[v * W + w] & s[w])
        if pc < 2:
            return 0
    for i in range(npairs):
        u = us[i]
        v = vs[i]
        du = _get(s, u)
        dv = _get(s, v)
        if du and dv:
            continue
        if du or dv:
            det = u if du else v
            empty = 1
            for w in range(W):
                d = (c.open_[u * W + w] ^ c.open_[v * W + w]) & s[w]
                if w == (det >> 6):
                    d &= ~((<u64> 1) << (det & 63))
                if d:
                    empty = 0
                    break
            if empty:
                return 0
        else:
            pc = 0
            for w in range(W):
                pc += POPCLL((c.open_[u * W + w] ^ c.open_[v * W + w]) & s[w])
                if pc >= 2:
                    break
            if pc < 2:
                return 0
    return 1


def pairs_ok(Ctx c, mask, us, vs):
    cdef u64 s[MAXW]
    _mask_from_int(mask, c.W, s)
    cdef int m = len(us)
    cdef int *ua = <int *> malloc(m * sizeof(int))
    cdef int *va = <int *> malloc(m * sizeof(int))
    if not (ua and va):
        free(ua)
        free(va)
        raise MemoryError()
    cdef int i
    for i in range(m):
        ua[i] = us[i]
        va[i] = vs[i]
    cdef bint ok
    with nogil:
        ok = _pairs_ok_core(c, s, m, ua, va)
    free(ua)
    free(va)
    return bool(ok)


def pairs_scan(Ctx c, us, vs, candidates):
    """Index of the first candidate mask passing pairs_ok, or -1."""
    cdef int m = len(us)
    cdef int cnt = len(candidates)
    cdef int *ua = <int *> malloc(m * sizeof(int))
    cdef int *va = <int *> malloc(m * sizeof(int))
    cdef u64 *cand = <u64 *> malloc(max(cnt, 1) * c.W * sizeof(u64))
    if not (ua and va and cand):
        free(ua)
        free(va)
        free(cand)
        raise MemoryError()
    cdef int i
    for i in range(m):
        ua[i] = us[i]
        va[i] = vs[i]
    for i in range(cnt):
        _mask_from_int(candidates[i], c.W, cand + i * c.W)
    cdef int hit = -1
    with nogil:
        for i in range(cnt):
            if _pairs_ok_core(c, cand + i * c.W, m, ua, va):
                hit = i
                break
    free(ua)
    free(va)
    free(cand)
    return hit


# ---- branch and bound ------------------------------------------------------

cdef struct BnbState:
    int n
    int W
    int mode
    int cap
    int stop_at
    long long node_budget
    double deadline
    long long nodes
    int stop          # 1 = early stop, 2 = budget exhausted
    int best
    u64 best_mask[MAXW]

cdef void _dfs(Ctx c, BnbState *st, u64 *in_m0, u64 *out_m) nogil:
    cdef int n = st.n, W = st.W
    cdef u64 in_m[MAXW]
    cdef u64 pool[MAXW]
    cdef u64 child[MAXW]
    cdef int w, v, u, i, j, pc, in_ct, deficit, have, b, bd, cover
    cdef u64 d, acc
    cdef bint hit

    st.nodes += 1
    if st.node_budget and st.nodes > st.node_budget:
        st.stop = 2
        return
    if st.deadline != 0 and st.nodes % 1024 == 0 and _monotime() > st.deadline:
        st.stop = 2
        return
    for w in range(W):
        in_m[w] = in_m0[w]
        pool[w] = ~out_m[w]
    if n & 63:
        pool[W - 1] &= ((<u64> 1) << (n & 63)) - 1

    # domination feasibility and unit propagation
    if st.mode == 1:
        for v in range(n):
            pc = 0
            for w in range(W):
                pc += POPCLL(c.closed[v * W + w] & pool[w])
            if pc < 2:
                return
            if pc == 2:
                for w in range(W):
                    in_m[w] |= c.closed[v * W + w] & pool[w]
    else:
        for v in range(n):
            if not _get(out_m, v):
                continue
            pc = 0
            for w in range(W):
                pc += POPCLL(c.open_[v * W + w] & pool[w])
            if pc == 0:
                return
            if pc == 1:
                for w in range(W):
                    in_m[w] |= c.open_[v * W + w] & pool[w]
    in_ct = _popcount(in_m, W)
    if in_ct > st.cap or in_ct >= st.best:
        return

    # pair feasibility on decided vertices
    if st.mode == 1:
        for u in range(n):
            if not _get(out_m, u):
                continue
            for v in range(u + 1, n):
                if not _get(out_m, v):
                    continue
                pc = 0
                for w in range(W):
                    pc += POPCLL((c.open_[u * W + w] ^ c.open_[v * W + w]) & pool[w])
                    if pc >= 2:
                        break
                if pc < 2:
                    return
        for v in range(n):
            if not _get(in_m, v):
                continue
            for u in range(n):
                if not _get(out_m, u):
                    continue
                hit = 0
                for w in range(W):
                    d = (c.open_[v * W + w] ^ c.open_[u * W + w]) & pool[w]
                    if w == (v >> 6):
                        d &= ~((<u64> 1) << (v & 63))
                    if d:
                        hit = 1
                        break
                if not hit:
                    return
    else:
        for u in range(n):
            if not _get(out_m, u):
                continue
            for v in range(u + 1, n):
                if not _get(out_m, v):
                    continue
                hit = 0
                for w in range(W):
                    if (c.open_[u * W + w] ^ c.open_[v * W + w]) & pool[w]:
                        hit = 1
                        break
                if not hit:
                    return

    # admissible bound
    cover = c.maxdeg + 1 if st.mode == 1 else (c.maxdeg if c.maxdeg > 1 else 1)
    deficit = 0
    if st.mode == 1:
        for v in range(n):
            have = 0
            for w in range(W):
                have += POPCLL(c.closed[v * W + w] & in_m[w])
                if have >= 2:
                    break
            if have < 2:
                deficit += 2 - have
    else:
        for v in range(n):
            if not _get(out_m, v):
                continue
            acc = 0
            for w in range(W):
                acc |= c.open_[v * W + w] & in_m[w]
            if acc == 0:
                deficit += 1
    b = st.best if st.best < st.cap + 1 else st.cap + 1
    if in_ct + (deficit + cover - 1) // cover >= b:
        return

    if deficit == 0:
        if st.mode == 1:
            hit = _is_redld_core(c, in_m)
        else:
            hit = _is_ld_core(c, in_m)
        if hit:
            st.best = in_ct
            for w in range(W):
                st.best_mask[w] = in_m[w]
            if st.best <= st.stop_at:
                st.stop = 1
            return

    # branch: highest degree among undecided, smallest index on ties
    b = -1
    bd = -1
    for v in range(n):
        if _get(in_m, v) or _get(out_m, v):
            continue
        if c.deg[v] > bd:
            bd = c.deg[v]
            b = v
    if b < 0:
        return
    for w in range(W):
        child[w] = in_m[w]
    _set(child, b)
    _dfs(c, st, child, out_m)
    if st.stop:
        return
    for w in range(W):
        child[w] = out_m[w]
    _set(child, b)
    _dfs(c, st, in_m, child)


def bnb(Ctx c, int mode, forced_in, forced_out, int cap, int stop_at,
        long long node_budget, double deadline):
    """Same contract as the pure backend's bnb."""
    cdef BnbState st
    cdef u64 in_m[MAXW]
    cdef u64 out_m[MAXW]
    cdef int w
    _mask_from_int(forced_in, c.W, in_m)
    _mask_from_int(forced_out, c.W, out_m)
    for w in range(c.W):
        if in_m[w] & out_m[w]:
            return 1, -1, 0, 0
    st.n = c.n
    st.W = c.W
    st.mode = mode
    st.cap = cap
    st.stop_at = stop_at
    st.node_budget = node_budget
    st.deadline = deadline
    st.nodes = 0
    st.stop = 0
    st.best = cap + 1
    memset(st.best_mask, 0, MAXW * sizeof(u64))
    with nogil:
        _dfs(c, &st, in_m, out_m)
    if st.stop == 2:
        return 2, (st.best if st.best <= cap else -1), _mask_to_int(st.best_mask, c.W), st.nodes
    if st.best <= cap:
        return 0, st.best, _mask_to_int(st.best_mask, c.W), st.nodes
    return 1, -1, 0, st.nodes
