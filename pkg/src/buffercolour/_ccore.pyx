# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled colouring kernels; drop-in for ``_pycore`` with identical streams."""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

import numpy as np

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t next_u64(uint64_t* state) noexcept nogil:
    state[0] += GOLDEN
    return mix64(state[0])


cdef inline uint64_t uniform_below(uint64_t* state, uint64_t r) noexcept nogil:
    cdef uint64_t rem, x
    if r == 1:
        return 0
    rem = (<uint64_t>0 - r) % r
    while True:
        x = next_u64(state)
        if rem == 0 or x < <uint64_t>0 - rem:
            return x % r


cdef inline uint64_t derive_seed(uint64_t master, int64_t rep, int stream) noexcept nogil:
    return mix64(master + <uint64_t>(2 * rep + stream + 1) * GOLDEN)


cdef struct Search:
    int q
    int universe
    int width            # universe + 1, row stride of ``blocked``
    char* blocked        # q * width
    char* qadj           # q * q
    int* assign
    int* best
    int has_best
    int* key
    int* heads
    int nheads
    int cap_heads
    int oom


cdef inline int key_cmp(Search* s, int filled) noexcept nogil:
    # descending sort of assign[0:filled], zero padded to q, compared to best
    cdef int i, j, t
    for i in range(filled):
        s.key[i] = s.assign[i]
    for i in range(1, filled):
        t = s.key[i]
        j = i - 1
        while j >= 0 and s.key[j] < t:
            s.key[j + 1] = s.key[j]
            j -= 1
        s.key[j + 1] = t
    for i in range(filled, s.q):
        s.key[i] = 0
    if not s.has_best:
        return -1
    for i in range(s.q):
        if s.key[i] < s.best[i]:
            return -1
        if s.key[i] > s.best[i]:
            return 1
    return 0


cdef void push_head(Search* s, int colour) noexcept nogil:
    cdef int* grown
    if s.nheads == s.cap_heads:
        grown = <int*>realloc(s.heads, 2 * s.cap_heads * sizeof(int))
        if grown == NULL:
            s.oom = 1
            return
        s.heads = grown
        s.cap_heads *= 2
    s.heads[s.nheads] = colour
    s.nheads += 1


cdef void descend(Search* s, int i) noexcept nogil:
    cdef int c, j, cmp, clash
    for c in range(1, s.universe + 1):
        if s.has_best and c > s.best[0]:
            break
        if s.blocked[i * s.width + c]:
            continue
        clash = 0
        for j in range(i):
            if s.qadj[i * s.q + j] and s.assign[j] == c:
                clash = 1
                break
        if clash:
            continue
        s.assign[i] = c
        cmp = key_cmp(s, i + 1)
        if cmp > 0:
            continue
        if i + 1 < s.q:
            descend(s, i + 1)
        elif cmp < 0:
            for j in range(s.q):
                s.best[j] = s.key[j]
            s.has_best = 1
            s.nheads = 0
            push_head(s, s.assign[0])
        else:
            push_head(s, s.assign[0])
    s.assign[i] = 0


cdef class _Workspace:
    cdef int n, b
    cdef int32_t* colour
    cdef int32_t* pos
    cdef int32_t* stamp
    cdef char* blocked
    cdef char* qadj
    cdef int* ints
    cdef Search s

    def __cinit__(self, int n, int b):
        self.n = n
        self.b = b
        self.colour = <int32_t*>malloc((n + 1) * sizeof(int32_t))
        self.pos = <int32_t*>malloc((n + 1) * sizeof(int32_t))
        self.stamp = <int32_t*>malloc((n + b + 3) * sizeof(int32_t))
        self.blocked = <char*>malloc(b * (n + b + 3))
        self.qadj = <char*>malloc(b * b + 1)
        self.ints = <int*>malloc((3 * b + 1) * sizeof(int))
        self.s.heads = <int*>malloc(64 * sizeof(int))
        self.s.cap_heads = 64
        if (self.colour == NULL or self.pos == NULL or self.stamp == NULL
                or self.blocked == NULL or self.qadj == NULL or self.ints == NULL
                or self.s.heads == NULL):
            raise MemoryError()
        self.s.assign = self.ints
        self.s.best = self.ints + b
        self.s.key = self.ints + 2 * b
        self.s.blocked = self.blocked
        self.s.qadj = self.qadj
        for i in range(n + 1):
            self.pos[i] = -1

    def __dealloc__(self):
        free(self.colour)
        free(self.pos)
        free(self.stamp)
        free(self.blocked)
        free(self.qadj)
        free(self.ints)
        free(self.s.heads)


cdef int run_first_fit(_Workspace w, const int32_t[::1] indptr, const int32_t[::1] indices,
                       const int32_t* order, int n) noexcept nogil:
    cdef int t, v, p, c
    for v in range(n):
        w.colour[v] = 0
    for c in range(n + w.b + 3):
        w.stamp[c] = 0
    for t in range(n):
        v = order[t]
        for p in range(indptr[v], indptr[v + 1]):
            c = w.colour[indices[p]]
            if c:
                w.stamp[c] = t + 1
        c = 1
        while w.stamp[c] == t + 1:
            c += 1
        w.colour[v] = c
    return 0


cdef int run_buffered(_Workspace w, const int32_t[::1] indptr, const int32_t[::1] indices,
                      const int32_t* order, int n, int b, uint64_t* state) noexcept nogil:
    cdef int t, i, j, q, v, u, p, c, cmax, width
    cdef Search* s = &w.s
    for v in range(n):
        w.colour[v] = 0
    if n == 0:
        return 0
    w.colour[order[0]] = 1
    cmax = 1
    for t in range(1, n):
        q = b if n - t > b else n - t
        width = cmax + q + 1
        s.q = q
        s.universe = cmax + q
        s.width = width
        memset(w.blocked, 0, q * width)
        memset(w.qadj, 0, q * q)
        for i in range(q):
            w.pos[order[t + i]] = i
        for i in range(q):
            v = order[t + i]
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                c = w.colour[u]
                if c:
                    w.blocked[i * width + c] = 1
                elif w.pos[u] >= 0:
                    w.qadj[i * q + w.pos[u]] = 1
        for i in range(q):
            w.pos[order[t + i]] = -1
            s.assign[i] = 0
        s.has_best = 0
        s.nheads = 0
        s.oom = 0
        descend(s, 0)
        if s.oom:
            return -1
        c = s.heads[uniform_below(state, <uint64_t>s.nheads)]
        w.colour[order[t]] = c
        if c > cmax:
            cmax = c
    return 0


cdef int count_distinct(_Workspace w, int n) noexcept nogil:
    cdef int v, c, k = 0
    for c in range(n + w.b + 3):
        w.stamp[c] = 0
    for v in range(n):
        c = w.colour[v]
        if not w.stamp[c]:
            w.stamp[c] = 1
            k += 1
    return k


def _as_order(order, int n):
    arr = np.ascontiguousarray(order, dtype=np.int32)
    if arr.shape[0] != n:
        raise ValueError("order length differs from vertex count")
    return arr


def first_fit(const int32_t[::1] indptr, const int32_t[::1] indices, order):
    cdef int n = indptr.shape[0] - 1
    cdef int32_t[::1] seq = _as_order(order, n)
    cdef _Workspace w = _Workspace(n, 1)
    with nogil:
        run_first_fit(w, indptr, indices, &seq[0] if n else NULL, n)
    return [w.colour[v] for v in range(n)]


def buffered(const int32_t[::1] indptr, const int32_t[::1] indices, order, int b, uint64_t state):
    """Returns ``(colours, final_state)``."""
    cdef int n = indptr.shape[0] - 1
    cdef int32_t[::1] seq = _as_order(order, n)
    cdef _Workspace w = _Workspace(n, b)
    cdef int rc
    with nogil:
        rc = run_buffered(w, indptr, indices, &seq[0] if n else NULL, n, b, &state)
    if rc:
        raise MemoryError()
    return [w.colour[v] for v in range(n)], state


def trial_counts(const int32_t[::1] indptr, const int32_t[::1] indices, order, int b,
                 uint64_t master_seed, int64_t start, int64_t stop):
    cdef int n = indptr.shape[0] - 1
    cdef int i, j, tmp, rc = 0
    cdef int64_t rep
    cdef uint64_t st
    cdef bint shuffled = order is None
    cdef int32_t[::1] base = np.arange(n, dtype=np.int32) if shuffled else _as_order(order, n)
    cdef int32_t[::1] seq = np.empty(max(n, 1), dtype=np.int32)
    out_arr = np.empty(stop - start, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef _Workspace w = _Workspace(n, b)
    with nogil:
        for rep in range(start, stop):
            for i in range(n):
                seq[i] = base[i]
            if shuffled:
                st = derive_seed(master_seed, rep, 0)
                for i in range(n - 1, 0, -1):
                    j = <int>uniform_below(&st, <uint64_t>(i + 1))
                    tmp = seq[i]
                    seq[i] = seq[j]
                    seq[j] = tmp
            if b == 1:
                run_first_fit(w, indptr, indices, &seq[0], n)
            else:
                st = derive_seed(master_seed, rep, 1)
                rc = run_buffered(w, indptr, indices, &seq[0], n, b, &st)
                if rc:
                    break
            out[rep - start] = count_distinct(w, n)
    if rc:
        raise MemoryError()
    return out_arr
