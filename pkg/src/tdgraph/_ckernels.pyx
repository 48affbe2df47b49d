# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: orthogonality rows, dominating-set and clique search.

Bitsets are rows of ``uint64`` words, bit ``v & 63`` of word ``v >> 6``.
Search order mirrors ``_pykernels`` exactly.
"""

import numpy as np

from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

NAME = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def orthogonality_rows(const int32_t[:, ::1] coords, const int32_t[:, ::1] add, const int32_t[:, ::1] mul):
    cdef Py_ssize_t V = coords.shape[0]
    cdef Py_ssize_t n = coords.shape[1]
    cdef Py_ssize_t W = (V + 63) >> 6
    out = np.zeros((V, W), dtype=np.uint64)
    cdef uint64_t[:, ::1] o = out
    cdef Py_ssize_t u, v, i
    cdef int32_t acc
    with nogil:
        for u in range(V):
            for v in range(u, V):
                acc = 0
                for i in range(n):
                    acc = add[acc, mul[coords[u, i], coords[v, i]]]
                if acc == 0:
                    o[u, v >> 6] |= (<uint64_t>1) << (v & 63)
                    o[v, u >> 6] |= (<uint64_t>1) << (u & 63)
    return out


cdef inline int _count(const uint64_t* a, Py_ssize_t W) noexcept nogil:
    cdef int c = 0
    cdef Py_ssize_t i
    for i in range(W):
        c += __builtin_popcountll(a[i])
    return c


cdef inline int _count_and(const uint64_t* a, const uint64_t* b, Py_ssize_t W) noexcept nogil:
    cdef int c = 0
    cdef Py_ssize_t i
    for i in range(W):
        c += __builtin_popcountll(a[i] & b[i])
    return c


cdef inline int _count_andnot(const uint64_t* a, const uint64_t* b, Py_ssize_t W) noexcept nogil:
    cdef int c = 0
    cdef Py_ssize_t i
    for i in range(W):
        c += __builtin_popcountll(a[i] & ~b[i])
    return c


cdef class _Domination:
    cdef Py_ssize_t V, W, depth_cap
    cdef uint64_t* N
    cdef uint64_t* U
    cdef uint64_t* X
    cdef int* gains
    cdef int* hist
    cdef int* chosen
    cdef int* best
    cdef int best_size
    cdef long long nodes

    def __cinit__(self, const uint64_t[:, ::1] closed, list initial):
        self.V = closed.shape[0]
        self.W = closed.shape[1]
        self.depth_cap = len(initial) + 2
        self.N = <uint64_t*> malloc(max(1, self.V * self.W) * sizeof(uint64_t))
        self.U = <uint64_t*> calloc(max(1, self.depth_cap * self.W), sizeof(uint64_t))
        self.X = <uint64_t*> calloc(max(1, self.depth_cap * self.W), sizeof(uint64_t))
        self.gains = <int*> malloc(max(1, self.V) * sizeof(int))
        self.hist = <int*> malloc((self.V + 2) * sizeof(int))
        self.chosen = <int*> malloc(self.depth_cap * sizeof(int))
        self.best = <int*> malloc(self.depth_cap * sizeof(int))
        if (self.N == NULL or self.U == NULL or self.X == NULL or self.gains == NULL
                or self.hist == NULL or self.chosen == NULL or self.best == NULL):
            raise MemoryError()
        cdef Py_ssize_t v, i
        for v in range(self.V):
            for i in range(self.W):
                self.N[v * self.W + i] = closed[v, i]
        self.best_size = len(initial)
        for i in range(self.best_size):
            self.best[i] = initial[i]
        self.nodes = 0

    def __dealloc__(self):
        free(self.N)
        free(self.U)
        free(self.X)
        free(self.gains)
        free(self.hist)
        free(self.chosen)
        free(self.best)

    cdef void search(self, int d) noexcept nogil:
        cdef Py_ssize_t W = self.W, V = self.V, i
        cdef uint64_t* U = self.U + d * W
        cdef uint64_t* X = self.X + d * W
        cdef uint64_t* Uc = self.U + (d + 1) * W
        cdef uint64_t* Xc = self.X + (d + 1) * W
        cdef uint64_t* Nv
        cdef uint64_t word
        cdef int need, top, g, k, v, u, c, pick, pick_count, nopt, j, w, t
        cdef int* opts
        self.nodes += 1
        need = _count(U, W)
        if need == 0:
            if d < self.best_size:
                memcpy(self.best, self.chosen, d * sizeof(int))
                self.best_size = d
            return
        if d + 1 >= self.best_size:
            return
        top = 0
        for v in range(V):
            if (X[v >> 6] >> (v & 63)) & 1:
                g = 0
            else:
                g = _count_and(self.N + v * W, U, W)
            self.gains[v] = g
            if g > top:
                top = g
        for g in range(top + 1):
            self.hist[g] = 0
        for v in range(V):
            self.hist[self.gains[v]] += 1
        k = 0
        g = top
        while g > 0 and need > 0:
            if self.hist[g] * g >= need:
                k += (need + g - 1) // g
                need = 0
            else:
                k += self.hist[g]
                need -= self.hist[g] * g
            g -= 1
        if need > 0 or d + k >= self.best_size:
            return
        pick = -1
        pick_count = V + 1
        for i in range(W):
            word = U[i]
            while word:
                u = <int>(i * 64 + __builtin_ctzll(word))
                word &= word - 1
                c = _count_andnot(self.N + u * W, X, W)
                if c < pick_count:
                    pick = u
                    pick_count = c
        if pick_count == 0:
            return
        opts = <int*> malloc(pick_count * sizeof(int))
        if opts == NULL:
            return
        nopt = 0
        Nv = self.N + pick * W
        for i in range(W):
            word = Nv[i] & ~X[i]
            while word:
                w = <int>(i * 64 + __builtin_ctzll(word))
                word &= word - 1
                # insertion sort by (-gain, id)
                j = nopt
                while j > 0 and (self.gains[opts[j - 1]] < self.gains[w]):
                    opts[j] = opts[j - 1]
                    j -= 1
                opts[j] = w
                nopt += 1
        for t in range(nopt):
            w = opts[t]
            Nv = self.N + w * W
            for i in range(W):
                Uc[i] = U[i] & ~Nv[i]
                Xc[i] = X[i]
            self.chosen[d] = w
            self.search(d + 1)
            X[w >> 6] |= (<uint64_t>1) << (w & 63)
            if d + 1 >= self.best_size:
                break
        free(opts)


def dominating_search(const uint64_t[:, ::1] closed, list initial):
    cdef _Domination st = _Domination(closed, initial)
    cdef Py_ssize_t V = st.V, i
    for i in range(V):
        st.U[i >> 6] |= (<uint64_t>1) << (i & 63)
    with nogil:
        st.search(0)
    return [st.best[i] for i in range(st.best_size)], st.nodes


cdef class _Clique:
    cdef Py_ssize_t m, W
    cdef uint64_t* A
    cdef uint64_t* P
    cdef int* chosen
    cdef int* best
    cdef int best_size
    cdef long long nodes

    def __cinit__(self, const uint64_t[:, ::1] adj, list initial):
        self.m = adj.shape[0]
        self.W = adj.shape[1]
        self.A = <uint64_t*> malloc(max(1, self.m * self.W) * sizeof(uint64_t))
        self.P = <uint64_t*> calloc(max(1, (self.m + 1) * self.W), sizeof(uint64_t))
        self.chosen = <int*> malloc((self.m + 1) * sizeof(int))
        self.best = <int*> malloc((self.m + 1) * sizeof(int))
        if self.A == NULL or self.P == NULL or self.chosen == NULL or self.best == NULL:
            raise MemoryError()
        cdef Py_ssize_t v, i
        for v in range(self.m):
            for i in range(self.W):
                self.A[v * self.W + i] = adj[v, i]
        self.best_size = len(initial)
        for i in range(self.best_size):
            self.best[i] = initial[i]
        self.nodes = 0

    def __dealloc__(self):
        free(self.A)
        free(self.P)
        free(self.chosen)
        free(self.best)

    cdef void expand(self, int d) noexcept nogil:
        cdef Py_ssize_t W = self.W, i
        cdef uint64_t* P = self.P + d * W
        cdef uint64_t* Pc = self.P + (d + 1) * W
        cdef uint64_t* Av
        cdef int count = _count(P, W)
        cdef int* order = <int*> malloc(max(1, count) * sizeof(int))
        cdef int* colour = <int*> malloc(max(1, count) * sizeof(int))
        cdef uint64_t* Q = <uint64_t*> malloc(W * sizeof(uint64_t))
        cdef uint64_t* Qk = <uint64_t*> malloc(W * sizeof(uint64_t))
        cdef int k = 0, n = 0, v, idx, empty
        cdef Py_ssize_t wi
        self.nodes += 1
        if order == NULL or colour == NULL or Q == NULL or Qk == NULL:
            free(order); free(colour); free(Q); free(Qk)
            return
        memcpy(Q, P, W * sizeof(uint64_t))
        while n < count:
            k += 1
            memcpy(Qk, Q, W * sizeof(uint64_t))
            wi = 0
            while True:
                while wi < W and Qk[wi] == 0:
                    wi += 1
                if wi == W:
                    break
                v = <int>(wi * 64 + __builtin_ctzll(Qk[wi]))
                Av = self.A + v * W
                for i in range(W):
                    Qk[i] &= ~Av[i]
                Qk[v >> 6] &= ~((<uint64_t>1) << (v & 63))
                Q[v >> 6] &= ~((<uint64_t>1) << (v & 63))
                order[n] = v
                colour[n] = k
                n += 1
        for idx in range(n - 1, -1, -1):
            if d + colour[idx] <= self.best_size:
                break
            v = order[idx]
            self.chosen[d] = v
            Av = self.A + v * W
            empty = 1
            for i in range(W):
                Pc[i] = P[i] & Av[i]
                if Pc[i]:
                    empty = 0
            if empty:
                if d + 1 > self.best_size:
                    memcpy(self.best, self.chosen, (d + 1) * sizeof(int))
                    self.best_size = d + 1
            else:
                self.expand(d + 1)
            P[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        free(order)
        free(colour)
        free(Q)
        free(Qk)


def clique_search(const uint64_t[:, ::1] adj, list initial):
    cdef _Clique st = _Clique(adj, initial)
    cdef Py_ssize_t m = st.m, i
    if m == 0:
        return list(initial), 0
    for i in range(m):
        st.P[i >> 6] |= (<uint64_t>1) << (i & 63)
    with nogil:
        st.expand(0)
    return [st.best[i] for i in range(st.best_size)], st.nodes
