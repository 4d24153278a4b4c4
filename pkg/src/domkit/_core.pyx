# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel for exact minimum covering by cyclic shifts.

Line-by-line port of domkit._core_py.solve_cover onto C bitset words.
Branching rules, tie-breaks, and node counting match the pure kernel
exactly; the test suite asserts identical (size, witness, explored)
triples on shared inputs.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int dk_popcount(unsigned long long x){ return __builtin_popcountll(x); }
    static inline int dk_ctz(unsigned long long x){ return __builtin_ctzll(x); }
    #else
    static inline int dk_popcount(unsigned long long x){ int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static inline int dk_ctz(unsigned long long x){ int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int dk_popcount(u64 x) nogil
    int dk_ctz(u64 x) nogil


cdef class _Search:
    cdef int n, m, W, depth_cap, best_size
    cdef long long explored
    cdef u64 *cover      # n * W words
    cdef u64 *dom        # n * W words
    cdef u64 *full       # W words
    cdef u64 *cov_stack  # depth_cap * W
    cdef u64 *exc_stack
    cdef u64 *cho_stack
    cdef u64 *sel        # W scratch: candidate mask of the chosen vertex
    cdef u64 *best_mask  # W
    cdef u64 *gcov       # W scratch for the greedy pass
    cdef int *cand_v     # depth_cap * m
    cdef int *cand_g

    def __cinit__(self):
        self.cover = NULL
        self.dom = NULL
        self.full = NULL
        self.cov_stack = NULL
        self.exc_stack = NULL
        self.cho_stack = NULL
        self.sel = NULL
        self.best_mask = NULL
        self.gcov = NULL
        self.cand_v = NULL
        self.cand_g = NULL

    def __dealloc__(self):
        free(self.cover)
        free(self.dom)
        free(self.full)
        free(self.cov_stack)
        free(self.exc_stack)
        free(self.cho_stack)
        free(self.sel)
        free(self.best_mask)
        free(self.gcov)
        free(self.cand_v)
        free(self.cand_g)

    cdef int pop_masked(self, u64 *mask, u64 *minus) nogil:
        # popcount(mask & ~minus) over W words
        cdef int i, c = 0
        for i in range(self.W):
            c += dk_popcount(mask[i] & ~minus[i])
        return c

    cdef bint is_full(self, u64 *mask) nogil:
        cdef int i
        for i in range(self.W):
            if mask[i] != self.full[i]:
                return 0
        return 1

    cdef void greedy(self) nogil:
        cdef int i, v, bv, g, bg
        cdef u64 *cov
        self.best_size = 0
        while not self.is_full(self.gcov):
            bv = 0
            bg = -1
            for v in range(self.n):
                g = self.pop_masked(self.cover + v * self.W, self.gcov)
                if g > bg:
                    bg = g
                    bv = v
            self.best_mask[bv >> 6] |= (<u64>1) << (bv & 63)
            cov = self.cover + bv * self.W
            for i in range(self.W):
                self.gcov[i] |= cov[i]
            self.best_size += 1

    cdef void rec(self, int depth, int size) nogil:
        cdef int W = self.W
        cdef u64 *covered = self.cov_stack + depth * W
        cdef u64 *excluded = self.exc_stack + depth * W
        cdef u64 *chosen = self.cho_stack + depth * W
        cdef u64 *child_cov = self.cov_stack + (depth + 1) * W
        cdef u64 *child_exc = self.exc_stack + (depth + 1) * W
        cdef u64 *child_cho = self.cho_stack + (depth + 1) * W
        cdef int *cand_v = self.cand_v + depth * self.m
        cdef int *cand_g = self.cand_g + depth * self.m
        cdef int i, w, b, x, v, cnt, need, nc, j, gv, vv, idx, bx_count
        cdef u64 rem, cb
        cdef bint done

        self.explored += 1
        if self.is_full(covered):
            if size < self.best_size:
                self.best_size = size
                memcpy(self.best_mask, chosen, W * sizeof(u64))
            return
        need = self.pop_masked(self.full, covered)
        need = (need + self.m - 1) // self.m
        if size + need >= self.best_size:
            return

        done = 0
        bx_count = self.n + 1
        for w in range(W):
            rem = self.full[w] & ~covered[w]
            while rem:
                b = dk_ctz(rem)
                rem &= rem - 1
                x = (w << 6) + b
                cnt = self.pop_masked(self.dom + x * W, excluded)
                if cnt == 0:
                    return
                if cnt < bx_count:
                    bx_count = cnt
                    for i in range(W):
                        self.sel[i] = self.dom[x * W + i] & ~excluded[i]
                    if cnt == 1:
                        done = 1
                        break
            if done:
                break

        nc = 0
        for w in range(W):
            cb = self.sel[w]
            while cb:
                b = dk_ctz(cb)
                cb &= cb - 1
                v = (w << 6) + b
                cand_v[nc] = v
                cand_g[nc] = self.pop_masked(self.cover + v * W, covered)
                nc += 1
        # sort by descending gain, ascending vertex on ties
        for i in range(1, nc):
            gv = cand_g[i]
            vv = cand_v[i]
            j = i - 1
            while j >= 0 and (cand_g[j] < gv or (cand_g[j] == gv and cand_v[j] > vv)):
                cand_g[j + 1] = cand_g[j]
                cand_v[j + 1] = cand_v[j]
                j -= 1
            cand_g[j + 1] = gv
            cand_v[j + 1] = vv

        for idx in range(nc):
            v = cand_v[idx]
            for i in range(W):
                child_cov[i] = covered[i] | self.cover[v * W + i]
                child_exc[i] = excluded[i]
                child_cho[i] = chosen[i]
            child_cho[v >> 6] |= (<u64>1) << (v & 63)
            self.rec(depth + 1, size + 1)
            excluded[v >> 6] |= (<u64>1) << (v & 63)
            if size + need >= self.best_size:
                return


def solve_cover(n, offsets):
    """Minimum |W|, a witness bitmask, and the node count of the search.

    offsets must be sorted, distinct, within [0, n), nonempty.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if not offsets:
        raise ValueError("offsets must be nonempty")

    cdef _Search s = _Search()
    cdef int cn = n
    cdef int cm = len(offsets)
    cdef int W = (cn + 63) >> 6
    s.n = cn
    s.m = cm
    s.W = W
    s.explored = 0

    s.cover = <u64 *> calloc(cn * W, sizeof(u64))
    s.dom = <u64 *> calloc(cn * W, sizeof(u64))
    s.full = <u64 *> calloc(W, sizeof(u64))
    s.sel = <u64 *> calloc(W, sizeof(u64))
    s.best_mask = <u64 *> calloc(W, sizeof(u64))
    s.gcov = <u64 *> calloc(W, sizeof(u64))
    if not (s.cover and s.dom and s.full and s.sel and s.best_mask and s.gcov):
        raise MemoryError()

    cdef int v, t, y, i
    for v in range(cn):
        for t in offsets:
            # offsets live in [0, cn); adding cn keeps the C remainder nonnegative
            y = (v + t) % cn
            s.cover[v * W + (y >> 6)] |= (<u64>1) << (y & 63)
            y = (v + cn - t) % cn
            s.dom[v * W + (y >> 6)] |= (<u64>1) << (y & 63)
    for i in range(cn >> 6):
        s.full[i] = ~(<u64>0)
    if cn & 63:
        s.full[cn >> 6] = ((<u64>1) << (cn & 63)) - 1

    s.greedy()

    s.depth_cap = s.best_size + 2
    s.cov_stack = <u64 *> calloc(s.depth_cap * W, sizeof(u64))
    s.exc_stack = <u64 *> calloc(s.depth_cap * W, sizeof(u64))
    s.cho_stack = <u64 *> calloc(s.depth_cap * W, sizeof(u64))
    s.cand_v = <int *> calloc(s.depth_cap * cm, sizeof(int))
    s.cand_g = <int *> calloc(s.depth_cap * cm, sizeof(int))
    if not (s.cov_stack and s.exc_stack and s.cho_stack and s.cand_v and s.cand_g):
        raise MemoryError()

    memcpy(s.cov_stack, s.cover, W * sizeof(u64))
    s.cho_stack[0] = 1
    s.rec(0, 1)

    witness = 0
    for i in range(W):
        witness |= int(s.best_mask[i]) << (64 * i)
    return s.best_size, witness, int(s.explored)
