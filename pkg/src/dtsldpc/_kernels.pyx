# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels working on discrete logs (-1 marks zero).

Arithmetic uses Zech logarithms: ``zech[t] = log(1 + alpha^t)``.
"""

from libc.stdlib cimport malloc, free

import numpy as np

IMPLEMENTATION = "cython"


cdef struct Ctx:
    int nrows
    int ncols
    int dmax
    int maxw
    int c0
    long long budget
    long long nodes
    long long qm1
    long long neg_shift
    int* col_ptr
    int* col_idx
    int* row_ptr
    int* row_idx
    const long long* logs      # dense nrows x ncols
    const long long* zech
    int* cover
    char* in_set
    int* chosen
    int nchosen
    int* stamp
    int stamp_id
    int* touched
    int* branch                 # dmax x ncols
    long long* work             # (dmax * maxw) x dmax


cdef inline long long cadd(Ctx* s, long long a, long long b) noexcept nogil:
    cdef long long t, qm1 = s.qm1
    if a < 0:
        return b
    if b < 0:
        return a
    t = s.zech[((b - a) % qm1 + qm1) % qm1]
    if t < 0:
        return -1
    return (a + t) % qm1


cdef bint span_last(Ctx* s, int ntouched) noexcept nogil:
    # columns ordered chosen[1..], chosen[0]; the last is tested
    cdef int nc = s.nchosen
    cdef int i, j, x, piv, col
    cdef long long lf, term, qm1 = s.qm1
    cdef long long* m = s.work
    cdef char used[1024]
    for i in range(ntouched):
        used[i] = 0
        for j in range(nc):
            col = s.chosen[j + 1] if j < nc - 1 else s.chosen[0]
            m[i * nc + j] = s.logs[<long long>s.touched[i] * s.ncols + col]
    for j in range(nc - 1):
        piv = -1
        for i in range(ntouched):
            if not used[i] and m[i * nc + j] >= 0:
                piv = i
                break
        if piv < 0:
            continue
        used[piv] = 1
        for i in range(ntouched):
            if used[i] or m[i * nc + j] < 0:
                continue
            lf = ((m[i * nc + j] - m[piv * nc + j]) % qm1 + qm1) % qm1
            for x in range(j, nc):
                if m[piv * nc + x] >= 0:
                    term = (lf + m[piv * nc + x] + s.neg_shift) % qm1
                    m[i * nc + x] = cadd(s, m[i * nc + x], term)
    for i in range(ntouched):
        if not used[i] and m[i * nc + nc - 1] >= 0:
            return False
    return True


cdef inline void add_col(Ctx* s, int c) noexcept nogil:
    cdef int p
    s.chosen[s.nchosen] = c
    s.nchosen += 1
    s.in_set[c] = 1
    for p in range(s.col_ptr[c], s.col_ptr[c + 1]):
        s.cover[s.col_idx[p]] += 1


cdef inline void remove_col(Ctx* s) noexcept nogil:
    cdef int p, c
    s.nchosen -= 1
    c = s.chosen[s.nchosen]
    s.in_set[c] = 0
    for p in range(s.col_ptr[c], s.col_ptr[c + 1]):
        s.cover[s.col_idx[p]] -= 1


cdef int rec(Ctx* s) noexcept nogil:
    # 1 found, 0 exhausted, -1 budget
    cdef int i, j, p, r, c, nt = 0, nsingle = 0, first_single = -1, nb = 0, slots, tmp, res
    cdef int* br
    s.nodes += 1
    if s.nodes > s.budget:
        return -1
    s.stamp_id += 1
    for i in range(s.nchosen):
        c = s.chosen[i]
        for p in range(s.col_ptr[c], s.col_ptr[c + 1]):
            r = s.col_idx[p]
            if s.stamp[r] != s.stamp_id:
                s.stamp[r] = s.stamp_id
                s.touched[nt] = r
                nt += 1
    # insertion sort of touched rows
    for i in range(1, nt):
        tmp = s.touched[i]
        j = i - 1
        while j >= 0 and s.touched[j] > tmp:
            s.touched[j + 1] = s.touched[j]
            j -= 1
        s.touched[j + 1] = tmp
    for i in range(nt):
        if s.cover[s.touched[i]] == 1:
            if first_single < 0:
                first_single = s.touched[i]
            nsingle += 1
    if nsingle == 0:
        if span_last(s, nt):
            return 1
    slots = s.dmax - s.nchosen
    if slots <= 0 or nsingle > slots * s.maxw:
        return 0
    br = s.branch + <long long>s.nchosen * s.ncols
    s.stamp_id += 1
    if nsingle:
        for p in range(s.row_ptr[first_single], s.row_ptr[first_single + 1]):
            c = s.row_idx[p]
            if not s.in_set[c] and c > s.c0:
                br[nb] = c
                nb += 1
    else:
        for i in range(nt):
            r = s.touched[i]
            for p in range(s.row_ptr[r], s.row_ptr[r + 1]):
                c = s.row_idx[p]
                if not s.in_set[c] and c > s.c0 and s.stamp[s.nrows + c] != s.stamp_id:
                    s.stamp[s.nrows + c] = s.stamp_id
                    br[nb] = c
                    nb += 1
        for i in range(1, nb):
            tmp = br[i]
            j = i - 1
            while j >= 0 and br[j] > tmp:
                br[j + 1] = br[j]
                j -= 1
            br[j + 1] = tmp
    for i in range(nb):
        add_col(s, br[i])
        res = rec(s)
        if res != 0:
            return res
        remove_col(s)
    return 0


def _csr(pattern):
    rows, cols = np.nonzero(pattern)
    nrows, ncols = pattern.shape
    order = np.lexsort((rows, cols))
    col_idx = rows[order].astype(np.int32)
    col_ptr = np.zeros(ncols + 1, dtype=np.int32)
    np.cumsum(np.bincount(cols, minlength=ncols), out=col_ptr[1:])
    order = np.lexsort((cols, rows))
    row_idx = cols[order].astype(np.int32)
    row_ptr = np.zeros(nrows + 1, dtype=np.int32)
    np.cumsum(np.bincount(rows, minlength=nrows), out=row_ptr[1:])
    return (np.ascontiguousarray(col_ptr), np.ascontiguousarray(col_idx),
            np.ascontiguousarray(row_ptr), np.ascontiguousarray(row_idx))


def circuit_search(logs, zech, long long qm1, long long neg_shift, int n_first, int dmax, long long budget):
    """Log-domain counterpart of :func:`dtsldpc._pykernels.circuit_search`.

    ``logs`` is the dense matrix of discrete logs with -1 for zero.
    """
    cdef long long[:, ::1] L = np.ascontiguousarray(logs, dtype=np.int64)
    cdef long long[::1] Z = np.ascontiguousarray(zech, dtype=np.int64)
    cdef int nrows = L.shape[0], ncols = L.shape[1]
    col_ptr, col_idx, row_ptr, row_idx = _csr(np.asarray(L) >= 0)
    cdef int[::1] cp = col_ptr, ci = col_idx, rp = row_ptr, ri = row_idx
    cdef int maxw = int(np.diff(col_ptr).max()) if ncols else 0
    cdef Ctx s
    cdef int start, res = 0, i
    if dmax < 1 or nrows == 0 or ncols == 0:
        return None, 0, False
    if dmax * maxw > 1024:
        raise ValueError("search too wide for the compiled kernel")
    s.nrows = nrows
    s.ncols = ncols
    s.dmax = dmax
    s.maxw = maxw
    s.budget = budget
    s.nodes = 0
    s.qm1 = qm1
    s.neg_shift = neg_shift
    s.col_ptr = &cp[0]
    s.col_idx = &ci[0] if ci.shape[0] else NULL
    s.row_ptr = &rp[0]
    s.row_idx = &ri[0] if ri.shape[0] else NULL
    s.logs = &L[0, 0]
    s.zech = &Z[0]
    s.cover = <int*>malloc(nrows * sizeof(int))
    s.in_set = <char*>malloc(ncols * sizeof(char))
    s.chosen = <int*>malloc((dmax + 1) * sizeof(int))
    s.stamp = <int*>malloc((nrows + ncols) * sizeof(int))
    s.touched = <int*>malloc((dmax * maxw + 1) * sizeof(int))
    s.branch = <int*>malloc((dmax + 1) * ncols * sizeof(int))
    s.work = <long long*>malloc((dmax * maxw + 1) * (dmax + 1) * sizeof(long long))
    try:
        for i in range(nrows):
            s.cover[i] = 0
        for i in range(ncols):
            s.in_set[i] = 0
        for i in range(nrows + ncols):
            s.stamp[i] = 0
        s.stamp_id = 0
        s.nchosen = 0
        with nogil:
            for start in range(n_first):
                s.c0 = start
                if cp[start + 1] == cp[start]:
                    s.nodes += 1
                    s.chosen[0] = start
                    s.nchosen = 1
                    res = 1
                    break
                add_col(&s, start)
                res = rec(&s)
                if res != 0:
                    break
                remove_col(&s)
        if res == 1:
            return [s.chosen[i] for i in range(s.nchosen)], s.nodes, False
        if res == -1:
            return None, s.nodes, True
        return None, s.nodes, False
    finally:
        free(s.cover)
        free(s.in_set)
        free(s.chosen)
        free(s.stamp)
        free(s.touched)
        free(s.branch)
        free(s.work)


cdef struct CycCtx:
    int nrows
    int ncols
    int lmax
    long long budget
    long long steps
    int r0
    int* col_ptr
    int* col_idx
    int* row_ptr
    int* row_idx
    const signed char* member          # dense nrows x ncols pattern
    char* used_r
    char* used_c
    int* rows
    int* cols
    int depth


cdef int cyc_rec(CycCtx* s, list out):
    cdef int p, q, c, r2
    cdef int r = s.rows[s.depth - 1]
    for p in range(s.row_ptr[r], s.row_ptr[r + 1]):
        c = s.row_idx[p]
        if s.used_c[c]:
            continue
        s.steps += 1
        if s.steps > s.budget:
            return 0
        s.cols[s.depth - 1] = c
        s.used_c[c] = 1
        if s.depth >= 2 and c > s.cols[0] and s.member[<long long>s.r0 * s.ncols + c]:
            out.append((tuple([s.rows[q] for q in range(s.depth)]),
                        tuple([s.cols[q] for q in range(s.depth)])))
        if s.depth < s.lmax:
            for q in range(s.col_ptr[c], s.col_ptr[c + 1]):
                r2 = s.col_idx[q]
                if r2 > s.r0 and not s.used_r[r2]:
                    s.rows[s.depth] = r2
                    s.used_r[r2] = 1
                    s.depth += 1
                    if not cyc_rec(s, out):
                        return 0
                    s.depth -= 1
                    s.used_r[r2] = 0
        s.used_c[c] = 0
    return 1


def cycle_search(pattern, int lmax, long long budget):
    """Counterpart of :func:`dtsldpc._pykernels.cycle_search` on a dense
    boolean pattern."""
    cdef signed char[:, ::1] P = np.ascontiguousarray(pattern, dtype=np.int8)
    cdef int nrows = P.shape[0], ncols = P.shape[1]
    cdef list out = []
    cdef CycCtx s
    cdef int r0, i
    if nrows == 0 or ncols == 0 or lmax < 2:
        return out, False
    col_ptr, col_idx, row_ptr, row_idx = _csr(np.asarray(P) != 0)
    cdef int[::1] cp = col_ptr, ci = col_idx, rp = row_ptr, ri = row_idx
    if ci.shape[0] == 0:
        return out, False
    s.nrows = nrows
    s.ncols = ncols
    s.lmax = lmax
    s.budget = budget
    s.steps = 0
    s.col_ptr = &cp[0]
    s.col_idx = &ci[0]
    s.row_ptr = &rp[0]
    s.row_idx = &ri[0]
    s.member = &P[0, 0]
    s.used_r = <char*>malloc(nrows)
    s.used_c = <char*>malloc(ncols)
    s.rows = <int*>malloc((lmax + 1) * sizeof(int))
    s.cols = <int*>malloc((lmax + 1) * sizeof(int))
    try:
        for i in range(nrows):
            s.used_r[i] = 0
        for i in range(ncols):
            s.used_c[i] = 0
        for r0 in range(nrows):
            s.r0 = r0
            s.rows[0] = r0
            s.used_r[r0] = 1
            s.depth = 1
            if not cyc_rec(&s, out):
                return out, True
            s.used_r[r0] = 0
        return out, False
    finally:
        free(s.used_r)
        free(s.used_c)
        free(s.rows)
        free(s.cols)
