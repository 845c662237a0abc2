# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Conway skein kernel.

Same algorithm and canonical encoding as the pure-Python kernel, on dense
C arrays: arcs are relabeled ``0..2n-1`` at entry and after every smoothing.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND = "cython"


class BudgetExceeded(Exception):
    pass


cdef struct Walk:
    int *enc       # 5 ints per crossing
    int *px        # passage crossing
    int *ps        # passage slot
    int npass
    int ncomp


cdef inline int _in2(int *cr, int *sg, int x):
    return cr[4 * x + 3] if sg[x] > 0 else cr[4 * x + 1]


cdef int _walk(int n, int *cr, int *sg, int *hx, int *hs, int start,
               int *label, int *xorder, int *xlist, Walk *w):
    """Canonical traversal from ``start``; returns 0 if the projection is disconnected."""
    cdef int m = 2 * n
    cdef int i, x, slot, arc, first, nlab = 0, nx = 0, scan = 0, cand, xx
    for i in range(m):
        label[i] = 0
    for i in range(n):
        xorder[i] = -1
    w.npass = 0
    w.ncomp = 0
    arc = start
    while True:
        w.ncomp += 1
        first = arc
        while True:
            if label[arc] == 0:
                nlab += 1
                label[arc] = nlab
            x = hx[arc]
            slot = hs[arc]
            if xorder[x] < 0:
                xorder[x] = nx
                xlist[nx] = x
                nx += 1
            w.px[w.npass] = x
            w.ps[w.npass] = slot
            w.npass += 1
            arc = cr[4 * x + (slot + 2) % 4]
            if arc == first:
                break
        if nlab == m:
            break
        arc = -1
        while scan < nx:
            xx = xlist[scan]
            cand = cr[4 * xx]
            if label[cand] == 0:
                arc = cand
                break
            cand = _in2(cr, sg, xx)
            if label[cand] == 0:
                arc = cand
                break
            scan += 1
        if arc < 0:
            return 0
    for i in range(nx):
        x = xlist[i]
        w.enc[5 * i] = label[cr[4 * x]]
        w.enc[5 * i + 1] = label[cr[4 * x + 1]]
        w.enc[5 * i + 2] = label[cr[4 * x + 2]]
        w.enc[5 * i + 3] = label[cr[4 * x + 3]]
        w.enc[5 * i + 4] = sg[x]
    return 1


cdef int _cmp(int *a, int *b, int k):
    cdef int i
    for i in range(k):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef int _find(int *parent, int a):
    while parent[a] != a:
        a = parent[a]
    return a


cdef int _smooth(int n, int *cr, int *sg, int x, int *out_cr, int *out_sg):
    """Oriented smoothing at ``x`` into dense arrays; returns the number of free loops."""
    cdef int m = 2 * n
    cdef int *parent = <int *> malloc(m * sizeof(int))
    cdef int *dense = <int *> malloc(m * sizeof(int))
    cdef int i, y, j, k, a, b, ra, rb, o_in, o_out, loops = 0, nd = 0
    for i in range(m):
        parent[i] = i
        dense[i] = -1
    if sg[x] > 0:
        o_in, o_out = cr[4 * x + 3], cr[4 * x + 1]
    else:
        o_in, o_out = cr[4 * x + 1], cr[4 * x + 3]
    for k in range(2):
        if k == 0:
            a, b = cr[4 * x], o_out
        else:
            a, b = o_in, cr[4 * x + 2]
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra != rb:
            parent[rb] = ra
    j = 0
    for y in range(n):
        if y == x:
            continue
        for k in range(4):
            ra = _find(parent, cr[4 * y + k])
            if dense[ra] < 0:
                dense[ra] = nd
                nd += 1
            out_cr[4 * j + k] = dense[ra]
        out_sg[j] = sg[y]
        j += 1
    # roots of the smoothed crossing not used elsewhere are free loops
    for k in range(4):
        ra = _find(parent, cr[4 * x + k])
        if dense[ra] == -1:
            dense[ra] = -2
            loops += 1
    free(parent)
    free(dense)
    return loops


cdef inline void _switch(int *cr, int *sg, int x):
    cdef int a = cr[4 * x], b = cr[4 * x + 1], c = cr[4 * x + 2], d = cr[4 * x + 3]
    if sg[x] > 0:
        cr[4 * x], cr[4 * x + 1], cr[4 * x + 2], cr[4 * x + 3] = d, a, b, c
    else:
        cr[4 * x], cr[4 * x + 1], cr[4 * x + 2], cr[4 * x + 3] = b, c, d, a
    sg[x] = -sg[x]


cdef void _add_shifted(list acc, list poly, int scale):
    cdef Py_ssize_t i, need = len(poly) + 1
    while len(acc) < need:
        acc.append(0)
    for i in range(len(poly)):
        acc[i + 1] += scale * poly[i]


cdef list _conway(int n, int *cr, int *sg, int loops, dict memo):
    if n == 0:
        return [1] if loops == 1 else []
    if loops:
        return []
    cdef int m = 2 * n
    cdef int i, x, start, found = 0, lp
    cdef int *hx = <int *> malloc(m * sizeof(int))
    cdef int *hs = <int *> malloc(m * sizeof(int))
    cdef int *label = <int *> malloc(m * sizeof(int))
    cdef int *xorder = <int *> malloc(n * sizeof(int))
    cdef int *xlist = <int *> malloc(n * sizeof(int))
    cdef Walk w, best
    w.enc = <int *> malloc(5 * n * sizeof(int))
    w.px = <int *> malloc(m * sizeof(int))
    w.ps = <int *> malloc(m * sizeof(int))
    best.enc = <int *> malloc(5 * n * sizeof(int))
    best.px = <int *> malloc(m * sizeof(int))
    best.ps = <int *> malloc(m * sizeof(int))
    cdef int *cur = NULL
    cdef int *cur_s = NULL
    cdef int *scr = NULL
    cdef int *ssg = NULL
    cdef char *seen = NULL
    cdef list acc = []
    try:
        for x in range(n):
            hx[cr[4 * x]] = x
            hs[cr[4 * x]] = 0
            i = _in2(cr, sg, x)
            hx[i] = x
            hs[i] = 3 if sg[x] > 0 else 1
        for start in range(m):
            if not _walk(n, cr, sg, hx, hs, start, label, xorder, xlist, &w):
                return []
            if not found or _cmp(w.enc, best.enc, 5 * n) < 0:
                memcpy(best.enc, w.enc, 5 * n * sizeof(int))
                memcpy(best.px, w.px, m * sizeof(int))
                memcpy(best.ps, w.ps, m * sizeof(int))
                best.npass = w.npass
                best.ncomp = w.ncomp
                found = 1
        key = tuple([best.enc[i] for i in range(5 * n)])
        hit = memo.get(key)
        if hit is not None:
            return list(hit)
        cur = <int *> malloc(4 * n * sizeof(int))
        cur_s = <int *> malloc(n * sizeof(int))
        memcpy(cur, cr, 4 * n * sizeof(int))
        memcpy(cur_s, sg, n * sizeof(int))
        scr = <int *> malloc(4 * n * sizeof(int))
        ssg = <int *> malloc(n * sizeof(int))
        seen = <char *> malloc(n)
        for i in range(n):
            seen[i] = 0
        for i in range(best.npass):
            x = best.px[i]
            if seen[x]:
                continue
            seen[x] = 1
            if best.ps[i] == 0:
                lp = _smooth(n, cur, cur_s, x, scr, ssg)
                _add_shifted(acc, _conway(n - 1, scr, ssg, lp, memo), cur_s[x])
                _switch(cur, cur_s, x)
        if best.ncomp == 1:
            if not acc:
                acc.append(0)
            acc[0] += 1
        while acc and acc[len(acc) - 1] == 0:
            acc.pop()
        memo[key] = tuple(acc)
        return acc
    finally:
        free(hx); free(hs); free(label); free(xorder); free(xlist)
        free(w.enc); free(w.px); free(w.ps)
        free(best.enc); free(best.px); free(best.ps)
        free(cur); free(cur_s); free(scr); free(ssg); free(seen)


def conway(xs, signs, loops=0, budget=20, memo=None):
    """Conway coefficients of the diagram (list, index = power of z)."""
    if memo is None:
        memo = {}
    cdef int n = len(xs)
    if n > budget:
        raise BudgetExceeded(n)
    if n == 0:
        return [1] if loops == 1 else []
    dense = {}
    cdef int *cr = <int *> malloc(4 * n * sizeof(int))
    cdef int *sg = <int *> malloc(n * sizeof(int))
    cdef int x, k
    try:
        for x in range(n):
            for k in range(4):
                a = xs[x][k]
                if a not in dense:
                    dense[a] = len(dense)
                cr[4 * x + k] = dense[a]
            sg[x] = 1 if signs[x] > 0 else -1
        if len(dense) != 2 * n:
            raise ValueError("every arc must occur exactly twice")
        return _conway(n, cr, sg, loops, memo)
    finally:
        free(cr)
        free(sg)
