# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_kernels_py``; same signatures and
results, restricted to carriers of at most 64 elements."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64
ctypedef long long i64


cdef i64* _copy(seq, Py_ssize_t size) except NULL:
    cdef i64* buf = <i64*> malloc((size if size > 0 else 1) * sizeof(i64))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


cdef u64* _copy_masks(seq, Py_ssize_t size) except NULL:
    cdef u64* buf = <u64*> malloc((size if size > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _lowbit(u64 m) nogil:
    return __builtin_ctzll(m)


cdef i64 _closure(int n, u64 mask, const i64* add) nogil:
    cdef u64 frontier = mask, fresh, fm, mm, one = 1
    cdef int v, w
    cdef i64 t
    while frontier:
        fresh = 0
        fm = frontier
        while fm:
            v = _lowbit(fm)
            fm &= fm - 1
            mm = mask
            while mm:
                w = _lowbit(mm)
                mm &= mm - 1
                t = add[v * n + w]
                if t == -2:
                    continue
                if t < 0:
                    return -1
                if not ((mask | fresh) >> t) & one:
                    fresh |= one << t
        mask |= fresh
        frontier = fresh
    return <i64> mask


def closed_subsets(int n, need, bad, add, zero_mask):
    if n > 30:
        raise ValueError("subset enumeration limited to 30 elements")
    cdef u64* cneed = _copy_masks(need, n)
    cdef i64* cadd = NULL
    cdef u64 cbad = bad, czero = zero_mask, one = 1
    cdef u64 full = (one << n) - 1
    cdef u64 mask, m, m2
    cdef int v, w
    cdef i64 t
    cdef bint ok
    cdef bint use_add = add is not None
    out = []
    try:
        if use_add:
            cadd = _copy(add, n * n)
        mask = 1
        while mask < full:
            if (mask & cbad) or not (mask & ~czero):
                mask += 1
                continue
            ok = True
            m = mask
            while m:
                v = _lowbit(m)
                m &= m - 1
                if cneed[v] & ~mask:
                    ok = False
                    break
            if ok and use_add:
                m = mask
                while m and ok:
                    v = _lowbit(m)
                    m2 = m
                    m &= m - 1
                    while m2:
                        w = _lowbit(m2)
                        m2 &= m2 - 1
                        t = cadd[v * n + w]
                        if t < 0 or not ((mask >> t) & one):
                            ok = False
                            break
            if ok:
                out.append(mask)
            mask += 1
    finally:
        free(cneed)
        if cadd != NULL:
            free(cadd)
    return out


def additive_closure(int n, mask, add):
    if n > 64:
        raise ValueError("compiled closure limited to 64 elements")
    cdef i64* cadd = _copy(add, n * n)
    cdef i64 r
    try:
        r = _closure(n, <u64> mask, cadd)
    finally:
        free(cadd)
    return r


def min_generating(int n, cover, add, forced, candidates, target):
    if n > 63:
        raise ValueError("compiled search limited to 63 elements")
    cdef int m = len(candidates)
    cdef u64* ccover = _copy_masks(cover, n)
    cdef i64* cadd = NULL
    cdef i64* cand = _copy(candidates, m)
    cdef int* idx = <int*> malloc((m + 1) * sizeof(int))
    cdef u64 base = 0, reach, gens, ctarget = target, cforced = forced, fm, one = 1
    cdef int k, i, j, v
    cdef bint use_add = add is not None
    found = []
    try:
        if use_add:
            cadd = _copy(add, n * n)
        fm = cforced
        while fm:
            v = _lowbit(fm)
            fm &= fm - 1
            base |= ccover[v]
        for k in range(m + 1):
            for i in range(k):
                idx[i] = i
            while True:
                reach = base
                gens = cforced
                for i in range(k):
                    reach |= ccover[cand[idx[i]]]
                    gens |= one << cand[idx[i]]
                if use_add:
                    reach = <u64> _closure(n, reach, cadd)
                if reach == ctarget:
                    found.append(gens)
                # advance to the next combination in lexicographic order
                i = k - 1
                while i >= 0 and idx[i] == i + m - k:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
            if found:
                break
    finally:
        free(ccover)
        free(cand)
        free(idx)
        if cadd != NULL:
            free(cadd)
    return found


def enumerate_maps(int nd, int nc, cod_act, cod_add, constraints, fixed):
    out = []
    if nd == 0:
        return [()]
    cdef i64* cact = _copy(cod_act, len(cod_act))
    cdef i64* cadd = _copy(cod_add if cod_add is not None else (), len(cod_add) if cod_add is not None else 0)
    cdef i64* cfixed = _copy(fixed, nd)
    cdef int* img = <int*> malloc(nd * sizeof(int))
    cdef int* start = <int*> malloc((nd + 1) * sizeof(int))
    cdef int total = 0, k, p, j, kind, z, s, v, u
    cdef i64 w, a
    cdef bint ok
    for k in range(nd):
        total += len(constraints[k])
    cdef i64* recs = <i64*> malloc((5 * total + 1) * sizeof(i64))
    try:
        p = 0
        for k in range(nd):
            start[k] = p
            for rec in constraints[k]:
                for j in range(5):
                    recs[5 * p + j] = rec[j]
                p += 1
        start[nd] = p
        k = 0
        img[0] = -1
        while k >= 0:
            # advance position k to its next candidate image
            if cfixed[k] >= 0:
                if img[k] == -1:
                    img[k] = <int> cfixed[k]
                else:
                    img[k] = nc
            else:
                img[k] += 1
            if img[k] >= nc:
                k -= 1
                continue
            ok = True
            for p in range(start[k], start[k + 1]):
                kind = <int> recs[5 * p]
                z = <int> recs[5 * p + 1]
                s = <int> recs[5 * p + 2]
                v = <int> recs[5 * p + 3]
                u = <int> recs[5 * p + 4]
                if kind == 0:
                    w = cact[s * nc + img[v]]
                elif kind == 1:
                    w = cadd[img[v] * nc + img[u]]
                else:
                    a = cact[s * nc + img[v]]
                    if a < 0:
                        ok = False
                        break
                    w = cadd[a * nc + img[u]]
                if w < 0 or w != img[z]:
                    ok = False
                    break
            if not ok:
                continue
            if k == nd - 1:
                row = []
                for j in range(nd):
                    row.append(img[j])
                out.append(tuple(row))
            else:
                k += 1
                img[k] = -1
    finally:
        free(cact)
        free(cadd)
        free(cfixed)
        free(img)
        free(start)
        free(recs)
    return out
