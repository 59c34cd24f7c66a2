# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same contracts as ``_pykernels``; masks limited to n <= 64."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcmp, memcpy

ctypedef unsigned long long u64

cdef enum:
    UNSET = 255


cdef void _upmasks(const unsigned char[:] leq, int n, u64* up) noexcept nogil:
    cdef int a, t
    for a in range(n):
        up[a] = 0
        for t in range(n):
            if leq[a * n + t]:
                up[a] |= (<u64>1) << t


def closure_mask(const unsigned char[:] op, const unsigned char[:] leq, int n, int g, seed):
    cdef u64 up[64]
    cdef u64 cur = <u64>seed
    cdef u64 new
    cdef int t, x, y, base, nn = n * n
    if n > 64:
        raise ValueError("compiled closure supports n <= 64")
    with nogil:
        _upmasks(leq, n, up)
        while True:
            new = cur
            for x in range(n):
                if (cur >> x) & 1:
                    new |= up[x]
            for t in range(g):
                base = t * nn
                for x in range(n):
                    for y in range(n):
                        if (cur >> op[base + x * n + y]) & 1:
                            new |= ((<u64>1) << x) | ((<u64>1) << y)
                        elif (cur >> x) & 1 and (cur >> y) & 1:
                            new |= (<u64>1) << op[base + x * n + y]
            if new == cur:
                break
            cur = new
    return int(cur)


def filter_masks(const unsigned char[:] op, const unsigned char[:] leq, int n, int g):
    cdef u64 need[64]
    cdef u64 mask, top
    cdef int t, x, y, v, base, nn = n * n
    cdef bint ok
    if n > 30:
        raise ValueError("subset scan supports n <= 30")
    _upmasks(leq, n, need)
    for t in range(g):
        for x in range(n):
            for y in range(n):
                need[op[t * nn + x * n + y]] |= ((<u64>1) << x) | ((<u64>1) << y)
    out = []
    top = (<u64>1) << n
    mask = 1
    while mask < top:
        ok = True
        for v in range(n):
            if (mask >> v) & 1 and need[v] & ~mask:
                ok = False
                break
        if ok:
            for t in range(g):
                base = t * nn
                for x in range(n):
                    if not (mask >> x) & 1:
                        continue
                    for y in range(n):
                        if (mask >> y) & 1 and not (mask >> op[base + x * n + y]) & 1:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            out.append(int(mask))
        mask += 1
    return out


def compatible(const unsigned char[:] op, const unsigned char[:] leq, int n, int g):
    return _compatible(&op[0], &leq[0], n, g)


cdef bint _consistent(unsigned char* tab, int n, int g, int t0, int a0, int b0) noexcept nogil:
    cdef int nn = n * n
    cdef int m, z, t, x, y, u, w, lhs, rhs
    cdef int v = tab[t0 * nn + a0 * n + b0]
    for m in range(g):
        for z in range(n):
            w = tab[m * nn + b0 * n + z]
            if w == UNSET:
                continue
            lhs = tab[m * nn + v * n + z]
            rhs = tab[t0 * nn + a0 * n + w]
            if lhs != UNSET and rhs != UNSET and lhs != rhs:
                return False
    for t in range(g):
        for x in range(n):
            u = tab[t * nn + x * n + a0]
            if u == UNSET:
                continue
            lhs = tab[t0 * nn + u * n + b0]
            rhs = tab[t * nn + x * n + v]
            if lhs != UNSET and rhs != UNSET and lhs != rhs:
                return False
    for t in range(g):
        for x in range(n):
            for y in range(n):
                if tab[t * nn + x * n + y] != a0:
                    continue
                w = tab[t0 * nn + y * n + b0]
                if w == UNSET:
                    continue
                rhs = tab[t * nn + x * n + w]
                if rhs != UNSET and rhs != v:
                    return False
    for m in range(g):
        for y in range(n):
            for z in range(n):
                if tab[m * nn + y * n + z] != b0:
                    continue
                u = tab[t0 * nn + a0 * n + y]
                if u == UNSET:
                    continue
                lhs = tab[m * nn + u * n + z]
                if lhs != UNSET and lhs != v:
                    return False
    return True


def search_tables(int n, int g, const unsigned char[:] values, bint assoc, long limit, long long budget):
    from ._pykernels import cell_order
    order_list = cell_order(n, g)
    cdef int ncells = len(order_list)
    cdef int* order = <int*>malloc(ncells * sizeof(int))
    cdef int* choice = <int*>malloc(ncells * sizeof(int))
    cdef unsigned char* tab = <unsigned char*>malloc(ncells)
    cdef int pos = 0, cell, i, nn = n * n
    cdef long long nodes = 0
    cdef long found = 0
    cdef bint exhausted = False
    out = []
    try:
        for i in range(ncells):
            order[i] = order_list[i]
            choice[i] = -1
            tab[i] = UNSET
        while pos >= 0:
            cell = order[pos]
            choice[pos] += 1
            if choice[pos] >= n:
                tab[cell] = UNSET
                choice[pos] = -1
                pos -= 1
                continue
            nodes += 1
            if budget and nodes > budget:
                exhausted = True
                break
            tab[cell] = values[cell * n + choice[pos]]
            if assoc and not _consistent(tab, n, g, cell // nn, (cell % nn) // n, cell % n):
                continue
            if pos == ncells - 1:
                out.append(tab[:ncells])
                found += 1
                if limit and found >= limit:
                    break
                continue
            pos += 1
    finally:
        free(order)
        free(choice)
        free(tab)
    return out, exhausted


cdef bint _compatible(const unsigned char* op, const unsigned char* leq, int n, int g) noexcept nogil:
    cdef int a, b, c, t, base, nn = n * n
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a * n + b]:
                continue
            for t in range(g):
                base = t * nn
                for c in range(n):
                    if not leq[op[base + a * n + c] * n + op[base + b * n + c]]:
                        return False
                    if not leq[op[base + c * n + a] * n + op[base + c * n + b]]:
                        return False
    return True


cdef void _least_form(const unsigned char* op, const unsigned char* leq, int n, int g,
                      int nm, int ng, int* pis, int* pinvs, int* tinvs,
                      unsigned char* best, unsigned char* cand) noexcept nogil:
    cdef int i, k, t, a, b, p, nn = n * n, base, row
    cdef int size = g * nn + nn
    cdef int* pi
    cdef int* pinv
    cdef bint have = False
    for i in range(ng):
        for k in range(nm):
            pi = pis + k * n
            pinv = pinvs + k * n
            p = 0
            for t in range(g):
                base = tinvs[i * g + t] * nn
                for a in range(n):
                    row = base + pinv[a] * n
                    for b in range(n):
                        cand[p] = pi[op[row + pinv[b]]]
                        p += 1
            for a in range(n):
                row = pinv[a] * n
                for b in range(n):
                    cand[p] = leq[row + pinv[b]]
                    p += 1
            if not have or memcmp(cand, best, size) < 0:
                memcpy(best, cand, size)
                have = True


def structure_forms(families, orders, int n, int g, mperms, gperms):
    cdef int nm = len(mperms), ng = len(gperms)
    cdef int nn = n * n, size = g * n * n + n * n
    cdef int nf = len(families), no = len(orders)
    cdef bytes fam_blob = b"".join(families)
    cdef bytes ord_blob = b"".join(orders)
    cdef const unsigned char* fam = fam_blob
    cdef const unsigned char* ords = ord_blob
    cdef int* pis = <int*>malloc(nm * n * sizeof(int))
    cdef int* pinvs = <int*>malloc(nm * n * sizeof(int))
    cdef int* tinvs = <int*>malloc(ng * g * sizeof(int))
    cdef unsigned char* best = <unsigned char*>malloc(size)
    cdef unsigned char* cand = <unsigned char*>malloc(size)
    cdef int i, j
    out = []
    try:
        _fill_perms(mperms, gperms, n, g, pis, pinvs, tinvs)
        for i in range(nf):
            for j in range(no):
                if _compatible(fam + i * g * nn, ords + j * nn, n, g):
                    _least_form(fam + i * g * nn, ords + j * nn, n, g, nm, ng,
                                pis, pinvs, tinvs, best, cand)
                    out.append((best[:size], i, j))
    finally:
        free(pis)
        free(pinvs)
        free(tinvs)
        free(best)
        free(cand)
    return out


cdef void _fill_perms(mperms, gperms, int n, int g, int* pis, int* pinvs, int* tinvs):
    cdef int i, j
    for i in range(len(mperms)):
        perm = mperms[i]
        for j in range(n):
            pis[i * n + j] = perm[j]
            pinvs[i * n + <int>perm[j]] = j
    for i in range(len(gperms)):
        perm = gperms[i]
        for j in range(g):
            tinvs[i * g + <int>perm[j]] = j


def canonical_form(const unsigned char[:] op, const unsigned char[:] leq, int n, int g, mperms, gperms):
    cdef int nm = len(mperms), ng = len(gperms)
    cdef int size = g * n * n + n * n
    cdef int* pis = <int*>malloc(nm * n * sizeof(int))
    cdef int* pinvs = <int*>malloc(nm * n * sizeof(int))
    cdef int* tinvs = <int*>malloc(ng * g * sizeof(int))
    cdef unsigned char* best = <unsigned char*>malloc(size)
    cdef unsigned char* cand = <unsigned char*>malloc(size)
    try:
        _fill_perms(mperms, gperms, n, g, pis, pinvs, tinvs)
        _least_form(&op[0], &leq[0], n, g, nm, ng, pis, pinvs, tinvs, best, cand)
        return best[:size]
    finally:
        free(pis)
        free(pinvs)
        free(tinvs)
        free(best)
        free(cand)
