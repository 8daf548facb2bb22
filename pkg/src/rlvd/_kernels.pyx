# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel twin of rlvd._kernels_py.

Same functions, same enumeration orders, same outputs. Masks cross the
boundary as Python ints and are unpacked into 64-bit word arrays; graphs on
more than 64 vertices simply use more words per row.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from . import _kernels_py as _py

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"

cdef enum:
    INF = 1073741824  # 1 << 30


cdef inline int _words(int n) nogil:
    cdef int w = (n + 63) >> 6
    return w if w > 0 else 1


cdef inline int _wpop(u64* a, int w) nogil:
    cdef int i, t = 0
    for i in range(w):
        t += __builtin_popcountll(a[i])
    return t


cdef inline int _wlow(u64* a, int w) nogil:
    cdef int i
    for i in range(w):
        if a[i]:
            return i * 64 + __builtin_ctzll(a[i])
    return -1


cdef inline bint _wany(u64* a, int w) nogil:
    cdef int i
    for i in range(w):
        if a[i]:
            return True
    return False


cdef inline bint _wtest(u64* a, int v) nogil:
    return (a[v >> 6] >> (v & 63)) & 1


cdef inline void _wset(u64* a, int v) nogil:
    a[v >> 6] |= (<u64>1) << (v & 63)


cdef void _load_mask(object m, int w, u64* out):
    cdef int i
    for i in range(w):
        out[i] = <u64>(m & 0xFFFFFFFFFFFFFFFF)
        m >>= 64


cdef object _dump_mask(u64* a, int w):
    cdef object res = 0
    cdef int i
    for i in range(w - 1, -1, -1):
        res = (res << 64) | a[i]
    return res


cdef void _load_rows(object adj, int n, int w, u64* A):
    cdef int v
    for v in range(n):
        _load_mask(adj[v], w, A + v * w)


# ---------------------------------------------------------------------------
# traversal primitives


cdef int _two_color_c(int n, int w, u64* A, u64* alive, u64* out_a, u64* out_b,
                      u64* colored, u64* newm, int* queue) nogil:
    cdef int i, root, u, qlen, head
    cdef u64 t, nb
    cdef bint on_a
    memset(out_a, 0, w * sizeof(u64))
    memset(out_b, 0, w * sizeof(u64))
    memset(colored, 0, w * sizeof(u64))
    while True:
        root = -1
        for i in range(w):
            t = alive[i] & ~colored[i]
            if t:
                root = i * 64 + __builtin_ctzll(t)
                break
        if root < 0:
            return 1
        _wset(out_a, root)
        _wset(colored, root)
        queue[0] = root
        qlen = 1
        head = 0
        while head < qlen:
            u = queue[head]
            head += 1
            on_a = _wtest(out_a, u)
            for i in range(w):
                nb = A[u * w + i] & alive[i]
                if on_a:
                    if nb & out_a[i]:
                        return 0
                    newm[i] = nb & ~colored[i]
                    out_b[i] |= newm[i]
                else:
                    if nb & out_b[i]:
                        return 0
                    newm[i] = nb & ~colored[i]
                    out_a[i] |= newm[i]
                colored[i] |= newm[i]
            for i in range(w):
                t = newm[i]
                while t:
                    queue[qlen] = i * 64 + __builtin_ctzll(t)
                    qlen += 1
                    t &= t - 1


cdef int _co_two_color_c(int n, int w, u64* A, u64* alive, u64* CA,
                         u64* out_a, u64* out_b, u64* colored, u64* newm,
                         int* queue) nogil:
    cdef int v, i
    memset(CA, 0, n * w * sizeof(u64))
    for v in range(n):
        if _wtest(alive, v):
            for i in range(w):
                CA[v * w + i] = alive[i] & ~A[v * w + i]
            CA[v * w + (v >> 6)] &= ~((<u64>1) << (v & 63))
    return _two_color_c(n, w, CA, alive, out_a, out_b, colored, newm, queue)


cdef struct _Buf:
    int n
    int w
    u64* A
    u64* CA
    u64* masks   # block of mask-sized scratch slots
    int* ints


cdef int _buf_init(_Buf* b, int n, int mask_slots, int int_slots) nogil:
    cdef int w = _words(n)
    cdef int rows = n if n > 0 else 1
    b.n = n
    b.w = w
    b.A = <u64*>malloc(rows * w * sizeof(u64))
    b.CA = <u64*>malloc(rows * w * sizeof(u64))
    b.masks = <u64*>malloc(mask_slots * w * sizeof(u64))
    b.ints = <int*>malloc(int_slots * sizeof(int))
    if b.A == NULL or b.CA == NULL or b.masks == NULL or b.ints == NULL:
        return 0
    return 1


cdef void _buf_free(_Buf* b) nogil:
    free(b.A)
    free(b.CA)
    free(b.masks)
    free(b.ints)


def is_independent_set(adj, mask):
    cdef int n = len(adj)
    cdef int w = _words(n)
    cdef u64* A = <u64*>malloc((n + 1) * w * sizeof(u64))
    if A == NULL:
        raise MemoryError()
    cdef u64* m = A + n * w
    _load_rows(adj, n, w, A)
    _load_mask(mask, w, m)
    cdef int v, i
    cdef bint ok = True
    for v in range(n):
        if _wtest(m, v):
            for i in range(w):
                if A[v * w + i] & m[i]:
                    ok = False
                    break
            if not ok:
                break
    free(A)
    return ok


def is_clique_set(adj, mask):
    cdef int n = len(adj)
    cdef int w = _words(n)
    cdef u64* A = <u64*>malloc((n + 1) * w * sizeof(u64))
    if A == NULL:
        raise MemoryError()
    cdef u64* m = A + n * w
    _load_rows(adj, n, w, A)
    _load_mask(mask, w, m)
    cdef int v, i
    cdef u64 rest
    cdef bint ok = True
    for v in range(n):
        if _wtest(m, v):
            for i in range(w):
                rest = m[i] & ~A[v * w + i]
                if i == (v >> 6):
                    rest &= ~((<u64>1) << (v & 63))
                if rest:
                    ok = False
                    break
            if not ok:
                break
    free(A)
    return ok


def two_color(int n, adj, alive):
    cdef _Buf b
    if not _buf_init(&b, n, 5, n + 1):
        raise MemoryError()
    cdef u64* al = b.masks
    cdef u64* oa = b.masks + b.w
    cdef u64* ob = b.masks + 2 * b.w
    cdef u64* col = b.masks + 3 * b.w
    cdef u64* nw = b.masks + 4 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, al)
    cdef int ok = _two_color_c(n, b.w, b.A, al, oa, ob, col, nw, b.ints)
    if not ok:
        _buf_free(&b)
        return None
    res = (_dump_mask(oa, b.w), _dump_mask(ob, b.w))
    _buf_free(&b)
    return res


def is_bipartite(int n, adj, alive):
    return two_color(n, adj, alive) is not None


def co_two_color(int n, adj, alive):
    cdef _Buf b
    if not _buf_init(&b, n, 5, n + 1):
        raise MemoryError()
    cdef u64* al = b.masks
    cdef u64* oa = b.masks + b.w
    cdef u64* ob = b.masks + 2 * b.w
    cdef u64* col = b.masks + 3 * b.w
    cdef u64* nw = b.masks + 4 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, al)
    cdef int ok = _co_two_color_c(n, b.w, b.A, al, b.CA, oa, ob, col, nw, b.ints)
    if not ok:
        _buf_free(&b)
        return None
    res = (_dump_mask(oa, b.w), _dump_mask(ob, b.w))
    _buf_free(&b)
    return res


def is_co_bipartite(int n, adj, alive):
    return co_two_color(n, adj, alive) is not None


cdef void _reach_c(int n, int w, u64* A, u64* alive, u64* seen, u64* frontier,
                   u64* nxt) nogil:
    cdef int i, v
    cdef u64 t
    for i in range(w):
        seen[i] = frontier[i] = frontier[i] & alive[i]
    while _wany(frontier, w):
        memset(nxt, 0, w * sizeof(u64))
        for v in range(n):
            if _wtest(frontier, v):
                for i in range(w):
                    nxt[i] |= A[v * w + i]
        for i in range(w):
            frontier[i] = nxt[i] & alive[i] & ~seen[i]
            seen[i] |= frontier[i]


def reachable(int n, adj, alive, start):
    cdef _Buf b
    if not _buf_init(&b, n, 4, 1):
        raise MemoryError()
    cdef u64* al = b.masks
    cdef u64* seen = b.masks + b.w
    cdef u64* fr = b.masks + 2 * b.w
    cdef u64* nxt = b.masks + 3 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, al)
    _load_mask(start, b.w, fr)
    _reach_c(n, b.w, b.A, al, seen, fr, nxt)
    res = _dump_mask(seen, b.w)
    _buf_free(&b)
    return res


def components(int n, adj, alive):
    cdef _Buf b
    if not _buf_init(&b, n, 5, 1):
        raise MemoryError()
    cdef u64* rest = b.masks
    cdef u64* seen = b.masks + b.w
    cdef u64* fr = b.masks + 2 * b.w
    cdef u64* nxt = b.masks + 3 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, rest)
    out = []
    cdef int root, i
    while True:
        root = _wlow(rest, b.w)
        if root < 0:
            break
        memset(fr, 0, b.w * sizeof(u64))
        _wset(fr, root)
        _reach_c(n, b.w, b.A, rest, seen, fr, nxt)
        out.append(_dump_mask(seen, b.w))
        for i in range(b.w):
            rest[i] &= ~seen[i]
    _buf_free(&b)
    return out


def rl_label(int n, adj, alive, int r, int l):
    cdef int nc = r + l
    cdef _Buf b
    if not _buf_init(&b, n, 1 + (nc if nc > 0 else 1), 2 * n + 2):
        raise MemoryError()
    cdef u64* al = b.masks
    cdef u64* classes = b.masks + b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, al)
    cdef int* verts = b.ints
    cdef int* next_class = b.ints + n + 1
    cdef int nv = 0
    cdef int v, i, j, c, w = b.w
    for v in range(n):
        if _wtest(al, v):
            verts[nv] = v
            nv += 1
    if nv == 0:
        _buf_free(&b)
        return (0,) * nc
    if nc == 0:
        _buf_free(&b)
        return None
    memset(classes, 0, nc * w * sizeof(u64))
    cdef bint ok, placed
    cdef u64 t
    i = 0
    next_class[0] = 0
    while 0 <= i < nv:
        v = verts[i]
        c = next_class[i]
        placed = False
        while c < nc:
            ok = True
            if c < r:
                for j in range(w):
                    if b.A[v * w + j] & classes[c * w + j]:
                        ok = False
                        break
            else:
                for j in range(w):
                    t = classes[c * w + j] & ~b.A[v * w + j]
                    if t:
                        ok = False
                        break
            if ok:
                _wset(classes + c * w, v)
                next_class[i] = c + 1
                placed = True
                break
            c += 1
        if placed:
            i += 1
            if i < nv:
                next_class[i] = 0
        else:
            next_class[i] = 0
            i -= 1
            if i >= 0:
                c = next_class[i] - 1
                classes[c * w + (verts[i] >> 6)] &= ~(
                    (<u64>1) << (verts[i] & 63)
                )
    if i < 0:
        _buf_free(&b)
        return None
    out = []
    for c in range(nc):
        out.append(_dump_mask(classes + c * w, w))
    _buf_free(&b)
    return tuple(out)


cdef bint _bip_c(int n, int w, u64* A, u64* alive, u64* scratch, int* queue) nogil:
    return _two_color_c(n, w, A, alive, scratch, scratch + w,
                        scratch + 2 * w, scratch + 3 * w, queue)


cdef bint _co_bip_c(int n, int w, u64* A, u64* alive, u64* CA, u64* scratch,
                    int* queue) nogil:
    return _co_two_color_c(n, w, A, alive, CA, scratch, scratch + w,
                           scratch + 2 * w, scratch + 3 * w, queue)


def coarse_splits_22(int n, adj, s):
    if int(s).bit_count() > 24:
        return _py.coarse_splits_22(n, adj, s)
    cdef _Buf b
    if not _buf_init(&b, n, 7, n + 1):
        raise MemoryError()
    cdef u64* sm = b.masks
    cdef u64* sub = b.masks + b.w
    cdef u64* rest = b.masks + 2 * b.w
    cdef u64* scratch = b.masks + 3 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(s, b.w, sm)
    cdef int w = b.w
    cdef int p = 0, i, idx
    cdef int sverts[32]
    for i in range(n):
        if _wtest(sm, i):
            sverts[p] = i
            p += 1
    out = []
    cdef unsigned long counter, cc
    for counter in range((<unsigned long>1) << p):
        memset(sub, 0, w * sizeof(u64))
        cc = counter
        idx = 0
        while cc:
            if cc & 1:
                _wset(sub, sverts[idx])
            cc >>= 1
            idx += 1
        for i in range(w):
            rest[i] = sm[i] & ~sub[i]
        if _bip_c(n, w, b.A, sub, scratch, b.ints) and \
                _co_bip_c(n, w, b.A, rest, b.CA, scratch, b.ints):
            out.append((_dump_mask(sub, w), _dump_mask(rest, w)))
    _buf_free(&b)
    return out


# ---------------------------------------------------------------------------
# odd cycle transversal via iterative compression


cdef struct _Flow:
    int nn
    int ecnt
    int* head
    int* eto
    int* ecap
    int* enext
    int* parent
    int* queue
    unsigned char* seen


cdef inline void _fadd(_Flow* f, int u, int v, int c) nogil:
    f.eto[f.ecnt] = v
    f.ecap[f.ecnt] = c
    f.enext[f.ecnt] = f.head[u]
    f.head[u] = f.ecnt
    f.ecnt += 1
    f.eto[f.ecnt] = u
    f.ecap[f.ecnt] = 0
    f.enext[f.ecnt] = f.head[v]
    f.head[v] = f.ecnt
    f.ecnt += 1


cdef int _annotated_cut_c(int n, int w, u64* A, u64* rest, u64* wa, u64* wb,
                          int budget, u64* dele, u64* phi_a, u64* phi_b,
                          u64* scratch, _Flow* f, u64* out) nogil:
    """Returns 1 and fills `out` with the cut, or 0."""
    cdef u64* na = scratch
    cdef u64* nb = scratch + w
    cdef u64* x_keep = scratch + 2 * w
    cdef u64* x_flip = scratch + 3 * w
    cdef int v, i, u, e, qh, qlen, bott, flow
    cdef u64 t
    memset(na, 0, 2 * w * sizeof(u64))
    for v in range(n):
        if _wtest(wa, v):
            for i in range(w):
                na[i] |= A[v * w + i]
        if _wtest(wb, v):
            for i in range(w):
                nb[i] |= A[v * w + i]
    for i in range(w):
        na[i] &= rest[i]
        nb[i] &= rest[i]
        x_flip[i] = (na[i] & phi_a[i]) | (nb[i] & phi_b[i])
        x_keep[i] = (na[i] & phi_b[i]) | (nb[i] & phi_a[i])
        if (x_keep[i] & x_flip[i]) & ~dele[i]:
            return 0
    # build network
    f.ecnt = 0
    for i in range(f.nn):
        f.head[i] = -1
    for v in range(n):
        if not _wtest(rest, v):
            continue
        _fadd(f, 2 * v, 2 * v + 1, 1 if _wtest(dele, v) else INF)
        for i in range(w):
            t = A[v * w + i] & rest[i]
            while t:
                u = i * 64 + __builtin_ctzll(t)
                _fadd(f, 2 * v + 1, 2 * u, INF)
                t &= t - 1
        if _wtest(x_keep, v):
            _fadd(f, 2 * n, 2 * v, INF)
        if _wtest(x_flip, v):
            _fadd(f, 2 * v + 1, 2 * n + 1, INF)
    cdef int src = 2 * n
    cdef int snk = 2 * n + 1
    flow = 0
    while True:
        for i in range(f.nn):
            f.parent[i] = -1
        f.parent[src] = -2
        f.queue[0] = src
        qlen = 1
        qh = 0
        while qh < qlen and f.parent[snk] == -1:
            u = f.queue[qh]
            qh += 1
            e = f.head[u]
            while e != -1:
                v = f.eto[e]
                if f.parent[v] == -1 and f.ecap[e] > 0:
                    f.parent[v] = e
                    if v == snk:
                        break
                    f.queue[qlen] = v
                    qlen += 1
                e = f.enext[e]
        if f.parent[snk] == -1:
            break
        bott = INF
        v = snk
        while v != src:
            e = f.parent[v]
            if f.ecap[e] < bott:
                bott = f.ecap[e]
            v = f.eto[e ^ 1]
        v = snk
        while v != src:
            e = f.parent[v]
            f.ecap[e] -= bott
            f.ecap[e ^ 1] += bott
            v = f.eto[e ^ 1]
        flow += bott
        if flow > budget:
            return 0
    # residual reachability
    memset(f.seen, 0, f.nn)
    f.seen[src] = 1
    f.queue[0] = src
    qlen = 1
    qh = 0
    while qh < qlen:
        u = f.queue[qh]
        qh += 1
        e = f.head[u]
        while e != -1:
            v = f.eto[e]
            if f.ecap[e] > 0 and not f.seen[v]:
                f.seen[v] = 1
                f.queue[qlen] = v
                qlen += 1
            e = f.enext[e]
    memset(out, 0, w * sizeof(u64))
    for v in range(n):
        if _wtest(rest, v) and f.seen[2 * v] and not f.seen[2 * v + 1]:
            _wset(out, v)
    return 1


cdef int _disjoint_oct_c(int n, int w, u64* A, u64* rest, int* pverts, int p,
                         int budget, u64* dele, u64* phi_a, u64* phi_b,
                         u64* wa, u64* wb, u64* scratch, _Flow* f,
                         u64* out) nogil:
    cdef unsigned long assign
    cdef int idx, v
    cdef bint proper
    cdef int i
    if budget < 0:
        return 0
    for assign in range((<unsigned long>1) << p):
        memset(wa, 0, 2 * w * sizeof(u64))
        for idx in range(p):
            if (assign >> idx) & 1:
                _wset(wb, pverts[idx])
            else:
                _wset(wa, pverts[idx])
        proper = True
        for idx in range(p):
            v = pverts[idx]
            for i in range(w):
                if A[v * w + i] & ((wb[i] if (assign >> idx) & 1 else wa[i])):
                    proper = False
                    break
            if not proper:
                break
        if not proper:
            continue
        if _annotated_cut_c(n, w, A, rest, wa, wb, budget, dele, phi_a, phi_b,
                            scratch, f, out):
            return 1
    return 0


cdef int _oct_at_c(int n, int w, u64* A, u64* alive, u64* dele, int k,
                   u64* slots, int* ints, int nsub, _Flow* f, u64* out) nogil:
    """1 on success, 0 infeasible, -2 if the guess table would overflow.

    slots: 16 mask slots of scratch; ints: 3n ints plus nsub guess slots.
    """
    cdef u64* sol = slots
    cdef u64* prefix = slots + w
    cdef u64* s_tmp = slots + 2 * w
    cdef u64* rest = slots + 3 * w
    cdef u64* phi_a = slots + 4 * w
    cdef u64* phi_b = slots + 5 * w
    cdef u64* kept = slots + 6 * w
    cdef u64* wa = slots + 7 * w
    cdef u64* wb = slots + 8 * w
    cdef u64* cut = slots + 9 * w
    cdef u64* tcscratch = slots + 10 * w  # 4 slots for two-color/annotated
    cdef int* queue = ints
    cdef int* stverts = ints + n
    cdef int* pverts = ints + 2 * n
    cdef int* subs = ints + 3 * n
    cdef int v, i, p, size_tmp, nsubs, c, sidx, budget_d, idx
    cdef unsigned long counter
    cdef bint found, okdel
    memset(sol, 0, w * sizeof(u64))
    memset(prefix, 0, w * sizeof(u64))
    for v in range(n):
        if not _wtest(alive, v):
            continue
        _wset(prefix, v)
        for i in range(w):
            rest[i] = prefix[i] & ~sol[i]
        if _two_color_c(n, w, A, rest, phi_a, phi_b, tcscratch,
                        tcscratch + w, queue):
            continue
        for i in range(w):
            s_tmp[i] = sol[i]
        _wset(s_tmp, v)
        size_tmp = _wpop(s_tmp, w)
        okdel = True
        for i in range(w):
            if s_tmp[i] & ~dele[i]:
                okdel = False
                break
        if okdel and size_tmp <= k:
            for i in range(w):
                sol[i] = s_tmp[i]
            continue
        # rest = prefix \ s_tmp, with its reference coloring
        for i in range(w):
            rest[i] = prefix[i] & ~s_tmp[i]
        _two_color_c(n, w, A, rest, phi_a, phi_b, tcscratch, tcscratch + w,
                     queue)
        p = 0
        for i in range(n):
            if _wtest(s_tmp, i):
                stverts[p] = i
                p += 1
        if p > 30 or (1 << p) > nsub:
            return -2
        # subset guesses ordered by size then numeric counter
        nsubs = 0
        for c in range(p + 1):
            for counter in range((<unsigned long>1) << p):
                if __builtin_popcountll(counter) == c:
                    subs[nsubs] = <int>counter
                    nsubs += 1
        found = False
        for sidx in range(nsubs):
            counter = <unsigned long>subs[sidx]
            memset(kept, 0, w * sizeof(u64))
            c = 0
            for idx in range(p):
                if (counter >> idx) & 1:
                    _wset(kept, stverts[idx])
                    pverts[c] = stverts[idx]
                    c += 1
            okdel = True
            for i in range(w):
                if (s_tmp[i] & ~kept[i]) & ~dele[i]:
                    okdel = False
                    break
            if not okdel:
                continue
            budget_d = k - size_tmp + c
            if budget_d < 0:
                continue
            if _disjoint_oct_c(n, w, A, rest, pverts, c, budget_d, dele,
                               phi_a, phi_b, wa, wb, tcscratch, f, cut):
                for i in range(w):
                    sol[i] = cut[i] | (s_tmp[i] & ~kept[i])
                found = True
                break
        if not found:
            return 0
    for i in range(w):
        out[i] = sol[i]
    return 1


def oct_solve(int n, adj, alive, deletable, int k, minimize=False):
    if k < 0:
        return None
    cdef int w = _words(n)
    cdef int kcap = k + 2
    if kcap > n + 1:
        kcap = n + 1
    if kcap > 24:
        kcap = 24  # subset counters use one machine word
    if kcap < 1:
        kcap = 1
    cdef int nsub = 1 << kcap
    cdef _Buf b
    if not _buf_init(&b, n, 20, 3 * n + nsub + 4):
        raise MemoryError()
    cdef u64* al = b.masks + 16 * b.w
    cdef u64* de = b.masks + 17 * b.w
    cdef u64* out = b.masks + 18 * b.w
    _load_rows(adj, n, b.w, b.A)
    _load_mask(alive, b.w, al)
    _load_mask(deletable, b.w, de)
    cdef int i
    for i in range(w):
        de[i] &= al[i]
    cdef _Flow f
    f.nn = 2 * n + 2
    cdef int ecap_max = 0
    for i in range(n):
        ecap_max += 3 + _wpop(b.A + i * b.w, b.w)
    ecap_max = 2 * ecap_max + 8
    f.head = <int*>malloc(f.nn * sizeof(int))
    f.eto = <int*>malloc(ecap_max * sizeof(int))
    f.ecap = <int*>malloc(ecap_max * sizeof(int))
    f.enext = <int*>malloc(ecap_max * sizeof(int))
    f.parent = <int*>malloc(f.nn * sizeof(int))
    f.queue = <int*>malloc(f.nn * sizeof(int))
    f.seen = <unsigned char*>malloc(f.nn)
    if (f.head == NULL or f.eto == NULL or f.ecap == NULL or f.enext == NULL
            or f.parent == NULL or f.queue == NULL or f.seen == NULL):
        raise MemoryError()
    cdef int ok = 0
    cdef int bb
    try:
        if minimize:
            for bb in range(k + 1):
                ok = _oct_at_c(n, w, b.A, al, de, bb, b.masks, b.ints, nsub,
                               &f, out)
                if ok:
                    break
        else:
            ok = _oct_at_c(n, w, b.A, al, de, k, b.masks, b.ints, nsub, &f,
                           out)
        if ok == -2:
            raise RuntimeError("compression state too large for the "
                               "compiled backend")
        if not ok:
            return None
        return _dump_mask(out, w)
    finally:
        free(f.head)
        free(f.eto)
        free(f.ecap)
        free(f.enext)
        free(f.parent)
        free(f.queue)
        free(f.seen)
        _buf_free(&b)


# ---------------------------------------------------------------------------
# canonical forms


def canonical_form(int n, adj):
    if n > 10:
        return _py.canonical_form(n, adj)
    cdef u64 rows[10]
    cdef int pairbit[10][10]
    cdef int perm[10]
    cdef int ctr[10]
    cdef int i, j, b2, tmp
    cdef u64 mask, best
    cdef bint have = False
    for i in range(n):
        rows[i] = <u64>adj[i]
        perm[i] = i
        ctr[i] = 0
    b2 = 0
    for i in range(n):
        for j in range(i + 1, n):
            pairbit[i][j] = b2
            b2 += 1
    best = 0
    # Heap's algorithm over permutations
    while True:
        mask = 0
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[perm[i]] >> perm[j]) & 1:
                    mask |= (<u64>1) << pairbit[i][j]
        if not have or mask < best:
            best = mask
            have = True
        # advance permutation
        i = 0
        while i < n:
            if ctr[i] < i:
                if i & 1:
                    tmp = perm[ctr[i]]
                    perm[ctr[i]] = perm[i]
                    perm[i] = tmp
                else:
                    tmp = perm[0]
                    perm[0] = perm[i]
                    perm[i] = tmp
                ctr[i] += 1
                i = 0
                break
            ctr[i] = 0
            i += 1
        if i >= n:
            break
    if n == 0:
        return 0
    return best
