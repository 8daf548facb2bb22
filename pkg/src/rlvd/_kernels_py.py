"""Pure-Python kernel twin.

Reference implementation of the bitmask primitives also provided by the
compiled extension `rlvd._kernels`. Both must stay behaviourally identical:
same enumeration orders, same returned masks. Graphs enter as adjacency rows
(one int bitmask per vertex); vertex subsets enter as int bitmasks.
"""

from __future__ import annotations

BACKEND = "python"

_INF = 1 << 30


def _bits_list(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def is_independent_set(adj, mask) -> bool:
    m = mask
    while m:
        b = m & -m
        if adj[b.bit_length() - 1] & mask:
            return False
        m ^= b
    return True


def is_clique_set(adj, mask) -> bool:
    m = mask
    while m:
        b = m & -m
        if (mask ^ b) & ~adj[b.bit_length() - 1]:
            return False
        m ^= b
    return True


def two_color(n, adj, alive):
    """2-coloring of the graph induced on `alive`; (side_a, side_b) or None.

    The smallest vertex of every component lands on side a.
    """
    acc_a = 0
    acc_b = 0
    colored = 0
    rest = alive
    while rest:
        bit = rest & -rest
        root = bit.bit_length() - 1
        acc_a |= bit
        colored |= bit
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            nbrs = adj[u] & alive
            if (acc_a >> u) & 1:
                if nbrs & acc_a:
                    return None
                new = nbrs & ~colored
                acc_b |= new
            else:
                if nbrs & acc_b:
                    return None
                new = nbrs & ~colored
                acc_a |= new
            colored |= new
            while new:
                nb = new & -new
                queue.append(nb.bit_length() - 1)
                new ^= nb
        rest = alive & ~colored
    return acc_a, acc_b


def is_bipartite(n, adj, alive) -> bool:
    return two_color(n, adj, alive) is not None


def co_two_color(n, adj, alive):
    """two_color of the complement of the graph induced on `alive`."""
    cadj = [0] * n
    m = alive
    while m:
        b = m & -m
        v = b.bit_length() - 1
        cadj[v] = alive & ~adj[v] & ~b
        m ^= b
    return two_color(n, cadj, alive)


def is_co_bipartite(n, adj, alive) -> bool:
    return co_two_color(n, adj, alive) is not None


def reachable(n, adj, alive, start) -> int:
    """Vertices reachable from `start & alive` inside the graph on `alive`."""
    seen = start & alive
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def components(n, adj, alive):
    """Component masks of the graph on `alive`, ordered by smallest member."""
    out = []
    rest = alive
    while rest:
        b = rest & -rest
        comp = reachable(n, adj, rest, b)
        out.append(comp)
        rest &= ~comp
    return out


def rl_label(n, adj, alive, r, l):
    """First vertex-by-vertex labeling of the graph on `alive` into r
    independent classes then l cliques, lexicographic over class choices.

    Returns a tuple of r + l class masks, or None.
    """
    verts = _bits_list(alive)
    nv = len(verts)
    nc = r + l
    if nv == 0:
        return (0,) * nc
    if nc == 0:
        return None
    classes = [0] * nc
    next_class = [0] * nv
    i = 0
    while 0 <= i < nv:
        v = verts[i]
        vb = 1 << v
        c = next_class[i]
        placed = False
        while c < nc:
            if c < r:
                ok = (adj[v] & classes[c]) == 0
            else:
                ok = (classes[c] & ~adj[v]) == 0
            if ok:
                classes[c] |= vb
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
                classes[next_class[i] - 1] &= ~(1 << verts[i])
    if i < 0:
        return None
    return tuple(classes)


def coarse_splits_22(n, adj, s):
    """All (R, L) with R + L = s, G[R] bipartite, G[L] co-bipartite.

    R runs over submasks of s in ascending numeric order.
    """
    out = []
    sub = 0
    while True:
        rest = s & ~sub
        if is_bipartite(n, adj, sub) and is_co_bipartite(n, adj, rest):
            out.append((sub, rest))
        if sub == s:
            break
        sub = (sub - s) & s
    return out


def _submasks_by_size(mask):
    subs = []
    sub = 0
    while True:
        subs.append(sub)
        if sub == mask:
            break
        sub = (sub - mask) & mask
    subs.sort(key=lambda x: (x.bit_count(), x))
    return subs


def _annotated_cut(n, adj, rest, wa, wb, budget, deletable, phi_a, phi_b):
    """Min vertex cut realizing a 2-coloring extension, or None.

    `rest` induces a bipartite graph with reference coloring (phi_a, phi_b).
    Vertices adjacent to wa must end opposite wa, likewise wb; a cut of
    deletable vertices of size <= budget separates must-keep from must-flip
    reference colors. Undeletable vertices get infinite capacity.
    """
    na = 0
    m = wa
    while m:
        b = m & -m
        na |= adj[b.bit_length() - 1]
        m ^= b
    nb = 0
    m = wb
    while m:
        b = m & -m
        nb |= adj[b.bit_length() - 1]
        m ^= b
    na &= rest
    nb &= rest
    x_flip = (na & phi_a) | (nb & phi_b)
    x_keep = (na & phi_b) | (nb & phi_a)
    if (x_keep & x_flip) & ~deletable:
        return None
    # flow network: v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1
    nn = 2 * n + 2
    src = 2 * n
    snk = 2 * n + 1
    head = [-1] * nn
    eto = []
    ecap = []
    enext = []

    def add_edge(u, v, c):
        eto.append(v)
        ecap.append(c)
        enext.append(head[u])
        head[u] = len(eto) - 1
        eto.append(u)
        ecap.append(0)
        enext.append(head[v])
        head[v] = len(eto) - 1

    m = rest
    while m:
        b = m & -m
        v = b.bit_length() - 1
        add_edge(2 * v, 2 * v + 1, 1 if (deletable >> v) & 1 else _INF)
        nbrs = adj[v] & rest
        while nbrs:
            nb2 = nbrs & -nbrs
            w = nb2.bit_length() - 1
            add_edge(2 * v + 1, 2 * w, _INF)
            nbrs ^= nb2
        if (x_keep >> v) & 1:
            add_edge(src, 2 * v, _INF)
        if (x_flip >> v) & 1:
            add_edge(2 * v + 1, snk, _INF)
        m ^= b
    flow = 0
    parent = [-1] * nn
    while True:
        for i in range(nn):
            parent[i] = -1
        parent[src] = -2
        queue = [src]
        qh = 0
        while qh < len(queue) and parent[snk] == -1:
            u = queue[qh]
            qh += 1
            e = head[u]
            while e != -1:
                v = eto[e]
                if parent[v] == -1 and ecap[e] > 0:
                    parent[v] = e
                    if v == snk:
                        break
                    queue.append(v)
                e = enext[e]
        if parent[snk] == -1:
            break
        bott = _INF
        v = snk
        while v != src:
            e = parent[v]
            if ecap[e] < bott:
                bott = ecap[e]
            v = eto[e ^ 1]
        v = snk
        while v != src:
            e = parent[v]
            ecap[e] -= bott
            ecap[e ^ 1] += bott
            v = eto[e ^ 1]
        flow += bott
        if flow > budget:
            return None
    # residual reachability from source
    seen = [False] * nn
    seen[src] = True
    queue = [src]
    qh = 0
    while qh < len(queue):
        u = queue[qh]
        qh += 1
        e = head[u]
        while e != -1:
            v = eto[e]
            if ecap[e] > 0 and not seen[v]:
                seen[v] = True
                queue.append(v)
            e = enext[e]
    cut = 0
    m = rest
    while m:
        b = m & -m
        v = b.bit_length() - 1
        if seen[2 * v] and not seen[2 * v + 1]:
            cut |= b
        m ^= b
    return cut


def _disjoint_oct(n, adj, rest, promise, budget, deletable, phi):
    if budget < 0:
        return None
    phi_a, phi_b = phi
    pverts = _bits_list(promise)
    p = len(pverts)
    for assign in range(1 << p):
        wa = 0
        wb = 0
        for idx in range(p):
            if (assign >> idx) & 1:
                wb |= 1 << pverts[idx]
            else:
                wa |= 1 << pverts[idx]
        proper = True
        for idx in range(p):
            v = pverts[idx]
            side = wb if (assign >> idx) & 1 else wa
            if adj[v] & side:
                proper = False
                break
        if not proper:
            continue
        cut = _annotated_cut(n, adj, rest, wa, wb, budget, deletable, phi_a, phi_b)
        if cut is not None:
            return cut
    return None


def _oct_at(n, adj, alive, deletable, k):
    sol = 0
    prefix = 0
    todo = alive
    while todo:
        b = todo & -todo
        todo ^= b
        prefix |= b
        if is_bipartite(n, adj, prefix & ~sol):
            continue
        s_tmp = sol | b
        if (s_tmp & ~deletable) == 0 and s_tmp.bit_count() <= k:
            sol = s_tmp
            continue
        rest = prefix & ~s_tmp
        phi = two_color(n, adj, rest)
        size_tmp = s_tmp.bit_count()
        found = None
        for kept in _submasks_by_size(s_tmp):
            dropped = s_tmp & ~kept
            if dropped & ~deletable:
                continue
            budget_d = k - size_tmp + kept.bit_count()
            if budget_d < 0:
                continue
            cut = _disjoint_oct(n, adj, rest, kept, budget_d, deletable, phi)
            if cut is not None:
                found = cut | dropped
                break
        if found is None:
            return None
        sol = found
    return sol


def oct_solve(n, adj, alive, deletable, k, minimize=False):
    """Deletion set S <= k with S inside deletable & alive and the graph on
    alive minus S bipartite; None if infeasible. Iterative compression.

    With minimize=True the budget is raised from 0 so the result has minimum
    size. Deterministic: fixed vertex order, guesses by size then numeric.
    """
    if k < 0:
        return None
    deletable &= alive
    if minimize:
        for b in range(k + 1):
            res = _oct_at(n, adj, alive, deletable, b)
            if res is not None:
                return res
        return None
    return _oct_at(n, adj, alive, deletable, k)


def _pair_bit(n, i, j):
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def canonical_form(n, adj) -> int:
    """Minimum edge bitmask over all vertex permutations.

    Bit layout: pair (i, j), i < j, sits at i*n - i*(i+1)/2 + (j-i-1).
    Intended for small n (the compiled twin handles n <= 10).
    """
    from itertools import permutations

    pairs = [
        (i, j, 1 << _pair_bit(n, i, j))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    best = None
    for perm in permutations(range(n)):
        mask = 0
        for i, j, bit in pairs:
            pi, pj = perm[i], perm[j]
            if (adj[pi] >> pj) & 1:
                mask |= bit
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0
