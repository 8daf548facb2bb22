"""Brute-force oracles used to validate the solvers.

These share no algorithmic code with the solver paths: bipartiteness runs on
union-find with parity instead of BFS coloring, and membership testing uses
the backtracking labeler, which no solver calls. Subset enumeration is
size-then-colex so oracles return minimum-cardinality, colex-least answers.
"""

from __future__ import annotations

from itertools import combinations

from . import kernels
from .errors import SizeGuardError
from .graphs import Graph, mask_of, verts_of
from .partitions import RLPartition

BRUTE_VD_MAX_N = 16
BRUTE_COUNT_MAX_N = 12


def _bipartite_uf(vertices, edges) -> bool:
    """Union-find with parity: True iff (vertices, edges) is bipartite."""
    parent = {v: v for v in vertices}
    par = {v: 0 for v in vertices}

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= par[x]
            x = parent[x]
        return x, p

    for u, v in edges:
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu == pv:
                return False
        else:
            parent[ru] = rv
            par[ru] = pu ^ pv ^ 1
    return True


def _subset_edges(g: Graph, sset):
    return [(u, v) for u, v in g.edges if u in sset and v in sset]


def _co_subset_edges(g: Graph, svs):
    out = []
    for i, u in enumerate(svs):
        for v in svs[i + 1 :]:
            if not g.has_edge(u, v):
                out.append((u, v))
    return out


def _fits_r0(g: Graph, mask: int, r: int) -> bool:
    """Graph on mask splits into r independent sets (r <= 2)."""
    if r == 0:
        return mask == 0
    svs = verts_of(mask)
    sset = set(svs)
    edges = _subset_edges(g, sset)
    if r == 1:
        return not edges
    return _bipartite_uf(svs, edges)


def _fits_0l(g: Graph, mask: int, l: int) -> bool:
    """Graph on mask splits into l cliques (l <= 2)."""
    if l == 0:
        return mask == 0
    svs = verts_of(mask)
    co_edges = _co_subset_edges(g, svs)
    if l == 1:
        return not co_edges
    return _bipartite_uf(svs, co_edges)


def brute_is_rl(g: Graph, r: int, l: int):
    """First (r, l)-labeling of g in lexicographic class order, or None."""
    full = (1 << g.n) - 1
    res = kernels.rl_label(g.n, g.bits, full, r, l)
    if res is None:
        return None
    return RLPartition(
        tuple(verts_of(m) for m in res[:r]),
        tuple(verts_of(m) for m in res[r:]),
    )


def brute_is_rl_masks(g: Graph, r: int, l: int) -> bool:
    """Independent cross-check of brute_is_rl feasibility for small n:
    scan every coarse side assignment."""
    if g.n > 6:
        raise SizeGuardError("mask cross-check is limited to n <= 6")
    if max(r, l) > 2:
        raise SizeGuardError("mask cross-check covers max(r,l) <= 2")
    full = (1 << g.n) - 1
    for rmask in range(full + 1):
        if _fits_r0(g, rmask, r) and _fits_0l(g, full & ~rmask, l):
            return True
    return False


def _masks_by_size(n, kmax):
    masks = [m for m in range(1 << n) if m.bit_count() <= kmax]
    masks.sort(key=lambda m: (m.bit_count(), m))
    return masks


def brute_vd(g: Graph, spec):
    """Minimum-cardinality (colex-least) deletion set for the instance, or
    None. Honors spec.restricted and spec.independent. Guarded to n <= 16."""
    if g.n > BRUTE_VD_MAX_N:
        raise SizeGuardError(f"brute_vd is limited to n <= {BRUTE_VD_MAX_N}")
    full = (1 << g.n) - 1
    allowed = full if spec.restricted is None else mask_of(spec.restricted)
    bits = g.bits
    for mask in _masks_by_size(g.n, min(spec.k, g.n)):
        if mask & ~allowed:
            continue
        if spec.independent and not _independent_mask(g, mask):
            continue
        if kernels.rl_label(g.n, bits, full & ~mask, spec.r, spec.l) is not None:
            return verts_of(mask)
    return None


def _independent_mask(g: Graph, mask: int) -> bool:
    svs = verts_of(mask)
    sset = set(svs)
    for v in svs:
        if any(w in sset for w in g.adj[v]):
            return False
    return True


def brute_coarse_splits(g: Graph, r: int, l: int):
    """All coarse (r, l)-splits (R, L) of g as vertex tuples, R ascending
    by mask. Guarded to n <= 12."""
    if g.n > BRUTE_COUNT_MAX_N:
        raise SizeGuardError(
            f"split enumeration is limited to n <= {BRUTE_COUNT_MAX_N}"
        )
    full = (1 << g.n) - 1
    out = []
    for rmask in range(full + 1):
        if _fits_r0(g, rmask, r) and _fits_0l(g, full & ~rmask, l):
            out.append((verts_of(rmask), verts_of(full & ~rmask)))
    return out


def brute_count_partitions(g: Graph, r: int, l: int) -> int:
    """Number of coarse (r, l)-splits of g."""
    return len(brute_coarse_splits(g, r, l))


def brute_oct(g: Graph, k: int):
    """Minimum odd cycle transversal of size <= k by subset enumeration."""
    for size in range(min(k, g.n) + 1):
        for comb in combinations(range(g.n), size):
            sset = set(comb)
            rest = [v for v in range(g.n) if v not in sset]
            edges = [
                (u, v) for u, v in g.edges if u not in sset and v not in sset
            ]
            if _bipartite_uf(rest, edges):
                return tuple(comb)
    return None


def brute_independent_oct(g: Graph, k: int):
    """Minimum independent odd cycle transversal of size <= k; cost is
    bounded by k, not n, so large gadget graphs are fine."""
    for size in range(min(k, g.n) + 1):
        for comb in combinations(range(g.n), size):
            if not _independent_mask(g, mask_of(comb)):
                continue
            sset = set(comb)
            rest = [v for v in range(g.n) if v not in sset]
            edges = [
                (u, v) for u, v in g.edges if u not in sset and v not in sset
            ]
            if _bipartite_uf(rest, edges):
                return tuple(comb)
    return None
