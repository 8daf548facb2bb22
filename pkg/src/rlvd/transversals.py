"""Odd cycle transversals and independent vertex cover.

solve_oct / solve_restricted_oct return the colex-least minimum-size
solution (self-reduction over restricted feasibility), so outputs are
canonical. The restricted variant defaults to the copy-gadget reduction;
a native backend drives the kernel's deletable mask directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .errors import ContractError
from .graphs import Graph, mask_of, verts_of


@dataclass(frozen=True)
class RestrictedInstance:
    """Find S inside d, |S| <= k, with g - S bipartite."""

    g: Graph
    d: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(sorted(set(self.d))))
        for v in self.d:
            if not 0 <= v < self.g.n:
                raise ValueError(f"vertex {v} out of range")


@dataclass(frozen=True)
class CopyGadget:
    """Replacement graph where every undeletable vertex becomes k+1 mutually
    non-adjacent true twins. origin[new_id] = source vertex in the host."""

    graph: Graph
    keep: tuple[int, ...]
    origin: tuple[int, ...]


def _min_size(n, bits, alive, dele, k):
    """Minimum deletion size <= k, or None."""
    for b in range(k + 1):
        if kernels.oct_solve(n, bits, alive, dele, b) is not None:
            return b
    return None


def _colex_min(n, bits, alive, dele, b):
    """Colex-least solution of the (restricted) OCT instance at exact
    minimum size b; assumes feasibility at b."""
    sol = 0
    while b > 0:
        members = verts_of(dele & alive)
        lo, hi = 0, len(members) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            pre = mask_of(members[: mid + 1])
            if kernels.oct_solve(n, bits, alive, dele & pre, b) is not None:
                hi = mid
            else:
                lo = mid + 1
        m = members[lo]
        sol |= 1 << m
        alive &= ~(1 << m)
        dele &= (1 << m) - 1
        b -= 1
    return sol


def solve_oct(g: Graph, k: int):
    """Odd cycle transversal of size <= k, or None; colex-least among
    minimum-size solutions."""
    if k < 0:
        return None
    full = (1 << g.n) - 1
    return _solve_oct_masks(g.n, g.bits, full, full, k)


def _solve_oct_masks(n, bits, alive, dele, k):
    b = _min_size(n, bits, alive, dele, k)
    if b is None:
        return None
    return verts_of(_colex_min(n, bits, alive, dele, b))


def copy_gadget(g: Graph, d, k: int) -> CopyGadget:
    """Gadget graph: deletable vertices survive, every other vertex is
    replaced by k+1 non-adjacent true twins with the same neighbourhood."""
    dset = tuple(sorted(set(d)))
    for v in dset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    ids = {}
    origin = []
    for v in dset:
        ids[v] = [len(origin)]
        origin.append(v)
    for v in range(g.n):
        if v not in ids:
            ids[v] = list(range(len(origin), len(origin) + k + 1))
            origin.extend([v] * (k + 1))
    edges = []
    for u, v in g.edges:
        for nu in ids[u]:
            for nv in ids[v]:
                edges.append((nu, nv))
    keep = tuple(ids[v][0] for v in dset)
    return CopyGadget(Graph(len(origin), edges), keep, tuple(origin))


def solve_restricted_oct(inst: RestrictedInstance, backend: str = "gadget"):
    """Restricted OCT: deletions confined to inst.d. Returns the colex-least
    minimum solution or None. Backends agree on their outputs."""
    g, d, k = inst.g, inst.d, inst.k
    if k < 0:
        return None
    if backend == "native":
        full = (1 << g.n) - 1
        return _solve_oct_masks(g.n, g.bits, full, mask_of(d), k)
    if backend != "gadget":
        raise ValueError(f"unknown backend {backend!r}")
    gad = copy_gadget(g, d, k)
    sol = solve_oct(gad.graph, k)
    if sol is None:
        return None
    keep = set(gad.keep)
    proj = tuple(sorted(gad.origin[v] for v in sol if v in keep))
    # the projection argument guarantees copy-free minimum solutions
    full = (1 << g.n) - 1
    if not kernels.is_bipartite(g.n, g.bits, full & ~mask_of(proj)):
        raise ContractError("gadget projection left an odd cycle")
    return proj


def solve_ivc(g: Graph, k: int):
    """Independent vertex cover of size <= k, or None. Linear time.

    Per component the cover is the strictly smaller bipartition side; on a
    tie, the side containing the component's smallest vertex. The union is
    the unique minimum independent vertex cover.
    """
    if k < 0:
        return None
    color = [-1] * g.n
    chosen = []
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        side = [[root], []]
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    side[color[w]].append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        pick = side[1] if len(side[1]) < len(side[0]) else side[0]
        chosen.extend(pick)
        if len(chosen) > k:
            return None
    return tuple(sorted(chosen))
