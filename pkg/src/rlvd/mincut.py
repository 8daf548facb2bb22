"""Vertex cuts that must form an independent set.

independent_mincut finds a set C of at most k pairwise non-adjacent vertices
whose removal separates every source from every sink. The brute backend
enumerates candidate sets directly; the twdp backend runs a dynamic program
over a tree decomposition obtained by min-degree elimination, with one state
per assignment of a bag into {source side, sink side, cut}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import ContractError, TreewidthLimitError
from .graphs import Graph, mask_of, verts_of

DEFAULT_WIDTH_CAP = 25


@dataclass(frozen=True)
class TreeDecomposition:
    """Rooted tree of bags; parents[i] is the parent bag id (-1 at the root).

    Valid when the bags cover all vertices, every edge lies inside some bag,
    and the bags containing any fixed vertex form a connected subtree.
    """

    bags: tuple[tuple[int, ...], ...]
    parents: tuple[int, ...]

    def __post_init__(self):
        if len(self.bags) != len(self.parents):
            raise ValueError("one parent entry per bag required")
        roots = [i for i, p in enumerate(self.parents) if p == -1]
        if len(self.bags) and len(roots) != 1:
            raise ValueError("exactly one root bag required")

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def root(self) -> int:
        return self.parents.index(-1)

    def children(self) -> tuple[tuple[int, ...], ...]:
        ch = [[] for _ in self.bags]
        for i, p in enumerate(self.parents):
            if p != -1:
                ch[p].append(i)
        return tuple(tuple(c) for c in ch)

    def verify(self, g: Graph) -> bool:
        bag_sets = [set(b) for b in self.bags]
        covered = set()
        for b in bag_sets:
            covered.update(b)
        if covered != set(range(g.n)):
            return False
        for u, v in g.edges:
            if not any(u in b and v in b for b in bag_sets):
                return False
        # bag sets per vertex must be connected in the tree
        ch = self.children()
        for v in range(g.n):
            holders = {i for i, b in enumerate(bag_sets) if v in b}
            if not holders:
                return False
            start = next(iter(holders))
            seen = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for i in frontier:
                    for j in list(ch[i]) + [self.parents[i]]:
                        if j in holders and j != -1 and j not in seen:
                            seen.add(j)
                            nxt.append(j)
                frontier = nxt
            if seen != holders:
                return False
        return True


def tree_decompose(g: Graph) -> TreeDecomposition:
    """Tree decomposition from the min-degree elimination ordering.

    Deterministic (degree ties break on vertex id); the result is verified
    against the decomposition axioms before returning.
    """
    if g.n == 0:
        return TreeDecomposition(((),), (-1,))
    work = {v: set(g.adj[v]) for v in range(g.n)}
    order = []
    bags = []
    pos = {}
    while work:
        v = min(work, key=lambda x: (len(work[x]), x))
        nbrs = sorted(work[v])
        pos[v] = len(order)
        order.append(v)
        bags.append(tuple(sorted([v] + nbrs)))
        for a in nbrs:
            work[a].discard(v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                work[a].add(b)
                work[b].add(a)
        del work[v]
    parents = []
    roots = []
    for i, bag in enumerate(bags):
        rest = [u for u in bag if u != order[i]]
        if rest:
            parents.append(pos[min(rest, key=lambda u: pos[u])])
        else:
            parents.append(-1)
            roots.append(i)
    # one tree: chain extra component roots under the first root
    for extra in roots[1:]:
        parents[extra] = roots[0]
    td = TreeDecomposition(tuple(bags), tuple(parents))
    if not td.verify(g):
        raise ContractError("elimination produced an invalid decomposition")
    return td


def _eligible_mask(g, sources, sinks, allowed, forbidden_adjacency):
    smask = mask_of(sources)
    tmask = mask_of(sinks)
    if smask & tmask:
        raise ValueError("sources and sinks must be disjoint")
    fmask = mask_of(forbidden_adjacency)
    near_forbidden = 0
    for v in verts_of(fmask):
        near_forbidden |= g.bits[v]
    return mask_of(allowed) & ~smask & ~tmask & ~near_forbidden, smask, tmask


def _separates(g, cut_mask, smask, tmask) -> bool:
    full = (1 << g.n) - 1
    reach = kernels.reachable(g.n, g.bits, full & ~cut_mask, smask)
    return reach & tmask == 0


def independent_mincut(
    g: Graph,
    sources,
    sinks,
    allowed,
    forbidden_adjacency,
    k: int,
    backend: str = "brute",
    width_cap: int = DEFAULT_WIDTH_CAP,
):
    """Independent vertex set C (at most k, inside `allowed`, no member
    adjacent to `forbidden_adjacency`) separating sources from sinks, or
    None. Sorted vertex tuple; deterministic per backend."""
    eligible, smask, tmask = _eligible_mask(
        g, sources, sinks, allowed, forbidden_adjacency
    )
    if k < 0:
        return None
    if backend == "brute":
        return _brute_mincut(g, eligible, smask, tmask, k)
    if backend == "twdp":
        return _twdp_mincut(g, eligible, smask, tmask, k, width_cap)
    raise ValueError(f"unknown backend {backend!r}")


def _brute_mincut(g, eligible, smask, tmask, k):
    from .deletion import colex_subsets

    cand = verts_of(eligible)
    bits = g.bits
    for size in range(min(k, len(cand)) + 1):
        for cut in colex_subsets(cand, size):
            if not kernels.is_independent_set(bits, cut):
                continue
            if _separates(g, cut, smask, tmask):
                return verts_of(cut)
    return None


def _twdp_mincut(g, eligible, smask, tmask, k, width_cap):
    # super-terminals keep multi-terminal separation a single s-t question
    n = g.n
    s_star, t_star = n, n + 1
    edges = list(g.edges)
    edges.extend((v, s_star) for v in verts_of(smask))
    edges.extend((v, t_star) for v in verts_of(tmask))
    g2 = Graph(n + 2, edges)
    td = tree_decompose(g2)
    if td.width > width_cap:
        raise TreewidthLimitError(
            f"decomposition width {td.width} exceeds the cap {width_cap}; "
            "use the brute backend"
        )
    bits2 = g2.bits

    def local_states(bag):
        """All labelings of `bag` into side-S (0), side-T (1), cut (2)."""
        out = []
        m = len(bag)
        for code in range(3**m):
            labels = []
            c = code
            ok = True
            for v in bag:
                lab = c % 3
                c //= 3
                if lab == 2 and (v >= n or not (eligible >> v) & 1):
                    ok = False
                    break
                if v == s_star and lab != 0:
                    ok = False
                    break
                if v == t_star and lab != 1:
                    ok = False
                    break
                labels.append(lab)
            if not ok:
                continue
            for i in range(m):
                for j in range(i + 1, m):
                    if not (bits2[bag[i]] >> bag[j]) & 1:
                        continue
                    a, b = labels[i], labels[j]
                    if {a, b} == {0, 1} or (a == 2 and b == 2):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            cut = frozenset(v for v, la in zip(bag, labels) if la == 2)
            if len(cut) > k:
                continue
            out.append((tuple(labels), cut))
        return out

    children = td.children()
    states = [None] * len(td.bags)
    # iterative post-order over the rooted bag tree
    stack = [(td.root, False)]
    while stack:
        node, expanded = stack.pop()
        if not expanded:
            stack.append((node, True))
            for c in children[node]:
                stack.append((c, False))
            continue
        bag = td.bags[node]
        cur = {}
        for labels, cut in local_states(bag):
            key = (len(cut), tuple(sorted(cut)))
            if labels not in cur or key < (
                len(cur[labels]),
                tuple(sorted(cur[labels])),
            ):
                cur[labels] = cut
        bag_set = set(bag)
        for c in children[node]:
            cbag = td.bags[c]
            cbag_set = set(cbag)
            inter = [i for i, v in enumerate(cbag) if v in bag_set]
            proj = {}
            for clabels, ccut in states[c].items():
                ik = tuple(
                    (cbag[i], clabels[i]) for i in inter
                )
                old = proj.get(ik)
                if old is None or (len(ccut), tuple(sorted(ccut))) < (
                    len(old),
                    tuple(sorted(old)),
                ):
                    proj[ik] = ccut
            states[c] = None
            nxt = {}
            for labels, cut in cur.items():
                look = tuple(
                    (v, labels[i])
                    for i, v in enumerate(bag)
                    if v in cbag_set
                )
                ccut = proj.get(look)
                if ccut is None:
                    continue
                merged = cut | ccut
                if len(merged) > k:
                    continue
                old = nxt.get(labels)
                if old is None or (len(merged), tuple(sorted(merged))) < (
                    len(old),
                    tuple(sorted(old)),
                ):
                    nxt[labels] = merged
            cur = nxt
            if not cur:
                break
        states[node] = cur
    final = states[td.root]
    if not final:
        return None
    best = min(
        final.values(), key=lambda cut: (len(cut), tuple(sorted(cut)))
    )
    return tuple(sorted(best))
