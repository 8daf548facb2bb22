"""Seeded instance generators: G(n,p) graphs, bipartite graphs, planted
deletion instances with a known spoiler set, and exhaustive non-isomorphic
enumeration for small n."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt, log1p

from . import kernels
from .deletion import ProblemSpec
from .errors import SizeGuardError
from .graphs import Graph, verts_of
from .partitions import RLPartition

NONISO_MAX_N = 7
NONISO_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)


def _sample_indices(total: int, p: float, rng: random.Random):
    """Indices of [0, total) kept independently with probability p, in
    increasing order; geometric jumps, so expected O(p * total) time."""
    if p <= 0.0 or total == 0:
        return
    if p >= 1.0:
        yield from range(total)
        return
    logq = log1p(-p)
    i = 0
    while True:
        u = rng.random()
        if u > 0.0:
            step = log1p(-u) / logq
            i += total if step >= total else int(step)
        else:
            i += total
        if i >= total:
            return
        yield i
        i += 1


def _pair_of_index(t: int) -> tuple[int, int]:
    """Inverse of the colex pair order (0,1),(0,2),(1,2),(0,3),..."""
    v = (1 + isqrt(1 + 8 * t)) // 2
    while v * (v - 1) // 2 > t:
        v -= 1
    while (v + 1) * v // 2 <= t:
        v += 1
    return t - v * (v - 1) // 2, v


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    total = n * (n - 1) // 2
    edges = [_pair_of_index(t) for t in _sample_indices(total, p, rng)]
    return Graph(n, edges)


def random_bipartite(
    n_a: int, n_b: int, p: float, seed: int | None = None
) -> Graph:
    """Random bipartite graph with sides 0..n_a-1 and n_a..n_a+n_b-1."""
    if n_a < 0 or n_b < 0:
        raise ValueError("side sizes must be non-negative")
    rng = random.Random(seed)
    edges = [
        (t // n_b, n_a + t % n_b)
        for t in _sample_indices(n_a * n_b, p, rng)
    ]
    return Graph(n_a + n_b, edges)


@dataclass(frozen=True)
class PlantedInstance:
    """A generated instance together with its planted solution: removing
    `spoilers` leaves a graph partitioned by `base_partition`, so the
    instance is guaranteed feasible at the planted budget."""

    graph: Graph
    spec: ProblemSpec
    spoilers: tuple[int, ...]
    base_partition: RLPartition

    def planted_k(self) -> int:
        return len(self.spoilers)


def planted_instance(
    n: int,
    r: int,
    l: int,
    k: int,
    p: float = 0.3,
    seed: int | None = None,
    independent: bool = False,
) -> PlantedInstance:
    """Constructive (r, l)-graph on n - k vertices (random class sizes, full
    cliques, random cross edges) plus k spoiler vertices wired randomly into
    everything. Deleting the spoilers restores the partition, so the planted
    budget k is always feasible; with independent=True the spoilers are kept
    pairwise non-adjacent so the planted set qualifies for the independent
    variant too."""
    if min(n, r, l, k) < 0:
        raise ValueError("arguments must be non-negative")
    if n < k:
        raise ValueError("need at least k vertices to plant k spoilers")
    base_n = n - k
    if r + l == 0 and base_n > 0:
        raise ValueError("a (0,0)-graph has no vertices; use n == k")
    rng = random.Random(seed)
    classes = [[] for _ in range(r + l)]
    for v in range(base_n):
        classes[rng.randrange(r + l)].append(v)
    edges = []
    for c in range(r, r + l):
        cl = classes[c]
        edges.extend(
            (cl[i], cl[j])
            for i in range(len(cl))
            for j in range(i + 1, len(cl))
        )
    cls_of = {}
    for c, cl in enumerate(classes):
        for v in cl:
            cls_of[v] = c
    cross = [
        (u, v)
        for u in range(base_n)
        for v in range(u + 1, base_n)
        if cls_of[u] != cls_of[v]
    ]
    edges.extend(
        cross[t] for t in _sample_indices(len(cross), p, rng)
    )
    spoil_p = max(p, 0.5)
    for s in range(base_n, n):
        for v in range(base_n):
            if rng.random() < spoil_p:
                edges.append((v, s))
        if not independent:
            for t in range(base_n, s):
                if rng.random() < spoil_p:
                    edges.append((t, s))
    part = RLPartition(
        tuple(tuple(c) for c in classes[:r]),
        tuple(tuple(c) for c in classes[r:]),
    )
    spec = ProblemSpec(r=r, l=l, k=k, independent=independent)
    return PlantedInstance(Graph(n, edges), spec, tuple(range(base_n, n)), part)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism, by one-vertex extension
    with canonical-form deduplication. Deterministic order (sorted by
    canonical edge mask at each level)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > NONISO_MAX_N:
        raise SizeGuardError(
            f"exhaustive enumeration is limited to n <= {NONISO_MAX_N}"
        )
    graphs = [Graph(0, [])]
    for i in range(n):
        seen = {}
        for g in graphs:
            base = list(g.edges)
            for nb in range(1 << i):
                h = Graph(i + 1, base + [(v, i) for v in verts_of(nb)])
                key = kernels.canonical_form(h.n, h.bits)
                if key not in seen:
                    seen[key] = h
        graphs = [seen[key] for key in sorted(seen)]
    return graphs
