"""Solvers for the independent variant: the deletion set itself must be an
independent set.

The polynomial cells (r <= 1, l <= 2) reduce to independent vertex cover
over coarse splits. The FPT cells (r = 2) run the guess structure on top of
a plain deletion solution: guess its independent trace, perturb the coarse
split of the rest, and finish with a restricted independent odd cycle
transversal built from copy-splitting an OCT witness and solving an
independence-constrained vertex mincut.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernels
from .deletion import (
    ProblemSpec,
    Solution,
    SolveStats,
    SolverConfig,
    _sel_iter,
    _solution,
    _validate_cell,
    colex_subsets,
    lift_add_clique_small,
    lift_add_joined_independent,
    _project_chain,
    solve_22,
)
from .errors import ContractError, UnsupportedParametersError
from .graphs import Bipartition, Graph, induced_subgraph, mask_of, verts_of
from .mincut import DEFAULT_WIDTH_CAP, independent_mincut
from .partitions import RLPartition, enumerate_partitions, recognize
from .transversals import copy_gadget, solve_ivc, solve_oct


@dataclass(frozen=True)
class OCTWitness:
    """An odd cycle transversal x plus a proper 2-coloring of the rest."""

    x: tuple[int, ...]
    sides: Bipartition

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(sorted(set(self.x))))

    def validate(self, g: Graph) -> bool:
        xs = set(self.x)
        a, b = set(self.sides.side_a), set(self.sides.side_b)
        if xs | a | b != set(range(g.n)):
            return False
        if len(xs) + len(a) + len(b) != g.n:
            return False
        for u, v in g.edges:
            if (u in a and v in a) or (u in b and v in b):
                return False
        return True


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Copy-split graph: every transversal vertex x becomes a copy pair.

    The first copy reuses x's own id, the second gets base_n + rank(x).
    origin[v] maps each vertex of graph back to its source vertex.
    """

    graph: Graph
    base_n: int
    x: tuple[int, ...]
    origin: tuple[int, ...]

    def copy_pair(self, v: int) -> tuple[int, int]:
        return (v, self.base_n + self.x.index(v))


@dataclass(frozen=True)
class ValidPartition:
    """Terminal split of the copies of y: one copy of each on either side."""

    y: tuple[int, ...]
    y_a: tuple[int, ...]
    y_b: tuple[int, ...]

    def validate(self, aux: AuxiliaryGraph) -> bool:
        if set(self.y_a) & set(self.y_b):
            return False
        for v in self.y:
            pair = set(aux.copy_pair(v))
            ina = len(pair & set(self.y_a))
            inb = len(pair & set(self.y_b))
            if ina != 1 or inb != 1:
                return False
        return True


def oct_auxiliary_graph(g: Graph, w: OCTWitness) -> AuxiliaryGraph:
    """Split each transversal vertex into two copies so that every odd cycle
    through the transversal turns into a crossing between the copy sides.

    Kept vertices keep their edges; a side-a neighbor of x attaches to x's
    second copy, a side-b neighbor to the first, and an edge between two
    transversal vertices yields both crossed copy edges. The result is
    always bipartite.
    """
    if not w.validate(g):
        raise ValueError("witness does not match the graph")
    n = g.n
    xs = w.x
    xset = set(xs)
    rank = {v: i for i, v in enumerate(xs)}
    in_a = set(w.sides.side_a)
    edges = []
    for u, v in g.edges:
        ux, vx = u in xset, v in xset
        if not ux and not vx:
            edges.append((u, v))
        elif ux and vx:
            edges.append((u, n + rank[v]))
            edges.append((n + rank[u], v))
        else:
            if vx:
                u, v = v, u
            # now u is the transversal endpoint
            if v in in_a:
                edges.append((v, n + rank[u]))
            else:
                edges.append((v, u))
    graph = Graph(n + len(xs), edges)
    origin = tuple(list(range(n)) + list(xs))
    full = (1 << graph.n) - 1
    if not kernels.is_bipartite(graph.n, graph.bits, full):
        raise ContractError("copy-split graph must be bipartite")
    return AuxiliaryGraph(graph, n, xs, origin)


def independent_oct(
    g: Graph,
    k: int,
    minimize: bool = False,
    mincut_backend: str = "brute",
    width_cap: int = DEFAULT_WIDTH_CAP,
):
    """Independent odd cycle transversal of size <= k, or None.

    Starts from a plain transversal X, then labels each member of X as
    deleted / side-a / side-b; deleted members must stay independent, the
    rest prescribe terminals in the copy-split graph, and an independent
    mincut supplies the deletions outside X. With minimize=True the budget
    rises from 0 so the answer has minimum size.
    """
    if k < 0:
        return None
    if minimize:
        for b in range(k + 1):
            res = _independent_oct_at(g, b, mincut_backend, width_cap)
            if res is not None:
                return res
        return None
    return _independent_oct_at(g, k, mincut_backend, width_cap)


def _independent_oct_at(g, k, mincut_backend, width_cap):
    n = g.n
    bits = g.bits
    full = (1 << n) - 1
    x = solve_oct(g, k)
    if x is None:
        return None
    xmask = mask_of(x)
    col = kernels.two_color(n, bits, full & ~xmask)
    w = OCTWitness(x, Bipartition(verts_of(col[0]), verts_of(col[1])))
    aux = oct_auxiliary_graph(g, w)
    p = len(x)
    s_verts = verts_of(full & ~xmask)
    for code in range(3**p):
        labels = []
        c = code
        for _ in range(p):
            labels.append(c % 3)
            c //= 3
        xdel = mask_of(x[i] for i in range(p) if labels[i] == 0)
        ndel = xdel.bit_count()
        if ndel > k:
            continue
        if not kernels.is_independent_set(bits, xdel):
            continue
        budget = k - ndel
        near_deleted = 0
        for v in verts_of(xdel):
            near_deleted |= bits[v]
        y_a = []
        y_b = []
        kept_copies = []
        for i in range(p):
            if labels[i] == 0:
                continue
            c1, c2 = aux.copy_pair(x[i])
            kept_copies.extend((c1, c2))
            if labels[i] == 1:
                y_a.append(c1)
                y_b.append(c2)
            else:
                y_a.append(c2)
                y_b.append(c1)
        host_verts = sorted(s_verts + tuple(kept_copies))
        host, vmap = induced_subgraph(aux.graph, host_verts)
        back = {i: ov for i, ov in enumerate(vmap)}
        fwd = {ov: i for i, ov in enumerate(vmap)}
        allowed = [
            i
            for i, ov in enumerate(vmap)
            if ov < n
            and not (xmask >> ov) & 1
            and not (near_deleted >> ov) & 1
        ]
        sources = [fwd[v] for v in y_a]
        sinks = [fwd[v] for v in y_b]
        cut = independent_mincut(
            host,
            sources,
            sinks,
            allowed,
            (),
            budget,
            backend=mincut_backend,
            width_cap=width_cap,
        )
        if cut is None:
            continue
        z = tuple(sorted([back[i] for i in cut] + list(verts_of(xdel))))
        zmask = mask_of(z)
        if not kernels.is_independent_set(bits, zmask):
            raise ContractError("assembled transversal is not independent")
        if not kernels.is_bipartite(n, bits, full & ~zmask):
            raise ContractError("assembled transversal left an odd cycle")
        return z
    return None


def restricted_independent_oct(
    g: Graph,
    d,
    k: int,
    mincut_backend: str = "brute",
    width_cap: int = DEFAULT_WIDTH_CAP,
):
    """Independent odd cycle transversal confined to d, or None.

    Copy-gadget reduction: undeletable vertices become budget+1 mutually
    non-adjacent true twins, which minimum solutions never touch; the
    projection is re-verified before returning.
    """
    if k < 0:
        return None
    dset = tuple(sorted(set(d)))
    for b in range(k + 1):
        gad = copy_gadget(g, dset, b)
        z = independent_oct(
            gad.graph, b, mincut_backend=mincut_backend, width_cap=width_cap
        )
        if z is None:
            continue
        keep = set(gad.keep)
        proj = tuple(sorted(gad.origin[v] for v in z if v in keep))
        pmask = mask_of(proj)
        full = (1 << g.n) - 1
        if not kernels.is_independent_set(g.bits, pmask):
            raise ContractError("gadget projection is not independent")
        if not kernels.is_bipartite(g.n, g.bits, full & ~pmask):
            raise ContractError("gadget projection left an odd cycle")
        return proj
    return None


@dataclass(frozen=True)
class HardnessGadget:
    """Edge replacement: paths[i] lists the (a, b) midpoint pairs of the
    length-3 paths that replaced edges[i] of the source graph. Source
    vertices keep their ids."""

    graph: Graph
    base_n: int
    paths: tuple[tuple[tuple[int, int], ...], ...]


def hardness_gadget(g: Graph, k: int, paths_per_edge: int | None = None):
    """Replace every edge {v,w} by budget+1 internally disjoint paths
    v-a-b-w. A transversal of the result within budget never needs the
    midpoints, which forces it to stay inside the original (independent)
    vertex set."""
    t = k + 1 if paths_per_edge is None else paths_per_edge
    if t < 1:
        raise ValueError("at least one replacement path per edge required")
    edges = []
    paths = []
    nxt = g.n
    for u, v in g.edges:
        mids = []
        for _ in range(t):
            a, b = nxt, nxt + 1
            nxt += 2
            edges.extend([(u, a), (a, b), (b, v)])
            mids.append((a, b))
        paths.append(tuple(mids))
    return HardnessGadget(Graph(nxt, edges), g.n, tuple(paths))


def solve_ivd_12(g: Graph, k: int, stats: SolveStats | None = None) -> Solution:
    """Independent deletion to one independent set plus two cliques.

    Polynomial: walk the coarse splits of a full (2,2)-partition and ask for
    an independent vertex cover of the bipartite side within budget. First
    feasible split wins.
    """
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()
    if k < 0:
        return _solution(False, None, None, stats, t0)
    base = recognize(g, 2, 2)
    if base is None:
        return _solution(False, None, None, stats, t0)
    for part in enumerate_partitions(g, base):
        stats.extras["splits"] = stats.extras.get("splits", 0) + 1
        rv = part.r_side()
        sub, vmap = induced_subgraph(g, rv)
        cover = solve_ivc(sub, k)
        if cover is None:
            continue
        dele = tuple(sorted(vmap[i] for i in cover))
        keep = tuple(v for v in rv if v not in set(dele))
        wit = RLPartition((keep,), part.clique_classes)
        return _solution(True, dele, wit, stats, t0)
    return _solution(False, None, None, stats, t0)


def independent_22(
    g: Graph, k: int, config: SolverConfig | None = None,
    stats: SolveStats | None = None,
) -> Solution:
    """Independent deletion to two independent sets plus two cliques.

    Pilots a plain deletion solution s: guesses the independent part of the
    answer inside s, a split of what stays, a perturbation of the fixed
    split outside s, and at most two clique-side deletions; a restricted
    independent transversal finishes the bipartite side.
    """
    config = config or SolverConfig()
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()
    n = g.n
    bits = g.bits
    base = solve_22(g, k, config, stats)
    if not base.feasible:
        return _solution(False, None, None, stats, t0)
    smask = mask_of(base.deletion_set)
    r_s = mask_of(base.witness.r_side())
    l_s = mask_of(base.witness.l_side())
    s_verts = base.deletion_set
    rs_verts = verts_of(r_s)
    ls_verts = verts_of(l_s)
    # perturbed coarse splits of the rest; identical for every inner guess
    perts = []
    seen_r1 = set()
    for lsel in _sel_iter(rs_verts, 4):
        for rsel in _sel_iter(ls_verts, 4):
            r1 = (r_s | rsel) & ~lsel
            if r1 in seen_r1:
                continue
            seen_r1.add(r1)
            perts.append((r1, (l_s | lsel) & ~rsel))
    for imask in _sel_iter(s_verts, k):
        if not kernels.is_independent_set(bits, imask):
            continue
        stats.extras["i_guesses"] = stats.extras.get("i_guesses", 0) + 1
        rem = smask & ~imask
        splits = kernels.coarse_splits_22(n, bits, rem)
        if not splits:
            continue
        ni = imask.bit_count()
        for r0, l0 in splits:
            for r1, l1 in perts:
                stats.perturbations += 1
                res = _finish_guess(
                    g, k, imask, ni, r0, l0, r1, l1, stats, config
                )
                if res is not None:
                    return _solution(True, res[0], res[1], stats, t0)
    return _solution(False, None, None, stats, t0)


def _finish_guess(g, k, imask, ni, r0, l0, r1, l1, stats, config):
    """One (I, split, perturbation) guess: choose the clique-side deletions
    and close the bipartite side; (deletion, witness) or None."""
    n = g.n
    bits = g.bits
    l_side = l0 | l1
    r_side = r0 | r1
    l1_verts = verts_of(l1)
    for lp in _sel_iter(l1_verts, 2):
        if not kernels.is_independent_set(bits, imask | lp):
            continue
        if not kernels.is_co_bipartite(n, bits, l_side & ~lp):
            continue
        budget = k - ni - lp.bit_count()
        if budget < 0:
            continue
        blocked = imask | lp
        near = 0
        for v in verts_of(blocked):
            near |= bits[v]
        dmask = r1 & ~near
        stats.oct_calls += 1
        if kernels.oct_solve(n, bits, r_side, dmask, budget) is None:
            continue
        sub, vmap = induced_subgraph(g, verts_of(r_side))
        d_local = tuple(
            i for i, ov in enumerate(vmap) if (dmask >> ov) & 1
        )
        stats.extras["rioct_calls"] = stats.extras.get("rioct_calls", 0) + 1
        rr = restricted_independent_oct(
            sub, d_local, budget, mincut_backend=config.mincut_backend
        )
        if rr is None:
            continue
        rpm = mask_of(vmap[i] for i in rr)
        dele_mask = imask | lp | rpm
        if not kernels.is_independent_set(bits, dele_mask):
            raise ContractError("assembled deletion set is not independent")
        rw = kernels.two_color(n, bits, r_side & ~rpm)
        lw = kernels.co_two_color(n, bits, l_side & ~lp)
        wit = RLPartition(
            (verts_of(rw[0]), verts_of(rw[1])),
            (verts_of(lw[0]), verts_of(lw[1])),
        )
        return verts_of(dele_mask), wit
    return None


def solve_ivd(g: Graph, spec: ProblemSpec, config=None) -> Solution:
    """Dispatch for the independent variant over all supported cells."""
    config = config or SolverConfig()
    _validate_cell(spec)
    if not spec.independent:
        raise ContractError("use solve_vd for the plain variant")
    stats = SolveStats()
    t0 = time.perf_counter()
    n = g.n
    full = (1 << n) - 1
    k = spec.k
    r, l = spec.r, spec.l

    if spec.restricted is not None:
        for v in spec.restricted:
            if not 0 <= v < n:
                raise ValueError(f"restricted vertex {v} out of range")
        return _solve_restricted_ivd(g, spec, config, stats, t0)

    if (r, l) == (0, 0):
        if g.m == 0 and n <= k:
            return _solution(
                True, tuple(range(n)), RLPartition((), ()), stats, t0
            )
        return _solution(False, None, None, stats, t0)

    if config.fast_paths and (r, l) == (1, 0):
        cover = solve_ivc(g, k)
        if cover is None:
            return _solution(False, None, None, stats, t0)
        wit = RLPartition((verts_of(full & ~mask_of(cover)),), ())
        return _solution(True, cover, wit, stats, t0)

    if config.fast_paths and (r, l) == (2, 0):
        z = independent_oct(
            g, k, mincut_backend=config.mincut_backend
        )
        if z is None:
            return _solution(False, None, None, stats, t0)
        col = kernels.two_color(n, g.bits, full & ~mask_of(z))
        wit = RLPartition((verts_of(col[0]), verts_of(col[1])), ())
        return _solution(True, z, wit, stats, t0)

    if r <= 1:
        chain = []
        cur, cr, cl = g, r, l
        while cr < 1:
            step = lift_add_joined_independent(cur, cr, cl, k)
            chain.append(step)
            cur, cr, cl = step.graph, step.r, step.l
        while cl < 2:
            step = lift_add_clique_small(cur, cr, cl)
            chain.append(step)
            cur, cr, cl = step.graph, step.r, step.l
        sol = solve_ivd_12(cur, k, stats)
        if not sol.feasible:
            return _solution(False, None, None, stats, t0)
        dele, wit = _project_chain(chain, sol.deletion_set, sol.witness)
        return _solution(True, dele, wit, stats, t0)

    chain = []
    cur, cl = g, l
    while cl < 2:
        step = lift_add_clique_small(cur, 2, cl)
        chain.append(step)
        cur, cl = step.graph, step.l
    sol = independent_22(cur, k, config, stats)
    if not sol.feasible:
        return _solution(False, None, None, stats, t0)
    dele, wit = _project_chain(chain, sol.deletion_set, sol.witness)
    return _solution(True, dele, wit, stats, t0)


def _solve_restricted_ivd(g, spec, config, stats, t0):
    n = g.n
    full = (1 << n) - 1
    r, l, k = spec.r, spec.l, spec.k
    dmask = mask_of(spec.restricted)
    if (r, l) == (0, 0):
        if g.m == 0 and n <= k and dmask == full:
            return _solution(
                True, tuple(range(n)), RLPartition((), ()), stats, t0
            )
        return _solution(False, None, None, stats, t0)
    if (r, l) == (2, 0):
        z = restricted_independent_oct(
            g, spec.restricted, k, mincut_backend=config.mincut_backend
        )
        if z is None:
            return _solution(False, None, None, stats, t0)
        col = kernels.two_color(n, g.bits, full & ~mask_of(z))
        wit = RLPartition((verts_of(col[0]), verts_of(col[1])), ())
        return _solution(True, z, wit, stats, t0)
    raise UnsupportedParametersError(
        "restricted independent deletion is only supported for the "
        f"(2,0)/(0,0) cells, not ({r},{l})"
    )
