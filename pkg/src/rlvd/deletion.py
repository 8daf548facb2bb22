"""Solvers for the deletion variant: delete at most k vertices so the rest
splits into r independent sets and l cliques, for every cell with
max(r, l) <= 2.

The (2,2) cell runs iterative compression with a disjoint-version solver
that enumerates coarse splits of the promise, perturbs the promise witness's
coarse split by exchange sets of size at most 4 per side, and finishes each
guess with two restricted odd-cycle-transversal calls (clique side first on
the complement, then the bipartite side with the leftover budget). Other
cells either take a direct fast path or lift into (2,2).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .compression import CompressionProblem, iterative_compress
from .errors import ContractError, UnsupportedParametersError
from .graphs import (
    Graph,
    complement,
    complete_graph,
    disjoint_union,
    induced_subgraph,
    mask_of,
    verts_of,
)
from .partitions import RLPartition, verify_partition
from .transversals import RestrictedInstance, solve_oct, solve_restricted_oct


@dataclass(frozen=True)
class ProblemSpec:
    """Instance parameters: target shape (r, l), budget k, variant flag,
    optional restricted deletable set."""

    r: int
    l: int
    k: int
    independent: bool = False
    restricted: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.r < 0 or self.l < 0:
            raise ValueError("r and l must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.restricted is not None:
            object.__setattr__(
                self, "restricted", tuple(sorted(set(self.restricted)))
            )


@dataclass
class SolveStats:
    disjoint_calls: int = 0
    perturbations: int = 0
    max_perturbations_per_guess: int = 0
    oct_calls: int = 0
    wall_ms: float = 0.0
    extras: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        d = {
            "disjoint_calls": self.disjoint_calls,
            "perturbations": self.perturbations,
            "max_perturbations_per_guess": self.max_perturbations_per_guess,
            "oct_calls": self.oct_calls,
            "wall_ms": round(self.wall_ms, 3),
        }
        d.update(self.extras)
        return d


@dataclass
class Solution:
    feasible: bool
    deletion_set: tuple[int, ...] | None
    witness: RLPartition | None
    stats: SolveStats

    @property
    def size(self):
        return None if self.deletion_set is None else len(self.deletion_set)

    def to_json_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "deletion_set": None
            if self.deletion_set is None
            else list(self.deletion_set),
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "stats": self.stats.to_json_dict(),
        }


@dataclass
class SolverConfig:
    threads: int = 1
    roct_backend: str = "native"
    restricted_backend: str = "gadget"
    mincut_backend: str = "brute"
    fast_paths: bool = True
    lb_prunes: bool = True
    check_contracts: bool = False

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.roct_backend not in ("native", "gadget"):
            raise ValueError(f"unknown roct backend {self.roct_backend!r}")


def colex_subsets(verts, size):
    """Masks of all size-`size` subsets of the sorted tuple `verts`, in
    colex order (grouped by largest member ascending)."""
    if size == 0:
        yield 0
        return
    for i in range(size - 1, len(verts)):
        top = 1 << verts[i]
        for rest in colex_subsets(verts[:i], size - 1):
            yield rest | top


def _sel_iter(verts, cap):
    for size in range(min(cap, len(verts)) + 1):
        yield from colex_subsets(verts, size)


def _roct_masks(g, side, dele, budget, on_complement, backend, minimize):
    """Restricted OCT on the graph induced on `side` (or its complement),
    deletions confined to `dele`; returns a mask in host ids or None."""
    if budget < 0:
        return None
    if backend == "native":
        rows = g.cobits if on_complement else g.bits
        return kernels.oct_solve(g.n, rows, side, dele, budget, minimize)
    sub, vmap = induced_subgraph(g, verts_of(side))
    h = complement(sub) if on_complement else sub
    dset = tuple(i for i, ov in enumerate(vmap) if (dele >> ov) & 1)
    res = solve_restricted_oct(RestrictedInstance(h, dset, budget), "gadget")
    if res is None:
        return None
    return mask_of(vmap[x] for x in res)


def _disjoint_22_masks(g, alive, budget, promise, promise_witness, stats, config):
    """Disjoint compression step for the (2,2) cell over bitmasks.

    Finds W <= budget, disjoint from `promise`, whose removal from the graph
    on `alive` leaves a (2,2)-graph, plus a witness partition; None if no
    such W exists.
    """
    n = g.n
    bits = g.bits
    cobits = g.cobits
    stats.disjoint_calls += 1
    if budget < 0 or promise == 0:
        raise ContractError("promise must be nonempty with budget >= 0")
    r_s = mask_of(promise_witness.r_side())
    l_s = mask_of(promise_witness.l_side())
    rest = alive & ~promise
    if (r_s | l_s) != rest or (r_s & l_s) != 0:
        raise ContractError("promise witness must partition the rest")
    if config.check_contracts:
        sub, _ = induced_subgraph(g, verts_of(rest))
        if not verify_partition(g, promise_witness, over=verts_of(rest)):
            raise ContractError("promise witness is not a valid partition")
    k = budget
    rs_verts = verts_of(r_s)
    ls_verts = verts_of(l_s)
    for r0, l0 in kernels.coarse_splits_22(n, bits, promise):
        guess_perts = 0
        # r_sel candidates and their lower-bound prune, fixed per (r0, l0)
        rsel_ok = {}

        def rsel_alive(rsel):
            ok = rsel_ok.get(rsel)
            if ok is None:
                ok = kernels.is_bipartite(n, bits, r0 | rsel)
                if ok and config.lb_prunes:
                    stats.oct_calls += 1
                    ok = (
                        kernels.oct_solve(
                            n, bits, r0 | r_s | rsel, r_s | rsel, k + 4
                        )
                        is not None
                    )
                rsel_ok[rsel] = ok
            return ok

        for lsel in _sel_iter(rs_verts, 4):
            if not kernels.is_co_bipartite(n, bits, l0 | lsel):
                continue
            if config.lb_prunes:
                stats.oct_calls += 1
                if (
                    kernels.oct_solve(
                        n, cobits, l0 | l_s | lsel, l_s | lsel, k + 4
                    )
                    is None
                ):
                    continue
            for rsel in _sel_iter(ls_verts, 4):
                if not rsel_alive(rsel):
                    continue
                stats.perturbations += 1
                guess_perts += 1
                l1 = (l_s | lsel) & ~rsel
                r1 = (r_s | rsel) & ~lsel
                l_side = l0 | l1
                stats.oct_calls += 1
                cut_l = _roct_masks(
                    g, l_side, l1, k, True, config.roct_backend, True
                )
                if cut_l is None:
                    continue
                i0 = cut_l.bit_count()
                r_side = r0 | r1
                stats.oct_calls += 1
                cut_r = _roct_masks(
                    g, r_side, r1, k - i0, False, config.roct_backend, False
                )
                if cut_r is None:
                    continue
                if guess_perts > stats.max_perturbations_per_guess:
                    stats.max_perturbations_per_guess = guess_perts
                rw = kernels.two_color(n, bits, r_side & ~cut_r)
                lw = kernels.co_two_color(n, bits, l_side & ~cut_l)
                part = RLPartition(
                    (verts_of(rw[0]), verts_of(rw[1])),
                    (verts_of(lw[0]), verts_of(lw[1])),
                )
                return (cut_l | cut_r, part)
        if guess_perts > stats.max_perturbations_per_guess:
            stats.max_perturbations_per_guess = guess_perts
    return None


def disjoint_22(g: Graph, k: int, s, witness_s: RLPartition, config=None, stats=None):
    """Disjoint (2,2) step on the whole graph: deletion set avoiding `s`.

    Returns (deletion tuple, witness) or None. `witness_s` must be a valid
    (2,2)-partition of g minus s.
    """
    config = config or SolverConfig()
    stats = stats if stats is not None else SolveStats()
    smask = mask_of(s)
    if smask.bit_count() > k + 1:
        raise ContractError("promise size must be at most k + 1")
    full = (1 << g.n) - 1
    res = _disjoint_22_masks(g, full, k, smask, witness_s, stats, config)
    if res is None:
        return None
    return verts_of(res[0]), res[1]


def _verifier_22(h: Graph):
    full = (1 << h.n) - 1
    splits = kernels.coarse_splits_22(h.n, h.bits, full)
    if not splits:
        return None
    r0, l0 = splits[0]
    rw = kernels.two_color(h.n, h.bits, r0)
    lw = kernels.co_two_color(h.n, h.bits, l0)
    return RLPartition(
        (verts_of(rw[0]), verts_of(rw[1])), (verts_of(lw[0]), verts_of(lw[1]))
    )


def solve_22(g: Graph, k: int, config=None, stats=None) -> Solution:
    """(2,2) deletion via iterative compression with the disjoint step."""
    config = config or SolverConfig()
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()

    def disjoint(host, alive, budget, promise, promise_witness):
        if budget < 0:
            return None
        return _disjoint_22_masks(
            host, alive, budget, promise, promise_witness, stats, config
        )

    prob = CompressionProblem(verifier=_verifier_22, disjoint_solver=disjoint)
    res = iterative_compress(g, k, prob, check_contracts=config.check_contracts)
    stats.wall_ms = (time.perf_counter() - t0) * 1000.0
    if res is None:
        return Solution(False, None, None, stats)
    return Solution(True, res.deletion, res.witness, stats)


# ---------------------------------------------------------------------------
# lifts between parameter cells


@dataclass(frozen=True)
class LiftedInstance:
    """One lift step; graph is the lifted graph, (r, l) its target shape.

    kind "complement" keeps vertices; the add kinds append `added` vertices
    to the host (ids from base_n up).
    """

    graph: Graph
    r: int
    l: int
    kind: str
    base_n: int
    added: tuple[int, ...]

    def project_deletion(self, dele):
        if self.kind == "complement":
            return tuple(dele)
        return tuple(v for v in dele if v < self.base_n)

    def project_witness(self, wit: RLPartition) -> RLPartition:
        if self.kind == "complement":
            return RLPartition(wit.clique_classes, wit.indep_classes)
        added = set(self.added)
        drop_cliques = self.kind in ("add_clique", "add_clique_small")
        victims = wit.clique_classes if drop_cliques else wit.indep_classes
        drop = None
        for i, c in enumerate(victims):
            if all(v in added for v in c):
                drop = i
                break
        if drop is None:
            raise ContractError("no class contained in the added block")
        kept = tuple(
            tuple(v for v in c if v not in added)
            for i, c in enumerate(victims)
            if i != drop
        )
        others = wit.indep_classes if drop_cliques else wit.clique_classes
        others = tuple(tuple(v for v in c if v not in added) for c in others)
        if drop_cliques:
            return RLPartition(others, kept)
        return RLPartition(kept, others)


def lift_add_clique(g: Graph, r: int, l: int, k: int) -> LiftedInstance:
    """(r, l) -> (r, l+1): add a disjoint clique of size r + k + 1."""
    size = r + k + 1
    graph = disjoint_union(g, complete_graph(size))
    return LiftedInstance(
        graph, r, l + 1, "add_clique", g.n, tuple(range(g.n, g.n + size))
    )


def lift_add_clique_small(g: Graph, r: int, l: int) -> LiftedInstance:
    """(r, l) -> (r, l+1) for the independent variant: clique of size r + 2
    (an independent deletion set meets the clique at most once)."""
    size = r + 2
    graph = disjoint_union(g, complete_graph(size))
    return LiftedInstance(
        graph, r, l + 1, "add_clique_small", g.n, tuple(range(g.n, g.n + size))
    )


def lift_complement(g: Graph, r: int, l: int) -> LiftedInstance:
    """(r, l) -> (l, r) on the complement graph."""
    return LiftedInstance(complement(g), l, r, "complement", g.n, ())


def lift_add_joined_independent(g: Graph, r: int, l: int, k: int) -> LiftedInstance:
    """(r, l) -> (r+1, l) for the independent variant: an independent set of
    size l + k + 1 completely joined to the host."""
    size = l + k + 1
    edges = list(g.edges)
    for q in range(g.n, g.n + size):
        edges.extend((v, q) for v in range(g.n))
    graph = Graph(g.n + size, edges)
    return LiftedInstance(
        graph,
        r + 1,
        l,
        "add_joined_independent",
        g.n,
        tuple(range(g.n, g.n + size)),
    )


def _lift_chain_to_22(g: Graph, r: int, l: int, k: int):
    chain = []
    cur, cr, cl = g, r, l
    while cr < 2:
        step = lift_complement(cur, cr, cl)
        chain.append(step)
        cur, cr, cl = step.graph, step.r, step.l
        step = lift_add_clique(cur, cr, cl, k)
        chain.append(step)
        cur, cr, cl = step.graph, step.r, step.l
        step = lift_complement(cur, cr, cl)
        chain.append(step)
        cur, cr, cl = step.graph, step.r, step.l
    while cl < 2:
        step = lift_add_clique(cur, cr, cl, k)
        chain.append(step)
        cur, cr, cl = step.graph, step.r, step.l
    return chain, cur


def _project_chain(chain, dele, wit):
    for lift in reversed(chain):
        dele = lift.project_deletion(dele)
        wit = lift.project_witness(wit)
    return tuple(sorted(dele)), wit


# ---------------------------------------------------------------------------
# fast paths


def _vc_branch(bits, alive, b):
    if b < 0:
        return None
    m = alive
    while m:
        lb = m & -m
        v = lb.bit_length() - 1
        nb = bits[v] & alive
        if nb:
            sub = _vc_branch(bits, alive & ~lb, b - 1)
            if sub is not None:
                return sub | lb
            ub = nb & -nb
            sub = _vc_branch(bits, alive & ~ub, b - 1)
            if sub is not None:
                return sub | ub
            return None
        m ^= lb
    return 0


def _min_vc(bits, alive, k):
    """First vertex cover found at the smallest feasible budget."""
    for b in range(k + 1):
        res = _vc_branch(bits, alive, b)
        if res is not None:
            return res
    return None


def _solution(feasible, dele, wit, stats, t0):
    stats.wall_ms = (time.perf_counter() - t0) * 1000.0
    return Solution(feasible, dele, wit, stats)


def _validate_cell(spec: ProblemSpec):
    if max(spec.r, spec.l) > 2:
        raise UnsupportedParametersError(
            f"({spec.r},{spec.l}) is not supported: recognition is "
            "NP-complete already for max(r,l) >= 3"
        )


def solve_vd(g: Graph, spec: ProblemSpec, config=None) -> Solution:
    """Dispatch for the deletion variant over all supported cells."""
    config = config or SolverConfig()
    _validate_cell(spec)
    if spec.independent:
        raise ContractError("use solve_ivd for the independent variant")
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
        return _solve_restricted(g, spec, config, stats, t0)

    if (r, l) == (0, 0):
        if n <= k:
            return _solution(True, tuple(range(n)), RLPartition((), ()), stats, t0)
        return _solution(False, None, None, stats, t0)

    if config.fast_paths and (r, l) in ((1, 0), (0, 1), (2, 0), (0, 2)):
        if (r, l) == (1, 0):
            res = _min_vc(g.bits, full, k)
            if res is None:
                return _solution(False, None, None, stats, t0)
            wit = RLPartition((verts_of(full & ~res),), ())
            return _solution(True, verts_of(res), wit, stats, t0)
        if (r, l) == (0, 1):
            res = _min_vc(g.cobits, full, k)
            if res is None:
                return _solution(False, None, None, stats, t0)
            wit = RLPartition((), (verts_of(full & ~res),))
            return _solution(True, verts_of(res), wit, stats, t0)
        if (r, l) == (2, 0):
            stats.oct_calls += 1
            res = solve_oct(g, k)
            if res is None:
                return _solution(False, None, None, stats, t0)
            col = kernels.two_color(n, g.bits, full & ~mask_of(res))
            wit = RLPartition((verts_of(col[0]), verts_of(col[1])), ())
            return _solution(True, res, wit, stats, t0)
        stats.oct_calls += 1
        res = solve_oct(complement(g), k)
        if res is None:
            return _solution(False, None, None, stats, t0)
        col = kernels.co_two_color(n, g.bits, full & ~mask_of(res))
        wit = RLPartition((), (verts_of(col[0]), verts_of(col[1])))
        return _solution(True, res, wit, stats, t0)

    if (r, l) == (2, 2):
        sol = solve_22(g, k, config, stats)
        stats.wall_ms = (time.perf_counter() - t0) * 1000.0
        return sol

    chain, lifted = _lift_chain_to_22(g, r, l, k)
    sol = solve_22(lifted, k, config, stats)
    if not sol.feasible:
        return _solution(False, None, None, stats, t0)
    dele, wit = _project_chain(chain, sol.deletion_set, sol.witness)
    return _solution(True, dele, wit, stats, t0)


def _solve_restricted(g, spec, config, stats, t0):
    n = g.n
    full = (1 << n) - 1
    r, l, k = spec.r, spec.l, spec.k
    dmask = mask_of(spec.restricted)
    if (r, l) == (0, 0):
        if n <= k and dmask == full:
            return _solution(True, tuple(range(n)), RLPartition((), ()), stats, t0)
        return _solution(False, None, None, stats, t0)
    if (r, l) == (2, 0):
        stats.oct_calls += 1
        res = solve_restricted_oct(
            RestrictedInstance(g, spec.restricted, k), config.restricted_backend
        )
        if res is None:
            return _solution(False, None, None, stats, t0)
        col = kernels.two_color(n, g.bits, full & ~mask_of(res))
        wit = RLPartition((verts_of(col[0]), verts_of(col[1])), ())
        return _solution(True, res, wit, stats, t0)
    if (r, l) == (0, 2):
        stats.oct_calls += 1
        res = solve_restricted_oct(
            RestrictedInstance(complement(g), spec.restricted, k),
            config.restricted_backend,
        )
        if res is None:
            return _solution(False, None, None, stats, t0)
        col = kernels.co_two_color(n, g.bits, full & ~mask_of(res))
        wit = RLPartition((), (verts_of(col[0]), verts_of(col[1])))
        return _solution(True, res, wit, stats, t0)
    raise UnsupportedParametersError(
        f"restricted deletion is only supported for the (2,0)/(0,2)/(0,0) "
        f"cells, not ({r},{l})"
    )
