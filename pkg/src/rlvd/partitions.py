"""Witness partitions into independent sets and cliques.

An (r, l)-partition splits a vertex set into r independent classes and l
cliques. Coarse structure means the pair (union of independent classes,
union of cliques); the perturbation machinery walks between coarse splits
by exchanging at most r*l vertices per side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .errors import ContractError, UnsupportedParametersError
from .graphs import Graph, mask_of, verts_of


def _canon_classes(classes):
    canon = [tuple(sorted(set(c))) for c in classes]
    canon.sort(key=lambda c: (1,) if not c else (0, c[0]))
    return tuple(canon)


@dataclass(frozen=True)
class RLPartition:
    """Canonical form: classes sorted internally, ordered by smallest member,
    empty classes last. Vertex ids refer to some host graph."""

    indep_classes: tuple[tuple[int, ...], ...]
    clique_classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "indep_classes", _canon_classes(self.indep_classes)
        )
        object.__setattr__(
            self, "clique_classes", _canon_classes(self.clique_classes)
        )
        seen = set()
        for c in self.indep_classes + self.clique_classes:
            for v in c:
                if v < 0:
                    raise ValueError(f"negative vertex id {v}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two classes")
                seen.add(v)

    @property
    def r(self) -> int:
        return len(self.indep_classes)

    @property
    def l(self) -> int:
        return len(self.clique_classes)

    def vertices(self) -> tuple[int, ...]:
        out = []
        for c in self.indep_classes + self.clique_classes:
            out.extend(c)
        return tuple(sorted(out))

    def r_side(self) -> tuple[int, ...]:
        out = []
        for c in self.indep_classes:
            out.extend(c)
        return tuple(sorted(out))

    def l_side(self) -> tuple[int, ...]:
        out = []
        for c in self.clique_classes:
            out.extend(c)
        return tuple(sorted(out))

    def to_json_dict(self) -> dict:
        return {
            "independent_sets": [list(c) for c in self.indep_classes],
            "cliques": [list(c) for c in self.clique_classes],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "RLPartition":
        try:
            ind = d["independent_sets"]
            cli = d["cliques"]
        except (KeyError, TypeError):
            raise ValueError("expected keys 'independent_sets' and 'cliques'")
        return cls(
            tuple(tuple(int(v) for v in c) for c in ind),
            tuple(tuple(int(v) for v in c) for c in cli),
        )


@dataclass(frozen=True)
class Perturbation:
    """Exchange sets: l_sel moves from the independent side to the clique
    side, r_sel the other way."""

    l_sel: tuple[int, ...]
    r_sel: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "l_sel", tuple(sorted(set(self.l_sel))))
        object.__setattr__(self, "r_sel", tuple(sorted(set(self.r_sel))))


def verify_partition(g: Graph, p: RLPartition, over=None) -> bool:
    """True iff p is a valid partition of `over` (default: all of g) with
    independent classes independent and clique classes complete in g."""
    cover = set(range(g.n)) if over is None else set(over)
    seen = set()
    for c in p.indep_classes + p.clique_classes:
        for v in c:
            if not 0 <= v < g.n or v in seen:
                return False
            seen.add(v)
    if seen != cover:
        return False
    for c in p.indep_classes:
        cs = set(c)
        for v in c:
            if any(w in cs for w in g.adj[v]):
                return False
    for c in p.clique_classes:
        cs = set(c)
        for v in c:
            if sum(1 for w in g.adj[v] if w in cs) != len(cs) - 1:
                return False
    return True


def _split_side(g, mask, slots, independent):
    """Split a coarse side into `slots` classes; None if impossible."""
    if slots == 0:
        return () if mask == 0 else None
    bits = g.bits
    if independent:
        if slots == 1:
            if not kernels.is_independent_set(bits, mask):
                return None
            return (verts_of(mask),)
        col = kernels.two_color(g.n, bits, mask)
        if col is None:
            return None
        return (verts_of(col[0]), verts_of(col[1]))
    if slots == 1:
        if not kernels.is_clique_set(bits, mask):
            return None
        return (verts_of(mask),)
    col = kernels.co_two_color(g.n, bits, mask)
    if col is None:
        return None
    return (verts_of(col[0]), verts_of(col[1]))


def apply_perturbation(g: Graph, base: RLPartition, pert: Perturbation):
    """Perturbed partition with the same (r, l) shape, or None when the
    exchanged sides no longer split into the required classes."""
    r, l = base.r, base.l
    rmask = mask_of(base.r_side())
    lmask = mask_of(base.l_side())
    lsel = mask_of(pert.l_sel)
    rsel = mask_of(pert.r_sel)
    if lsel & ~rmask:
        raise ContractError("l_sel must come from the independent side")
    if rsel & ~lmask:
        raise ContractError("r_sel must come from the clique side")
    if len(pert.l_sel) > r * l or len(pert.r_sel) > r * l:
        raise ContractError(f"exchange sets are bounded by r*l = {r * l}")
    r1 = (rmask | rsel) & ~lsel
    l1 = (lmask | lsel) & ~rsel
    ind = _split_side(g, r1, r, True)
    if ind is None:
        return None
    cli = _split_side(g, l1, l, False)
    if cli is None:
        return None
    return RLPartition(ind, cli)


def _sel_candidates(g, side_verts, cap, slots, independent):
    """Subsets of side_verts (size <= cap) inducing a graph that fits into
    `slots` classes of the target kind; ordered by size then colex."""
    bits = g.bits
    out = []
    for size in range(min(cap, len(side_verts)) + 1):
        group = []
        for comb in combinations(side_verts, size):
            m = mask_of(comb)
            if independent:
                if slots == 0 and size > 0:
                    continue
                if slots == 1 and not kernels.is_independent_set(bits, m):
                    continue
                if slots == 2 and not kernels.is_bipartite(g.n, bits, m):
                    continue
            else:
                if slots == 0 and size > 0:
                    continue
                if slots == 1 and not kernels.is_clique_set(bits, m):
                    continue
                if slots == 2 and not kernels.is_co_bipartite(g.n, bits, m):
                    continue
            group.append(m)
        group.sort()
        out.extend(group)
    return out


def enumerate_partitions(g: Graph, base: RLPartition):
    """All partitions with the same shape reachable by one perturbation,
    one per coarse split, lazily; the base coarse split comes first.

    Any two coarse splits of the same graph exchange at most r*l vertices
    in each direction, so perturbing the base by every selector pair of
    that size reaches every coarse split of the host graph; at most
    (n+1)^(2rl) are yielded.
    """
    r, l = base.r, base.l
    if max(r, l) > 2:
        raise UnsupportedParametersError(f"unsupported shape ({r},{l})")
    if not verify_partition(g, base):
        raise ContractError("base is not a valid partition of g")
    rl = r * l
    rverts = base.r_side()
    lverts = base.l_side()
    lsel_cands = _sel_candidates(g, rverts, rl, l, False)
    rsel_cands = _sel_candidates(g, lverts, rl, r, True)
    seen = set()
    for lsel in lsel_cands:
        for rsel in rsel_cands:
            pert = Perturbation(verts_of(lsel), verts_of(rsel))
            part = apply_perturbation(g, base, pert)
            if part is None:
                continue
            key = mask_of(part.r_side())
            if key in seen:
                continue
            seen.add(key)
            yield part


def recognize(g: Graph, r: int, l: int):
    """(r, l)-partition of all of g, or None. Solves the deletion problem
    at k = 0."""
    if r < 0 or l < 0:
        raise UnsupportedParametersError("r and l must be non-negative")
    if max(r, l) > 2:
        raise UnsupportedParametersError(
            f"recognition of ({r},{l})-graphs is NP-complete for max(r,l) >= 3"
        )
    from .deletion import ProblemSpec, solve_vd

    sol = solve_vd(g, ProblemSpec(r=r, l=l, k=0))
    return sol.witness if sol.feasible else None
