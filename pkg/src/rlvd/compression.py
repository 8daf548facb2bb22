"""Generic iterative compression for hereditary target classes.

Vertices are added in id order; the running deletion set absorbs each new
vertex and is recompressed through a disjoint-version solver whenever it
exceeds the budget. Works entirely over bitmasks of the host graph, so
prefix graphs never need relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import ContractError
from .graphs import Graph, induced_subgraph, verts_of


@dataclass
class CompressionStats:
    steps: int = 0
    disjoint_calls: int = 0


@dataclass(frozen=True)
class CompressionProblem:
    """Hereditary target class plugged into the driver.

    verifier: full-graph membership test returning a witness or None; the
        driver itself only needs it for the empty graph (and for optional
        contract checking), the real work happens in disjoint_solver.
    disjoint_solver: (g, alive, budget, promise, promise_witness) ->
        (deletion_mask, witness) | None. Operates on the graph induced on
        `alive`; the returned deletion avoids `promise`, has size <= budget,
        and the witness covers alive minus promise-disjoint deletion.
    """

    verifier: Callable[[Graph], Any]
    disjoint_solver: Callable[[Graph, int, int, int, Any], Any]


@dataclass
class CompressionResult:
    deletion: tuple[int, ...]
    witness: Any
    stats: CompressionStats


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


def iterative_compress(
    g: Graph, k: int, prob: CompressionProblem, check_contracts: bool = False
):
    """Deletion set of size <= k whose removal lands g in the target class,
    with a witness, or None. Subset guesses run smallest-kept-first."""
    if k < 0:
        return None
    stats = CompressionStats()
    witness = prob.verifier(Graph(0))
    if witness is None:
        raise ContractError("target class must contain the empty graph")
    sol = 0
    prefix = 0
    for v in range(g.n):
        vb = 1 << v
        prefix |= vb
        stats.steps += 1
        s_tmp = sol | vb
        if s_tmp.bit_count() <= k:
            sol = s_tmp
            continue
        found = None
        for kept in _submasks_by_size(s_tmp):
            if kept == 0:
                continue
            dropped = s_tmp ^ kept
            alive = prefix & ~dropped
            if check_contracts:
                sub, _ = induced_subgraph(g, verts_of(alive & ~kept))
                if prob.verifier(sub) is None:
                    raise ContractError(
                        "promise removal leaves a graph outside the class"
                    )
            stats.disjoint_calls += 1
            res = prob.disjoint_solver(
                g, alive, kept.bit_count() - 1, kept, witness
            )
            if res is not None:
                w_mask, new_witness = res
                if w_mask & kept:
                    raise ContractError("disjoint solution touches the promise")
                found = (w_mask | dropped, new_witness)
                break
        if found is None:
            return None
        sol, witness = found
    return CompressionResult(verts_of(sol), witness, stats)
