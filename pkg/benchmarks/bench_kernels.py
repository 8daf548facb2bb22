"""Timing comparison of the compiled kernel backend against the pure-Python
twin, function by function plus one end-to-end solve.

Usage: python benchmarks/bench_kernels.py [--repeats N] [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from rlvd import _kernels_py as pure
from rlvd.deletion import ProblemSpec, solve_vd
from rlvd.generators import planted_instance, random_bipartite, random_graph

try:
    from rlvd import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _row(name, pure_fn, comp_fn, repeats):
    tp = _time(pure_fn, repeats)
    if comp_fn is None:
        print(f"{name:<28} {tp*1e3:>10.3f} ms {'-':>12} {'-':>8}")
        return
    tc = _time(comp_fn, repeats)
    print(
        f"{name:<28} {tp*1e3:>10.3f} ms {tc*1e3:>9.3f} ms {tp/tc:>7.1f}x"
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    rep = args.repeats
    scale = 0.4 if args.quick else 1.0

    if compiled is None:
        print("compiled backend unavailable; timing the pure backend only")
    print(f"{'kernel':<28} {'pure':>13} {'compiled':>12} {'speedup':>8}")

    n1 = int(400 * scale)
    g1 = random_bipartite(n1 // 2, n1 - n1 // 2, 0.05, seed=1)
    full1 = (1 << n1) - 1
    reps1 = rep * 40

    def bip(mod):
        return lambda: mod.two_color(n1, g1.bits, full1)

    _row("two_color n=%d" % n1, bip(pure), bip(compiled) if compiled else None, reps1)

    n2 = int(120 * scale)
    g2 = random_graph(n2, 0.5, seed=2)
    full2 = (1 << n2) - 1

    def cob(mod):
        return lambda: mod.co_two_color(n2, g2.bits, full2)

    _row("co_two_color n=%d" % n2, cob(pure), cob(compiled) if compiled else None, reps1)

    def comps(mod):
        return lambda: mod.components(n1, g1.bits, full1)

    _row("components n=%d" % n1, comps(pure), comps(compiled) if compiled else None, reps1)

    n3 = int(70 * scale)
    g3 = random_graph(n3, 0.08, seed=3)
    full3 = (1 << n3) - 1

    def octk(mod):
        return lambda: mod.oct_solve(n3, g3.bits, full3, full3, 6)

    _row("oct_solve n=%d k=6" % n3, octk(pure), octk(compiled) if compiled else None, rep)

    rng = random.Random(4)
    n4 = 18
    g4 = random_graph(n4, 0.4, seed=4)
    smask = 0
    for v in rng.sample(range(n4), 14):
        smask |= 1 << v

    def splits(mod):
        return lambda: mod.coarse_splits_22(n4, g4.bits, smask)

    _row("coarse_splits_22 |s|=14", splits(pure), splits(compiled) if compiled else None, rep)

    g5 = random_graph(8, 0.5, seed=5)

    def canon(mod):
        return lambda: mod.canonical_form(8, g5.bits)

    _row("canonical_form n=8", canon(pure), canon(compiled) if compiled else None, rep)

    pi = planted_instance(13, 2, 2, 2, seed=6)
    spec = ProblemSpec(r=2, l=2, k=2)

    import os

    def end_to_end():
        t0 = time.perf_counter()
        sol = solve_vd(pi.graph, spec)
        assert sol.feasible
        return time.perf_counter() - t0

    print()
    print("end-to-end solve_vd, planted (2,2) n=13 k=2, current backend:")
    from rlvd.kernels import backend_name

    best = min(end_to_end() for _ in range(max(1, rep // 2)))
    print(f"  backend={backend_name():<9} {best*1e3:10.1f} ms")
    if os.environ.get("RLVD_PURE_KERNELS") != "1" and compiled is not None:
        print("  (set RLVD_PURE_KERNELS=1 and rerun to time the pure path)")


if __name__ == "__main__":
    main()
