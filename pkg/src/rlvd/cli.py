"""Command line interface.

Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 usage error or
unsupported parameters, 3 internal error.

Run records are plain JSON with sorted keys. Setting SOURCE_DATE_EPOCH
pins the timestamp and zeroes the wall-clock fields so repeated runs are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import signal
import sys
import time

from . import __version__, kernels
from .deletion import ProblemSpec, SolverConfig, solve_vd
from .errors import (
    ContractError,
    ParseError,
    SizeGuardError,
    TreewidthLimitError,
    UnsupportedParametersError,
)
from .generators import planted_instance, random_graph
from .graphs import Graph, mask_of, parse_graph, to_dimacs, to_edgelist
from .independent import hardness_gadget, solve_ivd
from .partitions import RLPartition, recognize, verify_partition

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str) -> tuple[Graph, str]:
    text = _read_text(path)
    return parse_graph(text, fmt), text


def _timestamp() -> int:
    env = os.environ.get("SOURCE_DATE_EPOCH")
    return int(env) if env is not None else int(time.time())


def _reproducible() -> bool:
    return "SOURCE_DATE_EPOCH" in os.environ


def _spec_dict(spec: ProblemSpec) -> dict:
    return {
        "r": spec.r,
        "l": spec.l,
        "k": spec.k,
        "independent": spec.independent,
    }


def run_record(path: str, text: str, g: Graph, spec: ProblemSpec, sol) -> dict:
    """Self-contained JSON document for one solve run."""
    sol_json = sol.to_json_dict()
    if _reproducible():
        sol_json["stats"]["wall_ms"] = 0.0
    return {
        "instance": {
            "path": str(path),
            "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "n": g.n,
            "m": g.m,
        },
        "spec": _spec_dict(spec),
        "solution": sol_json,
        "stats": sol_json["stats"],
        "version": __version__,
        "timestamp": _timestamp(),
    }


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_solve(args) -> int:
    restricted = None
    if args.restricted is not None:
        restricted = tuple(int(t) for t in _read_text(args.restricted).split())
    spec = ProblemSpec(
        r=args.r,
        l=args.l,
        k=args.k,
        independent=args.independent,
        restricted=restricted,
    )
    config = SolverConfig(threads=args.threads, mincut_backend=args.backend)
    g, text = _load_graph(args.input, args.format)
    solver = solve_ivd if spec.independent else solve_vd
    sol = solver(g, spec, config)
    _write_text(args.output, _dump(run_record(args.input, text, g, spec, sol)))
    return EXIT_OK if sol.feasible else EXIT_NEGATIVE


def _cmd_recognize(args) -> int:
    g, _ = _load_graph(args.input, args.format)
    part = recognize(g, args.r, args.l)
    if part is None:
        sys.stdout.write(
            json.dumps({"member": False}, sort_keys=True) + "\n"
        )
        return EXIT_NEGATIVE
    doc = {"member": True, "partition": part.to_json_dict()}
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _verify_record(g: Graph, text: str, record: dict) -> str | None:
    """None when the record checks out, else a reason string."""
    inst = record.get("instance", {})
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if inst.get("sha256") not in (None, digest):
        return "instance hash mismatch"
    if inst.get("n") != g.n or inst.get("m") != g.m:
        return "instance size mismatch"
    try:
        spec = record["spec"]
        r, l, k = int(spec["r"]), int(spec["l"]), int(spec["k"])
        independent = bool(spec["independent"])
        sol = record["solution"]
        feasible = bool(sol["feasible"])
    except (KeyError, TypeError, ValueError):
        return "malformed record"
    if not feasible:
        if sol.get("deletion_set") or sol.get("witness"):
            return "infeasible record carries a solution"
        return None
    dele = sol.get("deletion_set")
    wit_json = sol.get("witness")
    if dele is None or wit_json is None:
        return "feasible record is missing the solution"
    dele = [int(v) for v in dele]
    if len(set(dele)) != len(dele) or any(not 0 <= v < g.n for v in dele):
        return "deletion set is not a vertex set of the instance"
    if len(dele) > k:
        return "deletion set exceeds the budget"
    if independent and not kernels.is_independent_set(g.bits, mask_of(dele)):
        return "deletion set is not independent"
    try:
        wit = RLPartition.from_json_dict(wit_json)
    except (KeyError, TypeError, ValueError):
        return "malformed witness"
    if len(wit.indep_classes) > r or len(wit.clique_classes) > l:
        return "witness has the wrong shape"
    rest = [v for v in range(g.n) if v not in set(dele)]
    if not verify_partition(g, wit, rest):
        return "witness does not partition the remainder"
    return None


def _cmd_verify(args) -> int:
    g, text = _load_graph(args.input, args.format)
    record = json.loads(_read_text(args.solution))
    reason = _verify_record(g, text, record)
    if reason is None:
        sys.stdout.write("valid\n")
        return EXIT_OK
    sys.stdout.write(f"invalid: {reason}\n")
    return EXIT_NEGATIVE


def _cmd_gen(args) -> int:
    meta = {"type": args.type, "seed": args.seed}
    if args.type == "random":
        if args.n is None:
            raise UsageError("--n is required for --type random")
        g = random_graph(args.n, args.p, args.seed)
    elif args.type == "planted":
        if args.n is None:
            raise UsageError("--n is required for --type planted")
        pi = planted_instance(
            args.n,
            args.r,
            args.l,
            args.k,
            p=args.p,
            seed=args.seed,
            independent=args.independent,
        )
        g = pi.graph
        meta.update(
            _spec_dict(pi.spec),
            spoilers=list(pi.spoilers),
            base_partition=pi.base_partition.to_json_dict(),
        )
    else:
        if args.base is None:
            raise UsageError("--base is required for --type gadget")
        base, _ = _load_graph(args.base, args.format)
        gad = hardness_gadget(base, args.k)
        g = gad.graph
        meta.update(k=args.k, base_n=gad.base_n)
    meta.update(n=g.n, m=g.m)
    text = to_edgelist(g) if args.format == "edgelist" else to_dimacs(g)
    _write_text(args.output, text)
    stream = sys.stdout if args.output is not None else sys.stderr
    stream.write(json.dumps(meta, sort_keys=True) + "\n")
    return EXIT_OK


class _BenchTimeout(Exception):
    pass


def _cmd_bench(args) -> int:
    suite = json.loads(_read_text(args.suite))
    if not isinstance(suite, list):
        raise UsageError("suite must be a JSON list of instance entries")
    rows = []
    for entry in suite:
        path = entry["path"]
        fmt = entry.get("format", "dimacs")
        spec = ProblemSpec(
            r=int(entry["r"]),
            l=int(entry["l"]),
            k=int(entry["k"]),
            independent=bool(entry.get("independent", False)),
        )
        g, _ = _load_graph(path, fmt)
        solver = solve_ivd if spec.independent else solve_vd

        def on_alarm(signum, frame):
            raise _BenchTimeout

        old = signal.signal(signal.SIGALRM, on_alarm)
        signal.alarm(max(1, int(args.timeout)))
        t0 = time.perf_counter()
        try:
            sol = solver(g, spec)
            feasible = str(sol.feasible).lower()
            size = "" if sol.size is None else str(sol.size)
        except _BenchTimeout:
            feasible, size = "timeout", ""
        finally:
            signal.alarm(0)
            signal.signal(signal.SIGALRM, old)
        millis = round((time.perf_counter() - t0) * 1000.0, 3)
        rows.append(
            [
                path,
                g.n,
                g.m,
                spec.r,
                spec.l,
                spec.k,
                str(spec.independent).lower(),
                feasible,
                size,
                millis,
                kernels.backend_name(),
            ]
        )
    with open(args.csv, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            "instance n m r l k independent feasible size millis backend".split()
        )
        writer.writerows(rows)
    sys.stdout.write(f"wrote {len(rows)} rows to {args.csv}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlvd",
        description=(
            "Vertex deletion into r independent sets plus l cliques "
            "(max(r, l) <= 2), plain and independent variants."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"rlvd {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve a deletion instance")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--independent", action="store_true")
    sp.add_argument(
        "--restricted",
        metavar="FILE",
        help="file of whitespace-separated deletable vertex ids",
    )
    sp.add_argument("--input", required=True)
    sp.add_argument(
        "--format", choices=("dimacs", "edgelist"), default="dimacs"
    )
    sp.add_argument("--output", help="write the run record here (default stdout)")
    sp.add_argument(
        "--backend",
        choices=("brute", "twdp"),
        default="brute",
        help="independent-mincut backend used by the independent variant",
    )
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_solve)

    rp = sub.add_parser("recognize", help="test membership in the graph class")
    rp.add_argument("--r", type=int, required=True)
    rp.add_argument("--l", type=int, required=True)
    rp.add_argument("--input", required=True)
    rp.add_argument(
        "--format", choices=("dimacs", "edgelist"), default="dimacs"
    )
    rp.set_defaults(func=_cmd_recognize)

    vp = sub.add_parser("verify", help="re-check a run record")
    vp.add_argument("--input", required=True)
    vp.add_argument("--solution", required=True)
    vp.add_argument(
        "--format", choices=("dimacs", "edgelist"), default="dimacs"
    )
    vp.set_defaults(func=_cmd_verify)

    gp = sub.add_parser("gen", help="generate an instance")
    gp.add_argument(
        "--type", choices=("random", "planted", "gadget"), required=True
    )
    gp.add_argument("--n", type=int)
    gp.add_argument("--p", type=float, default=0.3)
    gp.add_argument("--k", type=int, default=0)
    gp.add_argument("--r", type=int, default=2)
    gp.add_argument("--l", type=int, default=2)
    gp.add_argument("--independent", action="store_true")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--base", help="input graph for --type gadget")
    gp.add_argument(
        "--format", choices=("dimacs", "edgelist"), default="dimacs"
    )
    gp.add_argument("--output", help="write the graph here (default stdout)")
    gp.set_defaults(func=_cmd_gen)

    bp = sub.add_parser("bench", help="run a suite and emit CSV timings")
    bp.add_argument("--suite", required=True, help="JSON list of instances")
    bp.add_argument("--timeout", type=float, default=60.0)
    bp.add_argument("--csv", required=True)
    bp.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        UsageError,
        UnsupportedParametersError,
        SizeGuardError,
        ParseError,
        TreewidthLimitError,
        FileNotFoundError,
        ValueError,
        json.JSONDecodeError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ContractError as exc:
        sys.stderr.write(f"internal contract violation: {exc}\n")
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - last-resort guard
        sys.stderr.write(f"internal error: {exc!r}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
