"""Command-line entry point: params, solve, generate, bench.

Exit codes are part of the contract so harnesses can script against them:
0 success, 2 unparseable input, 3 disconnected graph, 4 invalid modulator,
5 verification mismatch, 1 anything else.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import __version__
from .cograph import solve_cograph
from .constructions import (
    bipartite_girth_construction,
    bisection_construction,
    gen_connected_er,
    gen_random_cograph_plus,
    gen_tree_plus_k,
    parse_dimacs_cnf,
    sat_to_diameter,
)
from .deletion import apsp_by_bfs, combine_apsp, solve_clique_modulator
from .errors import (
    DisconnectedGraphError,
    GraphInputError,
    InvalidModulatorError,
    ParamDiamError,
)
from .fes import solve_fes
from .graph import (
    Graph,
    induced_subgraph,
    load_edge_list,
    naive_diameter,
    save_edge_list,
)
from .hindex import solve_hd
from .params import (
    clique_modulator_2approx,
    cograph_modulator,
    h_index,
    parameter_report,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_BAD_MODULATOR = 4
EXIT_VERIFY_MISMATCH = 5

ALGOS = ("auto", "naive", "fes", "cograph", "hindex-diam", "clique", "deletion")


def _load_modulator(path: str) -> set[int]:
    with open(path, "r", encoding="utf-8") as fh:
        toks = fh.read().split()
    try:
        return {int(t) for t in toks}
    except ValueError as exc:
        raise InvalidModulatorError(f"non-integer vertex id in {path}") from exc


def _trace_sink(enabled: bool):
    if not enabled:
        return None

    def sink(event: dict) -> None:
        print(json.dumps(event), file=sys.stderr)

    return sink


def _pick_auto(g: Graph, cograph_threshold: int, hindex_threshold: int) -> str:
    k_fes = g.m - g.n + 1
    k_cog = len(cograph_modulator(g))
    h = h_index(g)
    if k_fes <= min(k_cog, h):
        return "fes"
    if k_cog <= cograph_threshold:
        return "cograph"
    if h <= hindex_threshold:
        return "hindex-diam"
    return "naive"


def _run_solver(g: Graph, algo: str, modulator: set[int] | None, trace) -> tuple[int, dict]:
    if algo == "naive":
        return naive_diameter(g), {}
    if algo == "fes":
        return solve_fes(g, trace), {"feedback_edge_number": g.m - g.n + 1}
    if algo == "cograph":
        k = modulator if modulator is not None else cograph_modulator(g)
        return solve_cograph(g, k), {"cograph_modulator_size": len(k)}
    if algo == "hindex-diam":
        return solve_hd(g, modulator, trace), {"h_index": h_index(g)}
    if algo == "clique":
        k = modulator if modulator is not None else clique_modulator_2approx(g)
        return solve_clique_modulator(g, k), {"clique_modulator_size": len(k)}
    if algo == "deletion":
        k = modulator if modulator is not None else clique_modulator_2approx(g)
        rest = [v for v in range(g.n) if v not in k]
        sub, order = induced_subgraph(g, rest)
        base = apsp_by_bfs(sub)
        base = type(base)(tuple(order), base.dist)
        full = combine_apsp(g, set(k), base)
        return full.diameter(), {"deletion_set_size": len(k)}
    raise ParamDiamError(f"unknown algorithm {algo!r}")


def cmd_params(args) -> int:
    g = load_edge_list(args.input)
    print(json.dumps(parameter_report(g), indent=2))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_edge_list(args.input)
    modulator = _load_modulator(args.modulator) if args.modulator else None
    algo = args.algo
    if algo == "auto":
        algo = _pick_auto(g, args.cograph_threshold, args.hindex_threshold)
    start = time.perf_counter()
    diameter, used = _run_solver(g, algo, modulator, _trace_sink(args.trace))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    report = {
        "input": args.input,
        "algo": algo,
        "diameter": diameter,
        "parameters": used,
        "ms": elapsed_ms,
        "verify": None,
    }
    exit_code = EXIT_OK
    if args.verify:
        expected = naive_diameter(g)
        if expected == diameter:
            report["verify"] = "match"
        else:
            report["verify"] = {"mismatch": {"expected": expected, "got": diameter}}
            exit_code = EXIT_VERIFY_MISMATCH
    print(json.dumps(report, indent=2))
    return exit_code


def cmd_generate(args) -> int:
    family = args.family
    sidecar = None
    if family == "thm1":
        out = bipartite_girth_construction(load_edge_list(args.input))
        g, sidecar = out.graph, {"relation": out.relation, "witnesses": out.witnesses}
    elif family == "thm4":
        out = bisection_construction(load_edge_list(args.input))
        g, sidecar = out.graph, {"relation": out.relation, "witnesses": out.witnesses}
    elif family == "thm6":
        with open(args.cnf, "r", encoding="utf-8") as fh:
            formula = parse_dimacs_cnf(fh.read())
        out = sat_to_diameter(formula)
        g, sidecar = out.graph, {"relation": out.relation, "witnesses": out.witnesses}
    elif family == "tree-plus-k":
        _require_seed(args)
        g = gen_tree_plus_k(args.n, args.k, args.seed)
    elif family == "cograph-plus":
        _require_seed(args)
        g = gen_random_cograph_plus(args.n, args.extra, args.seed)
    elif family == "er":
        _require_seed(args)
        g = gen_connected_er(args.n, args.p, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise ParamDiamError(f"unknown family {family!r}")
    save_edge_list(g, args.out, comment=f"paramdiam generate {family}")
    if sidecar is not None:
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2)
    return EXIT_OK


def _require_seed(args) -> None:
    if args.seed is None:
        raise ParamDiamError(f"--seed is required for family {args.family!r}")


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    algos = [a for a in args.algos.split(",") if a]
    for a in algos:
        if a not in ALGOS or a == "auto":
            raise ParamDiamError(f"cannot bench algorithm {a!r}")
    rows = []
    for n in sizes:
        for rep in range(args.repeats):
            seed = args.seed + rep
            if args.family == "tree-plus-k":
                g = gen_tree_plus_k(n, args.k, seed)
            elif args.family == "er":
                g = gen_connected_er(n, args.p, seed)
            elif args.family == "cograph-plus":
                g = gen_random_cograph_plus(n, args.extra, seed)
            else:  # pragma: no cover - argparse restricts choices
                raise ParamDiamError(f"unknown family {args.family!r}")
            for algo in algos:
                start = time.perf_counter()
                _, used = _run_solver(g, algo, None, None)
                ms = (time.perf_counter() - start) * 1000.0
                param = next(iter(used.values()), 0)
                rows.append((g.n, g.m, param, algo, f"{ms:.3f}"))
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "m", "param", "algo", "ms"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paramdiam",
        description="Exact graph diameter via parameterized algorithms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="structural parameter report as JSON")
    p.add_argument("input", help="edge-list file")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("solve", help="compute the diameter")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--modulator", help="file of vertex ids for modulator-based algos")
    p.add_argument("--verify", action="store_true", help="recompute with the naive oracle")
    p.add_argument("--trace", action="store_true", help="JSON trace lines on stderr")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--cograph-threshold", type=int, default=12)
    p.add_argument("--hindex-threshold", type=int, default=40)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="emit a construction or random instance")
    p.add_argument(
        "family",
        choices=["thm1", "thm4", "thm6", "tree-plus-k", "cograph-plus", "er"],
    )
    p.add_argument("--input", help="edge-list input (thm1, thm4)")
    p.add_argument("--cnf", help="DIMACS CNF input (thm6)")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--extra", type=int, default=2)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--seed", type=int, help="required for the random families")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="timings CSV over a seeded family")
    p.add_argument("--family", choices=["tree-plus-k", "er", "cograph-plus"], required=True)
    p.add_argument("--sizes", required=True, help="comma-separated n values")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--algos", default="fes,naive")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--extra", type=int, default=2)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path; stdout when omitted")
    p.set_defaults(func=cmd_bench)
    return parser


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("PARAMDIAM_THREADS", "1")))
    except ValueError:
        return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except InvalidModulatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_MODULATOR
    except (ParamDiamError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
