"""Command-line front end: generate, color, verify, exact, bounds, bench.

Exit status is 0 on success, 1 when a colouring fails verification and 2 on
usage errors or malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from . import generators
from .colorer import InfeasibleStep, RunStats, color_distinguishing, finalize_root_pair
from .graph import GraphError, bound_params, read_edge_list, write_edge_list
from .oracle import SearchLimitExceeded, exact_index_witness, exact_sr_witness
from .proper import vizing_color
from .targeted import final_step_state, targeted_states
from .verify import ColoringError, read_coloring, verify, write_coloring

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _load_graph(path: str):
    try:
        with open(path) as fh:
            return read_edge_list(fh)
    except OSError as exc:
        raise UsageError(f"cannot read graph file {path}: {exc}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _cmd_generate(args) -> int:
    fam = args.family
    p = args.params
    try:
        if fam == "random":
            if len(p) != 2:
                raise UsageError("random needs N P")
            g = generators.random_graph(int(p[0]), float(p[1]), args.seed)
        elif fam == "debruijn":
            if len(p) != 2:
                raise UsageError("debruijn needs D R")
            g = generators.de_bruijn_undirected(int(p[0]), int(p[1]))
        elif fam == "connected":
            if len(p) != 2:
                raise UsageError("connected needs N INDEX")
            graphs = list(generators.all_connected(int(p[0])))
            idx = int(p[1])
            if not 0 <= idx < len(graphs):
                raise UsageError(f"index {idx} out of range [0, {len(graphs)})")
            g = graphs[idx]
        else:
            g = generators.classical(fam, *(int(x) for x in p))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = [f"family {fam} {' '.join(p)}".rstrip()]
    if fam == "random":
        header.append(f"seed {args.seed}")
    with _open_out(args.output) as fh:
        write_edge_list(g, fh, header)
    return EXIT_OK


def _cmd_color(args) -> int:
    g = _load_graph(args.graph)
    stats = RunStats()
    try:
        if args.proper_only:
            coloring = vizing_color(g)
        else:
            coloring = color_distinguishing(g, args.r, stats=stats, check=args.check)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    except InfeasibleStep as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    with _open_out(args.output) as fh:
        write_coloring(coloring, fh)
    if args.stats and not args.proper_only:
        print(f"# cases {dict(sorted(stats.cases.items()))} reductions {stats.reductions} "
              f"bridged {stats.bridged_reductions} steps {stats.main_steps}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.coloring) as fh:
            coloring = read_coloring(fh)
        report = verify(g, coloring, args.r)
    except OSError as exc:
        raise UsageError(f"cannot read colouring file {args.coloring}: {exc}") from None
    except (GraphError, ColoringError) as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    search = exact_index_witness if args.variant == "proper" else exact_sr_witness
    try:
        res = search(g, args.r, args.kmax, node_limit=args.node_limit)
    except SearchLimitExceeded:
        print("timeout")
        return EXIT_FAIL
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if res is None:
        print(f"none <= {args.kmax}")
        return EXIT_FAIL
    print(res.value)
    if args.witness:
        with _open_out(args.witness) as fh:
            write_coloring(res.witness, fh)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    try:
        p = bound_params(args.delta, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"delta={p.delta} r={p.r} moore={p.moore} M={p.m_quot} K={p.k_val} palette_max={p.palette_max}")
    return EXIT_OK


def bench_rows(r: int, n_min: int, n_max: int, exact_nmax: int, node_limit: int, stats: RunStats):
    """Yield one row per corpus graph; failures are reported, not raised."""
    for gid, g in generators.corpus(n_min, n_max):
        params = bound_params(g.max_degree, r)
        try:
            coloring = color_distinguishing(g, r, stats=stats)
            report = verify(g, coloring, r)
            cmax = report.max_color if report.ok else "INVALID"
        except InfeasibleStep:
            cmax = "INFEASIBLE"
        exact = "-"
        if g.n <= exact_nmax:
            try:
                res = exact_index_witness(g, r, min(params.palette_max, 12), node_limit=node_limit)
                exact = "none" if res is None else res.value
            except SearchLimitExceeded:
                exact = "timeout"
        yield gid, g.n, g.m, g.max_degree, cmax, params.palette_max, exact


def targeted_case_counts(stats: RunStats) -> list[tuple[str, bool]]:
    """Run the final step on the hand-built states; returns (name, verified) pairs."""
    out = []
    for t in targeted_states():
        state = final_step_state(t.graph, t.r, t.root, t.color)
        coloring = finalize_root_pair(state, stats)
        out.append((t.name, verify(t.graph, coloring, t.r).ok))
    return out


def _cmd_bench(args) -> int:
    stats = RunStats()
    rows = list(bench_rows(args.r, args.nmin, args.nmax, args.exact_nmax, args.node_limit, stats))
    failures = [row for row in rows if not isinstance(row[4], int) or row[4] > row[5]]
    failures += [row for row in rows if isinstance(row[6], int) and isinstance(row[4], int) and row[6] > row[4]]
    with _open_out(args.output) as fh:
        fh.write(f"# bench r={args.r} n={args.nmin}..{args.nmax} exact_nmax={args.exact_nmax} "
                 f"node_limit={args.node_limit}\n")
        fh.write(f"# corpus: connected graphs, {generators.ENUMERATION_MODE}\n")
        fh.write(f"# final-step cases on the corpus: {dict(sorted(stats.cases.items()))}\n")
        missing = [c for c in range(1, 6) if not stats.cases[c]]
        if missing:
            fh.write(f"# cases unreached at this corpus size: {missing}\n")
        if args.targeted:
            extra = RunStats()
            results = targeted_case_counts(extra)
            failures += [name for name, ok in results if not ok]
            fh.write(f"# targeted constructions {[name for name, _ in results]}: "
                     f"{dict(sorted(extra.cases.items()))}\n")
            stats.merge(extra)
            still = [c for c in range(1, 6) if not stats.cases[c]]
            fh.write(f"# cases unreached after targeted constructions: {still or 'none'}\n")
        fh.write(f"# exchange fallback used: {stats.exchanges}\n")
        fh.write("graph_id\tn\tm\tdelta\tconstructive_max\tpalette_max\texact\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph in edge-list format")
    p.add_argument("family", choices=sorted(generators.CLASSICAL) + ["random", "debruijn", "connected"])
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("color", help="constructive r-distant sum distinguishing colouring")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--proper-only", action="store_true", help="only the Vizing colouring")
    p.add_argument("--check", action="store_true", help="re-check internal invariants every step")
    p.add_argument("--stats", action="store_true", help="print run counters to stderr")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a colouring")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-c", "--coloring", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exhaustive search for the least palette")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--variant", choices=["proper", "nonproper"], default="proper")
    p.add_argument("--witness")
    p.add_argument("--node-limit", type=int)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("bounds", help="print the budget quantities for Δ and r")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("bench", help="colour, verify and solve the small-graph corpus")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--exact-nmax", type=int, default=5)
    p.add_argument("--node-limit", type=int, default=200_000)
    p.add_argument("--no-targeted", dest="targeted", action="store_false",
                   help="skip the hand-built final-step states for the rare cases")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
