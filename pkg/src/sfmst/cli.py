"""Command-line entry point.

Subcommands: ``generate``, ``mst``, ``experiment``, ``verify``. Exit
codes: 0 ok, 1 I/O failure, 2 usage error, 3 disconnected input graph,
4 verification failure. Standard output is one ``key=value`` pair per
line so scripts can parse it; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .experiments import (
    ConfigError,
    ExperimentConfig,
    ExperimentError,
    efficiency_table,
    load_config,
    run_ensemble,
)
from .generate import (
    DisorderType,
    GeneratorError,
    GeneratorParams,
    assign_disorder,
    generate_preferential_attachment,
)
from .graph import FileFormatError, GraphError, format_number, read_graph, write_graph
from .mst import (
    DisconnectedGraphError,
    brute_force_mst,
    kruskal,
    prim,
    read_tree,
    verify_spanning_tree,
    write_tree,
)

__all__ = ["main", "console_entry"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_VERIFY = 4

BRUTE_FORCE_LIMIT = 10


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfmst",
        description="Minimum weight spanning trees of weighted scale-free networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a preferential-attachment graph")
    gen.add_argument("--nodes", type=int, required=True, help="number of nodes N")
    gen.add_argument("--m", type=int, default=2, help="edges attached per new node")
    gen.add_argument("--seed", type=int, required=True, help="RNG seed")
    gen.add_argument(
        "--disorder",
        choices=["none", "type1", "type2"],
        default="none",
        help="edge-weight model (default: unit weights)",
    )
    gen.add_argument("--out", required=True, help="output edge-list file")

    mst = sub.add_parser("mst", help="compute a minimum weight spanning tree")
    mst.add_argument("--in", dest="infile", required=True, help="input edge-list file")
    mst.add_argument("--algo", choices=["kruskal", "prim"], default="kruskal")
    mst.add_argument("--out", required=True, help="output tree file")

    exp = sub.add_parser("experiment", help="run a seed-reproducible ensemble")
    exp.add_argument("--config", help="key=value config file (overrides inline flags)")
    exp.add_argument("--sizes", help="comma-separated graph sizes")
    exp.add_argument("--m", type=int, default=2)
    exp.add_argument("--disorder", choices=["none", "type1", "type2"], default="none")
    exp.add_argument("--realizations", type=int, default=100)
    exp.add_argument("--seed", type=int, default=1)
    exp.add_argument("--out", help="output directory")
    exp.add_argument(
        "--threads",
        type=int,
        default=0,
        help="worker processes (default: machine parallelism)",
    )

    ver = sub.add_parser("verify", help="check a tree file against its graph")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--tree", required=True)
    return parser


def _cmd_generate(args) -> int:
    params = GeneratorParams(args.nodes, args.m, args.seed)
    g = generate_preferential_attachment(params)
    if args.disorder != "none":
        g = assign_disorder(g, DisorderType(args.disorder))
    header = f"generator=pa n={args.nodes} m={args.m} seed={args.seed} disorder={args.disorder}"
    write_graph(g, args.out, extra_headers=[header])
    print(f"out={args.out}")
    print(f"nodes={g.n_nodes}")
    print(f"edges={g.n_edges}")
    return EXIT_OK


def _cmd_mst(args) -> int:
    g = read_graph(args.infile)
    tree = kruskal(g) if args.algo == "kruskal" else prim(g)
    write_tree(tree, g, args.out)
    print(f"weight={format_number(tree.total_weight)}")
    print(f"edges={len(tree.edges)}")
    print(f"out={args.out}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    threads = args.threads if args.threads > 0 else None
    if args.config:
        cfg, cfg_threads = load_config(args.config)
        threads = threads or cfg_threads
        if cfg.output_dir is None and args.out:
            cfg = ExperimentConfig(
                cfg.sizes, cfg.m, cfg.disorder, cfg.realizations, cfg.base_seed, Path(args.out)
            )
    else:
        if not args.sizes or not args.out:
            print("error: --sizes and --out are required without --config", file=sys.stderr)
            return EXIT_USAGE
        try:
            sizes = tuple(int(s) for s in args.sizes.split(",") if s.strip())
        except ValueError:
            print(f"error: bad --sizes {args.sizes!r}", file=sys.stderr)
            return EXIT_USAGE
        disorder = None if args.disorder == "none" else DisorderType(args.disorder)
        cfg = ExperimentConfig(
            sizes=sizes,
            m=args.m,
            disorder=disorder,
            realizations=args.realizations,
            base_seed=args.seed,
            output_dir=Path(args.out),
        )
    if cfg.output_dir is None:
        print("error: config gives no output directory", file=sys.stderr)
        return EXIT_USAGE
    n_jobs = threads or os.cpu_count() or 1
    result = run_ensemble(cfg, n_jobs=n_jobs)
    print(f"output_dir={cfg.output_dir}")
    print(f"disorder={cfg.disorder_tag}")
    for row in efficiency_table(result):
        print(
            f"n={row.n} mean_alpha={row.mean_alpha:.6g} "
            f"std_alpha={row.std_alpha:.3g} realizations={row.realizations}"
        )
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = read_graph(args.graph)
    tree = read_tree(args.tree)
    check = verify_spanning_tree(g, tree)
    if not check:
        print("verified=false")
        print(f"reason={check.reason}")
        return EXIT_VERIFY
    if g.n_nodes <= BRUTE_FORCE_LIMIT:
        best, _ = brute_force_mst(g)
        if tree.total_weight > best + 1e-9 * max(1.0, abs(best)):
            print("verified=false")
            print("reason=not-minimum")
            print(f"minimum={format_number(best)}")
            print(f"tree={format_number(tree.total_weight)}")
            return EXIT_VERIFY
        print("verified=true")
        print("mode=optimal")
    else:
        print("verified=true")
        print("mode=structural")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    handlers = {
        "generate": _cmd_generate,
        "mst": _cmd_mst,
        "experiment": _cmd_experiment,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (GeneratorError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileFormatError, FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GraphError, ExperimentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
