"""Command-line entry point: solve, bench, gen, bound subcommands."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .bench import RunConfig, render_report, run_benchmark
from .bounds import held_karp_bound
from .construction import ExponentCombo, default_grid, grid_search
from .errors import TourcraftError
from .instance import (build_distance_matrix, city_stats,
                       generate_random_euclidean)
from .svgplot import plot_tour_svg
from .tsplib import default_optima, load_optima, parse_tsplib, write_tour


def _parse_grid(spec: Optional[str]) -> List[ExponentCombo]:
    """--grid accepts either a value set '0,0.5,1' (full Cartesian grid) or
    explicit combos 'a:b:g:d:e;a:b:g:d:e;...'."""
    if spec is None:
        return default_grid()
    if ";" in spec or ":" in spec:
        combos = []
        for part in spec.split(";"):
            vals = [float(v) for v in part.split(":")]
            if len(vals) != 5:
                raise TourcraftError(f"combo {part!r} needs 5 exponents")
            combos.append(ExponentCombo(*vals))
        return combos
    return default_grid([float(v) for v in spec.split(",")])


def _load(path: str):
    instance = parse_tsplib(Path(path).read_text())
    matrix = build_distance_matrix(instance)
    return instance, matrix, city_stats(matrix)


def _cmd_solve(args: argparse.Namespace) -> int:
    instance, matrix, stats = _load(args.file)
    result = grid_search(matrix, stats, _parse_grid(args.grid))
    c = result.combo
    print(f"{instance.name}: length {result.tour.length:g} with exponents "
          f"alpha={c.alpha:g} beta={c.beta:g} gamma={c.gamma:g} "
          f"delta={c.delta:g} epsilon={c.epsilon:g}")
    if args.out:
        Path(args.out).write_text(
            write_tour(result.tour, instance_name=instance.name))
    if args.plot:
        Path(args.plot).write_text(plot_tour_svg(instance, result.tour.order))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    files: List[Path] = []
    if args.tsplib:
        files = sorted(Path(args.tsplib).glob("*.tsp"))
        if not files:
            raise TourcraftError(f"no .tsp files under {args.tsplib}")
    config = RunConfig(
        files=files,
        methods=tuple(args.methods.split(",")),
        grid=_parse_grid(args.grid),
        optima=(load_optima(Path(args.optima).read_text())
                if args.optima else default_optima()),
        bound_iters=args.iters,
        output_format=args.format,
    )
    if args.random:
        parts = args.random.split(",")
        if len(parts) != 3:
            raise TourcraftError("--random expects n,count,first-seed")
        n, count, seed0 = (int(p) for p in parts)
        config.random_n = n
        config.random_count = count
        config.random_seeds = list(range(seed0, seed0 + count))
        print(f"random instances: n={n}, seeds {config.random_seeds}",
              file=sys.stderr)
    report = render_report(run_benchmark(config), args.format)
    if args.out:
        Path(args.out).write_text(report)
    else:
        print(report, end="")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    instance = generate_random_euclidean(args.n, args.seed, args.box)
    lines = [f"NAME: {instance.name}",
             "TYPE: TSP",
             f"DIMENSION: {instance.n}",
             "EDGE_WEIGHT_TYPE: EUC_2D",
             "NODE_COORD_SECTION"]
    lines += [f"{i + 1} {x:.6f} {y:.6f}"
              for i, (x, y) in enumerate(instance.coords)]
    lines.append("EOF")
    Path(args.out).write_text("\n".join(lines) + "\n")
    print(f"wrote {instance.name} to {args.out}")
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    instance, matrix, _ = _load(args.file)
    result = held_karp_bound(matrix, max_iters=args.iters)
    print(f"{instance.name}: held-karp ascent bound {result.bound:.2f} "
          f"({result.iterations_used} iterations)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourcraft",
        description="Deterministic TSP tour construction and benchmarking")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="grid-search the priority construction")
    p.add_argument("file")
    p.add_argument("--grid", help="value set '0,0.5,1' or combos 'a:b:g:d:e;...'")
    p.add_argument("--out", help="write best tour in TSPLIB .tour format")
    p.add_argument("--plot", help="write an SVG plot of the best tour")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bench", help="run methods over instance sets")
    p.add_argument("--tsplib", help="directory of .tsp files")
    p.add_argument("--optima", help="optima fixture file (default: bundled)")
    p.add_argument("--random", help="generated instances as 'n,count,first-seed'")
    p.add_argument("--methods", default="proposed",
                   help="comma list of proposed,nn,greedy,cw")
    p.add_argument("--grid")
    p.add_argument("--iters", type=int, default=1000,
                   help="lower-bound ascent iterations")
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("gen", help="write a random Euclidean instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--box", type=float, default=1_000_000.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bound", help="print the Held-Karp ascent bound")
    p.add_argument("file")
    p.add_argument("--iters", type=int, default=1000)
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TourcraftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
