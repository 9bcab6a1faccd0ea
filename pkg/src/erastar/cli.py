"""Command-line entry point: ``erastar {gen-map,solve,bench,summarize,plot}``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from .bench.harness import OUTPUT_DIR_ENV, PLANNERS, BenchConfig, run_benchmark, run_planner
from .bench.manifest import MapSource, desk_corpus, parse_gen_spec, read_manifest
from .bench.plots import emit_plots
from .bench.summary import format_summary, summarize, write_summary_csv
from .grid import CornerRule, generate_random_map, load_map, save_map
from .penalty import default_tables, format_tables

log = logging.getLogger("erastar")


def _cell(text: str):
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'row,col', got {text!r}") from None
    return i, j


def _corner(text: str) -> CornerRule:
    try:
        return CornerRule(text)
    except ValueError:
        raise argparse.ArgumentTypeError("corner rule must be 'allowed' or 'forbidden'") from None


def _planners(text: str) -> tuple[str, ...]:
    names = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [p for p in names if p not in PLANNERS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"planners must be from {', '.join(PLANNERS)}")
    return names


def _out_dir(arg) -> Path:
    if arg is not None:
        return Path(arg)
    return Path(os.environ.get(OUTPUT_DIR_ENV, "bench_out"))


def cmd_gen_map(args) -> int:
    grid = generate_random_map(args.width, args.height, args.ratio, args.rect_min,
                               args.rect_max, args.seed)
    save_map(grid, args.output)
    print(f"wrote {args.output}: {grid.height}x{grid.width}, "
          f"{grid.n_obstacles / (grid.width * grid.height):.4f} obstacle fraction")
    return 0


def cmd_solve(args) -> int:
    grid = load_map(args.map, args.corner)
    if args.algo == "era":
        default_tables()
    t0 = time.perf_counter()
    res = run_planner(args.algo, grid, args.start, args.goal, args.exact)
    elapsed = time.perf_counter() - t0
    if res.fail:
        print("length inf")
    else:
        print(f"length {res.length:.9f}")
        if args.exact:
            print(f"exact {res.exact_length}")
    print(f"time {elapsed:.6f}")
    print(f"expansions {res.nb_iter}")
    if args.dump_path and not res.fail:
        print("path " + " ".join(f"{c.i},{c.j}" for c in res.path))
    return 0 if not res.fail else 3


def cmd_bench(args) -> int:
    sources: list[MapSource] = []
    for m in args.manifest or []:
        sources += read_manifest(m)
    for m in args.map or []:
        p = Path(m)
        sources.append(MapSource(p.stem, args.group, p))
    for spec in args.gen or []:
        sources.append(parse_gen_spec(spec, args.group))
    if args.desk:
        sources += desk_corpus()
    if not sources:
        raise SystemExit("bench: no maps given (use --manifest, --map, --gen or --desk)")
    out = _out_dir(args.out)
    cfg = BenchConfig(
        maps=sources, runs_per_map=args.runs, planners=args.planners, seed=args.seed,
        exact=args.exact, corner_rule=args.corner, output_dir=out, repeats=args.repeats,
        time_cap=args.time_cap, jobs=args.jobs,
    )
    records = run_benchmark(cfg)
    print(f"{len(records)} runs on {len(sources)} maps -> {out / 'runs.csv'}")
    return 0


def cmd_summarize(args) -> int:
    tables = summarize(Path(args.records))
    text = format_summary(tables)
    out = Path(args.out) if args.out else Path(args.records).parent
    out.mkdir(parents=True, exist_ok=True)
    write_summary_csv(tables, out / "summary.csv")
    (out / "summary.txt").write_text(text)
    print(text, end="")
    return 0


def cmd_plot(args) -> int:
    out = Path(args.out) if args.out else Path(args.records).parent
    for path in emit_plots(Path(args.records), out):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="erastar", description=__doc__)
    ap.add_argument("--dump-tables", action="store_true",
                    help="print the 28 penalty lookup matrices and exit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command")

    g = sub.add_parser("gen-map", help="write a random rectangle-obstacle map")
    g.add_argument("--width", type=int, required=True)
    g.add_argument("--height", type=int, required=True)
    g.add_argument("--ratio", type=float, required=True, help="target obstacle fraction")
    g.add_argument("--rect-min", type=int, default=2)
    g.add_argument("--rect-max", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen_map)

    s = sub.add_parser("solve", help="solve one instance with one planner")
    s.add_argument("--algo", choices=PLANNERS, default="era")
    s.add_argument("--map", required=True)
    s.add_argument("--start", type=_cell, required=True, help="row,col")
    s.add_argument("--goal", type=_cell, required=True, help="row,col")
    s.add_argument("--exact", action="store_true", help="exact a+b*sqrt2 arithmetic")
    s.add_argument("--corner", type=_corner, default=CornerRule.CUT_ALLOWED,
                   help="corner cutting: allowed (default) or forbidden")
    s.add_argument("--dump-path", action="store_true")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="run the benchmark protocol")
    b.add_argument("--manifest", action="append", help="corpus manifest (repeatable)")
    b.add_argument("--map", action="append", help=".map file (repeatable)")
    b.add_argument("--gen", action="append",
                   help="generated map, e.g. width=100,height=100,ratio=0.2,seed=1")
    b.add_argument("--desk", action="store_true", help="add the 30-map 100x100 desk corpus")
    b.add_argument("--group", default="default", help="group for --map/--gen maps")
    b.add_argument("--runs", type=int, default=30, help="runs per map")
    b.add_argument("--planners", type=_planners, default=PLANNERS)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--exact", action="store_true")
    b.add_argument("--corner", type=_corner, default=CornerRule.CUT_ALLOWED)
    b.add_argument("--repeats", type=int, default=3, help="timing repetitions (median)")
    b.add_argument("--time-cap", type=float, default=None, help="seconds per planner call")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", default=None, help=f"output directory (env {OUTPUT_DIR_ENV})")
    b.set_defaults(func=cmd_bench)

    m = sub.add_parser("summarize", help="aggregate a runs CSV into tables")
    m.add_argument("records")
    m.add_argument("--out", default=None)
    m.set_defaults(func=cmd_summarize)

    p = sub.add_parser("plot", help="render SVG figures from a runs CSV")
    p.add_argument("records")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.dump_tables:
        print(format_tables(default_tables()))
        return 0
    if args.command is None:
        ap.print_help(sys.stderr)
        return 2
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"erastar: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
