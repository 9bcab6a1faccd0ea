"""Run the desk-scale benchmark (30 seeded 100x100 maps x 30 runs), then
write the summary tables and SVG figures next to the run records.

    python scripts/desk_scale.py --out results/desk --jobs 4
"""

import argparse
import logging
import time
from pathlib import Path

from erastar.bench.harness import BenchConfig, run_benchmark
from erastar.bench.manifest import desk_corpus, read_manifest
from erastar.bench.plots import emit_plots
from erastar.bench.summary import format_summary, summarize, write_summary_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/desk")
    ap.add_argument("--manifest", default=None, help="use a manifest instead of the desk corpus")
    ap.add_argument("--runs", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--exact", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    out = Path(args.out)
    maps = read_manifest(args.manifest) if args.manifest else desk_corpus()
    cfg = BenchConfig(maps, runs_per_map=args.runs, seed=args.seed, repeats=args.repeats,
                      jobs=args.jobs, exact=args.exact, output_dir=out)
    t0 = time.perf_counter()
    records = run_benchmark(cfg)
    print(f"{len(records)} runs in {time.perf_counter() - t0:.1f}s")

    tables = summarize(records)
    write_summary_csv(tables, out / "summary.csv")
    text = format_summary(tables)
    (out / "summary.txt").write_text(text)
    print(text)
    for p in emit_plots(records, out):
        print(p)


if __name__ == "__main__":
    main()
