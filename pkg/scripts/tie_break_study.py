"""Path quality and effort of ERA* under FIFO and LIFO tie-breaking, in
lattice mode, on the desk corpus. Also reports A*_t expansions so the
expansion-count comparison can be reproduced without timing noise.

    python scripts/tie_break_study.py --seeds 0 1 2
"""

import argparse
import statistics

from erastar.baselines import astar_t, dijkstra
from erastar.bench.harness import sample_endpoints
from erastar.bench.manifest import desk_corpus
from erastar.grid import derive_seed
from erastar.search import era_star


def study(seed, runs):
    maps = [src.load() for src in desk_corpus()]
    rows = {t: {"hits": 0, "extra": [], "exp": []} for t in ("fifo", "lifo")}
    astar_exp = []
    n = 0
    for k, grid in enumerate(maps):
        for s, g in sample_endpoints(grid, runs, derive_seed(seed, k)):
            opt = dijkstra(grid, s, g, exact=True)
            if opt.fail:
                continue
            n += 1
            astar_exp.append(astar_t(grid, s, g, exact=True).nb_iter)
            for tie, acc in rows.items():
                res = era_star(grid, s, g, exact=True, tie_break=tie)
                acc["exp"].append(res.nb_iter)
                if res.exact_length == opt.exact_length:
                    acc["hits"] += 1
                else:
                    acc["extra"].append(100 * (res.length - opt.length) / opt.length)
    print(f"seed {seed}: {n} reachable runs, A*_t mean expansions {statistics.fmean(astar_exp):.0f}")
    for tie, acc in rows.items():
        extra = acc["extra"] or [0.0]
        le = sum(e <= a for e, a in zip(acc["exp"], astar_exp))
        print(f"  {tie}: optimal {100 * acc['hits'] / n:.1f}%  extra mean {statistics.fmean(extra):.2f}%"
              f"  max {max(extra):.2f}%  >12%: {sum(x > 12 for x in extra)}"
              f"  mean expansions {statistics.fmean(acc['exp']):.0f}  <= A*_t on {le}/{n}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--runs", type=int, default=30)
    args = ap.parse_args()
    for seed in args.seeds:
        study(seed, args.runs)


if __name__ == "__main__":
    main()
