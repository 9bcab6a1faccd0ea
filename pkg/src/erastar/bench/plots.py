"""SVG figures from run records: time-ratio histogram, cost/time scatter per
group, box plots of time per unit optimal length, and mean/std rectangles
in cost/time space."""

from __future__ import annotations

import math
import re
import statistics
from pathlib import Path

from .harness import RunRecord, read_records
from .summary import EmptyInput
from .svg import Chart, color


def _load(records) -> list[RunRecord]:
    if not isinstance(records, list):
        records = read_records(records)
    if not records:
        raise EmptyInput("no run records")
    return records


def _ratio_pair(planners):
    if "ra_wot" in planners and "era" in planners:
        return "ra_wot", "era"
    if len(planners) >= 2:
        return planners[1], planners[0]
    return None


def histogram_bins(values: list[float], n_bins: int = 20) -> tuple[list[float], list[int]]:
    lo, hi = min(values), max(values)
    if hi - lo < 1e-12:
        return [lo - 0.5, lo + 0.5], [len(values)]
    width = (hi - lo) / n_bins
    edges = [lo + k * width for k in range(n_bins + 1)]
    counts = [0] * n_bins
    for v in values:
        k = min(int((v - lo) / width), n_bins - 1)
        counts[k] += 1
    return edges, counts


def time_ratio_histogram(records: list[RunRecord]) -> str | None:
    planners = list(records[0].outcomes)
    pair = _ratio_pair(planners)
    if pair is None:
        return None
    num, den = pair
    ratios = [r.outcomes[num].time / r.outcomes[den].time
              for r in records if r.outcomes[den].time > 0]
    if not ratios:
        return None
    edges, counts = histogram_bins(ratios)
    chart = Chart(f"Execution time ratio {num} / {den}", "time ratio", "runs",
                  (edges[0], edges[-1]), (0, max(counts) * 1.1))
    for a, b, c in zip(edges, edges[1:], counts):
        if c:
            chart.rect(a, 0, b, c, "#1f77b4", opacity=0.6, stroke="#124a70")
    if edges[0] < 1 < edges[-1]:
        chart.line(1, 0, 1, max(counts) * 1.1, stroke="#d62728")
    return chart.render()


def cost_time_scatter(records: list[RunRecord], group: str) -> str:
    planners = [p for p in records[0].outcomes if p != "dijkstra"] or list(records[0].outcomes)
    pts = {p: [(r.outcomes[p].length, 1e3 * r.outcomes[p].time)
               for r in records if not r.outcomes[p].fail] for p in planners}
    xs = [x for v in pts.values() for x, _ in v] or [0.0]
    ys = [y for v in pts.values() for _, y in v] or [0.0]
    pad = 0.05 * (max(xs) - min(xs) or 1.0)
    chart = Chart(f"Cost vs time: {group}", "path cost (cells)", "time (ms)",
                  (min(xs) - pad, max(xs) + pad), (0, max(ys) * 1.1 or 1.0))
    for k, p in enumerate(planners):
        c = color(p, k)
        for x, y in pts[p]:
            chart.point(x, y, c)
        chart.add_legend(p, c)
    return chart.render()


def _quartiles(xs):
    xs = sorted(xs)
    if len(xs) == 1:
        return xs[0], xs[0], xs[0]
    q = statistics.quantiles(xs, n=4, method="inclusive")
    return q[0], q[1], q[2]


def time_per_length_boxplot(records: list[RunRecord], planners=None) -> str:
    planners = planners or [p for p in records[0].outcomes if p != "dijkstra"]
    data = {}
    for p in planners:
        vals = []
        for r in records:
            ref = r.optimal if not math.isinf(r.optimal) else r.outcomes[p].length
            if not r.outcomes[p].fail and ref > 0:
                vals.append(1e3 * r.outcomes[p].time / ref)
        data[p] = vals
    top = max((max(v) for v in data.values() if v), default=1.0)
    chart = Chart("Execution time / optimal path length", "", "ms per cell",
                  (0, len(planners)), (0, top * 1.1))
    for k, p in enumerate(planners):
        vals = data[p]
        if not vals:
            continue
        c = color(p, k)
        q1, med, q3 = _quartiles(vals)
        iqr = q3 - q1
        lo = min(v for v in vals if v >= q1 - 1.5 * iqr)
        hi = max(v for v in vals if v <= q3 + 1.5 * iqr)
        x0, x1, xm = k + 0.25, k + 0.75, k + 0.5
        chart.rect(x0, q1, x1, q3, c)
        chart.line(x0, med, x1, med, stroke=c, width=2)
        chart.line(xm, q3, xm, hi, stroke=c)
        chart.line(xm, q1, xm, lo, stroke=c)
        chart.line(x0 + 0.1, hi, x1 - 0.1, hi, stroke=c)
        chart.line(x0 + 0.1, lo, x1 - 0.1, lo, stroke=c)
        for v in vals:
            if v < lo or v > hi:
                chart.point(xm, v, c, r=2)
    return chart.render(x_ticks=[k + 0.5 for k in range(len(planners))],
                        x_tick_labels=planners)


def cost_time_rectangles(records: list[RunRecord]) -> str:
    planners = [p for p in records[0].outcomes if p != "dijkstra"] or list(records[0].outcomes)
    stats = {}
    for p in planners:
        ok = [r.outcomes[p] for r in records if not r.outcomes[p].fail]
        if not ok:
            continue
        cost = [o.length for o in ok]
        t = [1e3 * o.time for o in ok]
        stats[p] = (statistics.fmean(cost), statistics.pstdev(cost),
                    statistics.fmean(t), statistics.pstdev(t))
    xs = [m - s for m, s, _, _ in stats.values()] + [m + s for m, s, _, _ in stats.values()]
    ys = [m + s for _, _, m, s in stats.values()]
    x_lo, x_hi = (min(xs), max(xs)) if xs else (0.0, 1.0)
    pad = 0.1 * (x_hi - x_lo or 1.0)
    chart = Chart("Cost / time: mean (star) and standard deviation (box)",
                  "path cost (cells)", "time (ms)",
                  (x_lo - pad, x_hi + pad), (0, (max(ys) if ys else 1.0) * 1.15))
    for k, (p, (mc, sc, mt, st)) in enumerate(stats.items()):
        c = color(p, k)
        chart.rect(mc - sc, max(mt - st, 0.0), mc + sc, mt + st, c, opacity=0.2)
        chart.star(mc, mt, c)
        chart.add_legend(p, c)
    return chart.render()


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name)


def emit_plots(records, out_dir) -> list[Path]:
    records = _load(records)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name, svg):
        if svg is None:
            return
        path = out / name
        path.write_text(svg)
        written.append(path)

    put("time_ratio_hist.svg", time_ratio_histogram(records))
    groups: dict[str, list[RunRecord]] = {}
    for r in records:
        groups.setdefault(r.group, []).append(r)
    for g, rs in groups.items():
        put(f"scatter_{_slug(g)}.svg", cost_time_scatter(rs, g))
    put("box_time_per_length.svg", time_per_length_boxplot(records))
    if "era" in records[0].outcomes and "ra_wot" in records[0].outcomes:
        put("box_time_per_length_era_ra.svg",
            time_per_length_boxplot(records, ["ra_wot", "era"]))
    put("cost_time_rectangles.svg", cost_time_rectangles(records))
    return written
