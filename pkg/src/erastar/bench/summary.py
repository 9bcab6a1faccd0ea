"""Aggregate run records into per-group tables: optimality rate, mean path
cost, extra length over optimal, execution time, time ratios and
speed ranks."""

from __future__ import annotations

import csv
import itertools
import math
import statistics
from dataclasses import dataclass, field
from pathlib import Path

from .harness import RunRecord, read_records

ALL_GROUP = "All"
# lengths that differ by less than this are the same lattice value
OPTIMAL_RTOL = 1e-9


class EmptyInput(ValueError):
    pass


def is_optimal(length: float, optimal: float) -> bool:
    return abs(length - optimal) <= OPTIMAL_RTOL * max(1.0, optimal)


@dataclass
class PlannerSummary:
    planner: str
    n_success: int = 0
    mean_cost: float | None = None
    optimality_rate: float | None = None
    extra_mean: float | None = None
    extra_std: float | None = None
    extra_max: float | None = None
    n_suboptimal: int = 0
    mean_time: float | None = None
    median_time: float | None = None
    mean_expansions: float | None = None
    ranks: dict[int, float] = field(default_factory=dict)


@dataclass
class SummaryTable:
    group: str
    n_runs: int
    n_reachable: int
    planners: dict[str, PlannerSummary]
    time_ratios: dict[tuple[str, str], float]


def _mean(xs):
    return statistics.fmean(xs) if xs else None


def _ranked(planners):
    # the oracle is not a contender unless it is alone
    contenders = [p for p in planners if p != "dijkstra"]
    return contenders if len(contenders) >= 2 else list(planners)


def summarize_group(group: str, records: list[RunRecord], planners) -> SummaryTable:
    reachable = [r for r in records if r.reachable]
    with_opt = [r for r in reachable if not math.isinf(r.optimal)]
    table = SummaryTable(group, len(records), len(reachable), {}, {})
    for p in planners:
        s = PlannerSummary(p)
        ok = [r for r in reachable if not r.outcomes[p].fail]
        s.n_success = len(ok)
        s.mean_cost = _mean([r.outcomes[p].length for r in ok])
        if with_opt:
            hits = 0
            extra = []
            for r in with_opt:
                o = r.outcomes[p]
                if o.fail:
                    continue
                if is_optimal(o.length, r.optimal):
                    hits += 1
                else:
                    extra.append(100.0 * (o.length - r.optimal) / r.optimal)
            s.optimality_rate = 100.0 * hits / len(with_opt)
            s.n_suboptimal = len(extra)
            if extra:
                s.extra_mean = statistics.fmean(extra)
                s.extra_std = statistics.pstdev(extra)
                s.extra_max = max(extra)
        timed = [r.outcomes[p].time for r in records if not r.outcomes[p].timeout]
        s.mean_time = _mean(timed)
        s.median_time = statistics.median(timed) if timed else None
        s.mean_expansions = _mean([r.outcomes[p].expansions for r in ok])
        table.planners[p] = s

    for a, b in itertools.permutations(planners, 2):
        ta, tb = table.planners[a].mean_time, table.planners[b].mean_time
        if ta is not None and tb:
            table.time_ratios[(a, b)] = ta / tb

    contenders = _ranked(planners)
    counts = {p: [0] * len(contenders) for p in contenders}
    for r in records:
        order = sorted(contenders, key=lambda p: (r.outcomes[p].time, contenders.index(p)))
        for rank, p in enumerate(order):
            counts[p][rank] += 1
    if records:
        for p in contenders:
            table.planners[p].ranks = {
                k + 1: 100.0 * c / len(records) for k, c in enumerate(counts[p])
            }
    return table


def summarize(records: list[RunRecord] | str | Path) -> list[SummaryTable]:
    """One table per group (in first-seen order) followed by ``All``."""
    if not isinstance(records, list):
        records = read_records(records)
    if not records:
        raise EmptyInput("no run records")
    planners = list(records[0].outcomes)
    groups: dict[str, list[RunRecord]] = {}
    for r in records:
        groups.setdefault(r.group, []).append(r)
    tables = [summarize_group(g, rs, planners) for g, rs in groups.items()]
    tables.append(summarize_group(ALL_GROUP, records, planners))
    return tables


# --------------------------------------------------------------------------
# Output

METRICS = ("n_success", "mean_cost", "optimality_rate", "extra_mean", "extra_std",
           "extra_max", "n_suboptimal", "mean_time", "median_time", "mean_expansions")


def write_summary_csv(tables: list[SummaryTable], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["group", "planner", "metric", "value"])
        for t in tables:
            w.writerow([t.group, "", "n_runs", t.n_runs])
            w.writerow([t.group, "", "n_reachable", t.n_reachable])
            for p, s in t.planners.items():
                for m in METRICS:
                    v = getattr(s, m)
                    w.writerow([t.group, p, m, "n/a" if v is None else v])
                for rank, pct in s.ranks.items():
                    w.writerow([t.group, p, f"rank{rank}_pct", pct])
            for (a, b), ratio in t.time_ratios.items():
                w.writerow([t.group, f"{a}/{b}", "time_ratio", ratio])


def _cell(v, fmt):
    return "n/a" if v is None else fmt.format(v)


def _grid_table(title, tables, planners, getter, fmt):
    head = ["Algorithm"] + [t.group for t in tables]
    rows = [[p] + [_cell(getter(t.planners[p]), fmt) for t in tables] for p in planners]
    return _render(title, head, rows)


def _render(title, head, rows):
    widths = [max(len(str(r[k])) for r in [head] + rows) for k in range(len(head))]
    line = "-+-".join("-" * w for w in widths)
    out = [title, line]
    out.append(" | ".join(str(h).ljust(w) for h, w in zip(head, widths)))
    out.append(line)
    for r in rows:
        out.append(" | ".join(str(c).ljust(w) for c, w in zip(r, widths)))
    out.append(line)
    return "\n".join(out)


def format_summary(tables: list[SummaryTable]) -> str:
    planners = list(tables[0].planners)
    overall = tables[-1]
    parts = [
        _grid_table("Optimal paths (% of runs where a path exists)", tables, planners,
                    lambda s: s.optimality_rate, "{:.1f}%"),
        _grid_table("Average path cost (cells)", tables, planners,
                    lambda s: s.mean_cost, "{:.1f}"),
        _render(
            "Extra length over optimal, non-optimal paths, all groups",
            ["Algorithm", "Mean", "Std", "Max", "n"],
            [[p, _cell(s.extra_mean, "{:.1f}%"), _cell(s.extra_std, "{:.1f}%"),
              _cell(s.extra_max, "{:.1f}%"), s.n_suboptimal]
             for p, s in overall.planners.items()],
        ),
        _grid_table("Average execution time (ms)", tables, planners,
                    lambda s: None if s.mean_time is None else 1e3 * s.mean_time, "{:.3f}"),
    ]
    ranked = [p for p, s in overall.planners.items() if s.ranks]
    if ranked:
        n = len(ranked)
        parts.append(_render(
            "Runs per speed rank (%)",
            ["Rank"] + [str(k) for k in range(1, n + 1)],
            [[p] + [f"{overall.planners[p].ranks.get(k, 0.0):.1f}%" for k in range(1, n + 1)]
             for p in ranked],
        ))
    if overall.time_ratios:
        parts.append(_render(
            "Mean time ratios",
            ["Ratio"] + [t.group for t in tables],
            [[f"{a}/{b}"] + [_cell(t.time_ratios.get((a, b)), "{:.2f}x") for t in tables]
             for (a, b) in overall.time_ratios],
        ))
    return "\n\n".join(parts) + "\n"
