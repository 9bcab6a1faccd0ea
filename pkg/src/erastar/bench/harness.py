"""Benchmark runs: seeded endpoint sampling, timed planner calls, CSV I/O."""

from __future__ import annotations

import csv
import logging
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ..baselines import astar_t, dijkstra, ra_star_wot
from ..grid import Cell, CornerRule, GridMap, SplitMix64, derive_seed
from ..penalty import default_tables
from ..result import PathResult
from ..search import era_star
from .manifest import MapSource

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
PLANNERS = ("era", "ra_wot", "astar_t", "dijkstra")
OUTPUT_DIR_ENV = "ERASTAR_OUTPUT_DIR"


def run_planner(name: str, grid: GridMap, start, goal, exact: bool = False) -> PathResult:
    if name == "era":
        return era_star(grid, start, goal, default_tables(), exact)
    if name == "ra_wot":
        return ra_star_wot(grid, start, goal, exact)
    if name == "astar_t":
        return astar_t(grid, start, goal, exact)
    if name == "dijkstra":
        return dijkstra(grid, start, goal, exact)
    raise ValueError(f"unknown planner {name!r}; choose from {', '.join(PLANNERS)}")


@dataclass
class BenchConfig:
    maps: list[MapSource]
    runs_per_map: int = 30
    planners: tuple[str, ...] = PLANNERS
    seed: int = 0
    exact: bool = False
    corner_rule: CornerRule = CornerRule.CUT_ALLOWED
    output_dir: Path | None = None
    repeats: int = 3
    time_cap: float | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.runs_per_map < 1:
            raise ValueError("runs_per_map must be >= 1")
        if not self.planners:
            raise ValueError("select at least one planner")
        bad = set(self.planners) - set(PLANNERS)
        if bad:
            raise ValueError(f"unknown planners {sorted(bad)}")
        # canonical order keeps CSV columns stable
        self.planners = tuple(p for p in PLANNERS if p in self.planners)
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")


@dataclass
class Outcome:
    length: float
    time: float
    expansions: int
    fail: bool
    timeout: bool = False


@dataclass
class RunRecord:
    map_id: str
    group: str
    run: int
    start: Cell
    goal: Cell
    outcomes: dict[str, Outcome] = field(default_factory=dict)
    optimal: float = math.inf

    @property
    def reachable(self) -> bool:
        # every planner here is complete, so any success proves a path exists
        return not math.isinf(self.optimal) or any(
            not o.fail for o in self.outcomes.values()
        )


def sample_endpoints(grid: GridMap, n_runs: int, seed: int) -> list[tuple[Cell, Cell]]:
    """Distinct free start/goal pairs drawn uniformly with :class:`SplitMix64`."""
    cells = grid.free_cells()
    if len(cells) < 2:
        raise ValueError("map has fewer than two free cells")
    rng = SplitMix64(seed)
    pairs = []
    for _ in range(n_runs):
        s = cells[rng.below(len(cells))]
        g = s
        while g == s:
            g = cells[rng.below(len(cells))]
        pairs.append((s, g))
    return pairs


def _timed(name, grid, s, g, exact, repeats, cap):
    times = []
    res = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = run_planner(name, grid, s, g, exact)
        times.append(time.perf_counter() - t0)
        if cap is not None and times[0] > cap:
            return Outcome(math.inf, times[0], res.nb_iter, True, True)
    return Outcome(res.length, statistics.median(times), res.nb_iter, res.fail)


def _run_map(args) -> list[RunRecord]:
    index, source, cfg = args
    try:
        grid = source.load(cfg.corner_rule)
        pairs = sample_endpoints(grid, cfg.runs_per_map, derive_seed(cfg.seed, index))
    except Exception as exc:  # noqa: BLE001 - reported and skipped
        log.error("skipping map %s: %s", source.map_id, exc)
        return []
    default_tables()
    records = []
    for run, (s, g) in enumerate(pairs):
        rec = RunRecord(source.map_id, source.group, run, s, g)
        for name in cfg.planners:
            rec.outcomes[name] = _timed(name, grid, s, g, cfg.exact, cfg.repeats, cfg.time_cap)
        if "dijkstra" in rec.outcomes:
            rec.optimal = rec.outcomes["dijkstra"].length
        elif "astar_t" in rec.outcomes:
            rec.optimal = rec.outcomes["astar_t"].length
        records.append(rec)
    return records


def run_benchmark(cfg: BenchConfig, csv_path: Path | str | None = None) -> list[RunRecord]:
    """Run every selected planner on ``runs_per_map`` seeded endpoint pairs
    per map. Records are written to ``csv_path`` (default
    ``<output_dir>/runs.csv`` when an output directory is configured)."""
    if csv_path is None:
        out = cfg.output_dir or os.environ.get(OUTPUT_DIR_ENV)
        if out is not None:
            csv_path = Path(out) / "runs.csv"
    jobs = [(k, src, cfg) for k, src in enumerate(cfg.maps)]
    records: list[RunRecord] = []
    writer = None
    fh = None
    try:
        if csv_path is not None:
            csv_path = Path(csv_path)
            csv_path.parent.mkdir(parents=True, exist_ok=True)
            fh = open(csv_path, "w", newline="")
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(csv_header(cfg.planners))
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as pool:
                batches = pool.map(_run_map, jobs)
                for batch in batches:
                    _emit(batch, records, writer, cfg.planners)
        else:
            for job in jobs:
                _emit(_run_map(job), records, writer, cfg.planners)
    finally:
        if fh is not None:
            fh.close()
    return records


def _emit(batch, records, writer, planners):
    records.extend(batch)
    if writer is not None:
        for rec in batch:
            writer.writerow(csv_row(rec, planners))


# --------------------------------------------------------------------------
# CSV

BASE_COLUMNS = ("schema_version", "map_id", "group", "run", "start_i", "start_j",
                "goal_i", "goal_j", "reachable", "optimal_length")
PLANNER_FIELDS = ("length", "time", "expansions", "fail", "timeout")
TIMING_FIELDS = frozenset(f"{p}_time" for p in PLANNERS)


def csv_header(planners) -> list[str]:
    cols = list(BASE_COLUMNS)
    for p in planners:
        cols += [f"{p}_{f}" for f in PLANNER_FIELDS]
    return cols


def _fmt_len(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.9f}"


def csv_row(rec: RunRecord, planners) -> list[str]:
    row = [str(SCHEMA_VERSION), rec.map_id, rec.group, str(rec.run),
           str(rec.start.i), str(rec.start.j), str(rec.goal.i), str(rec.goal.j),
           str(int(rec.reachable)), _fmt_len(rec.optimal)]
    for p in planners:
        o = rec.outcomes[p]
        row += [_fmt_len(o.length), f"{o.time:.6f}", str(o.expansions),
                str(int(o.fail)), str(int(o.timeout))]
    return row


def read_records(path) -> list[RunRecord]:
    """Parse a runs CSV; column order does not matter."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return []
        planners = [p for p in PLANNERS if f"{p}_length" in reader.fieldnames]
        out = []
        for row in reader:
            version = int(row["schema_version"])
            if version != SCHEMA_VERSION:
                raise ValueError(f"unsupported schema version {version}")
            rec = RunRecord(
                row["map_id"], row["group"], int(row["run"]),
                Cell(int(row["start_i"]), int(row["start_j"])),
                Cell(int(row["goal_i"]), int(row["goal_j"])),
                optimal=float(row["optimal_length"]),
            )
            for p in planners:
                rec.outcomes[p] = Outcome(
                    float(row[f"{p}_length"]), float(row[f"{p}_time"]),
                    int(row[f"{p}_expansions"]), row[f"{p}_fail"] == "1",
                    row[f"{p}_timeout"] == "1",
                )
            out.append(rec)
    return out
