import csv
import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from erastar.bench.harness import (
    PLANNERS,
    TIMING_FIELDS,
    BenchConfig,
    Outcome,
    RunRecord,
    read_records,
    run_benchmark,
    sample_endpoints,
)
from erastar.bench.manifest import (
    MapSource,
    desk_corpus,
    parse_gen_spec,
    parse_manifest,
    read_manifest,
)
from erastar.bench.plots import emit_plots, histogram_bins
from erastar.bench.summary import EmptyInput, format_summary, summarize, write_summary_csv
from erastar.grid import Cell, GridMap, save_map

from .conftest import small_maps


def empty_source(tmp_path, w=10, h=10, name="empty"):
    path = tmp_path / f"{name}.map"
    save_map(GridMap.empty(w, h), path)
    return MapSource(name, "g", path)


def non_timing(path):
    with open(path, newline="") as fh:
        return [{k: v for k, v in row.items() if k not in TIMING_FIELDS}
                for row in csv.DictReader(fh)]


@given(small_maps(), st.integers(1, 20), st.integers(0, 2**64 - 1))
def test_endpoint_sampling(grid, n, seed):
    if grid.n_free < 2:
        with pytest.raises(ValueError):
            sample_endpoints(grid, n, seed)
        return
    pairs = sample_endpoints(grid, n, seed)
    assert len(pairs) == n
    for s, g in pairs:
        assert s != g
        assert grid.is_free(s) and grid.is_free(g)
    assert pairs == sample_endpoints(grid, n, seed)


def test_empty_map_all_planners_agree(tmp_path):
    cfg = BenchConfig([empty_source(tmp_path)], runs_per_map=3, repeats=1)
    records = run_benchmark(cfg, tmp_path / "runs.csv")
    assert len(records) == 3
    for r in records:
        lengths = {o.length for o in r.outcomes.values()}
        assert len(lengths) == 1
        assert lengths == {r.optimal}


def test_fixed_seed_is_deterministic(tmp_path):
    src = parse_gen_spec("width=30 height=30 ratio=0.2 seed=4", "g")
    for k in (1, 2):
        run_benchmark(BenchConfig([src], runs_per_map=5, seed=7, repeats=1), tmp_path / f"{k}.csv")
    assert non_timing(tmp_path / "1.csv") == non_timing(tmp_path / "2.csv")
    run_benchmark(BenchConfig([src], runs_per_map=5, seed=8, repeats=1), tmp_path / "3.csv")
    assert non_timing(tmp_path / "1.csv") != non_timing(tmp_path / "3.csv")


def test_parallel_matches_serial(tmp_path):
    srcs = [parse_gen_spec(f"width=25 height=25 ratio=0.2 seed={k}", "g") for k in range(3)]
    run_benchmark(BenchConfig(srcs, runs_per_map=4, repeats=1), tmp_path / "a.csv")
    run_benchmark(BenchConfig(srcs, runs_per_map=4, repeats=1, jobs=2), tmp_path / "b.csv")
    assert non_timing(tmp_path / "a.csv") == non_timing(tmp_path / "b.csv")


def test_csv_round_trip_ignores_column_order(tmp_path):
    src = parse_gen_spec("width=20 height=20 ratio=0.2 seed=1", "g")
    records = run_benchmark(BenchConfig([src], runs_per_map=4, repeats=1), tmp_path / "runs.csv")
    with open(tmp_path / "runs.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    order = list(reversed(range(len(rows[0]))))
    with open(tmp_path / "shuffled.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        for row in rows:
            w.writerow([row[k] for k in order])
    a = format_summary(summarize(tmp_path / "runs.csv"))
    b = format_summary(summarize(tmp_path / "shuffled.csv"))
    assert a == b
    back = read_records(tmp_path / "runs.csv")
    assert [(r.start, r.goal) for r in back] == [(r.start, r.goal) for r in records]


def test_relaxed_never_below_optimal(tmp_path):
    src = parse_gen_spec("width=40 height=40 ratio=0.25 seed=3", "g")
    for r in run_benchmark(BenchConfig([src], runs_per_map=10, repeats=1)):
        for o in r.outcomes.values():
            assert o.fail or o.length >= r.optimal - 1e-9


def test_bad_map_is_skipped(tmp_path, caplog):
    bad = tmp_path / "bad.map"
    bad.write_text("type octile\nheight 2\nwidth 2\nmap\n..\n")
    good = empty_source(tmp_path, 6, 6)
    records = run_benchmark(BenchConfig([MapSource("bad", "g", bad), good], runs_per_map=2,
                                        repeats=1))
    assert {r.map_id for r in records} == {"empty"}
    assert "skipping map bad" in caplog.text


def test_time_cap_marks_timeout(tmp_path):
    src = parse_gen_spec("width=60 height=60 ratio=0.1 seed=2", "g")
    records = run_benchmark(BenchConfig([src], runs_per_map=2, repeats=1, time_cap=0.0))
    for r in records:
        for o in r.outcomes.values():
            assert o.timeout and o.fail and math.isinf(o.length)


def test_config_validation():
    with pytest.raises(ValueError):
        BenchConfig([], planners=("bogus",))
    with pytest.raises(ValueError):
        BenchConfig([], runs_per_map=0)
    cfg = BenchConfig([], planners=("dijkstra", "era"))
    assert cfg.planners == ("era", "dijkstra")


def test_output_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv("ERASTAR_OUTPUT_DIR", str(tmp_path / "envout"))
    run_benchmark(BenchConfig([empty_source(tmp_path, 4, 4)], runs_per_map=1, repeats=1))
    assert (tmp_path / "envout" / "runs.csv").exists()


# --------------------------------------------------------------------------
# Summaries

def make_record(run, times, lengths, optimal, group="g"):
    rec = RunRecord("m", group, run, Cell(0, 0), Cell(1, 1), optimal=optimal)
    for p, t, length in zip(("era", "ra_wot"), times, lengths):
        rec.outcomes[p] = Outcome(length, t, 1, math.isinf(length))
    return rec


def test_summary_rates_and_ratio():
    recs = [make_record(k, (t, t / 2), (5.0, 5.0), 5.0) for k, t in enumerate((2, 4, 6))]
    table = summarize(recs)[-1]
    assert table.group == "All"
    assert table.planners["era"].optimality_rate == 100.0
    assert table.time_ratios[("era", "ra_wot")] == pytest.approx(2.0)
    assert table.planners["ra_wot"].ranks[1] == 100.0


def test_summary_extra_length():
    recs = [make_record(0, (1, 1), (11.0, 10.0), 10.0),
            make_record(1, (1, 1), (10.0, 10.0), 10.0)]
    s = summarize(recs)[-1].planners["era"]
    assert s.optimality_rate == 50.0
    assert s.extra_mean == pytest.approx(10.0)
    assert s.extra_max == pytest.approx(10.0)


def test_summary_na_rendering(tmp_path):
    recs = [make_record(0, (1, 1), (math.inf, math.inf), math.inf)]
    tables = summarize(recs)
    text = format_summary(tables)
    assert "n/a" in text
    write_summary_csv(tables, tmp_path / "s.csv")
    assert "n/a" in (tmp_path / "s.csv").read_text()


def test_summary_empty(tmp_path):
    with pytest.raises(EmptyInput):
        summarize([])
    (tmp_path / "e.csv").write_text("")
    with pytest.raises(EmptyInput):
        summarize(tmp_path / "e.csv")


def test_groups_and_all():
    recs = [make_record(0, (1, 1), (5, 5), 5, "a"), make_record(1, (1, 1), (5, 5), 5, "b")]
    assert [t.group for t in summarize(recs)] == ["a", "b", "All"]


# --------------------------------------------------------------------------
# Plots

def test_single_bin_histogram():
    edges, counts = histogram_bins([1.0] * 7)
    assert sum(1 for c in counts if c) == 1
    assert sum(counts) == 7


def test_plots_are_valid_svg(tmp_path):
    src = parse_gen_spec("width=20 height=20 ratio=0.2 seed=1", "g")
    run_benchmark(BenchConfig([src], runs_per_map=1, repeats=1), tmp_path / "runs.csv")
    paths = emit_plots(tmp_path / "runs.csv", tmp_path / "plots")
    assert paths
    for p in paths:
        root = ET.parse(p).getroot()
        assert root.tag.endswith("svg")
    scatter = ET.parse(tmp_path / "plots" / "scatter_g.svg").getroot()
    circles = [e for e in scatter.iter() if e.tag.endswith("circle")]
    # one point per contender; the dijkstra oracle is left off the scatter
    assert len(circles) == len(PLANNERS) - 1


def test_plots_empty(tmp_path):
    with pytest.raises(EmptyInput):
        emit_plots([], tmp_path)


# --------------------------------------------------------------------------
# Manifests

def test_manifest_parsing(tmp_path):
    text = """
    # comment
    gen width=10 height=12 ratio=0.1 seed=3
    group mazes
    map sub/m.map   # trailing comment
    gen name=x width=5,height=5,ratio=0
    """
    srcs = parse_manifest(text, tmp_path)
    assert [s.group for s in srcs] == ["default", "mazes", "mazes"]
    assert srcs[1].path == tmp_path / "sub" / "m.map"
    assert srcs[2].map_id == "x"
    assert srcs[0].load().height == 12


@pytest.mark.parametrize("text", ["bogus line", "gen width=10", "gen width=1 height=2 ratio=0 foo=1"])
def test_manifest_errors(text):
    with pytest.raises(ValueError):
        parse_manifest(text)


def test_desk_corpus_is_fixed():
    corpus = desk_corpus()
    assert len(corpus) == 30
    assert len({s.map_id for s in corpus}) == 30
    assert all(s.gen["width"] == s.gen["height"] == 100 for s in corpus)
    assert corpus == desk_corpus()


def test_shipped_manifests():
    corpus = Path(__file__).resolve().parent.parent / "corpus"
    assert read_manifest(corpus / "desk.manifest") == desk_corpus()
    full = read_manifest(corpus / "full.manifest")
    assert len(full) == 43
    counts = {}
    for s in full:
        counts[s.group] = counts.get(s.group, 0) + 1
    assert counts["mazes"] == 6 and counts["rooms"] == 4 and counts["games"] == 7
    assert sum(v for k, v in counts.items() if "x" in k) == 26
