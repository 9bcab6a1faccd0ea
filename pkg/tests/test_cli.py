import csv
import subprocess
import sys

import pytest

from erastar.bench.harness import TIMING_FIELDS
from erastar.cli import main
from erastar.grid import GridMap, load_map, save_map


@pytest.fixture
def empty5(tmp_path):
    path = tmp_path / "m.map"
    save_map(GridMap.empty(5, 5), path)
    return path


def test_solve_diagonal(empty5, capsys):
    assert main(["solve", "--algo", "era", "--map", str(empty5),
                 "--start", "0,0", "--goal", "4,4", "--dump-path"]) == 0
    out = capsys.readouterr().out
    assert "length 5.656854249" in out
    assert "path 0,0 1,1 2,2 3,3 4,4" in out


@pytest.mark.parametrize("algo", ["ra_wot", "astar_t", "dijkstra"])
def test_solve_other_planners(empty5, capsys, algo):
    assert main(["solve", "--algo", algo, "--map", str(empty5),
                 "--start", "0,0", "--goal", "0,4", "--exact"]) == 0
    out = capsys.readouterr().out
    assert "length 4.000000000" in out and "exact 4" in out


def test_solve_no_path(tmp_path, capsys):
    path = tmp_path / "wall.map"
    save_map(GridMap.from_strings([".@.", ".@.", ".@."]), path)
    assert main(["solve", "--map", str(path), "--start", "0,0", "--goal", "0,2"]) == 3
    assert "length inf" in capsys.readouterr().out


def test_gen_map_ratio_zero(tmp_path):
    out = tmp_path / "z.map"
    assert main(["gen-map", "--width", "12", "--height", "7", "--ratio", "0", "-o", str(out)]) == 0
    grid = load_map(out)
    assert (grid.height, grid.width, grid.n_obstacles) == (7, 12, 0)


def test_bench_twice_identical(tmp_path):
    args = ["bench", "--gen", "width=30,height=30,ratio=0.2,seed=5", "--runs", "4",
            "--seed", "7", "--repeats", "1"]
    rows = []
    for k in (1, 2):
        assert main(args + ["--out", str(tmp_path / str(k))]) == 0
        with open(tmp_path / str(k) / "runs.csv", newline="") as fh:
            rows.append([{c: v for c, v in r.items() if c not in TIMING_FIELDS}
                         for r in csv.DictReader(fh)])
    assert rows[0] == rows[1]
    assert len(rows[0]) == 4


def test_summarize_and_plot(tmp_path, capsys):
    out = tmp_path / "b"
    main(["bench", "--gen", "width=20,height=20,ratio=0.1", "--runs", "3", "--repeats", "1",
          "--out", str(out)])
    assert main(["summarize", str(out / "runs.csv")]) == 0
    assert "Optimal paths" in capsys.readouterr().out
    assert (out / "summary.csv").exists() and (out / "summary.txt").exists()
    assert main(["plot", str(out / "runs.csv"), "--out", str(tmp_path / "p")]) == 0
    assert list((tmp_path / "p").glob("*.svg"))


def test_no_command_exits_2(capsys):
    assert main([]) == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--start", "x"])
    assert exc.value.code == 2


def test_runtime_error_exits_1(tmp_path, capsys):
    assert main(["solve", "--map", str(tmp_path / "missing.map"),
                 "--start", "0,0", "--goal", "1,1"]) == 1
    assert "erastar: error:" in capsys.readouterr().err


def test_obstacle_endpoint_exits_1(tmp_path, capsys):
    path = tmp_path / "m.map"
    save_map(GridMap.from_strings([".@"]), path)
    assert main(["solve", "--map", str(path), "--start", "0,0", "--goal", "0,1"]) == 1


def test_dump_tables(capsys):
    assert main(["--dump-tables"]) == 0
    out = capsys.readouterr().out
    assert out.count("angle") == 28
    assert "2sqrt2" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "erastar", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "gen-map" in proc.stdout
