"""Path results shared by every planner, and the common validity check."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BrokenChain, InvalidEndpoint
from .grid import SQRT2, Cell, GridMap, neighbors
from .surd import Surd

NO_PRED = -1


@dataclass
class PathResult:
    path: list[Cell] = field(default_factory=list)
    n_orth: int = 0
    n_diag: int = 0
    fail: bool = True
    nb_iter: int = 0

    @property
    def length(self) -> float:
        if self.fail:
            return math.inf
        # one multiplication at the end, no running float sum
        return self.n_orth + self.n_diag * SQRT2

    @property
    def exact_length(self) -> Surd | None:
        return None if self.fail else Surd(self.n_orth, self.n_diag)

    @classmethod
    def failed(cls, nb_iter: int = 0) -> "PathResult":
        return cls(nb_iter=nb_iter)


def trace_back(layout, pred: list[int], s: int, g: int, nb_iter: int) -> PathResult:
    """Walk predecessors from goal ``g`` back to start ``s``."""
    stride = layout.stride
    cur = g
    cells = [layout.cell(g)]
    n_orth = n_diag = 0
    limit = layout.size
    while cur != s:
        p = pred[cur]
        if p == NO_PRED:
            raise BrokenChain(f"no predecessor at {layout.cell(cur)}")
        delta = cur - p
        if delta == stride or delta == -stride or delta == 1 or delta == -1:
            n_orth += 1
        else:
            n_diag += 1
        cur = p
        cells.append(layout.cell(cur))
        if len(cells) > limit:
            raise BrokenChain("predecessor walk exceeds the number of cells")
    cells.reverse()
    return PathResult(cells, n_orth, n_diag, False, nb_iter)


def check_path(grid: GridMap, result: PathResult, start, goal) -> None:
    """Raise AssertionError unless ``result`` is a valid path on ``grid``."""
    if result.fail:
        assert not result.path, "failed result carries a path"
        assert math.isinf(result.length)
        return
    path = result.path
    assert path, "successful result has empty path"
    assert tuple(path[0]) == tuple(start), f"path starts at {path[0]}, not {start}"
    assert tuple(path[-1]) == tuple(goal), f"path ends at {path[-1]}, not {goal}"
    orth = diag = 0
    for a, b in zip(path, path[1:]):
        assert grid.is_free(b), f"{b} is blocked"
        nbrs = {n for n, _ in neighbors(grid, a)}
        assert b in nbrs, f"{a} -> {b} is not a legal move"
        if a[0] != b[0] and a[1] != b[1]:
            diag += 1
        else:
            orth += 1
    assert grid.is_free(path[0])
    assert (orth, diag) == (result.n_orth, result.n_diag), "step counts disagree with path"


def endpoint_indices(grid: GridMap, start, goal) -> tuple[int, int]:
    for name, c in (("start", start), ("goal", goal)):
        if not grid.in_bounds(c):
            raise InvalidEndpoint(f"{name} {tuple(c)} outside {grid.height}x{grid.width} map")
        if grid.occupancy[c[0], c[1]]:
            raise InvalidEndpoint(f"{name} {tuple(c)} is an obstacle")
    lay = grid.layout
    return lay.index(start), lay.index(goal)
