"""ERA* search: best-first propagation of detour penalties read from the
precomputed lookup matrices, plus backward path reconstruction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush

import numpy as np

from .grid import SQRT2, Cell, GridMap
from .penalty import N_LOCAL, PenaltyTables, default_tables, octile_h
from .result import NO_PRED, PathResult, endpoint_indices, trace_back
from .surd import Surd

INF = math.inf


@dataclass
class SearchState:
    """Everything one search leaves behind.

    ``D`` and ``P`` are flat over the padded layout of ``grid`` (see
    :class:`erastar.grid.Layout`); use :meth:`d_at` / :meth:`pred_at` or
    :meth:`d_matrix` for cell-indexed access. ``D`` holds floats, or
    :class:`Surd` values when ``exact`` is set; unreached cells hold ``INF``.
    """

    grid: GridMap
    start: Cell
    goal: Cell
    D: list
    P: list[int]
    queue: list
    nb_iter: int
    max_nb_iter: int
    n_enqueued: int
    exact: bool = False

    @property
    def reached(self) -> bool:
        return self.D[self.grid.layout.index(self.goal)] is not INF

    @property
    def exit_reason(self) -> str:
        if self.reached:
            return "goal"
        if not self.queue:
            return "exhausted"
        return "budget"

    def d_at(self, c):
        return self.D[self.grid.layout.index(c)]

    def pred_at(self, c) -> Cell | None:
        p = self.P[self.grid.layout.index(c)]
        return None if p == NO_PRED else self.grid.layout.cell(p)

    def d_matrix(self) -> np.ndarray:
        lay = self.grid.layout
        a = np.array([float(v) for v in self.D]).reshape(lay.height + 2, lay.stride)
        return a[1:-1, 1:-1]

    def finite_cells(self) -> list[int]:
        return [p for p, v in enumerate(self.D) if v is not INF]


def _penalty_edges(lay, tables: PenaltyTables, exact: bool):
    """Per-regime ``(offset, penalty, guard_a, guard_b)`` tuples, cached on
    the layout since they depend on its stride."""
    cache = lay.__dict__.setdefault("_penalty_edges", {})
    key = (id(tables), exact)
    hit = cache.get(key)
    if hit is None or hit[0] is not tables:
        src = tables.exact_vectors if exact else tables.vectors
        hit = cache[key] = (tables, [lay.edges(v) for v in src])
    return hit[1]


def _tick(tie_break: str) -> int:
    if tie_break == "fifo":
        return 1
    if tie_break == "lifo":
        return -1
    raise ValueError(f"tie_break must be 'fifo' or 'lifo', not {tie_break!r}")


def era_star_search(
    grid: GridMap,
    tables: PenaltyTables | None = None,
    start=None,
    goal=None,
    max_nb_iter: int | None = None,
    exact: bool = False,
    debug: bool = False,
    tie_break: str = "fifo",
) -> SearchState:
    """Expand the cell of least accumulated detour until the goal receives
    a value, the queue empties, or ``max_nb_iter`` expansions are spent.

    Every cell is assigned at most once. Ties in detour are broken by
    insertion order, oldest first (``tie_break="fifo"``) or newest first
    (``"lifo"``). With ``debug`` set, each write is checked against the
    single-assignment rule.
    """
    if tables is None:
        tables = default_tables()
    s, g = endpoint_indices(grid, start, goal)
    lay = grid.layout
    if max_nb_iter is None:
        max_nb_iter = grid.width * grid.height
    stride = lay.stride
    free = lay.free
    cut = lay.cut_allowed
    vectors = _penalty_edges(lay, tables, exact)
    assert N_LOCAL == 7
    tick = _tick(tie_break)
    zero = Surd(0, 0) if exact else 0.0

    D = [INF] * lay.size
    P = [NO_PRED] * lay.size
    unseen = bytearray(free)
    D[s] = zero
    unseen[s] = 0
    heap = [(zero, 0, s)]
    seq = 0
    nb_iter = 0
    gi, gj = divmod(g, stride)

    pop, push = heappop, heappush
    while D[g] is INF and nb_iter < max_nb_iter and heap:
        d, _, c = pop(heap)
        ci, cj = divmod(c, stride)
        # inlined regime_index(gj - cj, gi - ci); keep the two in sync
        x = gj - cj
        y = ci - gi
        if x > 0:
            if y >= 0:
                base, u, v = 0, x, y
            else:
                base, u, v = 21, -y, x
        elif x < 0:
            if y <= 0:
                base, u, v = 14, -x, -y
            else:
                base, u, v = 7, y, -x
        elif y > 0:
            base, u, v = 7, y, 0
        else:
            base, u, v = 21, -y, 0
        if v < u:
            if v > 0:
                pen = vectors[base + 2 if u - v == 1 else base + 3]
            else:
                pen = vectors[base if u == 1 else base + 1]
        elif v > u:
            pen = vectors[base + 5 if v - u == 1 else base + 6]
        else:
            pen = vectors[base + 4]
        for off, inc, ga, gb in pen:
            n = c + off
            if unseen[n] and (cut or (free[c + ga] and free[c + gb])):
                if debug and D[n] is not INF:
                    raise AssertionError(f"D overwritten at {lay.cell(n)}")
                unseen[n] = 0
                nd = d + inc
                D[n] = nd
                P[n] = c
                seq += tick
                push(heap, (nd, seq, n))
        nb_iter += 1

    return SearchState(
        grid, Cell(*start), Cell(*goal), D, P, heap, nb_iter, max_nb_iter, abs(seq), exact
    )


def reconstruct_path(state: SearchState, start=None, goal=None) -> PathResult:
    """Follow predecessors back from the goal. Fails when the goal never
    received a detour value."""
    start = state.start if start is None else start
    goal = state.goal if goal is None else goal
    lay = state.grid.layout
    g = lay.index(goal)
    if state.D[g] is INF:
        return PathResult.failed(state.nb_iter)
    return trace_back(lay, state.P, lay.index(start), g, state.nb_iter)


def era_star(grid: GridMap, start, goal, tables: PenaltyTables | None = None,
             exact: bool = False, max_nb_iter: int | None = None,
             tie_break: str = "fifo") -> PathResult:
    state = era_star_search(grid, tables, start, goal, max_nb_iter, exact, tie_break=tie_break)
    return reconstruct_path(state, start, goal)


def check_d_identity(state: SearchState, grid: GridMap | None = None, start=None) -> float:
    """Largest ``|D(c) - (g(c) + h(c) - h(start))|`` over reached cells.

    ``g`` is rebuilt by summing step costs down the predecessor tree from
    the start; ``h`` is the octile distance to the search goal. In exact
    mode any nonzero deviation is returned as its float value.
    """
    grid = state.grid if grid is None else grid
    start = state.start if start is None else start
    lay = grid.layout
    stride = lay.stride
    exact = state.exact
    s = lay.index(start)
    gi, gj = divmod(lay.index(state.goal), stride)
    D, P = state.D, state.P

    def h(p):
        pi, pj = divmod(p, stride)
        return octile_h(gj - pj, gi - pi, exact)

    one, diag = (Surd(1, 0), Surd(0, 1)) if exact else (1.0, SQRT2)
    g_cost = {s: Surd(0, 0) if exact else 0.0}
    h0 = h(s)
    worst = 0.0
    for p in state.finite_cells():
        chain = []
        cur = p
        while cur not in g_cost:
            chain.append(cur)
            cur = P[cur]
            if cur == NO_PRED:
                raise AssertionError(f"reached cell {lay.cell(p)} has no path to start")
        acc = g_cost[cur]
        for q in reversed(chain):
            delta = abs(q - P[q])
            acc = acc + (one if delta == 1 or delta == stride else diag)
            g_cost[q] = acc
        dev = abs(float(D[p] - (g_cost[p] + h(p) - h0)))
        if dev > worst:
            worst = dev
    return worst
