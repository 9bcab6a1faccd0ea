"""Reference planners: exact A* with path tie-breaks, Relaxed A* without
tie-breaks, and Dijkstra as the ground-truth oracle.

All three share the padded layout and neighbour order of ERA*, so timing
comparisons measure the algorithms rather than the data structures.
"""

from __future__ import annotations

import math
from heapq import heappop, heappush

from .grid import SQRT2, GridMap
from .search import _tick
from .result import NO_PRED, PathResult, endpoint_indices, trace_back
from .surd import Surd

INF = math.inf


def _edges(layout, exact: bool):
    if exact:
        one, diag = Surd(1, 0), Surd(0, 1)
    else:
        one, diag = 1.0, SQRT2
    return layout.edges([diag if d else one for _k, _off, _ga, _gb, d in layout.steps])


def _octile(ax: int, ay: int, exact: bool):
    if ax < ay:
        ax, ay = ay, ax
    return Surd(ax - ay, ay) if exact else SQRT2 * ay + (ax - ay)


def astar_t(grid: GridMap, start, goal, exact: bool = False) -> PathResult:
    """Optimal A* with octile heuristic.

    Ties on f go to the larger g (the deeper node), then to insertion
    order. Improved g values are handled by lazy re-insertion; stale heap
    entries are skipped via the closed flags.
    """
    s, g = endpoint_indices(grid, start, goal)
    lay = grid.layout
    stride, free, cut = lay.stride, lay.free, lay.cut_allowed
    edges = _edges(lay, exact)
    gi, gj = divmod(g, stride)

    si, sj = divmod(s, stride)
    h0 = _octile(abs(gj - sj), abs(gi - si), exact)
    zero = Surd(0, 0) if exact else 0.0

    G = [INF] * lay.size
    P = [NO_PRED] * lay.size
    closed = bytearray(lay.size)
    G[s] = zero
    heap = [(h0, -zero, 0, s)]
    seq = 0
    expanded = 0
    pop, push = heappop, heappush
    while heap:
        _f, _ng, _, c = pop(heap)
        if closed[c]:
            continue
        closed[c] = 1
        if c == g:
            return trace_back(lay, P, s, g, expanded)
        expanded += 1
        gc = G[c]
        for off, cost, ga, gb in edges:
            n = c + off
            if free[n] and not closed[n] and (cut or (free[c + ga] and free[c + gb])):
                t = gc + cost
                if t < G[n]:
                    G[n] = t
                    P[n] = c
                    ni, nj = divmod(n, stride)
                    ax = gj - nj if gj >= nj else nj - gj
                    ay = gi - ni if gi >= ni else ni - gi
                    if exact:
                        hn = Surd(ax - ay, ay) if ax >= ay else Surd(ay - ax, ax)
                    else:
                        hn = SQRT2 * ay + (ax - ay) if ax >= ay else SQRT2 * ax + (ay - ax)
                    seq += 1
                    push(heap, (t + hn, -t, seq, n))
    return PathResult.failed(expanded)


def ra_star_wot(grid: GridMap, start, goal, exact: bool = False,
                max_nb_iter: int | None = None, debug: bool = False,
                tie_break: str = "fifo") -> PathResult:
    """Relaxed A*: each cell's g is fixed the first time it is reached and
    never revised. Queue key is f = g + h with FIFO ties. The loop stops as
    soon as the goal has a g value, mirroring ERA*'s guard. ``tie_break``
    is as for :func:`erastar.search.era_star_search`."""
    s, g = endpoint_indices(grid, start, goal)
    lay = grid.layout
    stride, free, cut = lay.stride, lay.free, lay.cut_allowed
    edges = _edges(lay, exact)
    gi, gj = divmod(g, stride)
    if max_nb_iter is None:
        max_nb_iter = grid.width * grid.height

    G = [INF] * lay.size
    P = [NO_PRED] * lay.size
    unseen = bytearray(free)
    unseen[s] = 0
    G[s] = Surd(0, 0) if exact else 0.0
    si, sj = divmod(s, stride)
    f0 = _octile(abs(gj - sj), abs(gi - si), exact)
    heap = [(f0, 0, s)]
    seq = 0
    tick = _tick(tie_break)
    nb_iter = 0
    pop, push = heappop, heappush
    while G[g] is INF and nb_iter < max_nb_iter and heap:
        _f, _, c = pop(heap)
        gc = G[c]
        for off, cost, ga, gb in edges:
            n = c + off
            if unseen[n] and (cut or (free[c + ga] and free[c + gb])):
                if debug and G[n] is not INF:
                    raise AssertionError(f"g overwritten at {lay.cell(n)}")
                unseen[n] = 0
                t = gc + cost
                G[n] = t
                P[n] = c
                ni, nj = divmod(n, stride)
                ax = gj - nj if gj >= nj else nj - gj
                ay = gi - ni if gi >= ni else ni - gi
                if exact:
                    hn = Surd(ax - ay, ay) if ax >= ay else Surd(ay - ax, ax)
                else:
                    hn = SQRT2 * ay + (ax - ay) if ax >= ay else SQRT2 * ax + (ay - ax)
                seq += tick
                push(heap, (t + hn, seq, n))
        nb_iter += 1
    if G[g] is INF:
        return PathResult.failed(nb_iter)
    return trace_back(lay, P, s, g, nb_iter)


def dijkstra(grid: GridMap, start, goal, exact: bool = False) -> PathResult:
    """Uniform-cost search with lazy deletion; no heuristic involved."""
    s, g = endpoint_indices(grid, start, goal)
    lay = grid.layout
    free, cut = lay.free, lay.cut_allowed
    edges = _edges(lay, exact)
    zero = Surd(0, 0) if exact else 0.0

    G = [INF] * lay.size
    P = [NO_PRED] * lay.size
    closed = bytearray(lay.size)
    G[s] = zero
    heap = [(zero, 0, s)]
    seq = 0
    expanded = 0
    pop, push = heappop, heappush
    while heap:
        d, _, c = pop(heap)
        if closed[c]:
            continue
        closed[c] = 1
        if c == g:
            return trace_back(lay, P, s, g, expanded)
        expanded += 1
        for off, cost, ga, gb in edges:
            n = c + off
            if free[n] and not closed[n] and (cut or (free[c + ga] and free[c + gb])):
                t = d + cost
                if t < G[n]:
                    G[n] = t
                    P[n] = c
                    seq += 1
                    push(heap, (t, seq, n))
    return PathResult.failed(expanded)
