import math

import pytest
from hypothesis import given

from erastar.errors import BrokenChain, InvalidEndpoint
from erastar.grid import Cell, CornerRule, GridMap, generate_random_map
from erastar.result import NO_PRED, check_path
from erastar.search import (
    INF,
    check_d_identity,
    era_star,
    era_star_search,
    reconstruct_path,
)
from erastar.surd import Surd

from .conftest import map_and_endpoints

SQRT2 = math.sqrt(2)


def test_start_is_goal():
    g = GridMap.empty(4, 4)
    res = era_star(g, (2, 1), (2, 1))
    assert not res.fail
    assert res.path == [Cell(2, 1)]
    assert res.length == 0
    assert res.nb_iter == 0


def test_diagonal_on_empty_map():
    g = GridMap.empty(5, 5)
    state = era_star_search(g, start=(0, 0), goal=(4, 4), exact=True)
    assert state.d_at((4, 4)) == Surd(0, 0)
    res = reconstruct_path(state)
    assert res.exact_length == Surd(0, 4)
    assert res.length == pytest.approx(4 * SQRT2, abs=1e-12)
    assert res.path == [Cell(k, k) for k in range(5)]
    assert state.exit_reason == "goal"


def test_enclosed_goal_exhausts():
    g = GridMap.from_strings([
        ".....",
        ".@@@.",
        ".@.@.",
        ".@@@.",
        ".....",
    ])
    state = era_star_search(g, start=(0, 0), goal=(2, 2))
    assert state.exit_reason == "exhausted"
    res = reconstruct_path(state)
    assert res.fail and res.path == [] and math.isinf(res.length)
    assert res.nb_iter == g.n_free - 1


def test_budget_exit():
    g = GridMap.empty(30, 30)
    state = era_star_search(g, start=(0, 0), goal=(29, 0), max_nb_iter=3)
    assert state.exit_reason == "budget"
    assert state.nb_iter == 3
    assert reconstruct_path(state).fail


def test_invalid_endpoints():
    g = GridMap.from_strings([".@", ".."])
    with pytest.raises(InvalidEndpoint):
        era_star(g, (0, 0), (0, 1))
    with pytest.raises(InvalidEndpoint):
        era_star(g, (0, 0), (5, 5))
    with pytest.raises(InvalidEndpoint):
        era_star(g, (-1, 0), (1, 1))


def test_broken_chain():
    g = GridMap.empty(6, 6)
    state = era_star_search(g, start=(0, 0), goal=(5, 5))
    lay = g.layout
    p = lay.index((4, 4))
    state.P[p] = NO_PRED
    with pytest.raises(BrokenChain):
        reconstruct_path(state)


def test_bad_tie_break():
    with pytest.raises(ValueError):
        era_star(GridMap.empty(3, 3), (0, 0), (2, 2), tie_break="random")


def test_detours_around_wall():
    g = GridMap.from_strings([
        "......",
        "..@...",
        "..@...",
        "..@...",
        "......",
    ])
    res = era_star(g, (2, 0), (2, 5))
    check_path(g, res, (2, 0), (2, 5))
    assert res.length >= 5 + 2 * (SQRT2 - 1)


def test_corner_rule_changes_path():
    rows = ["..@", ".@.", "..."]
    allowed = era_star(GridMap.from_strings(rows, CornerRule.CUT_ALLOWED), (0, 0), (2, 2))
    forbidden = era_star(GridMap.from_strings(rows, CornerRule.CUT_FORBIDDEN), (0, 0), (2, 2))
    assert allowed.length == pytest.approx(2 + SQRT2)
    assert forbidden.length == pytest.approx(4.0)


@given(map_and_endpoints())
def test_paths_are_valid(case):
    grid, s, g = case
    for tie in ("fifo", "lifo"):
        for exact in (False, True):
            res = era_star(grid, s, g, exact=exact, tie_break=tie)
            check_path(grid, res, s, g)
            assert res.nb_iter <= grid.n_free


@given(map_and_endpoints())
def test_debug_mode_single_visit(case):
    grid, s, g = case
    state = era_star_search(grid, start=s, goal=g, debug=True)
    assert state.nb_iter <= grid.n_free
    assert state.n_enqueued <= grid.n_free - 1


@given(map_and_endpoints())
def test_d_identity(case):
    grid, s, g = case
    assert check_d_identity(era_star_search(grid, start=s, goal=g)) <= 1e-9
    assert check_d_identity(era_star_search(grid, start=s, goal=g, exact=True)) == 0


def test_d_identity_on_random_map():
    grid = generate_random_map(60, 40, 0.25, 2, 6, 17)
    free = grid.free_cells()
    state = era_star_search(grid, start=free[0], goal=free[-1], exact=True)
    assert check_d_identity(state) == 0


def test_state_accessors():
    g = GridMap.empty(4, 3)
    state = era_star_search(g, start=(0, 0), goal=(2, 3))
    assert state.pred_at((0, 0)) is None
    assert state.d_matrix().shape == (3, 4)
    assert state.d_at((0, 0)) == 0.0
    assert all(state.D[p] is not INF for p in state.finite_cells())
