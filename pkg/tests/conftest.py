import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from erastar.grid import CornerRule, GridMap

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def small_maps(draw, max_side=20, corner_rules=(CornerRule.CUT_ALLOWED, CornerRule.CUT_FORBIDDEN)):
    h = draw(st.integers(2, max_side))
    w = draw(st.integers(2, max_side))
    density = draw(st.sampled_from([0.0, 0.1, 0.25, 0.4]))
    seed = draw(st.integers(0, 2**32 - 1))
    occ = np.random.default_rng(seed).random((h, w)) < density
    rule = draw(st.sampled_from(corner_rules))
    return GridMap(occ, rule)


@st.composite
def map_and_endpoints(draw, max_side=20, corner_rules=(CornerRule.CUT_ALLOWED, CornerRule.CUT_FORBIDDEN)):
    grid = draw(small_maps(max_side, corner_rules))
    free = grid.free_cells()
    if len(free) < 1:
        occ = grid.occupancy.copy()
        occ[0, 0] = False
        grid = GridMap(occ, grid.corner_rule)
        free = grid.free_cells()
    s = draw(st.sampled_from(free))
    g = draw(st.sampled_from(free))
    return grid, s, g


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def _report(criterion: str, ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
