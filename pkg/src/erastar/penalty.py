"""Detour penalties and the 28 precomputed 3x3 lookup matrices.

Offsets are ``(dx, dy)`` with ``dx`` the column delta and ``dy`` the row
delta from the current cell to the goal. Angles are measured
anti-clockwise from east with north up, so a goal at ``dy < 0`` lies
above the current cell. No angle is ever computed; regimes are told apart
by integer comparisons only.

Penalty matrices are indexed ``matrix[di + 1, dj + 1]`` for a move
``(di, dj)``; the centre entry is unused and stored as zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConstructionMismatch
from .grid import MOVES, SQRT2, Move
from .surd import Surd


def octile_h(dx: int, dy: int, exact: bool = False):
    """Obstacle-free 8-connected distance for an offset ``(dx, dy)``."""
    ax = dx if dx >= 0 else -dx
    ay = dy if dy >= 0 else -dy
    if ax < ay:
        ax, ay = ay, ax
    if exact:
        return Surd(ax - ay, ay)
    return SQRT2 * ay + (ax - ay)


def step_cost(m, exact: bool = False):
    diag = m[0] != 0 and m[1] != 0
    if exact:
        return Surd(0, 1) if diag else Surd(1, 0)
    return SQRT2 if diag else 1.0


def incremental_penalty(dx: int, dy: int, m, exact: bool = False):
    """Extra detour accrued by taking move ``m = (di, dj)`` when the goal
    sits at offset ``(dx, dy)``: step cost plus the change in octile
    distance to the goal."""
    if dx == 0 and dy == 0:
        raise ValueError("offset (0, 0) is the goal itself")
    di, dj = m
    after = octile_h(dx - dj, dy - di, exact)
    before = octile_h(dx, dy, exact)
    return step_cost(m, exact) + after - before


# --------------------------------------------------------------------------
# Regimes

class Proximity(enum.Enum):
    GENERAL = "general"
    ADJACENT = "adjacent"  # on an axis, goal one step away
    NEAR_DIAGONAL = "near_diagonal"  # inside a sector, one off the diagonal


class RegimeId(NamedTuple):
    """``sector`` runs 0..15 in 22.5 degree half-steps: even sectors are the
    exact directions 0, 45, ..., 315 degrees; odd sectors are the open
    wedges between them."""

    sector: int
    proximity: Proximity

    @property
    def angle(self) -> str:
        lo = self.sector // 2 * 45
        if self.sector % 2 == 0:
            return f"{lo}"
        return f"({lo},{lo + 45})"


# Local regimes in the first quadrant, in index order. Quadrant q adds
# q*4 to the sector.
_LOCAL = (
    (0, Proximity.ADJACENT),
    (0, Proximity.GENERAL),
    (1, Proximity.NEAR_DIAGONAL),
    (1, Proximity.GENERAL),
    (2, Proximity.GENERAL),
    (3, Proximity.NEAR_DIAGONAL),
    (3, Proximity.GENERAL),
)
N_LOCAL = len(_LOCAL)
N_REGIMES = 4 * N_LOCAL

REGIMES: tuple[RegimeId, ...] = tuple(
    RegimeId(q * 4 + s, p) for q in range(4) for s, p in _LOCAL
)

# Representative offsets (u east, v north) of each local regime.
_LOCAL_REPR = ((1, 0), (7, 0), (6, 5), (7, 2), (6, 6), (5, 6), (2, 7))


def regime_index(dx: int, dy: int) -> int:
    """Index into :data:`REGIMES` for a goal offset; hot path of the search.

    Off-axis, off-diagonal offsets are by far the commonest on real maps,
    so the strict inequalities are tested before the equalities.
    """
    x = dx
    y = -dy
    # rotate into the first quadrant: u > 0, v >= 0
    if x > 0:
        if y >= 0:
            q, u, v = 0, x, y
        else:
            q, u, v = 3, -y, x
    elif x < 0:
        if y <= 0:
            q, u, v = 2, -x, -y
        else:
            q, u, v = 1, y, -x
    elif y > 0:
        q, u, v = 1, y, 0
    elif y < 0:
        q, u, v = 3, -y, 0
    else:
        raise ValueError("offset (0, 0) is the goal itself")
    base = q * N_LOCAL
    if v < u:
        if v > 0:
            return base + (2 if u - v == 1 else 3)
        return base + (0 if u == 1 else 1)
    if v > u:
        return base + (5 if v - u == 1 else 6)
    return base + 4


def classify_regime(dx: int, dy: int) -> RegimeId:
    return REGIMES[regime_index(dx, dy)]


def _rotate_offset(dx: int, dy: int) -> tuple[int, int]:
    """Rotate an offset 90 degrees anti-clockwise (north up)."""
    return dy, -dx


def representative(index: int) -> tuple[int, int]:
    """A canonical offset ``(dx, dy)`` inside regime ``index``."""
    q, local = divmod(index, N_LOCAL)
    u, v = _LOCAL_REPR[local]
    dx, dy = u, -v
    for _ in range(q):
        dx, dy = _rotate_offset(dx, dy)
    return dx, dy


# --------------------------------------------------------------------------
# Tables

def penalty_matrix(dx: int, dy: int, exact: bool = True) -> np.ndarray:
    """3x3 matrix of :func:`incremental_penalty` for every move at one offset."""
    mat = np.empty((3, 3), dtype=object if exact else float)
    mat[1, 1] = Surd(0, 0) if exact else 0.0
    for m in MOVES:
        mat[m.di + 1, m.dj + 1] = incremental_penalty(dx, dy, m, exact)
    return mat


def _matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return all(a[m.di + 1, m.dj + 1] == b[m.di + 1, m.dj + 1] for m in MOVES)


@dataclass(frozen=True)
class PenaltyTables:
    """The 28 lookup matrices, exact and float, plus per-regime 8-tuples
    ordered like :data:`MOVES` for the search loops."""

    exact_matrices: tuple[np.ndarray, ...]
    matrices: tuple[np.ndarray, ...]
    exact_vectors: tuple[tuple[Surd, ...], ...]
    vectors: tuple[tuple[float, ...], ...]

    def matrix(self, regime: RegimeId, exact: bool = False) -> np.ndarray:
        k = REGIMES.index(regime)
        return self.exact_matrices[k] if exact else self.matrices[k]


def build_penalty_tables() -> PenaltyTables:
    """Evaluate the seven first-quadrant regimes directly and obtain the
    other 21 by successive 90 degree anti-clockwise rotations, checking
    every rotated matrix against direct evaluation."""
    exact: list[np.ndarray | None] = [None] * N_REGIMES
    for local in range(N_LOCAL):
        exact[local] = penalty_matrix(*representative(local))
    for q in range(1, 4):
        for local in range(N_LOCAL):
            k = q * N_LOCAL + local
            rotated = np.rot90(exact[k - N_LOCAL])
            direct = penalty_matrix(*representative(k))
            if not _matrices_equal(rotated, direct):
                raise ConstructionMismatch(
                    f"regime {REGIMES[k]}: rotation gives\n{rotated}\nbut direct gives\n{direct}"
                )
            exact[k] = rotated.copy()
    floats = []
    for mat in exact:
        f = np.array([[float(v) for v in row] for row in mat])
        f.setflags(write=False)
        floats.append(f)
        mat.setflags(write=False)
    ev = tuple(tuple(mat[m.di + 1, m.dj + 1] for m in MOVES) for mat in exact)
    fv = tuple(tuple(float(v) for v in vec) for vec in ev)
    return PenaltyTables(tuple(exact), tuple(floats), ev, fv)


_DEFAULT: PenaltyTables | None = None


def default_tables() -> PenaltyTables:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = build_penalty_tables()
    return _DEFAULT


def lookup_penalty(tables: PenaltyTables, dx: int, dy: int, m, exact: bool = False):
    k = regime_index(dx, dy)
    mat = tables.exact_matrices[k] if exact else tables.matrices[k]
    return mat[m[0] + 1, m[1] + 1]


def discover_regimes(radius: int) -> dict[tuple, list[tuple[int, int]]]:
    """Group every offset with ``|dx|, |dy| <= radius`` by its exact
    8-move penalty vector. Independent of :func:`regime_index`."""
    groups: dict[tuple, list[tuple[int, int]]] = {}
    for dx in range(-radius, radius + 1):
        for dy in range(-radius, radius + 1):
            if dx == 0 and dy == 0:
                continue
            key = tuple(
                (p.a, p.b) for p in (incremental_penalty(dx, dy, m, exact=True) for m in MOVES)
            )
            groups.setdefault(key, []).append((dx, dy))
    return groups


def format_tables(tables: PenaltyTables) -> str:
    """Human-readable dump of all 28 matrices."""
    out = []
    for k, (regime, mat) in enumerate(zip(REGIMES, tables.exact_matrices)):
        dx, dy = representative(k)
        out.append(
            f"[{k:2d}] angle {regime.angle:>9} {regime.proximity.value:<13} e.g. dx={dx} dy={dy}"
        )
        cells = [["" if (r, c) == (1, 1) else str(mat[r, c]) for c in range(3)] for r in range(3)]
        width = max(len(s) for row in cells for s in row)
        for row in cells:
            out.append("    " + "  ".join(s.rjust(width) if s else "·".rjust(width) for s in row))
    return "\n".join(out)


def move_for(di: int, dj: int) -> Move:
    return Move(di, dj)
