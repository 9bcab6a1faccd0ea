"""Occupancy grids, 8-connected neighbourhoods, Moving AI map I/O and a
seeded rectangle-obstacle generator.

Coordinates are ``(i, j)`` = (row, column) with row 0 at the top.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatch,
    MalformedHeader,
    OnObstacle,
    OutOfBounds,
    UnknownTerrainChar,
)

SQRT2 = math.sqrt(2.0)

FREE_CHARS = frozenset(".G")
BLOCKED_CHARS = frozenset("@OTSW")


class Cell(NamedTuple):
    i: int
    j: int


class Move(NamedTuple):
    di: int
    dj: int

    @property
    def diagonal(self) -> bool:
        return self.di != 0 and self.dj != 0

    @property
    def cost(self) -> float:
        return SQRT2 if self.di and self.dj else 1.0


# Row-major over the 3x3 stencil, centre excluded. Every planner iterates
# neighbours in this order, which fixes FIFO tie-breaking across them.
MOVES: tuple[Move, ...] = tuple(
    Move(di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)
)


class CornerRule(enum.Enum):
    CUT_ALLOWED = "allowed"
    CUT_FORBIDDEN = "forbidden"


class Layout:
    """Flat, obstacle-padded view of a grid used by the search loops.

    The map is surrounded by a one-cell blocked border so neighbour
    offsets never need a bounds check.
    """

    def __init__(self, occupancy: np.ndarray, corner_rule: CornerRule):
        h, w = occupancy.shape
        self.height, self.width = h, w
        self.stride = stride = w + 2
        self.size = (h + 2) * stride
        padded = np.zeros((h + 2, w + 2), dtype=np.uint8)
        padded[1:-1, 1:-1] = ~occupancy
        self.free = bytearray(padded.tobytes())
        self.n_free = int(np.count_nonzero(~occupancy))
        self.cut_allowed = corner_rule is CornerRule.CUT_ALLOWED
        # (move index, flat offset, guard offset a, guard offset b, diagonal)
        steps = []
        for k, m in enumerate(MOVES):
            off = m.di * stride + m.dj
            if m.diagonal and not self.cut_allowed:
                ga, gb = m.di * stride, m.dj
            else:
                ga = gb = 0
            steps.append((k, off, ga, gb, m.diagonal))
        self.steps = tuple(steps)

    def edges(self, values) -> tuple:
        """``(offset, value, guard_a, guard_b)`` per move, pairing each
        neighbour offset with a per-move value (step cost or penalty)."""
        return tuple((off, values[k], ga, gb) for k, off, ga, gb, _d in self.steps)

    def index(self, c) -> int:
        return (c[0] + 1) * self.stride + c[1] + 1

    def cell(self, p: int) -> Cell:
        r, q = divmod(p, self.stride)
        return Cell(r - 1, q - 1)


@dataclass(frozen=True, eq=False)
class GridMap:
    """Immutable occupancy grid; ``occupancy[i, j]`` is True for an obstacle."""

    occupancy: np.ndarray
    corner_rule: CornerRule = CornerRule.CUT_ALLOWED

    def __post_init__(self):
        occ = np.array(self.occupancy, dtype=bool, copy=True)
        if occ.ndim != 2 or occ.shape[0] < 1 or occ.shape[1] < 1:
            raise ValueError(f"occupancy must be a non-empty 2-D array, got {occ.shape}")
        occ.setflags(write=False)
        object.__setattr__(self, "occupancy", occ)

    @property
    def height(self) -> int:
        return self.occupancy.shape[0]

    @property
    def width(self) -> int:
        return self.occupancy.shape[1]

    @cached_property
    def layout(self) -> Layout:
        return Layout(self.occupancy, self.corner_rule)

    @property
    def n_free(self) -> int:
        return self.layout.n_free

    @property
    def n_obstacles(self) -> int:
        return int(np.count_nonzero(self.occupancy))

    def in_bounds(self, c) -> bool:
        return 0 <= c[0] < self.height and 0 <= c[1] < self.width

    def is_free(self, c) -> bool:
        return self.in_bounds(c) and not self.occupancy[c[0], c[1]]

    def free_cells(self) -> list[Cell]:
        ii, jj = np.nonzero(~self.occupancy)
        return [Cell(int(i), int(j)) for i, j in zip(ii, jj)]

    def with_corner_rule(self, rule: CornerRule) -> "GridMap":
        return GridMap(self.occupancy, rule)

    def __eq__(self, other):
        if not isinstance(other, GridMap):
            return NotImplemented
        return self.corner_rule is other.corner_rule and np.array_equal(
            self.occupancy, other.occupancy
        )

    def __hash__(self):
        return hash((self.occupancy.shape, self.occupancy.tobytes(), self.corner_rule))

    @classmethod
    def empty(cls, width: int, height: int, corner_rule=CornerRule.CUT_ALLOWED) -> "GridMap":
        return cls(np.zeros((height, width), dtype=bool), corner_rule)

    @classmethod
    def from_strings(cls, rows, corner_rule=CornerRule.CUT_ALLOWED) -> "GridMap":
        """Build from rows of ``.`` (free) and ``@`` (obstacle); handy in tests."""
        occ = np.array([[ch != "." for ch in row] for row in rows], dtype=bool)
        return cls(occ, corner_rule)


def neighbors(grid: GridMap, c) -> list[tuple[Cell, float]]:
    """Free 8-connected neighbours of ``c`` with their step costs."""
    if not grid.in_bounds(c):
        raise OutOfBounds(f"{tuple(c)} outside {grid.height}x{grid.width} map")
    if grid.occupancy[c[0], c[1]]:
        raise OnObstacle(f"{tuple(c)} is an obstacle")
    out = []
    forbid = grid.corner_rule is CornerRule.CUT_FORBIDDEN
    for m in MOVES:
        n = Cell(c[0] + m.di, c[1] + m.dj)
        if not grid.is_free(n):
            continue
        if forbid and m.diagonal:
            if not (grid.is_free((c[0] + m.di, c[1])) and grid.is_free((c[0], c[1] + m.dj))):
                continue
        out.append((n, m.cost))
    return out


# --------------------------------------------------------------------------
# Moving AI .map format

def parse_movingai_map(text: str, corner_rule=CornerRule.CUT_ALLOWED) -> GridMap:
    lines = text.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 4:
        raise MalformedHeader("expected four header lines")

    def field(line: str, key: str) -> str:
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise MalformedHeader(f"expected '{key} <value>', got {line!r}")
        return parts[1]

    field(lines[0], "type")
    try:
        height = int(field(lines[1], "height"))
        width = int(field(lines[2], "width"))
    except ValueError as exc:
        if isinstance(exc, MalformedHeader):
            raise
        raise MalformedHeader(f"non-integer dimension: {exc}") from None
    if height < 1 or width < 1:
        raise MalformedHeader(f"bad dimensions {height}x{width}")
    if lines[3].strip() != "map":
        raise MalformedHeader(f"expected 'map', got {lines[3]!r}")

    body = lines[4:]
    if len(body) != height:
        raise DimensionMismatch(f"header says {height} rows, body has {len(body)}")
    occ = np.zeros((height, width), dtype=bool)
    for i, row in enumerate(body):
        if len(row) != width:
            raise DimensionMismatch(f"row {i} has {len(row)} chars, expected {width}")
        for j, ch in enumerate(row):
            if ch in BLOCKED_CHARS:
                occ[i, j] = True
            elif ch not in FREE_CHARS:
                raise UnknownTerrainChar(f"{ch!r} at ({i}, {j})")
    return GridMap(occ, corner_rule)


def format_movingai_map(grid: GridMap) -> str:
    rows = ["".join("@" if b else "." for b in row) for row in grid.occupancy]
    header = ["type octile", f"height {grid.height}", f"width {grid.width}", "map"]
    return "\n".join(header + rows) + "\n"


def load_map(path, corner_rule=CornerRule.CUT_ALLOWED) -> GridMap:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_movingai_map(fh.read(), corner_rule)


def save_map(grid: GridMap, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_movingai_map(grid))


# --------------------------------------------------------------------------
# Random maps

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014). Stable across platforms and
    Python versions, which is why it is used instead of :mod:`random`."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


def derive_seed(*parts: int) -> int:
    """Mix several integers into one 64-bit seed."""
    rng = SplitMix64(0x5EED)
    acc = 0
    for p in parts:
        rng.state ^= (p & _MASK64)
        acc = rng.next_u64()
    return acc


def generate_random_map(
    width: int,
    height: int,
    obstacle_ratio: float,
    rect_min: int,
    rect_max: int,
    seed: int,
    corner_rule=CornerRule.CUT_ALLOWED,
) -> GridMap:
    """Drop axis-aligned rectangles until the obstacle fraction reaches
    ``obstacle_ratio``.

    Per rectangle the draws are, in order: column of the top-left corner,
    row of the top-left corner, width, height (all via :class:`SplitMix64`).
    Rectangles are clipped at the map edge. Placement gives up after
    ``10 * width * height / rect_min**2`` attempts.
    """
    if width < 2 or height < 2:
        raise ValueError("width and height must be >= 2")
    if not 0 <= obstacle_ratio < 1:
        raise ValueError("obstacle_ratio must be in [0, 1)")
    if rect_min < 1 or rect_max < rect_min:
        raise ValueError("need 1 <= rect_min <= rect_max")
    occ = np.zeros((height, width), dtype=bool)
    rng = SplitMix64(seed)
    total = width * height
    target = obstacle_ratio * total
    max_attempts = 10 * total // (rect_min * rect_min)
    filled = 0
    attempts = 0
    while filled < target and attempts < max_attempts:
        x = rng.below(width)
        y = rng.below(height)
        w = rng.between(rect_min, rect_max)
        h = rng.between(rect_min, rect_max)
        occ[y:y + h, x:x + w] = True
        filled = int(np.count_nonzero(occ))
        attempts += 1
    return GridMap(occ, corner_rule)
