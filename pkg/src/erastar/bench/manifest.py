"""Corpus manifests.

A manifest is plain text, one directive per line::

    # comment
    group random100
    gen name=r100_a width=100 height=100 ratio=0.2 rect_min=2 rect_max=10 seed=1
    group mazes
    map maps/maze512-8-0.map

``map`` paths are resolved against the manifest's directory. Every map
belongs to the most recent ``group`` (``default`` before any).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from ..grid import CornerRule, GridMap, generate_random_map, load_map

GEN_KEYS = {"width": int, "height": int, "ratio": float, "rect_min": int, "rect_max": int, "seed": int}


@dataclass(frozen=True)
class MapSource:
    map_id: str
    group: str
    path: Path | None = None
    gen: dict = field(default_factory=dict)

    def load(self, corner_rule=CornerRule.CUT_ALLOWED) -> GridMap:
        if self.path is not None:
            return load_map(self.path, corner_rule)
        p = self.gen
        return generate_random_map(
            p["width"], p["height"], p["ratio"], p["rect_min"], p["rect_max"], p["seed"],
            corner_rule,
        )


def parse_gen_spec(text: str, group: str = "default") -> MapSource:
    """``key=value`` pairs separated by spaces or commas."""
    params = {}
    name = None
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        if "=" not in tok:
            raise ValueError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        if key == "name":
            name = val
        elif key == "group":
            group = val
        elif key in GEN_KEYS:
            params[key] = GEN_KEYS[key](val)
        else:
            raise ValueError(f"unknown generator parameter {key!r}")
    params.setdefault("rect_min", 2)
    params.setdefault("rect_max", 10)
    params.setdefault("seed", 0)
    missing = {"width", "height", "ratio"} - params.keys()
    if missing:
        raise ValueError(f"generator spec missing {sorted(missing)}")
    if name is None:
        name = "gen_{width}x{height}_r{ratio}_s{rect_min}-{rect_max}_seed{seed}".format(**params)
    return MapSource(name, group, None, params)


def parse_manifest(text: str, base_dir: Path | str = ".") -> list[MapSource]:
    base = Path(base_dir)
    group = "default"
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        rest = rest.strip()
        if kind == "group" and rest:
            group = rest
        elif kind == "map" and rest:
            path = Path(rest)
            if not path.is_absolute():
                path = base / path
            out.append(MapSource(path.stem, group, path))
        elif kind == "gen" and rest:
            out.append(parse_gen_spec(rest, group))
        else:
            raise ValueError(f"manifest line {lineno}: cannot parse {raw!r}")
    return out


def read_manifest(path) -> list[MapSource]:
    path = Path(path)
    return parse_manifest(path.read_text(), path.parent)


def desk_corpus(n_maps: int = 30, size: int = 100, seed: int = 2023) -> list[MapSource]:
    """Seeded 100x100 random-rectangle maps used by the acceptance suite.

    Obstacle ratios cycle through 0.10 .. 0.30; rectangle sides are 2-10
    cells for the first half and 5-20 for the second.
    """
    ratios = (0.10, 0.15, 0.20, 0.25, 0.30)
    out = []
    for k in range(n_maps):
        lo, hi = (2, 10) if k < n_maps // 2 else (5, 20)
        params = dict(width=size, height=size, ratio=ratios[k % len(ratios)],
                      rect_min=lo, rect_max=hi, seed=seed + k)
        out.append(MapSource(f"desk{size}_{k:02d}", f"{size}x{size}", None, params))
    return out
