"""Tiny SVG 1.1 writer: a canvas with linear axes and a few primitives."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

PALETTE = {
    "era": "#1f77b4",
    "ra_wot": "#d62728",
    "astar_t": "#2ca02c",
    "dijkstra": "#7f7f7f",
}
FALLBACK = ("#9467bd", "#8c564b", "#ff7f0e", "#17becf")


def color(name: str, k: int = 0) -> str:
    return PALETTE.get(name, FALLBACK[k % len(FALLBACK)])


def nice_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 12))
        t += step
    return ticks


def _fmt(v: float) -> str:
    if v == 0:
        return "0"
    if abs(v) >= 1e4 or abs(v) < 1e-3:
        return f"{v:.2g}"
    return f"{v:g}"


class Chart:
    def __init__(self, title: str, x_label: str, y_label: str,
                 x_range: tuple[float, float], y_range: tuple[float, float],
                 width: int = 640, height: int = 420):
        self.width, self.height = width, height
        self.left, self.right, self.top, self.bottom = 70, width - 140, 40, height - 55
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        if self.x1 <= self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 <= self.y0:
            self.y1 = self.y0 + 1.0
        self.items: list[str] = []
        self.legend: list[tuple[str, str]] = []
        self.title, self.x_label, self.y_label = title, x_label, y_label

    def px(self, x: float) -> float:
        return self.left + (x - self.x0) / (self.x1 - self.x0) * (self.right - self.left)

    def py(self, y: float) -> float:
        return self.bottom - (y - self.y0) / (self.y1 - self.y0) * (self.bottom - self.top)

    def rect(self, x0, y0, x1, y1, fill, opacity=0.35, stroke=None):
        xa, xb = sorted((self.px(x0), self.px(x1)))
        ya, yb = sorted((self.py(y0), self.py(y1)))
        self.items.append(
            f'<rect x="{xa:.2f}" y="{ya:.2f}" width="{xb - xa:.2f}" height="{yb - ya:.2f}" '
            f'fill="{fill}" fill-opacity="{opacity}" stroke="{stroke or fill}"/>'
        )

    def line(self, x0, y0, x1, y1, stroke="#000", width=1.0):
        self.items.append(
            f'<line x1="{self.px(x0):.2f}" y1="{self.py(y0):.2f}" x2="{self.px(x1):.2f}" '
            f'y2="{self.py(y1):.2f}" stroke="{stroke}" stroke-width="{width}"/>'
        )

    def point(self, x, y, fill, r=3.0):
        self.items.append(
            f'<circle cx="{self.px(x):.2f}" cy="{self.py(y):.2f}" r="{r}" fill="{fill}" '
            'fill-opacity="0.7"/>'
        )

    def star(self, x, y, fill, r=7.0):
        cx, cy = self.px(x), self.py(y)
        pts = []
        for k in range(10):
            rad = r if k % 2 == 0 else r * 0.45
            a = -math.pi / 2 + k * math.pi / 5
            pts.append(f"{cx + rad * math.cos(a):.2f},{cy + rad * math.sin(a):.2f}")
        self.items.append(f'<polygon points="{" ".join(pts)}" fill="{fill}"/>')

    def text_at(self, x, y, text, anchor="middle"):
        self.items.append(
            f'<text x="{self.px(x):.2f}" y="{self.py(y):.2f}" text-anchor="{anchor}" '
            f'font-size="11">{escape(text)}</text>'
        )

    def add_legend(self, label: str, fill: str):
        self.legend.append((label, fill))

    def render(self, x_ticks=None, x_tick_labels=None) -> str:
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">',
            f'<rect x="0" y="0" width="{self.width}" height="{self.height}" fill="white"/>',
            f'<text x="{self.width / 2:.1f}" y="22" text-anchor="middle" font-size="14" '
            f'font-weight="bold">{escape(self.title)}</text>',
        ]
        out.append(
            f'<rect x="{self.left}" y="{self.top}" width="{self.right - self.left}" '
            f'height="{self.bottom - self.top}" fill="none" stroke="#444"/>'
        )
        ticks = x_ticks if x_ticks is not None else nice_ticks(self.x0, self.x1)
        labels = x_tick_labels or [_fmt(t) for t in ticks]
        for t, lab in zip(ticks, labels):
            if self.x0 <= t <= self.x1:
                x = self.px(t)
                out.append(f'<line x1="{x:.2f}" y1="{self.bottom}" x2="{x:.2f}" '
                           f'y2="{self.bottom + 5}" stroke="#444"/>')
                out.append(f'<text x="{x:.2f}" y="{self.bottom + 18}" text-anchor="middle" '
                           f'font-size="11">{escape(lab)}</text>')
        for t in nice_ticks(self.y0, self.y1):
            if self.y0 <= t <= self.y1:
                y = self.py(t)
                out.append(f'<line x1="{self.left - 5}" y1="{y:.2f}" x2="{self.left}" '
                           f'y2="{y:.2f}" stroke="#444"/>')
                out.append(f'<text x="{self.left - 8}" y="{y + 4:.2f}" text-anchor="end" '
                           f'font-size="11">{_fmt(t)}</text>')
        out.append(f'<text x="{(self.left + self.right) / 2:.1f}" y="{self.height - 12}" '
                   f'text-anchor="middle" font-size="12">{escape(self.x_label)}</text>')
        cy = (self.top + self.bottom) / 2
        out.append(f'<text x="16" y="{cy:.1f}" text-anchor="middle" font-size="12" '
                   f'transform="rotate(-90 16 {cy:.1f})">{escape(self.y_label)}</text>')
        out.extend(self.items)
        for k, (label, fill) in enumerate(self.legend):
            y = self.top + 10 + 18 * k
            out.append(f'<rect x="{self.right + 15}" y="{y - 9}" width="12" height="12" '
                       f'fill="{fill}"/>')
            out.append(f'<text x="{self.right + 32}" y="{y + 1}" font-size="12">'
                       f'{escape(label)}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"
