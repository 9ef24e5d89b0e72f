"""
Line charts of benchmark CSV files, written as plain SVG.
"""

import csv
import logging
import math
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Tuple, Union
from xml.sax.saxutils import escape

from .exceptions import ValidationError

logger = logging.getLogger(__name__)

WIDTH = 720
HEIGHT = 440
MARGIN = {"top": 40, "right": 170, "bottom": 50, "left": 80}
COLORS = [
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
]
TICKS = 5

Series = Dict[str, List[Tuple[float, float]]]


def read_rows(path: Union[str, Path]) -> List[Dict[str, str]]:
    with Path(path).open(newline="", encoding="utf-8") as handle:
        return list(csv.DictReader(handle))


def collect_series(rows: List[Dict[str, str]], x: str, y: str, group: str) -> Series:
    """Mean y per x for every group value, points sorted by x."""
    if not rows:
        raise ValidationError("CSV has no data rows")
    missing = [field for field in (x, y, group) if field not in rows[0]]
    if missing:
        raise ValidationError("field not in CSV header", {"missing": missing})

    buckets = defaultdict(lambda: defaultdict(list))
    for number, row in enumerate(rows, start=2):
        try:
            buckets[row[group]][float(row[x])].append(float(row[y]))
        except ValueError:
            raise ValidationError("non-numeric value", {"line": number, "x": row[x], "y": row[y]})

    return {
        name: sorted((px, sum(ys) / len(ys)) for px, ys in points.items())
        for name, points in sorted(buckets.items())
    }


class _Axis:
    def __init__(self, values: List[float], log: bool, start: float, end: float):
        if log and min(values) <= 0:
            raise ValidationError("log axes need positive values", {"min": min(values)})
        self.log = log
        self.lo = self._t(min(values))
        self.hi = self._t(max(values))
        if self.hi == self.lo:
            self.lo -= 0.5
            self.hi += 0.5
        self.start = start
        self.end = end

    def _t(self, value: float) -> float:
        return math.log10(value) if self.log else value

    def position(self, value: float) -> float:
        frac = (self._t(value) - self.lo) / (self.hi - self.lo)
        return self.start + frac * (self.end - self.start)

    def ticks(self) -> List[Tuple[float, str]]:
        result = []
        for i in range(TICKS):
            t = self.lo + (self.hi - self.lo) * i / (TICKS - 1)
            value = 10**t if self.log else t
            result.append((self.start + (self.end - self.start) * i / (TICKS - 1), f"{value:.4g}"))
        return result


def render_svg(series: Series, x: str, y: str, log: bool = False) -> str:
    """One polyline per series with axes, tick labels and a legend."""
    xs = [px for points in series.values() for px, _ in points]
    ys = [py for points in series.values() for _, py in points]
    left, top = MARGIN["left"], MARGIN["top"]
    right, bottom = WIDTH - MARGIN["right"], HEIGHT - MARGIN["bottom"]
    x_axis = _Axis(xs, log, left, right)
    y_axis = _Axis(ys, log, bottom, top)

    scale = "log-log" if log else "linear"
    svg = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'  <text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15" '
        f'font-weight="bold">{escape(y)} vs {escape(x)} ({scale})</text>',
        f'  <line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#333"/>',
        f'  <line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#333"/>',
    ]
    for px, label in x_axis.ticks():
        svg.append(f'  <line x1="{px:.2f}" y1="{bottom}" x2="{px:.2f}" y2="{bottom + 5}" stroke="#333"/>')
        svg.append(
            f'  <text x="{px:.2f}" y="{bottom + 18}" text-anchor="middle" font-size="11">{label}</text>'
        )
    for py, label in y_axis.ticks():
        svg.append(f'  <line x1="{left - 5}" y1="{py:.2f}" x2="{right}" y2="{py:.2f}" stroke="#eee"/>')
        svg.append(
            f'  <text x="{left - 8}" y="{py + 4:.2f}" text-anchor="end" font-size="11">{label}</text>'
        )
    svg.append(
        f'  <text x="{(left + right) / 2:.1f}" y="{HEIGHT - 12}" text-anchor="middle" '
        f'font-size="12">{escape(x)}</text>'
    )

    for index, (name, points) in enumerate(series.items()):
        color = COLORS[index % len(COLORS)]
        path = " ".join(f"{x_axis.position(px):.2f},{y_axis.position(py):.2f}" for px, py in points)
        svg.append(f'  <polyline points="{path}" fill="none" stroke="{color}" stroke-width="2"/>')
        for px, py in points:
            svg.append(
                f'  <circle cx="{x_axis.position(px):.2f}" cy="{y_axis.position(py):.2f}" '
                f'r="3" fill="{color}"/>'
            )
        ly = top + 10 + index * 18
        svg.append(f'  <rect x="{right + 15}" y="{ly - 9}" width="12" height="12" fill="{color}"/>')
        svg.append(f'  <text x="{right + 32}" y="{ly + 1}" font-size="12">{escape(name)}</text>')

    svg.append("</svg>")
    return "\n".join(svg) + "\n"


def plot_csv(
    csv_path: Union[str, Path],
    output: Union[str, Path],
    x: str,
    y: str,
    group: str = "backend",
    log: bool = False,
) -> None:
    """Render ``csv_path`` to ``output``; nothing is written when rendering fails."""
    series = collect_series(read_rows(csv_path), x, y, group)
    svg = render_svg(series, x, y, log)
    Path(output).write_text(svg, encoding="utf-8")
    logger.info(f"Wrote {len(series)} series to {output}")
