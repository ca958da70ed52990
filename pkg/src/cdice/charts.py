"""Deterministic SVG line charts for benchmark and trajectory output.

The renderer emits plain polyline/polygon primitives with fixed float
formatting, so identical inputs produce byte-identical files (golden-file
testable).  No plotting library is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ChartError",
    "Series",
    "Band",
    "Chart",
    "render_chart",
    "write_chart",
    "rcp_band_chart",
]

# Fixed palette; colors cycle if a chart holds more series.
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#17becf", "#7f7f7f")

_W, _H = 720, 440
_ML, _MR, _MT, _MB = 64, 16, 28, 44  # margins: left, right, top, bottom


class ChartError(ValueError):
    """Inconsistent chart input."""


@dataclass
class Series:
    """One line: x/y arrays plus a legend label."""

    label: str
    x: np.ndarray
    y: np.ndarray
    color: str | None = None
    dash: str | None = None  # SVG dash pattern, e.g. "6,3"

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.y = np.asarray(self.y, dtype=float)
        if self.x.shape != self.y.shape or self.x.ndim != 1:
            raise ChartError(f"series {self.label!r} has mismatched x/y")
        if len(self.x) == 0:
            raise ChartError(f"series {self.label!r} is empty")
        if not (np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise ChartError(f"series {self.label!r} contains non-finite values")


@dataclass
class Band:
    """A shaded envelope between two curves sharing an x axis."""

    label: str
    x: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    color: str = "#888888"
    opacity: float = 0.25

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        if not (self.x.shape == self.lower.shape == self.upper.shape):
            raise ChartError(f"band {self.label!r} has mismatched arrays")
        if (self.lower > self.upper + 1e-12).any():
            raise ChartError(f"band {self.label!r} bounds cross")


@dataclass
class Chart:
    """A complete figure: bands are drawn first, series on top."""

    title: str
    x_label: str
    y_label: str
    series: list = field(default_factory=list)
    bands: list = field(default_factory=list)


def _fmt(v: float) -> str:
    """Fixed two-decimal coordinate formatting for deterministic output."""
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, n: int = 6) -> np.ndarray:
    """Round tick positions covering [lo, hi]."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(n - 1, 1)
    mag = 10.0 ** np.floor(np.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = mult * mag
        if step >= raw:
            break
    first = np.ceil(lo / step) * step
    ticks = np.arange(first, hi + 0.5 * step, step)
    return np.round(ticks, 10)


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


def render_chart(chart: Chart) -> str:
    """Render to an SVG string (deterministic for fixed input)."""
    if not chart.series and not chart.bands:
        raise ChartError("chart has no content")
    xs = [s.x for s in chart.series] + [b.x for b in chart.bands]
    ys = ([s.y for s in chart.series]
          + [b.lower for b in chart.bands] + [b.upper for b in chart.bands])
    x_lo = min(float(a.min()) for a in xs)
    x_hi = max(float(a.max()) for a in xs)
    y_lo = min(float(a.min()) for a in ys)
    y_hi = max(float(a.max()) for a in ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo -= pad
    y_hi += pad

    pw = _W - _ML - _MR
    ph = _H - _MT - _MB

    def px(x):
        return _ML + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y):
        return _MT + (y_hi - y) / (y_hi - y_lo) * ph

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" '
               f'height="{_H}" viewBox="0 0 {_W} {_H}">')
    out.append(f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="#ffffff"/>')
    out.append(f'<text x="{_W // 2}" y="18" text-anchor="middle" '
               f'font-family="sans-serif" font-size="14">{_esc(chart.title)}</text>')

    # axes and grid
    for tx in _ticks(x_lo, x_hi):
        if tx < x_lo - 1e-9 or tx > x_hi + 1e-9:
            continue
        gx = _fmt(px(tx))
        out.append(f'<line x1="{gx}" y1="{_MT}" x2="{gx}" y2="{_H - _MB}" '
                   f'stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{gx}" y="{_H - _MB + 16}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">{tx:g}</text>')
    for ty in _ticks(y_lo, y_hi):
        if ty < y_lo - 1e-9 or ty > y_hi + 1e-9:
            continue
        gy = _fmt(py(ty))
        out.append(f'<line x1="{_ML}" y1="{gy}" x2="{_W - _MR}" y2="{gy}" '
                   f'stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{_ML - 6}" y="{gy}" text-anchor="end" '
                   f'dominant-baseline="middle" font-family="sans-serif" '
                   f'font-size="11">{ty:g}</text>')
    out.append(f'<rect x="{_ML}" y="{_MT}" width="{pw}" height="{ph}" '
               f'fill="none" stroke="#333333" stroke-width="1"/>')
    out.append(f'<text x="{_ML + pw // 2}" y="{_H - 8}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="12">{_esc(chart.x_label)}</text>')
    out.append(f'<text x="14" y="{_MT + ph // 2}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="12" '
               f'transform="rotate(-90 14 {_MT + ph // 2})">{_esc(chart.y_label)}</text>')

    # bands first (shaded envelopes)
    for band in chart.bands:
        pts = [f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(band.x, band.upper)]
        pts += [f"{_fmt(px(x))},{_fmt(py(y))}"
                for x, y in zip(band.x[::-1], band.lower[::-1])]
        out.append(f'<polygon class="band" points="{" ".join(pts)}" '
                   f'fill="{band.color}" fill-opacity="{band.opacity:g}" stroke="none"/>')

    # series lines
    for i, s in enumerate(chart.series):
        color = s.color or PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(s.x, s.y))
        dash = f' stroke-dasharray="{s.dash}"' if s.dash else ""
        out.append(f'<polyline class="line" points="{pts}" fill="none" '
                   f'stroke="{color}" stroke-width="1.8"{dash}/>')

    # legend
    lx, ly = _ML + 10, _MT + 12
    for i, s in enumerate(chart.series):
        color = s.color or PALETTE[i % len(PALETTE)]
        yy = ly + 16 * i
        out.append(f'<line x1="{lx}" y1="{yy}" x2="{lx + 22}" y2="{yy}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 28}" y="{yy + 4}" font-family="sans-serif" '
                   f'font-size="11">{_esc(s.label)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_chart(chart: Chart, path) -> None:
    """Render and write an SVG file."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_chart(chart))


def rcp_band_chart(years, computed_ppm, prescribed_ppm, title: str) -> Chart:
    """Concentration-conformance figure: computed curve against the
    prescribed path with shaded +-5% and +-20% tolerance bands."""
    years = np.asarray(years, dtype=float)
    prescribed = np.asarray(prescribed_ppm, dtype=float)
    chart = Chart(title=title, x_label="year", y_label="CO2 [ppm]")
    chart.bands.append(Band("+-20%", years, 0.80 * prescribed, 1.20 * prescribed,
                            color="#bbbbbb", opacity=0.3))
    chart.bands.append(Band("+-5%", years, 0.95 * prescribed, 1.05 * prescribed,
                            color="#888888", opacity=0.35))
    chart.series.append(Series("prescribed", years, prescribed,
                               color="#333333", dash="5,4"))
    chart.series.append(Series("computed", years,
                               np.asarray(computed_ppm, dtype=float),
                               color="#d62728"))
    return chart
