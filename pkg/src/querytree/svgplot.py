"""Tiny dependency-free SVG emitters for line charts and histograms."""

from __future__ import annotations

from typing import Optional, Sequence

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 30, 45
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    raw = span / max(count - 1, 1)
    mag = 10 ** int(f"{raw:e}".split("e")[1])
    step = next(s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw)
    start = int(lo / step) * step
    out = []
    t = start
    while t <= hi + step / 2:
        if t >= lo - step / 2:
            out.append(round(t, 10))
        t += step
    return out


def _fmt(v: float) -> str:
    if v == int(v):
        return str(int(v))
    return f"{v:g}"


class _Canvas:
    def __init__(self, x_range, y_range, title, x_label, y_label):
        self.x_lo, self.x_hi = x_range
        self.y_lo, self.y_hi = y_range
        if self.x_hi <= self.x_lo:
            self.x_hi = self.x_lo + 1.0
        if self.y_hi <= self.y_lo:
            self.y_hi = self.y_lo + 1.0
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2}" y="18" text-anchor="middle" font-size="14">{title}</text>',
            f'<text x="{WIDTH / 2}" y="{HEIGHT - 8}" text-anchor="middle">{x_label}</text>',
            f'<text x="14" y="{HEIGHT / 2}" text-anchor="middle" '
            f'transform="rotate(-90 14 {HEIGHT / 2})">{y_label}</text>',
        ]
        self._axes()

    def x_px(self, x: float) -> float:
        frac = (x - self.x_lo) / (self.x_hi - self.x_lo)
        return MARGIN_L + frac * (WIDTH - MARGIN_L - MARGIN_R)

    def y_px(self, y: float) -> float:
        frac = (y - self.y_lo) / (self.y_hi - self.y_lo)
        return HEIGHT - MARGIN_B - frac * (HEIGHT - MARGIN_T - MARGIN_B)

    def _axes(self) -> None:
        x0, y0 = MARGIN_L, HEIGHT - MARGIN_B
        self.parts.append(
            f'<line x1="{x0}" y1="{MARGIN_T}" x2="{x0}" y2="{y0}" stroke="black"/>'
            f'<line x1="{x0}" y1="{y0}" x2="{WIDTH - MARGIN_R}" y2="{y0}" stroke="black"/>'
        )
        for t in _ticks(self.x_lo, self.x_hi):
            px = self.x_px(t)
            self.parts.append(
                f'<line x1="{px:.1f}" y1="{y0}" x2="{px:.1f}" y2="{y0 + 4}" stroke="black"/>'
                f'<text x="{px:.1f}" y="{y0 + 17}" text-anchor="middle">{_fmt(t)}</text>'
            )
        for t in _ticks(self.y_lo, self.y_hi):
            py = self.y_px(t)
            self.parts.append(
                f'<line x1="{x0 - 4}" y1="{py:.1f}" x2="{x0}" y2="{py:.1f}" stroke="black"/>'
                f'<text x="{x0 - 7}" y="{py + 4:.1f}" text-anchor="end">{_fmt(t)}</text>'
            )

    def render(self) -> str:
        return "".join(self.parts) + "</svg>"


def line_chart(
    series: Sequence[tuple[str, Sequence[tuple[float, float]]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    hline: Optional[tuple[float, str]] = None,
    legend: bool = True,
) -> str:
    """Polyline chart; ``hline`` draws a labelled horizontal reference."""
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    if hline is not None:
        ys.append(hline[0])
    canvas = _Canvas(
        (min(xs, default=0.0), max(xs, default=1.0)),
        (min(0.0, min(ys, default=0.0)), max(ys, default=1.0)),
        title, x_label, y_label,
    )
    if hline is not None:
        y = canvas.y_px(hline[0])
        canvas.parts.append(
            f'<line x1="{MARGIN_L}" y1="{y:.1f}" x2="{WIDTH - MARGIN_R}" y2="{y:.1f}" '
            f'stroke="#d62728" stroke-dasharray="6,4"/>'
            f'<text x="{WIDTH - MARGIN_R - 4}" y="{y - 5:.1f}" text-anchor="end" '
            f'fill="#d62728">{hline[1]}</text>'
        )
    for idx, (label, pts) in enumerate(series):
        if not pts:
            continue
        color = PALETTE[idx % len(PALETTE)]
        coords = " ".join(f"{canvas.x_px(x):.1f},{canvas.y_px(y):.1f}" for x, y in pts)
        canvas.parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.4"/>'
        )
        if legend and label:
            ly = MARGIN_T + 14 * idx
            canvas.parts.append(
                f'<line x1="{WIDTH - 150}" y1="{ly}" x2="{WIDTH - 130}" y2="{ly}" '
                f'stroke="{color}" stroke-width="2"/>'
                f'<text x="{WIDTH - 125}" y="{ly + 4}">{label}</text>'
            )
    return canvas.render()


def histogram_chart(
    bins: Sequence[tuple[float, int]],
    bin_width: float,
    title: str = "",
    x_label: str = "",
    y_label: str = "count",
) -> str:
    """Bar chart over ``(lower edge, count)`` bins of uniform width."""
    if not bins:
        raise ValueError("no bins to plot")
    x_lo = bins[0][0]
    x_hi = bins[-1][0] + bin_width
    y_hi = max(c for _, c in bins)
    canvas = _Canvas((x_lo, x_hi), (0.0, float(y_hi)), title, x_label, y_label)
    base = canvas.y_px(0.0)
    for lo, count in bins:
        if count == 0:
            continue
        x1, x2 = canvas.x_px(lo), canvas.x_px(lo + bin_width)
        y = canvas.y_px(float(count))
        canvas.parts.append(
            f'<rect x="{x1:.1f}" y="{y:.1f}" width="{x2 - x1:.1f}" '
            f'height="{base - y:.1f}" fill="#1f77b4" stroke="white"/>'
        )
    return canvas.render()
