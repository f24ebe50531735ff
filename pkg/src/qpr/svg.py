"""Minimal deterministic SVG charts (bars and lines), no plotting deps.

Charts are inspection artifacts: fixed palette, fixed geometry, every
coordinate formatted to two decimals so identical inputs give identical
bytes.
"""

from __future__ import annotations

from typing import Sequence

PALETTE = ("#4472c4", "#ed7d31", "#70ad47", "#ffc000", "#7030a0",
           "#c00000", "#2e75b6", "#548235", "#bf9000", "#7f7f7f")

_FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _f(x: float) -> str:
    return f"{x:.2f}"


def _tick_label(x: float) -> str:
    return f"{x:.4g}"


def _axes(parts: list[str], left: float, top: float, right: float,
          bottom: float, vmax: float, y_ticks: int = 5) -> None:
    parts.append(f'<line x1="{_f(left)}" y1="{_f(bottom)}" x2="{_f(right)}" '
                 f'y2="{_f(bottom)}" stroke="#333" stroke-width="1"/>')
    parts.append(f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(left)}" '
                 f'y2="{_f(bottom)}" stroke="#333" stroke-width="1"/>')
    for i in range(y_ticks + 1):
        frac = i / y_ticks
        y = bottom - frac * (bottom - top)
        parts.append(f'<line x1="{_f(left - 4)}" y1="{_f(y)}" x2="{_f(left)}" '
                     f'y2="{_f(y)}" stroke="#333" stroke-width="1"/>')
        parts.append(f'<text x="{_f(left - 7)}" y="{_f(y + 3.5)}" {_FONT} '
                     f'font-size="10" text-anchor="end">{_tick_label(frac * vmax)}</text>')


def _legend(parts: list[str], names: Sequence[str], right: float, top: float) -> None:
    for i, name in enumerate(names):
        y = top + 14 * i
        color = PALETTE[i % len(PALETTE)]
        parts.append(f'<rect x="{_f(right - 110)}" y="{_f(y)}" width="10" '
                     f'height="10" fill="{color}"/>')
        parts.append(f'<text x="{_f(right - 96)}" y="{_f(y + 9)}" {_FONT} '
                     f'font-size="11">{name}</text>')


def _header(width: int, height: int, title: str) -> list[str]:
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">',
             f'<rect width="{width}" height="{height}" fill="white"/>']
    if title:
        parts.append(f'<text x="{_f(width / 2)}" y="18" {_FONT} font-size="13" '
                     f'text-anchor="middle">{title}</text>')
    return parts


def grouped_bar_chart(labels: Sequence, series: Sequence[tuple[str, Sequence[float]]],
                      title: str = "", width: int = 960, height: int = 380) -> str:
    """Vertical grouped bars: one group per label, one bar per series."""
    left, right, top, bottom = 60.0, width - 20.0, 34.0, height - 36.0
    vmax = max((max(vals) for _, vals in series if len(vals)), default=0.0)
    vmax = vmax * 1.05 if vmax > 0 else 1.0
    parts = _header(width, height, title)
    _axes(parts, left, top, right, bottom, vmax)
    n_groups = max(len(labels), 1)
    n_series = max(len(series), 1)
    group_w = (right - left) / n_groups
    bar_w = group_w * 0.8 / n_series
    for si, (_, values) in enumerate(series):
        color = PALETTE[si % len(PALETTE)]
        for gi, value in enumerate(values):
            x = left + gi * group_w + group_w * 0.1 + si * bar_w
            h = (value / vmax) * (bottom - top)
            parts.append(f'<rect x="{_f(x)}" y="{_f(bottom - h)}" '
                         f'width="{_f(bar_w)}" height="{_f(h)}" fill="{color}"/>')
    label_every = max(1, (n_groups + 14) // 15)
    for gi, label in enumerate(labels):
        if gi % label_every:
            continue
        x = left + gi * group_w + group_w / 2
        parts.append(f'<text x="{_f(x)}" y="{_f(bottom + 14)}" {_FONT} '
                     f'font-size="10" text-anchor="middle">{label}</text>')
    _legend(parts, [name for name, _ in series], right, top)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def line_chart(series: Sequence[tuple[str, Sequence[float], Sequence[float]]],
               title: str = "", x_label: str = "", y_label: str = "",
               width: int = 720, height: int = 380) -> str:
    """Polyline chart; every series is (name, xs, ys) on shared axes."""
    left, right, top, bottom = 60.0, width - 20.0, 34.0, height - 40.0
    xs_all = [x for _, xs, _ in series for x in xs]
    ys_all = [y for _, _, ys in series for y in ys]
    xmin, xmax = (min(xs_all), max(xs_all)) if xs_all else (0.0, 1.0)
    if xmax == xmin:
        xmax = xmin + 1.0
    vmax = max(ys_all) if ys_all else 1.0
    vmax = vmax * 1.05 if vmax > 0 else 1.0
    parts = _header(width, height, title)
    _axes(parts, left, top, right, bottom, vmax)

    def sx(x: float) -> float:
        return left + (x - xmin) / (xmax - xmin) * (right - left)

    def sy(y: float) -> float:
        return bottom - (y / vmax) * (bottom - top)

    for si, (_, xs, ys) in enumerate(series):
        color = PALETTE[si % len(PALETTE)]
        points = " ".join(f"{_f(sx(x))},{_f(sy(y))}" for x, y in zip(xs, ys))
        parts.append(f'<polyline points="{points}" fill="none" '
                     f'stroke="{color}" stroke-width="1.5"/>')
    for i in range(5):
        x = xmin + (xmax - xmin) * i / 4
        parts.append(f'<text x="{_f(sx(x))}" y="{_f(bottom + 14)}" {_FONT} '
                     f'font-size="10" text-anchor="middle">{_tick_label(x)}</text>')
    if x_label:
        parts.append(f'<text x="{_f((left + right) / 2)}" y="{_f(height - 6)}" '
                     f'{_FONT} font-size="11" text-anchor="middle">{x_label}</text>')
    if y_label:
        parts.append(f'<text x="14" y="{_f((top + bottom) / 2)}" {_FONT} '
                     f'font-size="11" text-anchor="middle" '
                     f'transform="rotate(-90 14 {_f((top + bottom) / 2)})">{y_label}</text>')
    _legend(parts, [name for name, _, _ in series], right, top)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
