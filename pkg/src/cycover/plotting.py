"""SVG scatter of e against h11 + h12.

Only the point coordinates are meaningful; the layout mirrors a 1500 x 2519
canvas and is not otherwise a contract. Output is plain text with no
timestamps, so identical inputs give identical files.
"""

from __future__ import annotations

from typing import Sequence

WIDTH = 1500
HEIGHT = 2519
MARGIN_LEFT = 140
MARGIN_RIGHT = 60
MARGIN_TOP = 40
MARGIN_BOTTOM = 120
BIG_RADIUS = 9
SMALL_RADIUS = 2


def _nice_ticks(lo: int, hi: int, target: int = 8) -> list[int]:
    span = max(hi - lo, 1)
    step = 1
    for candidate in (1, 2, 5, 10, 20, 25, 50, 100, 200, 250, 500, 1000):
        step = candidate
        if span / candidate <= target:
            break
    start = (lo // step) * step
    return list(range(start, hi + step, step))


def render_svg(
    points: Sequence[tuple[int, int]],
    labels: Sequence[str] = (),
    background: Sequence[tuple[int, int]] = (),
) -> str:
    all_pts = list(points) + list(background)
    if all_pts:
        xs = [p[0] for p in all_pts]
        ys = [p[1] for p in all_pts]
        xticks = _nice_ticks(min(xs), max(xs))
        yticks = _nice_ticks(min(0, min(ys)), max(ys))
    else:
        xticks, yticks = [-1, 0], [0, 1]
    x0, x1 = xticks[0], xticks[-1]
    y0, y1 = yticks[0], yticks[-1]
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w

    def sy(y: float) -> float:
        return MARGIN_TOP + plot_h - (y - y0) / (y1 - y0) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>',
    ]
    for t in xticks:
        out.append(
            f'<text x="{sx(t):.1f}" y="{MARGIN_TOP + plot_h + 40}" font-size="28" '
            f'text-anchor="middle">{t}</text>'
        )
    for t in yticks:
        out.append(
            f'<text x="{MARGIN_LEFT - 15}" y="{sy(t) + 10:.1f}" font-size="28" '
            f'text-anchor="end">{t}</text>'
        )
    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 30}" font-size="32" '
        'text-anchor="middle">e (topological Euler number)</text>'
    )
    out.append(
        f'<text x="40" y="{MARGIN_TOP + plot_h / 2:.1f}" font-size="32" text-anchor="middle" '
        f'transform="rotate(-90 40 {MARGIN_TOP + plot_h / 2:.1f})">h11 + h12</text>'
    )
    for x, y in background:
        out.append(f'<circle class="background" cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="{SMALL_RADIUS}"/>')
    for i, (x, y) in enumerate(points):
        title = f"<title>{labels[i]}</title>" if i < len(labels) else ""
        out.append(
            f'<circle class="catalog" cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="{BIG_RADIUS}">{title}</circle>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
