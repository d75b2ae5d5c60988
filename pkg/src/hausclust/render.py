"""Plain SVG dendrogram drawing, leaves along x and merge heights along y."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .analysis import detect_backsteps
from .linkage import Dendrogram

MERGE_STROKE = "#333333"
BACKSTEP_STROKE = "#d62728"


def leaf_order(dendro: Dendrogram) -> list[int]:
    n = dendro.n_leaves
    if n == 1:
        return [0]
    children = {m.new_id: (m.left, m.right) for m in dendro.merges}
    order, stack = [], [dendro.merges[-1].new_id]
    while stack:
        c = stack.pop()
        if c < n:
            order.append(c)
        else:
            left, right = children[c]
            stack.extend((right, left))
    return order


def render_svg(dendro: Dendrogram, width_per_leaf: float = 14.0, plot_height: float = 320.0) -> str:
    n = dendro.n_leaves
    left_pad, top_pad, bottom_pad = 60.0, 20.0, 90.0
    width = left_pad + 20.0 + width_per_leaf * max(n - 1, 1)
    height = top_pad + plot_height + bottom_pad
    top = max((m.height for m in dendro.merges), default=0.0) or 1.0
    base = top_pad + plot_height

    def ypos(h):
        return base - plot_height * h / top

    x = {leaf: left_pad + width_per_leaf * i for i, leaf in enumerate(leaf_order(dendro))}
    y = {leaf: base for leaf in range(n)}
    back = set(detect_backsteps(dendro))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        f'<title>{escape(dendro.linkage)} linkage dendrogram</title>',
        '<g font-family="sans-serif" font-size="10">',
        f'<line x1="{left_pad - 10:.2f}" y1="{base:.2f}" x2="{left_pad - 10:.2f}" '
        f'y2="{top_pad:.2f}" stroke="#000"/>',
    ]
    for i in range(5):
        h = top * i / 4
        out.append(
            f'<text x="{left_pad - 14:.2f}" y="{ypos(h) + 3:.2f}" text-anchor="end">{h:.3g}</text>'
        )
    for m in dendro.merges:
        xl, xr = x[m.left], x[m.right]
        yl, yr, ym = y[m.left], y[m.right], ypos(m.height)
        cls, stroke = ("backstep", BACKSTEP_STROKE) if m.step in back else ("merge", MERGE_STROKE)
        out.append(
            f'<path class="{cls}" data-step="{m.step}" fill="none" stroke="{stroke}" '
            f'd="M{xl:.2f},{yl:.2f} V{ym:.2f} H{xr:.2f} V{yr:.2f}"/>'
        )
        x[m.new_id] = (xl + xr) / 2
        y[m.new_id] = ym
    for leaf in range(n):
        out.append(
            f'<text x="{x[leaf]:.2f}" y="{base + 8:.2f}" text-anchor="end" '
            f'transform="rotate(-90 {x[leaf]:.2f} {base + 8:.2f})">'
            f'{escape(str(dendro.leaf_labels[leaf]))}</text>'
        )
    out.append("</g>\n</svg>\n")
    return "\n".join(out)
