"""
SVG 1.1 cho một bản vẽ đường thẳng.

Đỉnh thật: hình tròn có nhãn; đỉnh giả (giao điểm): hình vuông nhỏ. Khi có
các lớp độ dày, mỗi lớp là một nhóm <g> với nét vẽ riêng. Cùng đầu vào thì
cùng văn bản đầu ra.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from app.config import config
from app.embed.rotation import Embedding
from app.layout.drawing import Drawing

SVG_HEADER = """<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
"""

LAYER_STYLES = (
    ("rgb(40,40,40)", ""),
    ("rgb(200,40,40)", "6,3"),
    ("rgb(40,90,200)", "2,2"),
    ("rgb(30,140,60)", "8,2,2,2"),
    ("rgb(150,60,170)", "1,3"),
)

MARGIN = 20.0


class SvgCanvas:
    """Maps drawing coordinates (y up) onto SVG user space (y down)."""

    def __init__(self, drawing: Drawing, vertices: Iterable[int], scale: float):
        pts = [drawing.point(v) for v in vertices]
        self.scale = scale
        self.min_x = min((p[0] for p in pts), default=0.0)
        self.max_y = max((p[1] for p in pts), default=0.0)
        max_x = max((p[0] for p in pts), default=0.0)
        min_y = min((p[1] for p in pts), default=0.0)
        self.width = (max_x - self.min_x) * scale + 2 * MARGIN
        self.height = (self.max_y - min_y) * scale + 2 * MARGIN

    def window_coords(self, x: float, y: float) -> tuple[float, float]:
        return ((x - self.min_x) * self.scale + MARGIN, (self.max_y - y) * self.scale + MARGIN)

    def open(self) -> str:
        return (
            '<svg width="%.2f" height="%.2f" viewBox="0 0 %.2f %.2f" version="1.1" '
            'xmlns="http://www.w3.org/2000/svg">\n'
        ) % (self.width, self.height, self.width, self.height)

    def line(self, p: tuple[float, float], q: tuple[float, float]) -> str:
        x1, y1 = self.window_coords(*p)
        x2, y2 = self.window_coords(*q)
        return '    <line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f"/>\n' % (x1, y1, x2, y2)

    def dot(self, p: tuple[float, float], radius: float = 5.0) -> str:
        x, y = self.window_coords(*p)
        return '    <circle cx="%.2f" cy="%.2f" r="%.2f"/>\n' % (x, y, radius)

    def square(self, p: tuple[float, float], side: float = 6.0) -> str:
        x, y = self.window_coords(*p)
        return '    <rect x="%.2f" y="%.2f" width="%.2f" height="%.2f"/>\n' % (
            x - side / 2, y - side / 2, side, side,
        )

    def text(self, label: str, p: tuple[float, float]) -> str:
        x, y = self.window_coords(*p)
        return '    <text x="%.2f" y="%.2f">%s</text>\n' % (x + 6, y - 6, label)


def _group(gid: str, style: str, body: Sequence[str]) -> str:
    return f'  <g id="{gid}" style="{style}">\n' + "".join(body) + "  </g>\n"


def _stroke(index: int) -> str:
    color, dash = LAYER_STYLES[index % len(LAYER_STYLES)]
    style = f"stroke:{color};stroke-width:1.5;fill:none"
    return f"{style};stroke-dasharray:{dash}" if dash else style


def emit_svg(
    drawing: Drawing,
    emb: Embedding,
    layers: Sequence[Iterable[int]] | None = None,
    *,
    scale: float | None = None,
) -> str:
    """Straight-line SVG of an embedding, or of its thickness layers.

    ``layers`` lists original edge ids per layer; without it the embedding's
    own segments are drawn (dummy vertices included).
    """
    scale = config.output.svg_scale if scale is None else scale
    g = emb.graph
    if layers:
        groups = [sorted(set(edges)) for edges in layers]
        segments = [[g.ends(e) for e in edges] for edges in groups]
    else:
        segments = [list(emb.rotation.edges())]

    dummies = sorted(emb.dummies)
    real = set(v for v in emb.rotation.sigma if v not in emb.dummies)
    real.update(v for group in segments for pair in group for v in pair if v not in emb.dummies)
    real_sorted = sorted(real)

    canvas = SvgCanvas(drawing, real_sorted + dummies, scale)
    out = [SVG_HEADER, canvas.open()]
    for i, group in enumerate(segments):
        lines = [canvas.line(drawing.point(a), drawing.point(b)) for a, b in group]
        out.append(_group(f"layer-{i + 1}", _stroke(i), lines))
    out.append(_group(
        "vertices",
        "stroke:black;stroke-width:1;fill:rgb(250,220,90)",
        [canvas.dot(drawing.point(v)) for v in real_sorted],
    ))
    if dummies:
        out.append(_group(
            "crossings",
            "stroke:black;stroke-width:1;fill:white",
            [canvas.square(drawing.point(d)) for d in dummies],
        ))
    out.append(_group(
        "labels",
        "font-family:Verdana;font-size:10;fill:black",
        [canvas.text(str(v), drawing.point(v)) for v in real_sorted],
    ))
    out.append("</svg>\n")
    return "".join(out)
