"""ASCII and SVG pictures of tilings."""

from __future__ import annotations

import colorsys
import string

from .board import Tiling, covered_cells

CELL = 24
STROKE = 1


def render_ascii(t: Tiling) -> str:
    """One letter per placement (cycling a-z), '.' for missing cells, '?' for uncovered ones."""
    m, n = t.board.m, t.board.n
    grid = [["?"] * n for _ in range(m)]
    for r, c in t.board.missing:
        grid[r - 1][c - 1] = "."
    for i, p in enumerate(t.placements):
        ch = string.ascii_lowercase[i % 26]
        for r, c in covered_cells(p):
            grid[r - 1][c - 1] = ch
    return "\n".join("".join(row) for row in grid) + "\n"


def _fill(i: int) -> str:
    # golden-angle hue steps keep neighbouring placements apart
    h = (i * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(h, 0.62, 0.55)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def render_svg(t: Tiling) -> str:
    m, n = t.board.m, t.board.n
    w, h = n * CELL, m * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
    ]
    for i, p in enumerate(t.placements):
        fill = _fill(i)
        out.append(f'<g class="placement" data-kind="{p.kind.value}">')
        for r, c in sorted(covered_cells(p)):
            out.append(
                f'<rect class="cell" x="{(c - 1) * CELL}" y="{(r - 1) * CELL}" width="{CELL}" height="{CELL}" '
                f'fill="{fill}" stroke="#000" stroke-width="{STROKE}"/>'
            )
        out.append("</g>")
    for r, c in sorted(t.board.missing):
        cx, cy = (c - 1) * CELL + CELL // 2, (r - 1) * CELL + CELL // 2
        out.append(f'<circle class="missing" cx="{cx}" cy="{cy}" r="{CELL // 6}" fill="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(t: Tiling, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(t)
    if fmt == "svg":
        return render_svg(t)
    if fmt == "json":
        return t.to_json() + "\n"
    raise ValueError(f"unknown format {fmt!r}")
