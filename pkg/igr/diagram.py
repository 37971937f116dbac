"""Triangular (i, j) diagrams of which twists of U^{i,−j} have been generated."""
from __future__ import annotations

import dataclasses
from typing import Dict, List, Sequence, Tuple

from igr.svg import SVGGraphic

Coverage = Dict[Tuple[int, int], List[int]]


@dataclasses.dataclass
class DiagramConfig:
    cell: int = 56
    margin: int = 24
    grid_color: str = "rgb(0, 0, 0)"
    full_color: str = "rgb(0, 0, 255)"
    partial_color: str = "rgb(255, 165, 0)"
    fill_opacity: float = 0.3
    font_size: str = "small"
    ascii_width: int = 6


def range_label(twists: Sequence[int]) -> str:
    """Compress twists into runs.

    >>> range_label([0, 1, 2, 3, 4, 5, 6])
    '0-6'
    >>> range_label([0, 1, 3])
    '0-1,3'
    >>> range_label([])
    '.'
    """
    twists = sorted(set(twists))
    if not twists:
        return "."
    runs = []
    start = prev = twists[0]
    for t in twists[1:] + [None]:
        if t is not None and t == prev + 1:
            prev = t
            continue
        runs.append(str(start) if start == prev else f"{start}-{prev}")
        if t is not None:
            start = prev = t
    return ",".join(runs)


def _cells(n: int):
    top = 2 * n - 2
    for j in range(top, -1, -1):
        yield j, [(i, j) for i in range(top + 1 - j)]


def render_ascii(coverage: Coverage, n: int, config: DiagramConfig = DiagramConfig()) -> str:
    """Rows run from j = 2n−2 down to 0, columns from i = 0 upwards."""
    width = config.ascii_width
    lines = []
    for j, row in _cells(n):
        cells = "".join(range_label(coverage.get(ij, [])).rjust(width) for ij in row)
        lines.append(f"j={j:<2}|{cells}")
    lines.append("    +" + "-" * (width * (2 * n - 1)))
    lines.append("     " + "".join(f"i={i}".rjust(width) for i in range(2 * n - 1)))
    return "\n".join(lines) + "\n"


def render_svg(coverage: Coverage, n: int, window: range, config: DiagramConfig = DiagramConfig()) -> SVGGraphic:
    top = 2 * n - 2
    s, margin = config.cell, config.margin
    size = 2 * margin + (top + 1) * s
    svg = SVGGraphic(size, size)

    def corner(i: int, j: int) -> Tuple[int, int]:
        return margin + i * s, margin + (top - j) * s

    for _, row in _cells(n):
        for i, j in row:
            x, y = corner(i, j)
            twists = coverage.get((i, j), [])
            if set(window) <= set(twists):
                svg.draw_rect(x, y, s, s, config.grid_color, config.full_color, opacity=config.fill_opacity)
            elif twists:
                svg.draw_rect(x, y, s, s, config.grid_color, config.partial_color, opacity=config.fill_opacity)
            else:
                svg.draw_rect(x, y, s, s, config.grid_color)
            svg.write_text(x + s / 2, y + s / 2 + 4, range_label(twists), font_size=config.font_size)

    outline = [corner(0, top), corner(0, -1), corner(top + 1, -1)]
    svg.draw_polygon(outline, config.grid_color)
    svg.write_text(size - margin / 2, size - margin / 2, "i", font_size=config.font_size)
    svg.write_text(margin / 2, margin / 2, "j", font_size=config.font_size)
    return svg
