from __future__ import annotations

import dataclasses
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape


@dataclasses.dataclass
class SVGRect:
    x: float
    y: float
    width: float
    height: float
    stroke: str
    fill: str
    opacity: float

    def __str__(self):
        return (
            f'<rect x="{self.x}" y="{self.y}" width="{self.width}" height="{self.height}" '
            f'stroke="{self.stroke}" fill="{self.fill}" opacity="{self.opacity}" />'
        )


@dataclasses.dataclass
class SVGPolygon:
    points: Sequence[Tuple[float, float]]
    stroke: str
    fill: str
    opacity: float

    def __str__(self):
        points = " ".join(f"{x},{y}" for x, y in self.points)
        return f'<polygon points="{points}" stroke="{self.stroke}" fill="{self.fill}" opacity="{self.opacity}" />'


@dataclasses.dataclass
class SVGText:
    x: float
    y: float
    text: str
    fill: str
    font_size: str
    font_family: str
    anchor: str

    def __str__(self):
        return (
            f'<text x="{self.x}" y="{self.y}" fill="{self.fill}" font-size="{self.font_size}" '
            f'font-family="{self.font_family}" text-anchor="{self.anchor}">{escape(self.text)}</text>'
        )


class SVGGraphic:
    def __init__(self, width, height):
        self.width = width
        self.height = height
        self.shapes: List[object] = []

    def draw_rect(self, x, y, width, height, stroke="black", fill="none", *, opacity=1):
        self.shapes.append(SVGRect(x, y, width, height, stroke, fill, opacity))

    def draw_polygon(self, points, stroke="black", fill="none", *, opacity=1):
        self.shapes.append(SVGPolygon(points, stroke, fill, opacity))

    def write_text(self, x, y, text, fill="black", font_size="small", font_family="monospace", anchor="middle"):
        self.shapes.append(SVGText(x, y, text, fill, font_size, font_family, anchor))

    def __str__(self):
        shapes = "".join(str(shape) for shape in self.shapes)
        return f'<svg width="{self.width}" height="{self.height}" xmlns="http://www.w3.org/2000/svg">{shapes}</svg>'
