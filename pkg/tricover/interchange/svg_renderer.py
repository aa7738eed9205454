"""Draws a covering as SVG 1.1, un-stretched. Floats appear here and nowhere else."""

import logging
import math

from fractions import Fraction
from pathlib import Path

from tricover.config import SVG_MARGIN, SVG_ROLE_FILL, SVG_SCALE, SVG_STROKE_WIDTH
from tricover.core.models import Covering, HTriangle


SQRT3_HALF = math.sqrt(3) / 2

PATTERN_DEFS = """  <defs>
    <pattern id="dots" width="6" height="6" patternUnits="userSpaceOnUse">
      <circle cx="3" cy="3" r="1" fill="black" />
    </pattern>
    <pattern id="rhombi" width="8" height="8" patternUnits="userSpaceOnUse">
      <path d="M 0 4 L 4 0 L 8 4 L 4 8 Z" fill="none" stroke="black" stroke-width="0.5" />
    </pattern>
  </defs>
"""


class SvgRenderer:
    def __init__(self, scale: float = SVG_SCALE, margin: float = SVG_MARGIN) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)
        self.scale = scale
        self.margin = margin

    def to_screen(self, x: Fraction, y: Fraction, y_top: Fraction) -> tuple[float, float]:
        return (
            self.margin + float(x) * self.scale,
            self.margin + (float(y_top) - float(y)) * SQRT3_HALF * self.scale,
        )

    def polygon(self, tri: HTriangle, css_class: str, fill: str, y_top: Fraction) -> str:
        points = " ".join(f"{sx:.4f},{sy:.4f}" for sx, sy in (self.to_screen(x, y, y_top) for x, y in tri.vertices))
        return (
            f'  <polygon class="{css_class}" points="{points}" '
            f'style="fill:{fill}; stroke:black; stroke-width:{SVG_STROKE_WIDTH};" />\n'
        )

    def render(self, covering: Covering) -> str:
        everything = covering.target.parts + covering.pieces
        x_min = min(tri.x_min for tri in everything)
        x_max = max(tri.x_max for tri in everything)
        y_min = min(tri.y_min for tri in everything)
        y_max = max(tri.y_max for tri in everything)
        width = 2 * self.margin + float(x_max - x_min) * self.scale
        height = 2 * self.margin + float(y_max - y_min) * SQRT3_HALF * self.scale

        body = ""
        for piece, role in zip(covering.pieces, covering.roles):
            body += self.polygon(piece.translated(-x_min, 0), role.value, SVG_ROLE_FILL[role.value], y_max)
        # Target outline goes on top so it stays visible over filled pieces.
        for part in covering.target.parts:
            body += self.polygon(part.translated(-x_min, 0), "target", SVG_ROLE_FILL["target"], y_max)

        self.logger.debug(f"Rendered {len(everything)} polygons for '{covering.label}'")
        return (
            f'<svg width="{width:.2f}" height="{height:.2f}" version="1.1" xmlns="http://www.w3.org/2000/svg">\n'
            f"{PATTERN_DEFS}{body}</svg>\n"
        )

    def to_file(self, covering: Covering, path: Path | str) -> None:
        Path(path).write_text(self.render(covering), encoding="utf-8")
        self.logger.info(f"Wrote SVG of '{covering.label}' to {path}")
