#!/usr/bin/env python3
"""
SVG canvas for conic configurations
Maps the conic z0*z2 = z1^2 to the unit circle and prints clipped points and lines with fixed precision
"""

from fractions import Fraction
from html import escape
from typing import List, Optional, Sequence, Tuple

from config.settings import get_render_settings
from core.projgeom import ProjLine, ProjPoint

ChartPoint = Tuple[Fraction, Fraction]


def chart_point(point: ProjPoint) -> Optional[ChartPoint]:
    """
    Chart coordinates X = 2 z1 / (z0 + z2), Y = (z2 - z0) / (z0 + z2)

    Returns:
        None for points on the line z0 + z2 = 0, which the chart sends to infinity
    """
    z0, z1, z2 = point.coords
    w = z0 + z2
    if w == 0:
        return None
    return Fraction(2 * z1, w), Fraction(z2 - z0, w)


def chart_line(line: ProjLine) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """Coefficients (a, b, c) of a X + b Y + c = 0, or None for the line z0 + z2 = 0"""
    u0, u1, u2 = line.coords
    a, b, c = Fraction(u1), Fraction(u2 - u0), Fraction(u0 + u2)
    if a == 0 and b == 0:
        return None
    return a, b, c


def clip_line(coefficients: Tuple[Fraction, Fraction, Fraction],
              box: Tuple[Fraction, Fraction, Fraction, Fraction]) -> Optional[Tuple[ChartPoint, ChartPoint]]:
    """Segment of a X + b Y + c = 0 inside the box (xmin, ymin, xmax, ymax), or None if it misses"""
    a, b, c = coefficients
    xmin, ymin, xmax, ymax = box
    hits: List[ChartPoint] = []
    if b != 0:
        for x in (xmin, xmax):
            y = -(a * x + c) / b
            if ymin <= y <= ymax:
                hits.append((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = -(b * y + c) / a
            if xmin <= x <= xmax:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


class SvgCanvas:
    """Accumulates SVG elements drawn in chart coordinates"""

    def __init__(self, settings: Optional[dict] = None):
        self.settings = settings or get_render_settings()
        x, y, width, height = (Fraction(v).limit_denominator() for v in self.settings['viewbox'])
        self.box = (x, y, x + width, y + height)
        self.size = self.settings['canvas_size']
        self.decimals = self.settings['decimals']
        self.colors = self.settings['colors']
        self._output: List[str] = []
        self.drawn = 0

    def _fmt(self, value: Fraction) -> str:
        return f"{float(value):.{self.decimals}f}"

    def _pixel(self, point: ChartPoint) -> Tuple[str, str]:
        xmin, ymin, xmax, ymax = self.box
        x, y = point
        px = (x - xmin) / (xmax - xmin) * self.size
        py = (ymax - y) / (ymax - ymin) * self.size
        return self._fmt(px), self._fmt(py)

    def _in_view(self, point: ChartPoint) -> bool:
        xmin, ymin, xmax, ymax = self.box
        return xmin <= point[0] <= xmax and ymin <= point[1] <= ymax

    def print_output(self, output: str):
        self._output.append(output)

    def print_conic(self):
        cx, cy = self._pixel((Fraction(0), Fraction(0)))
        radius = self._fmt(Fraction(self.size) / (self.box[2] - self.box[0]))
        self.print_output(f'<circle class="conic" cx="{cx}" cy="{cy}" r="{radius}" '
                          f'style="fill:none; stroke:{self.colors["conic"]}; stroke-width:1.5;" />')

    def print_point(self, point: Optional[ProjPoint], label: str = "", role: str = 'point',
                    radius: int = 4) -> bool:
        """Draw a labelled dot; points off the chart or outside the view are skipped"""
        if point is None:
            return False
        chart = chart_point(point)
        if chart is None or not self._in_view(chart):
            return False
        x, y = self._pixel(chart)
        color = self.colors.get(role, self.colors['point'])
        self.print_output(f'<circle class="{role}" cx="{x}" cy="{y}" r="{radius}" '
                          f'style="fill:{color}; stroke:{color}; stroke-width:1;" />')
        if label:
            self.print_output(f'<text x="{x}" y="{y}" dx="6" dy="-6" font-family="sans-serif" font-size="12" '
                              f'fill="{color}">{escape(label)}</text>')
        self.drawn += 1
        return True

    def print_line(self, line: Optional[ProjLine], label: str = "", role: str = 'pascal', width: float = 1) -> bool:
        """Draw the visible part of a line"""
        if line is None:
            return False
        coefficients = chart_line(line)
        segment = clip_line(coefficients, self.box) if coefficients else None
        if segment is None:
            return False
        return self._print_segment(segment, label, role, width)

    def print_segment(self, first: ProjPoint, second: ProjPoint, role: str = 'triangle', width: float = 1) -> bool:
        """Draw a segment between two points that are both in view"""
        ends = [chart_point(first), chart_point(second)]
        if any(end is None or not self._in_view(end) for end in ends):
            return False
        return self._print_segment((ends[0], ends[1]), "", role, width)

    def _print_segment(self, segment: Sequence[ChartPoint], label: str, role: str, width: float) -> bool:
        (x1, y1), (x2, y2) = (self._pixel(end) for end in segment)
        color = self.colors.get(role, self.colors['pascal'])
        title = f"<title>{escape(label)}</title>" if label else ""
        self.print_output(f'<line class="{role}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                          f'style="stroke-linecap:round; stroke:{color}; stroke-width:{width};">{title}</line>')
        self.drawn += 1
        return True

    def print_text(self, text: str, role: str = 'warning'):
        color = self.colors.get(role, self.colors['warning'])
        self.print_output(f'<text class="{role}" x="10" y="20" font-family="sans-serif" font-size="14" '
                          f'fill="{color}">{escape(text)}</text>')

    def __str__(self) -> str:
        body = "\n  ".join(self._output)
        return (f'<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg width="{self.size}" height="{self.size}" viewBox="0 0 {self.size} {self.size}" '
                f'version="1.1" xmlns="http://www.w3.org/2000/svg">\n  {body}\n</svg>\n')
