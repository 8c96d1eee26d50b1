#!/usr/bin/env python3
"""
Scene components for SVG output
Draws a sextuple with one Pascal and its markers, or a triangle with its polar triangle
"""

from typing import Optional

from core.hexagram import kirkman_points, steiner_points
from core.pascal import all_pascals, crosshair_points, eval_pascal
from core.projgeom import P1Point, join, polar_triangle, tau
from core.sextuple import Sextuple
from core.symbols import PascalSymbol
from ui.svg_canvas import SvgCanvas
from utils.helpers import safe_log

EMPTY_SCENE_WARNING = "nothing renderable in view"


def draw_sextuple(canvas: SvgCanvas, h: Sextuple, symbol: Optional[PascalSymbol] = None,
                  kirkman: bool = False, steiner: bool = False):
    """Six labelled conic points, then the Pascal of `symbol` with its cross-hair points"""
    for letter, p in h.items():
        canvas.print_point(tau(p), letter)
    if symbol is not None:
        canvas.print_line(eval_pascal(h, symbol), str(symbol), role='pascal', width=1.5)
        for i, point in enumerate(crosshair_points(h, symbol), start=1):
            canvas.print_point(point, f"X{i}", role='crosshair', radius=3)
    if kirkman or steiner:
        pascals = all_pascals(h)
        if kirkman:
            for point in kirkman_points(h, pascals).values():
                canvas.print_point(point, "", role='kirkman', radius=2)
        if steiner:
            for point in steiner_points(h, pascals).values():
                canvas.print_point(point, "", role='steiner', radius=3)


def draw_triangle(canvas: SvgCanvas, P: P1Point, Q: P1Point, R: P1Point):
    """Triangle PQR, its polar triangle, the rays through the perspector CH and the perspectrix ch"""
    triangle = polar_triangle(P, Q, R)
    vertices = [('P', triangle.P), ('Q', triangle.Q), ('R', triangle.R)]
    primes = [("P'", triangle.P_prime), ("Q'", triangle.Q_prime), ("R'", triangle.R_prime)]
    for group, role in ((vertices, 'triangle'), (primes, 'polar')):
        for (_, first), (_, second) in ((group[0], group[1]), (group[1], group[2]), (group[0], group[2])):
            canvas.print_segment(first, second, role=role)
    for (name, vertex), (_, prime) in zip(vertices, primes):
        canvas.print_line(join(vertex, prime), f"{name}{name}'", role='perspector', width=0.75)
    canvas.print_line(triangle.ch, "ch", role='perspector', width=1.5)
    for name, point in vertices:
        canvas.print_point(point, name, role='triangle')
    for name, point in primes:
        canvas.print_point(point, name, role='polar')
    canvas.print_point(triangle.CH, "CH", role='perspector')


def finish_scene(canvas: SvgCanvas) -> str:
    """Close the document, annotating a scene where nothing landed in view"""
    if canvas.drawn == 0:
        safe_log("Rendered scene is empty", "WARNING")
        canvas.print_text(EMPTY_SCENE_WARNING)
    return str(canvas)


# Convenience functions for external use
def render_sextuple(h: Sextuple, symbol: Optional[PascalSymbol] = None, kirkman: bool = False,
                    steiner: bool = False, settings: Optional[dict] = None) -> str:
    """
    SVG document of a sextuple on the conic

    Args:
        h: Sextuple (points at infinity land on the chart like any other)
        symbol: Pascal to draw with its three cross-hair points
        kirkman: Mark all defined Kirkman points in view
        steiner: Mark all defined Steiner points in view
        settings: Render settings override

    Returns:
        Deterministic SVG text
    """
    canvas = SvgCanvas(settings)
    canvas.print_conic()
    draw_sextuple(canvas, h, symbol, kirkman, steiner)
    return finish_scene(canvas)


def render_triangle(P: P1Point, Q: P1Point, R: P1Point, settings: Optional[dict] = None) -> str:
    canvas = SvgCanvas(settings)
    canvas.print_conic()
    draw_triangle(canvas, P, Q, R)
    return finish_scene(canvas)
