"""SVG rendering of interval datasets with optional structure overlays.

Intervals draw as solid segments with endpoint dots; detected loci (lines
and conics) draw as dashed overlays, one color per structure.  The viewport
is the data bounding box plus a 5% margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence
from xml.etree import ElementTree as ET

from .primitives import Interval

SVG_NS = "http://www.w3.org/2000/svg"

COLORS = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")


@dataclass(frozen=True)
class Overlay:
    """One dashed overlay: a line a*x+b*y+c=0, a conic (six coefficients),
    or a marked point (x, y)."""

    kind: str  # "line" | "conic" | "point"
    data: tuple[float, ...]
    color: str = COLORS[0]


def _bbox(intervals: Sequence[Interval]):
    xs = [float(v) for i in intervals for v in (i.a, i.c)]
    ys = [float(v) for i in intervals for v in (i.b, i.d)]
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 - x0 < 1e-9:
        x0, x1 = x0 - 1.0, x1 + 1.0
    if y1 - y0 < 1e-9:
        y0, y1 = y0 - 1.0, y1 + 1.0
    mx = 0.05 * (x1 - x0)
    my = 0.05 * (y1 - y0)
    return x0 - mx, y0 - my, x1 + mx, y1 + my


def _conic_branches(coeffs, x0, y0, x1, y1, steps=400):
    """Polyline branches of q1 x^2 + q2 xy + q3 y^2 + q4 x + q5 y + q6 = 0,
    sampled along x (solving for y) and along y (solving for x)."""
    q1, q2, q3, q4, q5, q6 = coeffs

    def sweep(lo, hi, solve):
        plus, minus = [], []
        span = hi - lo
        for k in range(steps + 1):
            s = lo + span * k / steps
            roots = solve(s)
            if roots is None:
                plus.append(None)
                minus.append(None)
            else:
                plus.append(roots[0])
                minus.append(roots[1])
        return plus, minus

    def solve_y(x):
        a, b, c = q3, q2 * x + q5, q1 * x * x + q4 * x + q6
        return _quadratic_roots(a, b, c)

    def solve_x(y):
        a, b, c = q1, q2 * y + q4, q3 * y * y + q5 * y + q6
        return _quadratic_roots(a, b, c)

    branches = []
    plus, minus = sweep(x0, x1, solve_y)
    span_y = y1 - y0
    for vals in (plus, minus):
        branches.extend(_split_branch(
            [(x0 + (x1 - x0) * k / steps, v) for k, v in enumerate(vals)], span_y, 1))
    plus, minus = sweep(y0, y1, solve_x)
    span_x = x1 - x0
    for vals in (plus, minus):
        branches.extend(_split_branch(
            [(v, y0 + (y1 - y0) * k / steps) for k, v in enumerate(vals)], span_x, 0))
    return branches


def _quadratic_roots(a, b, c):
    if abs(a) < 1e-13:
        if abs(b) < 1e-13:
            return None
        r = -c / b
        return (r, r)
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    s = math.sqrt(disc)
    return ((-b + s) / (2 * a), (-b - s) / (2 * a))


def _split_branch(points, span, varying_axis):
    """Break a sampled branch at gaps (no root) and asymptotic jumps."""
    branches = []
    current = []
    prev = None
    for x, y in points:
        v = x if varying_axis == 0 else y
        if v is None or x is None or y is None or not (math.isfinite(x) and math.isfinite(y)):
            if len(current) > 1:
                branches.append(current)
            current = []
            prev = None
            continue
        if prev is not None and abs(v - prev) > 0.5 * span:
            if len(current) > 1:
                branches.append(current)
            current = []
        current.append((x, y))
        prev = v
    if len(current) > 1:
        branches.append(current)
    return branches


def render_svg(intervals: Sequence[Interval],
               overlays: Optional[Sequence[Overlay]] = None,
               size: int = 720) -> str:
    """Produce an SVG document: one ``line`` element per interval (class
    "interval"), endpoint dots, and dashed overlay paths."""
    x0, y0, x1, y1 = _bbox(intervals)
    scale = size / max(x1 - x0, y1 - y0)
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale

    def to_px(p):
        return ((float(p[0]) - x0) * scale, (y1 - float(p[1])) * scale)

    root = ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": f"{width:.1f}",
        "height": f"{height:.1f}",
        "viewBox": f"0 0 {width:.1f} {height:.1f}",
    })
    ET.SubElement(root, "rect", {
        "x": "0", "y": "0", "width": f"{width:.1f}", "height": f"{height:.1f}",
        "fill": "white",
    })
    for overlay in overlays or ():
        style = {
            "fill": "none",
            "stroke": overlay.color,
            "stroke-width": "1",
            "stroke-dasharray": "6 4",
            "class": "overlay",
        }
        if overlay.kind == "line":
            a, b, c = overlay.data
            pts = []
            # clip the infinite line to the bbox
            if abs(b) >= abs(a):
                for x in (x0, x1):
                    pts.append((x, -(a * x + c) / b))
            else:
                for y in (y0, y1):
                    pts.append((-(b * y + c) / a, y))
            (px0, py0), (px1, py1) = (to_px(p) for p in pts)
            ET.SubElement(root, "line", {
                "x1": f"{px0:.2f}", "y1": f"{py0:.2f}",
                "x2": f"{px1:.2f}", "y2": f"{py1:.2f}", **style,
            })
        elif overlay.kind == "conic":
            for branch in _conic_branches(overlay.data, x0, y0, x1, y1):
                d = " ".join(
                    ("M" if k == 0 else "L") + f"{px:.2f},{py:.2f}"
                    for k, (px, py) in enumerate(to_px(p) for p in branch)
                )
                ET.SubElement(root, "path", {"d": d, **style})
        elif overlay.kind == "point":
            px, py = to_px(overlay.data)
            ET.SubElement(root, "circle", {
                "cx": f"{px:.2f}", "cy": f"{py:.2f}", "r": "4",
                "fill": "none", "stroke": overlay.color, "stroke-width": "1.5",
                "class": "overlay",
            })
    for itv in intervals:
        (ax, ay), (cx, cy) = to_px(itv.initial), to_px(itv.terminal)
        ET.SubElement(root, "line", {
            "x1": f"{ax:.2f}", "y1": f"{ay:.2f}",
            "x2": f"{cx:.2f}", "y2": f"{cy:.2f}",
            "stroke": "#222222", "stroke-width": "1.5", "class": "interval",
        })
        for px, py in ((ax, ay), (cx, cy)):
            ET.SubElement(root, "circle", {
                "cx": f"{px:.2f}", "cy": f"{py:.2f}", "r": "2.5",
                "fill": "#222222", "class": "endpoint",
            })
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def overlays_from_report(report_dict: dict) -> list[Overlay]:
    """Dashed overlays for the structures of a report dictionary."""
    overlays = []
    structures = report_dict.get("structures", {})
    color_idx = 0

    def next_color():
        nonlocal color_idx
        color = COLORS[color_idx % len(COLORS)]
        color_idx += 1
        return color

    for w in structures.get("concurrencies", []):
        color = next_color()
        for coeffs in w.get("pullback_lines", []):
            overlays.append(Overlay("line", tuple(_to_float(c) for c in coeffs), color))
    for w in structures.get("coplanarities", []):
        color = next_color()
        pencil = w.get("pencil")
        if pencil and pencil.get("kind") == "point":
            center = tuple(_to_float(c) for c in pencil["center"])
            overlays.append(Overlay("point", center, color))
    for w in structures.get("reguli", []):
        color = next_color()
        loci = w.get("endpoint_loci") or {}
        seen = set()
        for side in ("ruling1", "ruling2"):
            rec = loci.get(side) or {}
            for part in ("initial", "terminal", "mixed"):
                locus = rec.get(part)
                if not locus:
                    continue
                coeffs = tuple(_to_float(c) for c in locus.get("coefficients", ()))
                if not coeffs or coeffs in seen:
                    continue
                seen.add(coeffs)
                if locus["type"] == "conic":
                    overlays.append(Overlay("conic", coeffs, color))
                elif locus["type"] == "line":
                    overlays.append(Overlay("line", coeffs, color))
    return overlays


def _to_float(value) -> float:
    if isinstance(value, str):
        from fractions import Fraction

        return float(Fraction(value))
    return float(value)
