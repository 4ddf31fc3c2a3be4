"""Deterministic SVG scenes for arrangements, rings and tangent points.

A scene is plain data in world coordinates (y up). :func:`svg_string` flips
the y axis, rounds every coordinate to 6 decimals and writes the layers in a
fixed z-order, so equal scenes always give identical bytes.
"""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .arrangement import Arrangement
from .harmonic import AlcoveClassification, HarmonicSpec, ring_radius

LAYER_ORDER = ("lines", "rings", "vertices", "alcoves", "tangents")

CLASS_COLORS = {
    "central": "#f2c14e",
    "first": "#5fad56",
    "second": "#4d9078",
    "alcove": "#b4d2e7",
}

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass
class SvgScene:
    """Viewport ``(xmin, ymin, xmax, ymax)`` plus one list per layer."""

    viewport: tuple[float, float, float, float] = (-1.0, -1.0, 1.0, 1.0)
    lines: list[tuple[float, float, float]] = field(default_factory=list)
    rings: list[float] = field(default_factory=list)
    vertices: list[tuple[float, float]] = field(default_factory=list)
    alcoves: list[tuple[str, list[tuple[float, float]]]] = field(default_factory=list)
    tangents: list[tuple[float, float]] = field(default_factory=list)
    title: str = ""

    @property
    def width(self) -> float:
        return self.viewport[2] - self.viewport[0]

    @property
    def height(self) -> float:
        return self.viewport[3] - self.viewport[1]


def num(v: float) -> str:
    """Coordinate text: rounded to 6 decimals, trailing zeros dropped, no ``-0``."""
    r = round(float(v), 6)
    if r == 0:
        return "0"
    s = f"{r:.6f}".rstrip("0").rstrip(".")
    return s


def clip_line(line: Sequence[float], viewport) -> Optional[tuple[tuple[float, float], tuple[float, float]]]:
    """Segment of ``a x + b y + c = 0`` inside the viewport box, or None."""
    a, b, c = (float(t) for t in line)
    norm2 = a * a + b * b
    if norm2 == 0:
        return None
    p0 = np.array([-a * c / norm2, -b * c / norm2])
    d = np.array([-b, a]) / math.sqrt(norm2)
    lo, hi = -math.inf, math.inf
    xmin, ymin, xmax, ymax = viewport
    for k, (bmin, bmax) in enumerate(((xmin, xmax), (ymin, ymax))):
        if abs(d[k]) < 1e-15:
            if not bmin <= p0[k] <= bmax:
                return None
            continue
        t1, t2 = (bmin - p0[k]) / d[k], (bmax - p0[k]) / d[k]
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo >= hi:
        return None
    p, q = p0 + lo * d, p0 + hi * d
    return (float(p[0]), float(p[1])), (float(q[0]), float(q[1]))


def _point_attrs(x: float, y: float) -> tuple[str, str]:
    return num(x), num(-y)


def svg_element(scene: SvgScene) -> ET.Element:
    xmin, ymin, xmax, ymax = scene.viewport
    span = max(scene.width, scene.height, 1e-9)
    stroke = span / 400
    dot = span / 150
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "viewBox": " ".join(num(v) for v in (xmin, -ymax, scene.width, scene.height)),
            "width": "800",
            "height": num(800 * scene.height / max(scene.width, 1e-9)),
        },
    )
    if scene.title:
        ET.SubElement(root, "title").text = scene.title
    groups = {name: ET.SubElement(root, "g", {"id": name}) for name in LAYER_ORDER}

    g = groups["lines"]
    g.set("stroke", "#222222")
    g.set("stroke-width", num(stroke))
    for line in scene.lines:
        seg = clip_line(line, scene.viewport)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        sx1, sy1 = _point_attrs(x1, y1)
        sx2, sy2 = _point_attrs(x2, y2)
        ET.SubElement(g, "line", {"x1": sx1, "y1": sy1, "x2": sx2, "y2": sy2})

    g = groups["rings"]
    g.set("fill", "none")
    g.set("stroke", "#888888")
    g.set("stroke-width", num(stroke))
    g.set("stroke-dasharray", f"{num(4 * stroke)} {num(3 * stroke)}")
    for r in scene.rings:
        ET.SubElement(g, "circle", {"cx": "0", "cy": "0", "r": num(r)})

    g = groups["vertices"]
    g.set("fill", "#c0392b")
    for x, y in scene.vertices:
        cx, cy = _point_attrs(x, y)
        ET.SubElement(g, "circle", {"cx": cx, "cy": cy, "r": num(dot)})

    g = groups["alcoves"]
    g.set("fill-opacity", "0.6")
    g.set("stroke", "none")
    for label, poly in scene.alcoves:
        pts = " ".join(",".join(_point_attrs(x, y)) for x, y in poly)
        color = CLASS_COLORS.get(label, CLASS_COLORS["alcove"])
        ET.SubElement(g, "polygon", {"class": label, "fill": color, "points": pts})

    g = groups["tangents"]
    g.set("fill", "#1f4e79")
    for x, y in scene.tangents:
        cx, cy = _point_attrs(x, y)
        ET.SubElement(g, "circle", {"cx": cx, "cy": cy, "r": num(0.6 * dot)})
    return root


def svg_string(scene: SvgScene) -> str:
    root = svg_element(scene)
    ET.indent(root)
    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"


def emit_svg(scene: SvgScene, path) -> None:
    Path(path).write_text(svg_string(scene), encoding="utf-8")


# -- scene builders -------------------------------------------------------------


def _box(points: np.ndarray, margin: float = 0.15, minimum: float = 1.0):
    if len(points) == 0:
        return (-minimum, -minimum, minimum, minimum)
    lo, hi = points.min(axis=0), points.max(axis=0)
    pad = max(margin * float(np.max(hi - lo)), 0.1 * minimum)
    return (float(lo[0] - pad), float(lo[1] - pad), float(hi[0] + pad), float(hi[1] + pad))


def _float_xy(p) -> tuple[float, float]:
    x, y = p.xy
    return float(x), float(y)


def harmonic_scene(spec: HarmonicSpec, classification: Optional[AlcoveClassification] = None) -> SvgScene:
    """Regular n-gon lines, predicted rings, finite crossings and class shading."""
    n = spec.n
    radii = [ring_radius(n, k) for k in range(1, (n - 1) // 2 + 1)]
    vertices = []
    for i in range(n):
        for j in range(i + 1, n):
            a1, b1, c1 = spec.lines[i]
            a2, b2, c2 = spec.lines[j]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-12:
                continue
            vertices.append((float((b1 * c2 - b2 * c1) / det), float((c1 * a2 - c2 * a1) / det)))
    reach = 1.1 * max(radii + [1.0])
    fills = []
    if classification is not None:
        fills.append(("central", [_float_xy(p) for p in classification.central.vertex_cycle]))
        for i in sorted(classification.first_kind):
            fills.append(("first", [_float_xy(p) for p in classification.first_kind[i].vertex_cycle]))
        for j in sorted(classification.second_kind):
            for i in sorted(classification.second_kind[j]):
                fills.append(("second", [_float_xy(p) for p in classification.second_kind[j][i].vertex_cycle]))
    return SvgScene(
        viewport=(-reach, -reach, reach, reach),
        lines=[tuple(float(t) for t in row) for row in spec.lines],
        rings=radii,
        vertices=vertices,
        alcoves=fills,
        title=f"regular {n}-gon line arrangement",
    )


def arrangement_scene(arr: Arrangement) -> SvgScene:
    verts = [_float_xy(v.point) for v in arr.vertices]
    fills = [("alcove", [_float_xy(p) for p in a.vertex_cycle]) for a in arr.alcoves]
    return SvgScene(
        viewport=_box(np.array(verts).reshape(-1, 2)),
        lines=[(float(l.a), float(l.b), float(l.c)) for l in arr.lines],
        vertices=verts,
        alcoves=fills,
        title=f"arrangement of {arr.n} lines",
    )


def degeneration_scene(lines: np.ndarray, nodes: dict, tangents: Sequence) -> SvgScene:
    """Lines, their crossings and the real vertical tangents of one member."""
    verts = [(float(p[0]), float(p[1])) for _, p in sorted(nodes.items())]
    real = [(t.x.real, t.y.real) for t in tangents if t.is_real()]
    return SvgScene(
        viewport=_box(np.array(verts + real).reshape(-1, 2)),
        lines=[tuple(float(t) for t in row) for row in lines],
        vertices=verts,
        tangents=real,
        title=f"vertical tangents near {len(lines)} lines",
    )
