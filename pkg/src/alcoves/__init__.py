"""Exact line arrangements, regular n-gon rings and degenerating plane curves."""
from .arrangement import (
    Alcove,
    Arrangement,
    build,
    check_position,
    enumerate_alcoves,
    expected_alcoves,
    insert_line,
    random_lines,
    vertex_number,
)
from .degeneration import (
    BivariatePoly,
    CurveFamily,
    make_family,
    product_of_lines,
    random_bounded_lines,
    run_degeneration,
    vertical_tangents,
)
from .geometry import ProjLine, ProjPoint, intersect, line_through, orientation, parse_lines
from .harmonic import class_split, classify_alcoves, generate, ring_radius, verify_rings
from .render import SvgScene, emit_svg

__all__ = [
    "Alcove", "Arrangement", "BivariatePoly", "CurveFamily", "ProjLine", "ProjPoint", "SvgScene",
    "build", "check_position", "class_split", "classify_alcoves", "emit_svg", "enumerate_alcoves",
    "expected_alcoves", "generate", "insert_line", "intersect", "line_through", "make_family",
    "orientation", "parse_lines", "random_lines", "product_of_lines", "random_bounded_lines", "ring_radius",
    "run_degeneration", "verify_rings", "vertex_number", "vertical_tangents",
]
