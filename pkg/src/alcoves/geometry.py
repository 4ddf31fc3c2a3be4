"""Exact projective primitives for plane line arrangements.

Scalars are :class:`fractions.Fraction`. Points and lines are stored in
homogeneous coordinates with their content removed (integer entries, gcd 1,
first nonzero entry positive), so projective equality is plain tuple equality.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class GeometryError(ValueError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    pass


class ParseError(GeometryError):
    pass


def _normalize(coords: Sequence[Scalar]) -> tuple[int, int, int]:
    fr = [Fraction(c) for c in coords]
    if all(c == 0 for c in fr):
        raise GeometryError("homogeneous coordinates must not all vanish")
    lcm = 1
    for c in fr:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in fr]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints[0], ints[1], ints[2]


def _cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True, init=False)
class ProjPoint:
    """Point ``[X:Y:Z]`` of the real projective plane; ``Z == 0`` is at infinity."""

    X: int
    Y: int
    Z: int

    def __init__(self, X: Scalar, Y: Scalar, Z: Scalar = 1):
        x, y, z = _normalize((X, Y, Z))
        object.__setattr__(self, "X", x)
        object.__setattr__(self, "Y", y)
        object.__setattr__(self, "Z", z)

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "ProjPoint":
        return cls(x, y, 1)

    @property
    def at_infinity(self) -> bool:
        return self.Z == 0

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        if self.Z == 0:
            raise PointAtInfinity(f"{self} has no affine coordinates")
        return Fraction(self.X, self.Z), Fraction(self.Y, self.Z)

    def __iter__(self):
        return iter((self.X, self.Y, self.Z))

    def __repr__(self) -> str:
        if self.Z == 0:
            return f"ProjPoint[{self.X}:{self.Y}:0]"
        x, y = self.xy
        return f"ProjPoint({x}, {y})"


@dataclass(frozen=True, init=False)
class ProjLine:
    """Line ``aX + bY + cZ = 0``; affinely ``a x + b y + c = 0``."""

    a: int
    b: int
    c: int

    def __init__(self, a: Scalar, b: Scalar, c: Scalar):
        na, nb, nc = _normalize((a, b, c))
        object.__setattr__(self, "a", na)
        object.__setattr__(self, "b", nb)
        object.__setattr__(self, "c", nc)

    @property
    def is_line_at_infinity(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def direction(self) -> tuple[int, int]:
        """Affine direction vector ``(-b, a)``."""
        return -self.b, self.a

    def contains(self, p: ProjPoint) -> bool:
        return self.a * p.X + self.b * p.Y + self.c * p.Z == 0

    def residual(self, p: ProjPoint) -> int:
        return self.a * p.X + self.b * p.Y + self.c * p.Z

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __repr__(self) -> str:
        return f"ProjLine[{self.a}:{self.b}:{self.c}]"


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise IdenticalPoints(f"{p} and {q} are the same point")
    return ProjLine(*_cross(tuple(p), tuple(q)))


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Common point of two distinct lines; parallel lines meet at ``Z = 0``."""
    if l1 == l2:
        raise IdenticalLines(f"{l1} and {l2} are the same line")
    return ProjPoint(*_cross(tuple(l1), tuple(l2)))


def are_parallel(l1: ProjLine, l2: ProjLine) -> bool:
    return l1.a * l2.b - l1.b * l2.a == 0


class Orientation(Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0


class Location(Enum):
    INTERIOR = "interior"
    ON_BOUNDARY = "on_boundary"
    EXTERIOR = "exterior"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> Orientation:
    """Turn direction of ``p -> q -> r`` for affine points."""
    for pt in (p, q, r):
        if pt.Z == 0:
            raise PointAtInfinity(f"{pt} is at infinity")
    det = (
        p.X * (q.Y * r.Z - q.Z * r.Y)
        - p.Y * (q.X * r.Z - q.Z * r.X)
        + p.Z * (q.X * r.Y - q.Y * r.X)
    )
    s = _sign(det) * _sign(p.Z) * _sign(q.Z) * _sign(r.Z)
    return Orientation(s)


def point_in_convex_polygon(p: ProjPoint, poly: Sequence[ProjPoint]) -> Location:
    """Locate ``p`` relative to a strictly convex counterclockwise polygon."""
    m = len(poly)
    if m < 3:
        raise DegeneratePolygon(f"polygon needs at least 3 vertices, got {m}")
    for i in range(m):
        turn = orientation(poly[i], poly[(i + 1) % m], poly[(i + 2) % m])
        if turn is Orientation.COLLINEAR:
            raise DegeneratePolygon(f"collinear vertices at index {i}")
        if turn is Orientation.RIGHT:
            raise DegeneratePolygon("polygon is not convex and counterclockwise")
    on_edge = False
    for i in range(m):
        turn = orientation(poly[i], poly[(i + 1) % m], p)
        if turn is Orientation.RIGHT:
            return Location.EXTERIOR
        if turn is Orientation.COLLINEAR:
            on_edge = True
    return Location.ON_BOUNDARY if on_edge else Location.INTERIOR


def compare_directions(u: Sequence[Scalar], v: Sequence[Scalar]) -> int:
    """Order nonzero vectors by polar angle in ``[0, 2*pi)`` without trig."""

    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    return -_sign(u[0] * v[1] - u[1] * v[0])


# -- line files ---------------------------------------------------------------

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"not a rational number: {token!r}")
    return Fraction(token)


def parse_lines(text: str) -> list[ProjLine]:
    """Parse ``a b c`` rows (``p/q`` or integers); ``#`` starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 3 rationals, got {len(tokens)}")
        try:
            coeffs = [parse_rational(t) for t in tokens]
        except ZeroDivisionError:
            raise ParseError(f"line {lineno}: zero denominator") from None
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        try:
            lines.append(ProjLine(*coeffs))
        except GeometryError:
            raise ParseError(f"line {lineno}: all coefficients are zero") from None
    return lines


def format_lines(lines: Iterable[ProjLine]) -> str:
    return "".join(f"{l.a} {l.b} {l.c}\n" for l in lines)


def fraction_str(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"
