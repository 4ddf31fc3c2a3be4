"""Planar subdivision of a finite set of affine lines.

The subdivision is a half-edge structure. Bounded edges join consecutive
vertices along a line; each line also carries two rays. A ray is a pair of
half-edges with one end at infinity, and the face walk crosses "infinity" from
an outgoing ray to the next ray counterclockwise. Bounded faces are alcoves.

All predicates are exact (``Fraction`` / integer arithmetic).
"""
from __future__ import annotations

import functools
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import (
    GeometryError,
    Location,
    Orientation,
    ProjLine,
    ProjPoint,
    compare_directions,
    intersect,
    orientation,
    point_in_convex_polygon,
)


class ArrangementError(ValueError):
    pass


class DuplicateLine(ArrangementError):
    pass


class NotBoundedGeneralPosition(ArrangementError):
    def __init__(self, report: "PositionReport"):
        super().__init__(f"lines are not in bounded general position: {report}")
        self.report = report


class InvalidPolygon(ArrangementError):
    pass


class InternalInvariantError(AssertionError):
    """A structural invariant failed on a built arrangement; indicates a bug."""


# -- position -----------------------------------------------------------------


class Position(Enum):
    BOUNDED_GENERAL = "bounded_general"
    GENERAL_WITH_INFINITY = "general_with_infinity"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PositionReport:
    kind: Position
    parallel_pairs: tuple[tuple[int, int], ...] = ()
    # indices of >= 3 lines through one point, and that point
    witness: Optional[tuple[int, ...]] = None
    witness_point: Optional[ProjPoint] = None

    @property
    def ok(self) -> bool:
        return self.kind is Position.BOUNDED_GENERAL


def check_position(lines: Sequence[ProjLine]) -> PositionReport:
    """Classify a line set as bounded general, general with parallels, or degenerate.

    Concurrency is tested projectively, so three mutually parallel lines are
    degenerate (they share a point at infinity).
    """
    n = len(lines)
    if n < 2:
        raise ArrangementError(f"need at least 2 lines, got {n}")
    for i, l in enumerate(lines):
        if l.is_line_at_infinity:
            raise ArrangementError(f"line {i} is the line at infinity")
    seen: dict[ProjLine, int] = {}
    for i, l in enumerate(lines):
        if l in seen:
            raise DuplicateLine(f"lines {seen[l]} and {i} coincide: {l}")
        seen[l] = i

    through: dict[ProjPoint, set[int]] = defaultdict(set)
    parallel = []
    for i, j in itertools.combinations(range(n), 2):
        p = intersect(lines[i], lines[j])
        through[p].update((i, j))
        if p.at_infinity:
            parallel.append((i, j))
    for p, idx in through.items():
        if len(idx) >= 3:
            return PositionReport(
                Position.DEGENERATE,
                tuple(parallel),
                witness=tuple(sorted(idx)),
                witness_point=p,
            )
    if parallel:
        return PositionReport(Position.GENERAL_WITH_INFINITY, tuple(parallel))
    return PositionReport(Position.BOUNDED_GENERAL)


# -- half-edge structure --------------------------------------------------------


@dataclass(frozen=True)
class Vertex:
    index: int
    point: ProjPoint
    lines: tuple[int, int]

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return self.point.xy


@dataclass
class HalfEdge:
    index: int
    origin: Optional[int]  # None: comes in from infinity
    target: Optional[int]  # None: runs off to infinity
    line: int
    direction: tuple[int, int]
    twin: int = -1
    next: int = -1
    face: int = -1
    edge: Optional[int] = None  # bounded-edge index, None for rays

    @property
    def is_ray(self) -> bool:
        return self.origin is None or self.target is None


@dataclass(frozen=True)
class Edge:
    """Closed segment between consecutive vertices of one line."""

    index: int
    line: int
    endpoints: tuple[int, int]
    half_edges: tuple[int, int]


@dataclass(frozen=True)
class Face:
    index: int
    half_edges: tuple[int, ...]
    bounded: bool


@dataclass(frozen=True)
class Alcove:
    """A bounded face: counterclockwise boundary cycle and its corner points."""

    boundary: tuple[int, ...]
    line_indices: tuple[int, ...]
    vertex_cycle: tuple[ProjPoint, ...]
    vertex_ids: tuple[int, ...]
    face: int

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def line_set(self) -> frozenset[int]:
        return frozenset(self.line_indices)

    def interior_point(self) -> ProjPoint:
        xs, ys = zip(*(p.xy for p in self.vertex_cycle))
        m = len(xs)
        return ProjPoint.affine(sum(xs) / m, sum(ys) / m)


@dataclass
class Arrangement:
    lines: tuple[ProjLine, ...]
    vertices: list[Vertex]
    half_edges: list[HalfEdge]
    edges: list[Edge]
    faces: list[Face]
    alcoves: list[Alcove] = field(default_factory=list)
    vertex_index: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.lines)

    def vertex_at(self, i: int, j: int) -> Vertex:
        return self.vertices[self.vertex_index[(min(i, j), max(i, j))]]

    def edge_alcove_degrees(self) -> list[int]:
        """Number of alcoves bordering each bounded edge."""
        degrees = []
        for e in self.edges:
            degrees.append(sum(self.faces[self.half_edges[h].face].bounded for h in e.half_edges))
        return degrees

    @property
    def unbounded_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.bounded]


def _param(line: ProjLine, p: ProjPoint) -> Fraction:
    dx, dy = line.direction
    x, y = p.xy
    return dx * x + dy * y


def build(lines: Sequence[ProjLine]) -> Arrangement:
    """Construct the subdivision of lines in bounded general position."""
    lines = tuple(lines)
    report = check_position(lines)
    if not report.ok:
        raise NotBoundedGeneralPosition(report)
    n = len(lines)

    vertices: list[Vertex] = []
    vertex_index: dict[tuple[int, int], int] = {}
    for i, j in itertools.combinations(range(n), 2):
        vertex_index[(i, j)] = len(vertices)
        vertices.append(Vertex(len(vertices), intersect(lines[i], lines[j]), (i, j)))

    half_edges: list[HalfEdge] = []
    edges: list[Edge] = []
    outgoing: dict[int, list[int]] = defaultdict(list)
    out_rays: list[int] = []

    def add_pair(u, v, li, d, edge=None):
        h = HalfEdge(len(half_edges), u, v, li, d, edge=edge)
        t = HalfEdge(len(half_edges) + 1, v, u, li, (-d[0], -d[1]), edge=edge)
        h.twin, t.twin = t.index, h.index
        half_edges.extend((h, t))
        return h, t

    for li, line in enumerate(lines):
        d = line.direction
        on_line = sorted(
            (vertex_index[(min(li, k), max(li, k))] for k in range(n) if k != li),
            key=lambda vid: _param(line, vertices[vid].point),
        )
        for u, v in zip(on_line, on_line[1:]):
            h, t = add_pair(u, v, li, d, edge=len(edges))
            edges.append(Edge(len(edges), li, (u, v), (h.index, t.index)))
            outgoing[u].append(h.index)
            outgoing[v].append(t.index)
        # rays off both ends
        first, last = on_line[0], on_line[-1]
        h, _ = add_pair(last, None, li, d)
        outgoing[last].append(h.index)
        out_rays.append(h.index)
        h, _ = add_pair(first, None, li, (-d[0], -d[1]))
        outgoing[first].append(h.index)
        out_rays.append(h.index)

    by_angle = functools.cmp_to_key(compare_directions)

    # next(h): at h's target, the outgoing half-edge just clockwise of twin(h)
    for vid, hs in outgoing.items():
        hs.sort(key=lambda h: by_angle(half_edges[h].direction))
        k = len(hs)
        position = {h: idx for idx, h in enumerate(hs)}
        for h in hs:
            incoming = half_edges[h].twin
            half_edges[incoming].next = hs[(position[h] - 1) % k]

    # outgoing ray -> incoming ray of the next direction counterclockwise
    out_rays.sort(key=lambda h: by_angle(half_edges[h].direction))
    for idx, h in enumerate(out_rays):
        nxt = out_rays[(idx + 1) % len(out_rays)]
        half_edges[h].next = half_edges[nxt].twin

    faces: list[Face] = []
    for start in range(len(half_edges)):
        if half_edges[start].face >= 0:
            continue
        cycle = []
        h = start
        while half_edges[h].face < 0:
            half_edges[h].face = len(faces)
            cycle.append(h)
            h = half_edges[h].next
        if h != start:
            raise InternalInvariantError(f"face walk from half-edge {start} did not close")
        bounded = not any(half_edges[c].is_ray for c in cycle)
        faces.append(Face(len(faces), tuple(cycle), bounded))

    arr = Arrangement(lines, vertices, half_edges, edges, faces, vertex_index=vertex_index)
    arr.alcoves = [_alcove_from_face(arr, f) for f in faces if f.bounded]
    return arr


def _alcove_from_face(arr: Arrangement, face: Face) -> Alcove:
    hs = [arr.half_edges[h] for h in face.half_edges]
    ids = tuple(h.origin for h in hs)
    return Alcove(
        boundary=face.half_edges,
        line_indices=tuple(h.line for h in hs),
        vertex_cycle=tuple(arr.vertices[v].point for v in ids),
        vertex_ids=ids,
        face=face.index,
    )


def enumerate_alcoves(arr: Arrangement) -> list[Alcove]:
    """Alcoves of a built arrangement, after checking the structural invariants.

    Each alcove must be strictly convex with boundary edges on distinct lines,
    and the total must be ``(n-1)(n-2)/2``.
    """
    n = arr.n
    for a in arr.alcoves:
        if len(set(a.line_indices)) != len(a.line_indices):
            raise InternalInvariantError(f"alcove {a.face} repeats a boundary line")
        m = a.size
        for k in range(m):
            turn = orientation(a.vertex_cycle[k], a.vertex_cycle[(k + 1) % m], a.vertex_cycle[(k + 2) % m])
            if turn is not Orientation.LEFT:
                raise InternalInvariantError(f"alcove {a.face} is not strictly convex")
    expected = (n - 1) * (n - 2) // 2 if n >= 3 else 0
    if len(arr.alcoves) != expected:
        raise InternalInvariantError(f"{len(arr.alcoves)} alcoves for n={n}, expected {expected}")
    return list(arr.alcoves)


# -- sign vectors and the incremental route -------------------------------------------


def _side(line: ProjLine, x: Fraction, y: Fraction) -> int:
    v = line.a * x + line.b * y + line.c
    return (v > 0) - (v < 0)


def sign_vector(lines: Sequence[ProjLine], p: ProjPoint) -> tuple[int, ...]:
    x, y = p.xy
    return tuple(_side(l, x, y) for l in lines)


def alcove_sign_vector(arr: Arrangement, alcove: Alcove) -> tuple[int, ...]:
    return sign_vector(arr.lines, alcove.interior_point())


def cell_is_bounded(lines: Sequence[ProjLine], signs: Sequence[int]) -> bool:
    """Whether ``{x : signs[i] * l_i(x) >= 0}`` has a trivial recession cone.

    A nontrivial planar cone always contains a direction along one of the
    constraint lines, so testing the ``±`` line directions suffices.
    """
    rows = [(s * l.a, s * l.b) for l, s in zip(lines, signs) if s != 0]
    for l in lines:
        for d in (l.direction, (-l.direction[0], -l.direction[1])):
            if all(a * d[0] + b * d[1] >= 0 for a, b in rows):
                return False
    return True


def cell_polygon(lines: Sequence[ProjLine], signs: Sequence[int]) -> list[ProjPoint]:
    """Counterclockwise corners of a bounded cell given by a full sign vector."""
    corners = set()
    for i, j in itertools.combinations(range(len(lines)), 2):
        p = intersect(lines[i], lines[j])
        if p.at_infinity:
            continue
        x, y = p.xy
        if all(s * _side(l, x, y) >= 0 for l, s in zip(lines, signs)):
            corners.add(p)
    return _ccw_sort(list(corners))


def _ccw_sort(points: list[ProjPoint]) -> list[ProjPoint]:
    if len(points) < 3:
        return points
    xs, ys = zip(*(p.xy for p in points))
    cx, cy = sum(xs) / len(xs), sum(ys) / len(ys)
    key = functools.cmp_to_key(compare_directions)
    return sorted(points, key=lambda p: key((p.xy[0] - cx, p.xy[1] - cy)))


@dataclass(frozen=True)
class IncrementalResult:
    """Alcoves after inserting one line, derived without rebuilding the subdivision."""

    sign_vectors: frozenset[tuple[int, ...]]
    split: int  # old alcoves cut in two
    carved: int  # new alcoves cut from unbounded faces

    @property
    def count(self) -> int:
        return len(self.sign_vectors)


def incremental_alcoves(arr: Arrangement, line: ProjLine) -> IncrementalResult:
    """Update the alcove set for one new line via its zone.

    Old alcoves the line misses keep their sign vector, extended by their side
    of the new line. Alcoves it crosses split in two. Each bounded piece of the
    new line that lies in an unbounded old face may cut a bounded cell out of
    it; boundedness of both sides is decided by the recession-cone test.
    """
    lines = arr.lines + (line,)
    report = check_position(lines)
    if not report.ok:
        raise NotBoundedGeneralPosition(report)

    result = set()
    split = 0
    old_cells = set()
    for a in arr.alcoves:
        base = alcove_sign_vector(arr, a)
        old_cells.add(base)
        sides = {_side(line, *p.xy) for p in a.vertex_cycle}
        if sides == {1, -1}:
            split += 1
            result.add(base + (1,))
            result.add(base + (-1,))
        else:
            result.add(base + (sides.pop(),))

    # crossing points of the new line, in order
    crossings = sorted(
        (intersect(line, l) for l in arr.lines), key=lambda p: _param(line, p)
    )
    carved = 0
    for p, q in zip(crossings, crossings[1:]):
        (px, py), (qx, qy) = p.xy, q.xy
        mid = ProjPoint.affine((px + qx) / 2, (py + qy) / 2)
        base = sign_vector(arr.lines, mid)
        if base in old_cells:
            continue
        for s in (1, -1):
            if cell_is_bounded(lines, base + (s,)):
                result.add(base + (s,))
                carved += 1
    return IncrementalResult(frozenset(result), split, carved)


def insert_line(arr: Arrangement, line: ProjLine, check_incremental: bool = True) -> Arrangement:
    """Rebuild with one more line and check the alcove count rose by ``n - 1``.

    With ``check_incremental`` the zone-based update must produce exactly the
    same alcoves (as sign vectors) as the rebuild.
    """
    n = arr.n
    new = build(arr.lines + (line,))
    before, after = len(arr.alcoves), len(new.alcoves)
    if after - before != n - 1:
        raise InternalInvariantError(f"inserting into {n} lines added {after - before} alcoves")
    if len(new.vertices) - len(arr.vertices) != n:
        raise InternalInvariantError("vertex count did not rise by n")
    if check_incremental:
        inc = incremental_alcoves(arr, line)
        rebuilt = frozenset(alcove_sign_vector(new, a) for a in new.alcoves)
        if inc.sign_vectors != rebuilt:
            raise InternalInvariantError("incremental and rebuilt alcove sets differ")
    return new


# -- pairwise alcove intersection ---------------------------------------------


class Contact(Enum):
    EMPTY = "empty"
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class AlcoveIntersection:
    kind: Contact
    points: tuple[ProjPoint, ...] = ()


def _clip(poly: list[tuple[Fraction, Fraction]], a, b, c) -> list[tuple[Fraction, Fraction]]:
    """Keep the part of ``poly`` where ``a x + b y + c >= 0`` (closed half-plane)."""
    out = []
    m = len(poly)
    for k in range(m):
        cur, nxt = poly[k], poly[(k + 1) % m]
        dc = a * cur[0] + b * cur[1] + c
        dn = a * nxt[0] + b * nxt[1] + c
        if dc >= 0:
            out.append(cur)
        if (dc > 0 and dn < 0) or (dc < 0 and dn > 0):
            t = dc / (dc - dn)
            out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
    deduped = []
    for p in out:
        if p not in deduped:
            deduped.append(p)
    return deduped


def _halfplanes(poly: Sequence[tuple[Fraction, Fraction]]):
    m = len(poly)
    for k in range(m):
        (x0, y0), (x1, y1) = poly[k], poly[(k + 1) % m]
        # left of the directed edge is inside for a CCW polygon
        a, b = -(y1 - y0), x1 - x0
        yield a, b, -(a * x0 + b * y0)


def convex_intersection(p1: Sequence[ProjPoint], p2: Sequence[ProjPoint]) -> list[tuple[Fraction, Fraction]]:
    """Exact closed intersection of two CCW convex polygons, as a point list."""
    a = [p.xy for p in p1]
    b = [p.xy for p in p2]
    region = list(a)
    for hp in _halfplanes(b):
        region = _clip(region, *hp)
        if not region:
            break
    return region


def alcove_intersection(a1: Alcove, a2: Alcove) -> AlcoveIntersection:
    """Classify the closed intersection of two alcoves; a 2-D overlap is a bug."""
    if a1.face == a2.face:
        raise ArrangementError("alcove_intersection needs two distinct alcoves")
    xs1, ys1 = zip(*(p.xy for p in a1.vertex_cycle))
    xs2, ys2 = zip(*(p.xy for p in a2.vertex_cycle))
    if max(xs1) < min(xs2) or max(xs2) < min(xs1) or max(ys1) < min(ys2) or max(ys2) < min(ys1):
        return AlcoveIntersection(Contact.EMPTY)
    region = convex_intersection(a1.vertex_cycle, a2.vertex_cycle)
    pts = [ProjPoint.affine(x, y) for x, y in region]
    if not pts:
        return AlcoveIntersection(Contact.EMPTY)
    if len(pts) == 1:
        return AlcoveIntersection(Contact.VERTEX, tuple(pts))
    if all(orientation(pts[0], pts[1], r) is Orientation.COLLINEAR for r in pts[2:]):
        ends = sorted(region)
        return AlcoveIntersection(
            Contact.EDGE, (ProjPoint.affine(*ends[0]), ProjPoint.affine(*ends[-1]))
        )
    raise InternalInvariantError(f"alcoves {a1.face} and {a2.face} overlap in a 2-D region")


# -- vertex number ----------------------------------------------------------------


def vertex_number(arr: Arrangement, poly: Sequence[ProjPoint]) -> int:
    """Count arrangement vertices strictly inside ``poly`` or inside its sides.

    ``poly`` lists arrangement vertices (either orientation) forming a convex
    polygon whose sides lie on pairwise distinct lines of the arrangement.
    """
    by_point = {v.point: v for v in arr.vertices}
    corners = []
    for p in poly:
        if p not in by_point:
            raise InvalidPolygon(f"{p} is not a vertex of the arrangement")
        corners.append(by_point[p])
    m = len(corners)
    if m < 3:
        raise InvalidPolygon(f"polygon needs at least 3 corners, got {m}")
    side_lines = []
    for k in range(m):
        common = set(corners[k].lines) & set(corners[(k + 1) % m].lines)
        if len(common) != 1:
            raise InvalidPolygon(f"corners {k} and {(k + 1) % m} do not share a line")
        side_lines.append(common.pop())
    if len(set(side_lines)) != m:
        raise InvalidPolygon("polygon sides do not lie on distinct lines")
    pts = [c.point for c in corners]
    if orientation(pts[0], pts[1], pts[2]) is Orientation.RIGHT:
        pts.reverse()
    try:
        point_in_convex_polygon(pts[0], pts)
    except GeometryError as exc:
        raise InvalidPolygon(str(exc)) from exc
    corner_set = set(pts)
    count = 0
    for v in arr.vertices:
        if v.point in corner_set:
            continue
        if point_in_convex_polygon(v.point, pts) is not Location.EXTERIOR:
            count += 1
    return count


# -- summary ---------------------------------------------------------------------


def expected_alcoves(n: int) -> int:
    return (n - 1) * (n - 2) // 2 if n >= 3 else 0


def degree_histogram(arr: Arrangement) -> dict[int, int]:
    return dict(sorted(Counter(arr.edge_alcove_degrees()).items()))


def random_lines(n: int, rng, bound: int = 20, max_draws: int = 10_000) -> list[ProjLine]:
    """Lines with integer coefficients in ``[-bound, bound]``, redrawn until in bounded general position.

    ``rng`` is a :class:`numpy.random.Generator` or :class:`random.Random`.
    """
    draw = getattr(rng, "integers", None)
    for _ in range(max_draws):
        if draw is not None:
            coeffs = [tuple(int(v) for v in draw(-bound, bound + 1, size=3)) for _ in range(n)]
        else:
            coeffs = [tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(n)]
        if any(a == 0 and b == 0 for a, b, _ in coeffs):
            continue
        lines = [ProjLine(*c) for c in coeffs]
        if len(set(lines)) < n:
            continue
        if check_position(lines).ok:
            return lines
    raise ArrangementError(f"no bounded general position sample of {n} lines in {max_draws} draws")
