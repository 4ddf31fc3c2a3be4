"""Regular n-gon line arrangements and their concentric-ring structure.

Line ``l_j`` passes through the unit-circle points at angles ``2*pi*j/n`` and
``2*pi*(j+1)/n``. Metric checks (ring radii, subtended angles) run in floating
point; combinatorial checks run on an exact rational approximation of the
lines built by :func:`rationalize`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from .arrangement import Alcove, Arrangement, build
from .geometry import Location, ProjLine, ProjPoint, point_in_convex_polygon

DEFAULT_TOL = 1e-9
DEFAULT_DENOMINATOR = 10**6


class HarmonicError(ValueError):
    pass


class OutOfRangeK(HarmonicError):
    pass


class ToleranceExceeded(HarmonicError):
    def __init__(self, message: str, worst: dict):
        super().__init__(message)
        self.worst = worst


class ClassificationIncomplete(HarmonicError):
    pass


def default_tolerance(n: int, precision: Optional[int] = None) -> float:
    """1e-9 at double precision; ``10 * eps * n`` for wider mpmath precision."""
    if precision is None or precision <= 53:
        return DEFAULT_TOL
    return 10.0 * float(mpmath.mpf(2) ** (1 - precision)) * n


@dataclass
class HarmonicSpec:
    n: int
    vertices: np.ndarray  # (n, 2) unit-circle points
    lines: np.ndarray  # (n, 3) rows (a, b, c) of a x + b y + c = 0, unit normal
    precision: Optional[int] = None
    rationalized_lines: Optional[list[ProjLine]] = None
    # high-precision copies when ``precision`` is set, else None
    mp_lines: Optional[list[tuple]] = field(default=None, repr=False)

    @property
    def parallel_pairs(self) -> list[tuple[int, int]]:
        if self.n % 2:
            return []
        h = self.n // 2
        return [(j, j + h) for j in range(h)]

    @property
    def infinity_points(self) -> list[tuple[float, float]]:
        """Common direction of each parallel pair, as a point ``[x:y:0]``."""
        out = []
        for i, _ in self.parallel_pairs:
            a, b, _c = self.lines[i]
            out.append((float(-b), float(a)))
        return out


def _angles(n):
    return 2 * np.pi * np.arange(n) / n


def _line_coeffs(n: int, j: int, sin, cos, pi):
    phi = 2 * pi * (j + 0.5) / n
    return cos(phi), sin(phi), -cos(pi / n)


def rationalize(n: int, max_denominator: int = DEFAULT_DENOMINATOR) -> list[ProjLine]:
    """Exact rational lines close to the regular n-gon edge lines.

    Each normal and offset is rounded with ``Fraction.limit_denominator``. For
    even n the partner ``l_{j+n/2}`` reuses the negated normal of ``l_j`` so
    opposite sides stay exactly parallel.
    """
    offset = Fraction(math.cos(math.pi / n)).limit_denominator(max_denominator)
    normals = []
    for j in range(n):
        if n % 2 == 0 and j >= n // 2:
            a, b = normals[j - n // 2]
            normals.append((-a, -b))
            continue
        phi = 2 * math.pi * (j + 0.5) / n
        normals.append(
            (
                Fraction(math.cos(phi)).limit_denominator(max_denominator),
                Fraction(math.sin(phi)).limit_denominator(max_denominator),
            )
        )
    return [ProjLine(a, b, -offset) for a, b in normals]


def generate(
    n: int,
    precision: Optional[int] = None,
    rational: bool = True,
    max_denominator: int = DEFAULT_DENOMINATOR,
) -> HarmonicSpec:
    """Build the regular n-gon arrangement.

    ``precision`` (bits) switches the metric data to mpmath; the numpy arrays
    are always filled at double precision.
    """
    if n < 3:
        raise HarmonicError(f"n must be at least 3, got {n}")
    theta = _angles(n)
    vertices = np.column_stack([np.cos(theta), np.sin(theta)])
    lines = np.array([_line_coeffs(n, j, np.sin, np.cos, np.pi) for j in range(n)])
    mp_lines = None
    if precision is not None and precision > 53:
        with mpmath.workprec(precision):
            mp_lines = [_line_coeffs(n, j, mpmath.sin, mpmath.cos, mpmath.pi) for j in range(n)]
    spec = HarmonicSpec(n, vertices, lines, precision=precision, mp_lines=mp_lines)
    if rational:
        spec.rationalized_lines = rationalize(n, max_denominator)
    return spec


def ring_radius(n: int, k: int) -> float:
    """Radius of the circle through every ``l_j ∩ l_{j+k}``."""
    if not 1 <= k <= (n - 1) // 2:
        raise OutOfRangeK(f"k={k} outside 1..{(n - 1) // 2} for n={n}")
    return math.sin(math.pi / 2 * (1 - 2 / n)) / math.sin(math.pi / 2 * (1 - 2 * k / n))


def ring_radius_mp(n: int, k: int, precision: int):
    if not 1 <= k <= (n - 1) // 2:
        raise OutOfRangeK(f"k={k} outside 1..{(n - 1) // 2} for n={n}")
    with mpmath.workprec(precision):
        half_pi = mpmath.pi / 2
        return +(mpmath.sin(half_pi * (1 - mpmath.mpf(2) / n)) / mpmath.sin(half_pi * (1 - mpmath.mpf(2 * k) / n)))


@dataclass
class RingReport:
    k: int
    predicted_radius: float
    measured_radii: list[float]
    consecutive_angles: list[float]
    at_infinity: bool = False
    radius_error: float = 0.0
    angle_error: float = 0.0
    passed: bool = True


def _meet(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    return (b1 * c2 - b2 * c1) / det, (c1 * a2 - c2 * a1) / det


def _wrap(delta: float) -> float:
    return delta % (2 * math.pi)


def verify_rings(spec: HarmonicSpec, tol: Optional[float] = None, raise_on_failure: bool = True) -> list[RingReport]:
    """Measure every ring ``l_j ∩ l_{j+k}`` against :func:`ring_radius`.

    For even n the ring ``k = n/2`` lies at infinity; it is reported with
    ``at_infinity=True`` and checked only for being ``n/2`` parallel pairs.
    """
    n = spec.n
    tol = default_tolerance(n, spec.precision) if tol is None else tol
    if tol <= 0:
        raise HarmonicError("tolerance must be positive")
    high = spec.mp_lines is not None
    reports = []
    for k in range(1, (n - 1) // 2 + 1):
        if high:
            with mpmath.workprec(spec.precision):
                predicted = ring_radius_mp(n, k, spec.precision)
                pts = [_meet(spec.mp_lines[j], spec.mp_lines[(j + k) % n]) for j in range(n)]
                radii = [mpmath.hypot(x, y) for x, y in pts]
                phases = [mpmath.atan2(y, x) for x, y in pts]
                steps = [(phases[(j + 1) % n] - phases[j]) % (2 * mpmath.pi) for j in range(n)]
                r_err = max(abs(r - predicted) for r in radii)
                a_err = max(abs(s - 2 * mpmath.pi / n) for s in steps)
                radii, steps = [float(r) for r in radii], [float(s) for s in steps]
                predicted, r_err, a_err = float(predicted), float(r_err), float(a_err)
        else:
            predicted = ring_radius(n, k)
            pts = [_meet(spec.lines[j], spec.lines[(j + k) % n]) for j in range(n)]
            radii = [math.hypot(x, y) for x, y in pts]
            phases = [math.atan2(y, x) for x, y in pts]
            steps = [_wrap(phases[(j + 1) % n] - phases[j]) for j in range(n)]
            r_err = max(abs(r - predicted) for r in radii)
            a_err = max(abs(s - 2 * math.pi / n) for s in steps)
        ok = r_err <= tol and a_err <= tol
        reports.append(RingReport(k, predicted, radii, steps, False, r_err, a_err, ok))
    if n % 2 == 0:
        k = n // 2
        parallel = 0
        for j in range(k):
            a1, b1, _ = spec.lines[j]
            a2, b2, _ = spec.lines[j + k]
            if abs(a1 * b2 - a2 * b1) <= tol:
                parallel += 1
        reports.append(RingReport(k, math.inf, [], [], True, passed=parallel == k))
    if raise_on_failure:
        bad = [r for r in reports if not r.passed]
        if bad:
            worst = max(bad, key=lambda r: max(r.radius_error, r.angle_error))
            raise ToleranceExceeded(
                f"ring k={worst.k} off by radius {worst.radius_error:.3g}, angle {worst.angle_error:.3g}",
                {"k": worst.k, "radius_error": worst.radius_error, "angle_error": worst.angle_error},
            )
    return reports


def ring_index(n: int, i: int, j: int) -> int:
    """Ring carrying ``l_i ∩ l_j``; ``n/2`` means at infinity for even n."""
    d = (j - i) % n
    return min(d, n - d)


# -- alcove classification ------------------------------------------------------


@dataclass
class AlcoveClassification:
    n: int
    central: Alcove
    first_kind: dict[int, Alcove]  # keyed by i: lines {i, i+1, i+2}
    second_kind: dict[int, dict[int, Alcove]]  # j -> i -> second_kind_lines(n, i, j)
    ring_contacts: dict[int, tuple[int, ...]]  # alcove face -> ring index per corner

    def counts(self) -> dict:
        return {
            "central": 1,
            "first": len(self.first_kind),
            "second": {j: len(v) for j, v in sorted(self.second_kind.items())},
        }

    @property
    def total(self) -> int:
        return 1 + len(self.first_kind) + sum(len(v) for v in self.second_kind.values())


def line_patterns(n: int) -> dict[frozenset[int], tuple[str, int, int]]:
    """Boundary line-index sets of the peripheral alcoves, mod n."""
    patterns: dict[frozenset[int], tuple[str, int, int]] = {}

    def put(key, label):
        if key in patterns:
            raise ClassificationIncomplete(f"pattern {sorted(key)} is ambiguous for n={n}")
        patterns[key] = label

    if n >= 5:
        for i in range(n):
            put(frozenset({i, (i + 1) % n, (i + 2) % n}), ("first", i, 0))
    for j in range(1, (n - 5) // 2 + 1):
        for i in range(n):
            put(second_kind_lines(n, i, j), ("second", i, j))
    return patterns


def second_kind_lines(n: int, i: int, j: int) -> frozenset[int]:
    """Lines of the j-th layer quadrilateral at position i: two adjacent pairs ``j`` apart.

    Its corners sit on rings ``j, j+1, j+1, j+2`` (ring 1 is the unit circle).
    """
    return frozenset({i % n, (i + 1) % n, (i + j + 1) % n, (i + j + 2) % n})


def classify_alcoves(spec: HarmonicSpec, arr: Optional[Arrangement] = None) -> AlcoveClassification:
    """Sort the alcoves of an odd regular arrangement into central, first and second kind."""
    n = spec.n
    if n % 2 == 0 or n < 3:
        raise HarmonicError(f"classification needs odd n >= 3, got {n}")
    if arr is None:
        if spec.rationalized_lines is None:
            spec.rationalized_lines = rationalize(n)
        arr = build(spec.rationalized_lines)
    patterns = line_patterns(n)
    origin = ProjPoint.affine(0, 0)
    central = None
    first: dict[int, Alcove] = {}
    second: dict[int, dict[int, Alcove]] = {j: {} for j in range(1, (n - 5) // 2 + 1)}
    contacts = {}
    for a in arr.alcoves:
        idx = a.line_indices
        m = len(idx)
        contacts[a.face] = tuple(ring_index(n, idx[k - 1], idx[k]) for k in range(m))
        if point_in_convex_polygon(origin, a.vertex_cycle) is Location.INTERIOR:
            if central is not None or a.line_set != frozenset(range(n)):
                raise ClassificationIncomplete("origin alcove is not the unique central n-gon")
            central = a
            continue
        label = patterns.get(a.line_set)
        if label is None or len(a.line_set) != m:
            raise ClassificationIncomplete(f"alcove on lines {sorted(a.line_set)} matches no class")
        kind, i, j = label
        slot = first if kind == "first" else second[j]
        if i in slot:
            raise ClassificationIncomplete(f"two alcoves share pattern {sorted(a.line_set)}")
        slot[i] = a
    if central is None:
        raise ClassificationIncomplete("no alcove contains the origin")
    result = AlcoveClassification(n, central, first, second, contacts)
    if result.total != len(arr.alcoves):
        raise ClassificationIncomplete("classes do not cover the alcove set")
    return result


def class_sizes(n: int) -> tuple[int, int, int]:
    """Predicted (central, first, second) alcove counts for odd n."""
    return 1, (n if n >= 5 else 0), (n * (n - 5) // 2 if n >= 7 else 0)


@dataclass(frozen=True)
class ClassSplit:
    m: int
    central_share: int
    first_share: int
    second_share: int

    def __iter__(self):
        return iter((self.m, self.central_share, self.first_share, self.second_share))


def class_split(n: int) -> ClassSplit:
    """Split the class ``n(n-1)`` as ``2n + 2n + n(n-5)``; two class points per node."""
    if n < 5 or n % 2 == 0:
        raise HarmonicError(f"class split needs odd n >= 5, got {n}")
    split = ClassSplit(n * (n - 1), 2 * n, 2 * n, n * (n - 5))
    assert split.central_share + split.first_share + split.second_share == split.m
    return split


def genus(n: int) -> int:
    """Genus of a nonsingular plane curve of degree n."""
    return (n - 1) * (n - 2) // 2
