"""Vertical tangents of plane curves near a union of lines.

A member of the pencil ``f_s = (1 - s) * prod(l_j) + s * g`` is a smooth
degree-n curve for small ``s > 0``. Its vertical tangents are the solutions of
``f = 0, df/dx = 0``: ``n(n-1)`` of them, and as ``s -> 0`` they gather in
pairs at the ``n(n-1)/2`` crossings of the lines.

The main solver eliminates y with a numerically interpolated Sylvester
resultant, finds its roots as companion-matrix eigenvalues, back-substitutes y
and polishes with damped Newton. :func:`oracle_tangents` is an independent
route (exact resultant in x, high-precision roots), used for cross-checks.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.linalg

from .geometry import ProjLine

RESIDUAL_TOL = 1e-10
SINGULAR_TOL = 1e-7
DEFAULT_S_VALUES = (1e-2, 1e-3, 1e-4)


class DegenerationError(RuntimeError):
    pass


class SolverFailure(DegenerationError):
    pass


class SingularCurve(DegenerationError):
    pass


class ClusterAmbiguity(DegenerationError):
    pass


class BivariatePoly:
    """Dense polynomial ``sum c[i, j] x**i y**j`` over ``i + j <= degree``."""

    def __init__(self, coeffs, degree: Optional[int] = None):
        c = np.array(coeffs, dtype=complex if np.iscomplexobj(coeffs) else float)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("coefficient grid must be square")
        size = c.shape[0]
        i, j = np.indices(c.shape)
        if np.any(c[i + j >= size]):
            raise ValueError("coefficients above the anti-diagonal must vanish")
        nonzero = np.nonzero(c)
        actual = int((nonzero[0] + nonzero[1]).max()) if len(nonzero[0]) else 0
        if degree is not None and degree != actual:
            raise ValueError(f"declared degree {degree} but top nonzero term has degree {actual}")
        self.degree = actual
        self.coeffs = c[: actual + 1, : actual + 1].copy()

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], float]) -> "BivariatePoly":
        n = max(i + j for i, j in terms)
        c = np.zeros((n + 1, n + 1))
        for (i, j), v in terms.items():
            c[i, j] = v
        return cls(c)

    @classmethod
    def line(cls, a: float, b: float, c: float) -> "BivariatePoly":
        return cls([[c, b], [a, 0.0]])

    def __call__(self, x, y):
        x = np.asarray(x)
        y = np.asarray(y)
        # Horner in x of polynomials in y
        n = self.degree
        acc = np.zeros(np.broadcast(x, y).shape, dtype=np.result_type(x, y, self.coeffs))
        for i in range(n, -1, -1):
            row = np.polynomial.polynomial.polyval(y, self.coeffs[i, : n + 1 - i])
            acc = acc * x + row
        return acc

    def _padded(self, size):
        out = np.zeros((size, size), dtype=self.coeffs.dtype)
        k = self.coeffs.shape[0]
        out[:k, :k] = self.coeffs
        return out

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        size = max(self.coeffs.shape[0], other.coeffs.shape[0])
        return BivariatePoly(self._padded(size) + other._padded(size))

    def __mul__(self, other):
        if isinstance(other, BivariatePoly):
            size = self.degree + other.degree + 1
            out = np.zeros((size, size), dtype=np.result_type(self.coeffs, other.coeffs))
            for (i, j), v in np.ndenumerate(self.coeffs):
                if v:
                    k = other.coeffs.shape[0]
                    out[i : i + k, j : j + k] += v * other.coeffs
            return BivariatePoly(out)
        return BivariatePoly(self.coeffs * other)

    __rmul__ = __mul__

    def dx(self) -> "BivariatePoly":
        if self.degree == 0:
            return BivariatePoly([[0.0]])
        i = np.arange(1, self.degree + 1)[:, None]
        return BivariatePoly(i * self.coeffs[1:, :-1])

    def dy(self) -> "BivariatePoly":
        if self.degree == 0:
            return BivariatePoly([[0.0]])
        j = np.arange(1, self.degree + 1)[None, :]
        return BivariatePoly(j * self.coeffs[:-1, 1:])

    def norm(self) -> float:
        return float(np.abs(self.coeffs).max())

    def y_coefficients(self) -> list[np.ndarray]:
        """``f = sum_k p_k(x) y**k``; returns ``p_k`` as ascending x-coefficient arrays."""
        return [self.coeffs[:, k] for k in range(self.degree + 1)]

    def degree_in_y(self) -> int:
        cols = np.nonzero(np.any(self.coeffs != 0, axis=0))[0]
        return int(cols.max()) if len(cols) else 0

    def __repr__(self):
        return f"BivariatePoly(degree={self.degree})"


def product_of_lines(lines: Iterable) -> BivariatePoly:
    """Multiply out ``prod (a x + b y + c)`` for ``(a, b, c)`` triples or ProjLines."""
    f = BivariatePoly([[1.0]])
    for l in lines:
        a, b, c = (float(v) for v in (tuple(l) if isinstance(l, ProjLine) else l))
        f = f * BivariatePoly.line(a, b, c)
    return f


# -- resultant elimination ---------------------------------------------------------


def _sylvester(p: Sequence[complex], q: Sequence[complex]) -> np.ndarray:
    """Sylvester matrix of two univariate polynomials, coefficients ascending."""
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    m = np.zeros((size, size), dtype=complex)
    for r in range(dq):
        m[r, r : r + dp + 1] = p[::-1]
    for r in range(dp):
        m[dq + r, r : r + dq + 1] = q[::-1]
    return m


def _trim_y(f: BivariatePoly) -> list[np.ndarray]:
    cols = f.y_coefficients()
    return cols[: f.degree_in_y() + 1]


def resultant_in_y(f: BivariatePoly, g: BivariatePoly, center: complex = 0.0, radius: float = 1.0) -> np.ndarray:
    """Coefficients of ``Res_y(f, g)`` in the local variable ``t = (x - center) / radius``.

    The determinant of the Sylvester matrix is sampled at ``center + radius * w``
    for roots of unity ``w`` and interpolated by FFT. Ascending order, untrimmed.
    """
    fy, gy = _trim_y(f), _trim_y(g)
    dp, dq = len(fy) - 1, len(gy) - 1
    if dp + dq == 0:
        raise SolverFailure("both polynomials are free of y")
    bound = dq * f.degree + dp * g.degree
    m = bound + 1
    xs = center + radius * np.exp(2j * np.pi * np.arange(m) / m)
    values = np.empty(m, dtype=complex)
    for k, x0 in enumerate(xs):
        p = [np.polynomial.polynomial.polyval(x0, c) for c in fy]
        q = [np.polynomial.polynomial.polyval(x0, c) for c in gy]
        values[k] = np.linalg.det(_sylvester(p, q))
    return np.fft.fft(values) / m


def _trim_leading(c: np.ndarray, rel: float) -> np.ndarray:
    scale = np.abs(c).max()
    if scale == 0:
        raise SolverFailure("resultant vanishes identically; the curve has a multiple component")
    k = len(c) - 1
    while k > 0 and abs(c[k]) <= rel * scale:
        k -= 1
    return c[: k + 1]


def companion_roots(c: np.ndarray) -> np.ndarray:
    """Roots of an ascending-coefficient polynomial as companion eigenvalues."""
    c = np.asarray(c, dtype=complex)
    d = len(c) - 1
    if d < 1:
        return np.empty(0, dtype=complex)
    comp = np.zeros((d, d), dtype=complex)
    comp[1:, :-1] = np.eye(d - 1)
    comp[:, -1] = -c[:-1] / c[-1]
    return np.linalg.eigvals(comp)


def sylvester_pencil(f: BivariatePoly, g: BivariatePoly) -> list[np.ndarray]:
    """Coefficient matrices ``S_d`` of the Sylvester matrix ``S(x) = sum x**d S_d`` in y."""
    fy, gy = _trim_y(f), _trim_y(g)
    if len(fy) + len(gy) == 2:
        raise SolverFailure("both polynomials are free of y")
    top = max(len(c) for c in fy + gy) - 1

    def at(arrs, d):
        return [a[d] if d < len(a) else 0.0 for a in arrs]

    mats = [np.real_if_close(_sylvester(at(fy, d), at(gy, d))) for d in range(top + 1)]
    while len(mats) > 1 and not np.any(mats[-1]):
        mats.pop()
    return mats


def hidden_variable_roots(f: BivariatePoly, g: BivariatePoly) -> tuple[np.ndarray, np.ndarray]:
    """Finite x with ``det S(x) = 0``, plus the y read off each null vector.

    ``S(x)`` is linearized as a block companion pencil ``A - x B`` and solved
    with a generalized eigensolver; singular leading blocks show up as
    eigenvalues with ``beta = 0`` and are dropped. ``x`` is scaled so the end
    blocks have equal norm.
    """
    mats = sylvester_pencil(f, g)
    D = len(mats) - 1
    N = mats[0].shape[0]
    if D == 0:
        raise SolverFailure("Sylvester matrix does not depend on x")
    n0, nD = np.linalg.norm(mats[0]), np.linalg.norm(mats[D])
    rho = (n0 / nD) ** (1.0 / D) if n0 > 0 else 1.0
    mats = [m * rho**d for d, m in enumerate(mats)]
    dtype = np.result_type(*mats)
    A = np.zeros((N * D, N * D), dtype=dtype)
    B = np.eye(N * D, dtype=dtype)
    for k in range(D - 1):
        A[k * N : (k + 1) * N, (k + 1) * N : (k + 2) * N] = np.eye(N)
    for d in range(D):
        A[(D - 1) * N :, d * N : (d + 1) * N] = -mats[d]
    B[(D - 1) * N :, (D - 1) * N :] = mats[D]
    (alpha, beta), vecs = scipy.linalg.eig(A, B, homogeneous_eigvals=True)
    finite = np.abs(beta) > 1e-10 * np.abs(alpha)
    xs = rho * alpha[finite] / beta[finite]
    u = vecs[:N, finite]
    # null vector of the Sylvester matrix is (y**(N-1), ..., y, 1)
    num = np.sum(u[:-1] * np.conj(u[1:]), axis=0)
    den = np.sum(np.abs(u[1:]) ** 2, axis=0)
    ys = np.where(den > 0, num / np.where(den > 0, den, 1), 0)
    return xs, ys


# -- Newton polishing ---------------------------------------------------------------


@dataclass
class _System:
    f: BivariatePoly
    fx: BivariatePoly
    fy: BivariatePoly
    fxx: BivariatePoly
    fxy: BivariatePoly

    @classmethod
    def of(cls, f: BivariatePoly) -> "_System":
        fx = f.dx()
        return cls(f, fx, f.dy(), fx.dx(), fx.dy())

    def residual(self, x, y) -> float:
        return max(abs(self.f(x, y)), abs(self.fx(x, y)))


def newton_polish(sys: _System, x: complex, y: complex, tol: float, max_iter: int = 60) -> tuple[complex, complex, float]:
    """Damped Newton on ``(f, f_x) = 0`` from ``(x, y)``."""
    res = sys.residual(x, y)
    for _ in range(max_iter):
        if res <= tol * 1e-3:
            break
        F = np.array([sys.f(x, y), sys.fx(x, y)], dtype=complex)
        J = np.array(
            [[sys.fx(x, y), sys.fy(x, y)], [sys.fxx(x, y), sys.fxy(x, y)]], dtype=complex
        )
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            break
        lam = 1.0
        while lam > 1e-4:
            xn, yn = x + lam * step[0], y + lam * step[1]
            rn = sys.residual(xn, yn)
            if rn < res:
                break
            lam /= 2
        else:
            break
        x, y, res = complex(xn), complex(yn), rn
    return complex(x), complex(y), float(res)


@dataclass(frozen=True)
class TangentPoint:
    x: complex
    y: complex
    residual: float

    def is_real(self, tol: float = 1e-8) -> bool:
        return abs(self.x.imag) <= tol and abs(self.y.imag) <= tol

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])


def _sort_points(points: list[TangentPoint]) -> list[TangentPoint]:
    return sorted(points, key=lambda p: (round(p.x.real, 9), round(p.y.real, 9), round(p.x.imag, 9), round(p.y.imag, 9)))


def _group(values: np.ndarray, tol: float) -> list[list[int]]:
    groups: list[list[int]] = []
    for k, v in enumerate(values):
        for g in groups:
            if abs(values[g[0]] - v) <= tol * max(1.0, abs(v)):
                g.append(k)
                break
        else:
            groups.append([k])
    return groups


def vertical_tangents(
    f: BivariatePoly,
    tol: float = RESIDUAL_TOL,
    singular_tol: float = SINGULAR_TOL,
    real_only: bool = False,
) -> list[TangentPoint]:
    """All finite complex solutions of ``f = 0, df/dx = 0``.

    The residual ``max(|f|, |f_x|)`` is measured after scaling ``f`` to unit
    max-coefficient; every returned point meets ``tol``. Raises
    :class:`SingularCurve` when a solution also (nearly) annihilates ``f_y``.
    """
    scale = f.norm()
    if scale == 0:
        raise SolverFailure("zero polynomial")
    f = f * (1.0 / scale)
    sys = _System.of(f)
    if f.degree_in_y() == 0:
        raise SolverFailure("curve is a union of vertical lines")

    xs, ys_vec = hidden_variable_roots(f, sys.fx)

    candidates: list[tuple[complex, complex]] = []
    for grp in _group(xs, 1e-6):
        x0 = complex(np.mean(xs[grp]))
        ys = companion_roots(np.array([np.polynomial.polynomial.polyval(x0, c) for c in _trim_y(f)]))
        ys = np.concatenate([ys, ys_vec[grp]])
        score = np.abs(sys.f(x0, ys)) + np.abs(sys.fx(x0, ys))
        chosen: list[complex] = []
        for idx in np.argsort(score, kind="stable"):
            y0 = complex(ys[idx])
            if all(abs(y0 - c) > 1e-6 * max(1.0, abs(y0)) for c in chosen):
                chosen.append(y0)
            if len(chosen) == len(grp):
                break
        candidates.extend((x0, y0) for y0 in chosen)

    points = []
    for x0, y0 in candidates:
        x1, y1, r = newton_polish(sys, x0, y0, tol)
        grad = abs(sys.fy(x1, y1))
        if grad <= singular_tol * max(1.0, abs(x1), abs(y1)) ** max(f.degree - 1, 0):
            raise SingularCurve(f"f, f_x, f_y nearly vanish together at ({x1:.6g}, {y1:.6g})")
        if r > tol:
            raise SolverFailure(f"residual {r:.3g} above {tol:.3g} at ({x1:.6g}, {y1:.6g})")
        points.append(TangentPoint(x1, y1, r))

    for p, q in itertools.combinations(points, 2):
        if abs(p.x - q.x) + abs(p.y - q.y) <= 1e-9 * max(1.0, abs(p.x), abs(p.y)):
            raise SolverFailure("two candidates polished onto the same solution")
    if real_only:
        points = [p for p in points if p.is_real()]
    return _sort_points(points)


# -- independent route ---------------------------------------------------------------


def oracle_tangents(f: BivariatePoly, dps: int = 50) -> list[TangentPoint]:
    """Solve ``f = 0, f_x = 0`` by an exact resultant in x and mpmath roots.

    Coefficients are converted to exact rationals; ``Res_x(f, f_x)`` is formed
    symbolically, its roots in y found at ``dps`` digits, and each x is taken
    from the roots of ``f(x, y0)`` that best annihilate ``f_x``.
    """
    import mpmath
    import sympy

    x, y = sympy.symbols("x y")
    expr = sum(
        sympy.Rational(Fraction(float(v))) * x**i * y**j
        for (i, j), v in np.ndenumerate(np.real(f.coeffs))
        if v != 0
    )
    if np.iscomplexobj(f.coeffs) and np.any(np.imag(f.coeffs)):
        raise ValueError("oracle supports real coefficients only")
    fx = sympy.diff(expr, x)
    res = sympy.Poly(sympy.resultant(expr, fx, x), y)
    if res.is_zero:
        raise SolverFailure("resultant vanishes identically")
    with mpmath.workdps(dps):
        ycoef = [mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q for c in res.all_coeffs()]
        yroots = mpmath.polyroots(ycoef, maxsteps=400, extraprec=4 * dps) if len(ycoef) > 1 else []
        px = sympy.Poly(expr, x)
        fx_fun = sympy.lambdify((x, y), fx, "mpmath")
        out = []
        groups = _group(np.array([complex(r) for r in yroots]), 1e-8)
        for grp in groups:
            y0 = yroots[grp[0]]
            xcoef = [
                sympy.lambdify(y, c, "mpmath")(y0) if c.free_symbols else mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q
                for c in px.all_coeffs()
            ]
            xr = mpmath.polyroots(xcoef, maxsteps=400, extraprec=4 * dps)
            ranked = sorted(xr, key=lambda xx: abs(fx_fun(xx, y0)))
            for x0 in ranked[: len(grp)]:
                out.append((complex(x0), complex(y0)))
    sys = _System.of(f * (1.0 / f.norm()))
    return _sort_points([TangentPoint(a, b, float(sys.residual(a, b))) for a, b in out])


def match_points(a: Sequence[TangentPoint], b: Sequence[TangentPoint]) -> float:
    """Largest distance under the optimal one-to-one matching of two point sets."""
    from scipy.optimize import linear_sum_assignment

    if len(a) != len(b):
        return math.inf
    if not a:
        return 0.0
    pa = np.array([p.as_array() for p in a])
    pb = np.array([p.as_array() for p in b])
    cost = np.linalg.norm(pa[:, None, :] - pb[None, :, :], axis=2)
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


# -- the pencil and the clustering harness --------------------------------------------


def _float_lines(lines) -> np.ndarray:
    rows = []
    for l in lines:
        a, b, c = (float(v) for v in (tuple(l) if isinstance(l, ProjLine) else l))
        norm = math.hypot(a, b)
        if norm == 0:
            raise ValueError("line has no affine part")
        rows.append((a / norm, b / norm, c / norm))
    return np.array(rows)


def line_nodes(lines) -> dict[tuple[int, int], np.ndarray]:
    """Pairwise crossings of affine lines, keyed by index pair."""
    L = _float_lines(lines)
    nodes = {}
    for i, j in itertools.combinations(range(len(L)), 2):
        a1, b1, c1 = L[i]
        a2, b2, c2 = L[j]
        det = a1 * b2 - a2 * b1
        if abs(det) < 1e-12:
            raise ValueError(f"lines {i} and {j} are parallel")
        nodes[(i, j)] = np.array([(b1 * c2 - b2 * c1) / det, (c1 * a2 - c2 * a1) / det])
    return nodes


def random_poly(n: int, rng: np.random.Generator) -> BivariatePoly:
    c = np.zeros((n + 1, n + 1))
    for i in range(n + 1):
        for j in range(n + 1 - i):
            c[i, j] = rng.uniform(-1.0, 1.0)
    return BivariatePoly(c)


def random_bounded_lines(
    n: int,
    rng: np.random.Generator,
    min_cos: float = 0.5,
    min_angle: float = 0.5,
    max_radius: float = 2.5,
    min_sep: float = 0.8,
    max_draws: int = 10_000_000,
) -> np.ndarray:
    """Rejection-sample ``n`` unit-normal lines ``(cos t, sin t, c)`` with ``c`` in [-1, 1].

    Draws are kept only if the lines stay away from horizontal
    (``|cos t| >= min_cos``), meet pairwise at angles of at least ``min_angle``,
    and have all crossings inside ``max_radius`` and at least ``min_sep`` apart.
    The defaults are tuned for n <= 4; five lines rarely or never satisfy them.
    """
    for _ in range(max_draws):
        phi = rng.uniform(0.0, np.pi, n)
        if np.min(np.abs(np.cos(phi))) < min_cos:
            continue
        d = np.abs(phi[:, None] - phi[None, :])
        d = np.minimum(d, np.pi - d)
        if n > 1 and np.min(d[np.triu_indices(n, 1)]) < min_angle:
            continue
        L = np.column_stack([np.cos(phi), np.sin(phi), rng.uniform(-1.0, 1.0, n)])
        pts = np.array(list(line_nodes(L).values()))
        if np.max(np.linalg.norm(pts, axis=1)) > max_radius:
            continue
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.linalg.norm(diff, axis=2)[np.triu_indices(len(pts), 1)]
        if dist.size and np.min(dist) < min_sep:
            continue
        return L
    raise ValueError(f"no admissible configuration of {n} lines in {max_draws} draws")


@dataclass
class CurveFamily:
    """Pencil ``(1 - s) * lines_poly + s * generic_poly``."""

    lines: np.ndarray  # (n, 3), unit normals
    lines_poly: BivariatePoly
    generic_poly: BivariatePoly
    seed: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.lines)

    def member(self, s: float) -> BivariatePoly:
        return self.lines_poly * (1.0 - s) + self.generic_poly * s

    def nodes(self) -> dict[tuple[int, int], np.ndarray]:
        return line_nodes(self.lines)


def make_family(lines, seed: int = 42, s_check: float = DEFAULT_S_VALUES[0], attempts: int = 20) -> CurveFamily:
    """Pencil through the union of ``lines`` and a seeded random degree-n curve.

    The random curve is redrawn while the member at ``s_check`` is singular.
    """
    L = _float_lines(lines)
    n = len(L)
    if n < 2:
        raise ValueError("need at least two lines")
    if np.any(np.abs(L[:, 0]) < 1e-9):
        raise ValueError("horizontal lines make df/dx vanish along a whole component")
    base = product_of_lines(L)
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        family = CurveFamily(L, base, random_poly(n, rng), seed)
        try:
            vertical_tangents(family.member(s_check))
        except DegenerationError:
            continue
        return family
    raise SolverFailure(f"no nonsingular member found in {attempts} draws")


@dataclass
class TangentReport:
    s: float
    n: int
    tangent_points: list[TangentPoint]
    clusters: dict[tuple[int, int], int]
    unclustered: list[TangentPoint] = field(default_factory=list)
    cluster_radius: float = 0.0

    @property
    def expected_total(self) -> int:
        return self.n * (self.n - 1)

    @property
    def passed(self) -> bool:
        return (
            len(self.tangent_points) == self.expected_total
            and not self.unclustered
            and all(c == 2 for c in self.clusters.values())
        )

    @property
    def max_residual(self) -> float:
        return max((p.residual for p in self.tangent_points), default=0.0)


def default_cluster_radius(nodes: dict) -> float:
    pts = list(nodes.values())
    sep = min(float(np.linalg.norm(p - q)) for p, q in itertools.combinations(pts, 2)) if len(pts) > 1 else 1.0
    return 0.25 * sep


def cluster_tangents(points: Sequence[TangentPoint], nodes: dict, radius: float) -> tuple[dict, list]:
    clusters = {key: 0 for key in nodes}
    unclustered = []
    for p in points:
        near = [
            key
            for key, q in nodes.items()
            if math.sqrt(abs(p.x - q[0]) ** 2 + abs(p.y - q[1]) ** 2) <= radius
        ]
        if len(near) > 1:
            raise ClusterAmbiguity(f"tangent ({p.x:.6g}, {p.y:.6g}) is near crossings {near}")
        if near:
            clusters[near[0]] += 1
        else:
            unclustered.append(p)
    return clusters, unclustered


def run_degeneration(
    family: CurveFamily,
    s_values: Sequence[float] = DEFAULT_S_VALUES,
    cluster_radius: Optional[float] = None,
    tol: float = RESIDUAL_TOL,
) -> list[TangentReport]:
    """Solve each member and count tangents within ``cluster_radius`` of each crossing."""
    nodes = family.nodes()
    pts = list(nodes.values())
    min_sep = min(float(np.linalg.norm(p - q)) for p, q in itertools.combinations(pts, 2)) if len(pts) > 1 else math.inf
    radius = default_cluster_radius(nodes) if cluster_radius is None else cluster_radius
    if not radius < min_sep / 2:
        raise ValueError(f"cluster radius {radius:.3g} must be below half the crossing separation {min_sep:.3g}")
    reports = []
    for s in s_values:
        tangents = vertical_tangents(family.member(s), tol)
        clusters, unclustered = cluster_tangents(tangents, nodes, radius)
        reports.append(TangentReport(s, family.n, tangents, clusters, unclustered, radius))
    return reports


def class_number(n: int) -> int:
    return n * (n - 1)


def genus(n: int) -> int:
    return (n - 1) * (n - 2) // 2
