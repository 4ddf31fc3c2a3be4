"""JSON-ready reports for the three computations.

Every report is a dataclass whose fields are already JSON values (rationals are
``"p/q"`` strings), so ``from_dict(json.loads(to_json()))`` rebuilds an equal
object. Floats use Python's shortest round-trip repr (at most 17 significant
digits), so no value is lost in transit.
"""
from __future__ import annotations

import dataclasses
import itertools
import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import arrangement as arr_mod
from . import degeneration as deg
from . import harmonic as har
from .geometry import ProjLine, fraction_str


class ReportError(ValueError):
    pass


class _Report:
    kind: str = ""

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict):
        names = {f.name for f in dataclasses.fields(cls)}
        if set(d) != names:
            raise ReportError(f"{cls.__name__}: fields {sorted(set(d) ^ names)} do not match")
        if d.get("kind") != cls.kind:
            raise ReportError(f"expected kind {cls.kind!r}, got {d.get('kind')!r}")
        return cls(**d)

    @property
    def failures(self) -> list[str]:
        return sorted(k for k, ok in self.checks.items() if not ok)


def _point_str(p) -> list[str]:
    x, y = p.xy
    return [fraction_str(x), fraction_str(y)]


# -- arrangement ------------------------------------------------------------------


@dataclass
class ArrangementReport(_Report):
    n: int
    lines: list[list[str]]
    position: dict
    vertices: Optional[int]
    edges: Optional[int]
    alcoves: Optional[int]
    alcove_polygons: list[list[list[str]]]
    edge_alcove_degrees: dict[str, int]
    checks: dict[str, bool]
    passed: bool
    kind: str = "arrangement"


def arrangement_report(lines: Sequence[ProjLine], check_pairs: bool = True) -> ArrangementReport:
    """Build the arrangement and check the alcove count and incidence facts."""
    lines = list(lines)
    pos = arr_mod.check_position(lines)
    position = {
        "kind": pos.kind.value,
        "parallel_pairs": [list(p) for p in pos.parallel_pairs],
        "witness": list(pos.witness) if pos.witness else None,
        "witness_point": [str(c) for c in pos.witness_point] if pos.witness_point else None,
    }
    text_lines = [[fraction_str(c) for c in l] for l in lines]
    if not pos.ok:
        return ArrangementReport(
            len(lines), text_lines, position, None, None, None, [], {},
            {"bounded_general_position": False}, False,
        )
    arr = arr_mod.build(lines)
    degrees = arr.edge_alcove_degrees()
    checks = {
        "bounded_general_position": True,
        "alcove_count": len(arr.alcoves) == arr_mod.expected_alcoves(arr.n),
        "edge_degrees_1_or_2": all(d in (1, 2) for d in degrees),
    }
    if check_pairs:
        ok = True
        for a, b in itertools.combinations(arr.alcoves, 2):
            try:
                arr_mod.alcove_intersection(a, b)
            except arr_mod.InternalInvariantError:
                ok = False
                break
        checks["pairwise_intersections"] = ok
    hist = arr_mod.degree_histogram(arr)
    return ArrangementReport(
        n=arr.n,
        lines=text_lines,
        position=position,
        vertices=len(arr.vertices),
        edges=len(arr.edges),
        alcoves=len(arr.alcoves),
        alcove_polygons=[[_point_str(p) for p in a.vertex_cycle] for a in arr.alcoves],
        edge_alcove_degrees={str(k): v for k, v in sorted(hist.items())},
        checks=checks,
        passed=all(checks.values()),
    )


# -- harmonic ---------------------------------------------------------------------


@dataclass
class HarmonicReport(_Report):
    n: int
    tol: float
    precision: Optional[int]
    rings: list[dict]
    parallel_pairs: list[list[int]]
    alcoves: Optional[int]
    classes: Optional[dict]
    class_split: Optional[dict]
    genus: int
    checks: dict[str, bool]
    passed: bool
    kind: str = "harmonic"


def harmonic_report(
    n: int,
    tol: Optional[float] = None,
    precision: Optional[int] = None,
    classify: bool = False,
    spec: Optional[har.HarmonicSpec] = None,
) -> tuple[HarmonicReport, har.HarmonicSpec, Optional[har.AlcoveClassification]]:
    if spec is None:
        spec = har.generate(n, precision=precision)
    tol = har.default_tolerance(n, precision) if tol is None else tol
    rings = har.verify_rings(spec, tol, raise_on_failure=False)
    checks = {f"ring_{r.k}": r.passed for r in rings}
    ring_dicts = [
        {
            "k": r.k,
            "predicted_radius": None if r.at_infinity else r.predicted_radius,
            "measured_radii": list(r.measured_radii),
            "consecutive_angles": list(r.consecutive_angles),
            "at_infinity": r.at_infinity,
            "radius_error": r.radius_error,
            "angle_error": r.angle_error,
            "passed": r.passed,
        }
        for r in rings
    ]
    alcoves = classes = split = None
    classification = None
    if n % 2 == 1:
        arrangement = arr_mod.build(spec.rationalized_lines or har.rationalize(n))
        alcoves = len(arrangement.alcoves)
        checks["alcove_count"] = alcoves == arr_mod.expected_alcoves(n)
        if classify:
            try:
                classification = har.classify_alcoves(spec, arrangement)
            except har.ClassificationIncomplete:
                checks["classification"] = False
            else:
                counts = classification.counts()
                classes = {
                    "central": counts["central"],
                    "first": counts["first"],
                    "second": sum(counts["second"].values()),
                    "second_by_j": {str(j): c for j, c in counts["second"].items()},
                }
                expected = har.class_sizes(n)
                checks["classification"] = (
                    (classes["central"], classes["first"], classes["second"]) == expected
                    and classification.total == alcoves
                )
        if n >= 5:
            cs = har.class_split(n)
            split = {"m": cs.m, "central": cs.central_share, "first": cs.first_share, "second": cs.second_share}
            checks["class_split"] = cs.m == cs.central_share + cs.first_share + cs.second_share
    elif classify:
        raise har.HarmonicError(f"classification needs odd n, got {n}")
    report = HarmonicReport(
        n=n,
        tol=float(tol),
        precision=precision,
        rings=ring_dicts,
        parallel_pairs=[list(p) for p in spec.parallel_pairs],
        alcoves=alcoves,
        classes=classes,
        class_split=split,
        genus=har.genus(n),
        checks=checks,
        passed=all(checks.values()),
    )
    return report, spec, classification


# -- degeneration -----------------------------------------------------------------

FAMILY_NOTE = (
    "pencil (1-s)*prod(l_j) + s*g with g a seeded random degree-n polynomial, "
    "coefficients uniform in [-1, 1]; stands in for a constrained harmonic variation"
)


def _node_key(key) -> str:
    return f"{key[0]}-{key[1]}"


def _tangent_dict(t: deg.TangentPoint) -> dict:
    return {
        "x": [t.x.real, t.x.imag],
        "y": [t.y.real, t.y.imag],
        "residual": t.residual,
        "real": t.is_real(),
    }


@dataclass
class DegenerationReport(_Report):
    n: int
    lines: list[list[float]]
    seed: int
    family: str
    nodes: dict[str, list[float]]
    cluster_radius: float
    class_number: int
    genus: int
    runs: list[dict]
    checks: dict[str, bool]
    passed: bool
    kind: str = "degeneration"


def degeneration_report(
    lines,
    s_values: Sequence[float] = deg.DEFAULT_S_VALUES,
    seed: int = 42,
    tol: float = deg.RESIDUAL_TOL,
) -> tuple[DegenerationReport, deg.CurveFamily, list[deg.TangentReport]]:
    family = deg.make_family(lines, seed=seed)
    results = deg.run_degeneration(family, s_values, tol=tol)
    runs = []
    checks = {}
    for r in results:
        runs.append(
            {
                "s": float(r.s),
                "tangents": [_tangent_dict(t) for t in r.tangent_points],
                "clusters": {_node_key(k): v for k, v in sorted(r.clusters.items())},
                "unclustered": [_tangent_dict(t) for t in r.unclustered],
                "max_residual": r.max_residual,
                "passed": r.passed,
            }
        )
        checks[f"two_per_node_s={r.s!r}"] = r.passed
    n = family.n
    report = DegenerationReport(
        n=n,
        lines=[[float(v) for v in row] for row in family.lines],
        seed=seed,
        family=FAMILY_NOTE,
        nodes={_node_key(k): [float(p[0]), float(p[1])] for k, p in sorted(family.nodes().items())},
        cluster_radius=float(results[0].cluster_radius) if results else deg.default_cluster_radius(family.nodes()),
        class_number=deg.class_number(n),
        genus=deg.genus(n),
        runs=runs,
        checks=checks,
        passed=all(checks.values()),
    )
    return report, family, results


REPORT_TYPES = {cls.kind: cls for cls in (ArrangementReport, HarmonicReport, DegenerationReport)}


def load_report(data: Any) -> _Report:
    """Rebuild a report from parsed JSON (or JSON text)."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or data.get("kind") not in REPORT_TYPES:
        raise ReportError("not a report: missing or unknown 'kind'")
    return REPORT_TYPES[data["kind"]].from_dict(data)
