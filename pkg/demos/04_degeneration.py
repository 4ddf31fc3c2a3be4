"""Vertical tangents of curves close to a union of lines gather in pairs at the crossings."""
import numpy as np

from alcoves.degeneration import (
    class_number,
    make_family,
    match_points,
    oracle_tangents,
    random_bounded_lines,
    run_degeneration,
    vertical_tangents,
)
from alcoves.harmonic import generate

# f_s = (1 - s) * l_0 l_1 l_2 + s * g with g a random cubic.
family = make_family(generate(3).lines, seed=42)
for report in run_degeneration(family, (1e-1, 1e-2, 1e-3, 1e-4)):
    print(f"s={report.s:g}: {len(report.tangent_points)} tangents (class {class_number(3)}),"
          f" per crossing {dict(sorted(report.clusters.items()))}, stray {len(report.unclustered)}")

# Distance from each crossing shrinks roughly like sqrt(s).
nodes = family.nodes()
for s in (1e-2, 1e-4, 1e-6):
    pts = vertical_tangents(family.member(s))
    far = max(min(np.hypot(abs(p.x - q[0]), abs(p.y - q[1])) for q in nodes.values()) for p in pts)
    print(f"s={s:g}: farthest tangent is {far:.2e} from its crossing")

# Four random lines; 12 tangents, 2 at each of 6 crossings.
quad = make_family(random_bounded_lines(4, np.random.default_rng(42)), seed=42)
for report in run_degeneration(quad, (1e-3, 1e-4)):
    print(f"quadrilateral s={report.s:g}: clusters {sorted(report.clusters.values())}, passed={report.passed}")

# The eigenvalue solver agrees with an exact resultant computed by sympy.
f = quad.member(1e-3)
print("solver vs exact oracle, worst matched distance:", match_points(vertical_tangents(f), oracle_tangents(f)))
