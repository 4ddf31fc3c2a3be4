"""Alcoves of random line arrangements, and what one more line does."""
import numpy as np

from alcoves.arrangement import (
    alcove_intersection,
    build,
    check_position,
    degree_histogram,
    expected_alcoves,
    insert_line,
    random_lines,
)
from alcoves.geometry import ProjLine

rng = np.random.default_rng(0)

# Seven lines with small integer coefficients, redrawn until no two are
# parallel and no three meet. The first six form the arrangement; the
# seventh is inserted at the end.
seven = random_lines(7, rng, bound=9)
lines, extra = seven[:6], seven[6]
for l in lines:
    print(f"  {l.a:>3} x + {l.b:>3} y + {l.c:>3} = 0")

arr = build(lines)
print("vertices", len(arr.vertices), "bounded edges", len(arr.edges), "faces", len(arr.faces))
print("alcoves", len(arr.alcoves), "predicted", expected_alcoves(6))

# Each alcove is a convex polygon whose sides lie on distinct lines.
for a in arr.alcoves:
    corners = ", ".join(f"({float(x):.3g}, {float(y):.3g})" for x, y in (p.xy for p in a.vertex_cycle))
    print(f"  {a.size}-gon on lines {sorted(a.line_set)}: {corners}")

# Bounded edges touch one or two alcoves, never more.
print("edge degree histogram", degree_histogram(arr))

# Two alcoves meet in nothing, a point, or a segment.
kinds = {}
for i, a in enumerate(arr.alcoves):
    for b in arr.alcoves[i + 1:]:
        k = alcove_intersection(a, b).kind.value
        kinds[k] = kinds.get(k, 0) + 1
print("pairwise contacts", kinds)

# Adding a seventh line adds exactly six alcoves.
bigger = insert_line(arr, extra)
print("after inserting", extra, ":", len(arr.alcoves), "->", len(bigger.alcoves))

# Three concurrent lines are rejected with a witness.
rep = check_position([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)])
print("concurrent triple:", rep.kind.value, "witness", rep.witness, "at", rep.witness_point)
