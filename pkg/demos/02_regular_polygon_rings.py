"""Crossings of the regular n-gon side lines sit on concentric circles."""
import math

from alcoves.harmonic import generate, ring_radius, verify_rings

n = 9
spec = generate(n)
print(f"{n} side lines, unit normals at angles 2*pi*(j + 1/2)/{n}")

# l_j meets l_{j+k} at distance ring_radius(n, k) from the centre, and the n
# crossings of one ring are evenly spaced.
for r in verify_rings(spec):
    print(
        f"  k={r.k}: radius {r.predicted_radius:.12f}  "
        f"worst radius error {r.radius_error:.1e}  worst angle error {r.angle_error:.1e}"
    )

# The innermost ring is the unit circle through the polygon's corners.
print("ring 1 radius", ring_radius(n, 1))

# The same check with 200-bit arithmetic shrinks the error to roundoff of that width.
hi = verify_rings(generate(n, precision=200))
print("200-bit worst error", max(max(r.radius_error, r.angle_error) for r in hi))

# For even n opposite sides are parallel: the last ring is at infinity.
for m in (4, 6, 8):
    even = verify_rings(generate(m))
    inf = [r for r in even if r.at_infinity][0]
    print(f"n={m}: {len(generate(m).parallel_pairs)} parallel pairs, at-infinity check passed={inf.passed}")

# Radii grow with k; for n=7 the outer ring is sin(5pi/14)/sin(pi/14).
print("n=7, k=3:", ring_radius(7, 3), math.sin(5 * math.pi / 14) / math.sin(math.pi / 14))
