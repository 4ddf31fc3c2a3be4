"""Write SVG pictures and JSON reports for a few scenes.

Usage: python demos/05_pictures.py [output-directory]
"""
import sys
from pathlib import Path

import numpy as np

from alcoves import render, reports
from alcoves.arrangement import build, random_lines
from alcoves.harmonic import classify_alcoves, generate

out = Path(sys.argv[1] if len(sys.argv) > 1 else "pictures")
out.mkdir(exist_ok=True)

for n in (5, 9, 11):
    spec = generate(n)
    scene = render.harmonic_scene(spec, classify_alcoves(spec))
    render.emit_svg(scene, out / f"regular_{n}.svg")
    report, _, _ = reports.harmonic_report(n, classify=True, spec=spec)
    (out / f"regular_{n}.json").write_text(report.to_json())
    print("wrote", out / f"regular_{n}.svg", "classes", report.classes)

lines = random_lines(7, np.random.default_rng(1), bound=12)
render.emit_svg(render.arrangement_scene(build(lines)), out / "random_7.svg")
(out / "random_7.json").write_text(reports.arrangement_report(lines).to_json())
print("wrote", out / "random_7.svg")

# At s=1e-3 one tangent of the pentagon pencil is still outside its
# crossing's cluster radius; at s=1e-4 every crossing holds exactly two.
drep, family, results = reports.degeneration_report(generate(5).lines, (1e-3, 1e-4), seed=42)
for run in drep.runs:
    print(f"pentagon s={run['s']:g}: clusters {sorted(run['clusters'].values())}, passed={run['passed']}")
render.emit_svg(render.degeneration_scene(family.lines, family.nodes(), results[-1].tangent_points), out / "tangents_5.svg")
(out / "tangents_5.json").write_text(drep.to_json())
print("wrote", out / "tangents_5.svg")
