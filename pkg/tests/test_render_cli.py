import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, strategies as st

from alcoves import cli, render, reports
from alcoves.harmonic import classify_alcoves, generate, rationalize

NS = {"s": render.SVG_NS}


def layer(svg_text, name):
    root = ET.fromstring(svg_text.split("\n", 1)[1])
    return root.find(f"s:g[@id='{name}']", NS)


def test_empty_scene_is_valid_svg():
    text = render.svg_string(render.SvgScene())
    root = ET.fromstring(text.split("\n", 1)[1])
    assert root.tag == f"{{{render.SVG_NS}}}svg" and root.get("version") == "1.1"
    groups = [g.get("id") for g in root.findall("s:g", NS)]
    assert groups == list(render.LAYER_ORDER)
    assert all(len(g) == 0 for g in root.findall("s:g", NS))


def test_n9_scene_counts():
    text = render.svg_string(render.harmonic_scene(generate(9)))
    assert len(layer(text, "lines").findall("s:line", NS)) == 9
    assert len(layer(text, "rings").findall("s:circle", NS)) == 4
    assert len(layer(text, "vertices").findall("s:circle", NS)) == 36


def test_n5_classified_scene_has_two_colours():
    spec = generate(5)
    text = render.svg_string(render.harmonic_scene(spec, classify_alcoves(spec)))
    polys = layer(text, "alcoves").findall("s:polygon", NS)
    assert len(polys) == 6
    assert len({p.get("fill") for p in polys}) == 2


def test_even_scene_skips_points_at_infinity():
    text = render.svg_string(render.harmonic_scene(generate(6)))
    assert len(layer(text, "vertices").findall("s:circle", NS)) == 15 - 3


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_num_rounds_to_six_decimals(v):
    s = render.num(v)
    assert s != "-0"
    assert abs(float(s) - v) <= 5e-7 + 1e-9 * abs(v)
    if "." in s:
        assert len(s.split(".")[1]) <= 6


def test_clip_line():
    seg = render.clip_line((1, 0, -0.5), (-1, -1, 1, 1))
    assert seg == ((0.5, -1.0), (0.5, 1.0)) or seg == ((0.5, 1.0), (0.5, -1.0))
    assert render.clip_line((1, 0, -5), (-1, -1, 1, 1)) is None


def test_arrangement_report_round_trip():
    rep = reports.arrangement_report(rationalize(7))
    again = reports.load_report(json.loads(rep.to_json()))
    assert again == rep
    assert rep.alcoves == 15 and rep.passed
    assert all("/" in c for poly in rep.alcove_polygons for pt in poly for c in pt)


def test_harmonic_and_degeneration_round_trip():
    rep, _, _ = reports.harmonic_report(7, classify=True)
    assert reports.load_report(rep.to_json()) == rep
    drep, _, _ = reports.degeneration_report(generate(3).lines, (1e-3,))
    assert reports.load_report(drep.to_json()) == drep


def test_load_report_rejects_garbage():
    with pytest.raises(reports.ReportError):
        reports.load_report({"kind": "nope"})
    rep = reports.arrangement_report(rationalize(5)).to_dict()
    rep.pop("edges")
    with pytest.raises(reports.ReportError):
        reports.load_report(rep)


def run_cli(*argv, env=None):
    return cli.run(cli.make_config(list(argv), environ=env or {}))


def test_cli_harmonic_classify(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run_cli("harmonic", "--n", "7", "--classify", "--json", str(out)) == 0
    data = json.loads(out.read_text())
    assert data["alcoves"] == 15
    assert {k: data["classes"][k] for k in ("central", "first", "second")} == {"central": 1, "first": 7, "second": 7}


def test_cli_arrange_degenerate_input(tmp_path, capsys):
    f = tmp_path / "three_concurrent.lines"
    f.write_text("1 0 0\n0 1 0\n1 1 0\n")
    out = tmp_path / "a.json"
    assert run_cli("arrange", "--input", str(f), "--json", str(out)) == 2
    data = json.loads(out.read_text())
    assert data["position"]["kind"] == "degenerate" and data["position"]["witness"] == [0, 1, 2]
    err = capsys.readouterr().err
    assert json.loads(err.strip().splitlines()[-1])["failures"] == ["bounded_general_position"]


def test_cli_degenerate_triangle(tmp_path):
    out = tmp_path / "d.json"
    assert run_cli("degenerate", "--n-gon", "3", "--s", "1e-3", "--json", str(out)) == 0
    data = json.loads(out.read_text())
    run = data["runs"][0]
    assert len(run["tangents"]) == 6
    assert sorted(run["clusters"].values()) == [2, 2, 2]
    assert data["genus"] == 1


def test_cli_degenerate_from_file(tmp_path):
    f = tmp_path / "t.lines"
    f.write_text("1 0 0\n1 1 -1\n1 -1 -1\n")
    assert run_cli("degenerate", "--lines", str(f), "--s", "1e-3,1e-4") == 0


def test_cli_operational_errors(tmp_path, capsys):
    with pytest.raises(cli.ConfigError):
        cli.make_config(["arrange", "--input", str(tmp_path / "missing.lines")], environ={})
    assert cli.main(["arrange", "--input", str(tmp_path / "missing.lines")]) == 1
    bad = tmp_path / "bad.lines"
    bad.write_text("1 2\n")
    assert run_cli("arrange", "--input", str(bad)) == 1
    assert "line 1" in capsys.readouterr().err
    assert run_cli("harmonic", "--n", "6", "--classify") == 1
    assert run_cli("degenerate", "--n-gon", "4") == 1  # parallel sides


def test_config_file_and_env(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("# defaults\nn = 9\ntol = 1e-10\nclassify = yes\n")
    cfg = cli.make_config(["--config", str(conf), "harmonic"], environ={"ALCOVES_PRECISION": "120"})
    assert (cfg.n, cfg.tol, cfg.classify, cfg.precision) == (9, 1e-10, True, 120)
    cfg = cli.make_config(["--config", str(conf), "harmonic", "--n", "11", "--precision", "80"], environ={"ALCOVES_PRECISION": "120"})
    assert (cfg.n, cfg.precision) == (11, 80)
    conf.write_text("colour = red\n")
    with pytest.raises(cli.ConfigError):
        cli.make_config(["--config", str(conf), "harmonic", "--n", "5"], environ={})


def test_report_command(tmp_path):
    out = tmp_path / "r.json"
    run_cli("harmonic", "--n", "5", "--json", str(out))
    assert run_cli("report", str(out)) == 0
    data = json.loads(out.read_text())
    data["passed"] = False
    out.write_text(json.dumps(data))
    assert run_cli("report", str(out)) == 2


def test_cli_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        j, s = tmp_path / f"d{k}.json", tmp_path / f"d{k}.svg"
        run_cli("degenerate", "--n-gon", "3", "--s", "1e-2,1e-3", "--seed", "7", "--json", str(j), "--svg", str(s))
        outs.append((j.read_bytes(), s.read_bytes()))
    assert outs[0] == outs[1]


def test_module_entry_point(tmp_path):
    out = tmp_path / "h.svg"
    proc = subprocess.run(
        [sys.executable, "-m", "alcoves", "harmonic", "--n", "5", "--svg", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_text().startswith("<?xml")
