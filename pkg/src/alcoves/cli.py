"""Command line entry point: ``alcoves {arrange,harmonic,degenerate,report}``.

Exit status is 0 when every check passes, 2 when checks ran and at least one
failed (the JSON report lists them), and 1 for operational errors such as bad
input files.

Defaults come from, in increasing priority: built-in values, the
``ALCOVES_PRECISION`` environment variable, a ``key = value`` file given with
``--config``, and explicit flags.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import arrangement as arr_mod
from . import degeneration as deg
from . import harmonic as har
from . import render, reports
from .geometry import GeometryError, parse_lines

EXIT_OK, EXIT_ERROR, EXIT_FAILED = 0, 1, 2
PRECISION_ENV = "ALCOVES_PRECISION"
COMMANDS = ("arrange", "harmonic", "degenerate", "report")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    n: Optional[int] = None
    n_gon: Optional[int] = None
    tol: Optional[float] = None
    s_values: tuple[float, ...] = deg.DEFAULT_S_VALUES
    seed: int = 42
    precision: Optional[int] = None
    classify: bool = False
    pair_check: bool = True
    json_path: Optional[Path] = None
    svg_path: Optional[Path] = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.command == "harmonic" and self.n is None:
            raise ConfigError("harmonic needs --n")
        if self.command == "degenerate" and (self.input is None) == (self.n_gon is None):
            raise ConfigError("degenerate needs exactly one of --lines or --n-gon")
        if self.command in ("arrange", "report") and self.input is None:
            raise ConfigError(f"{self.command} needs an input file")
        if self.input is not None and not self.input.is_file():
            raise ConfigError(f"input file not found: {self.input}")
        for out in (self.json_path, self.svg_path):
            if out is not None and not out.parent.resolve().is_dir():
                raise ConfigError(f"output directory does not exist: {out.parent}")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError("tolerance must be positive")
        if self.precision is not None and self.precision < 2:
            raise ConfigError("precision must be at least 2 bits")
        if not self.s_values or any(not 0 < s <= 1 for s in self.s_values):
            raise ConfigError("s values must lie in (0, 1]")


def read_config_file(path) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (t.strip() for t in body.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ConfigError(f"not a comma separated list of numbers: {text!r}") from None


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    low = str(text).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {text!r}")


_CONVERT = {
    "n": int,
    "n_gon": int,
    "tol": float,
    "seed": int,
    "precision": int,
    "s": _floats,
    "classify": _bool,
    "pair_check": _bool,
    "input": Path,
    "lines": Path,
    "json": Path,
    "svg": Path,
}

_FIELD = {"s": "s_values", "lines": "input", "json": "json_path", "svg": "svg_path"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alcoves", description="Line arrangements, alcoves and degenerating curves.")
    p.add_argument("--config", type=Path, help="key = value file with default options")
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp, svg=True):
        sp.add_argument("--json", type=Path, default=None, help="write the JSON report here")
        if svg:
            sp.add_argument("--svg", type=Path, default=None, help="write an SVG picture here")

    a = sub.add_parser("arrange", help="alcoves of a rational line file")
    a.add_argument("--input", type=Path, default=None, help="file of 'a b c' rows")
    a.add_argument("--no-pair-check", dest="pair_check", action="store_const", const=False, default=None)
    outputs(a)

    h = sub.add_parser("harmonic", help="regular n-gon arrangement, rings and classes")
    h.add_argument("--n", type=int, default=None)
    h.add_argument("--tol", type=float, default=None)
    h.add_argument("--precision", type=int, default=None, help="bits for the metric checks")
    h.add_argument("--classify", action="store_const", const=True, default=None)
    outputs(h)

    d = sub.add_parser("degenerate", help="vertical tangents of a pencil near a union of lines")
    d.add_argument("--lines", type=Path, default=None, help="file of 'a b c' rows")
    d.add_argument("--n-gon", dest="n_gon", type=int, default=None)
    d.add_argument("--s", type=_floats, default=None, help="comma separated, e.g. 1e-2,1e-3")
    d.add_argument("--seed", type=int, default=None)
    d.add_argument("--tol", type=float, default=None, help="residual target")
    outputs(d)

    r = sub.add_parser("report", help="re-read a JSON report and summarise it")
    r.add_argument("input", type=Path)
    return p


def make_config(argv: Optional[Sequence[str]] = None, environ=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    environ = os.environ if environ is None else environ
    cfg = RunConfig(command=args.command)
    settings: dict = {}
    if environ.get(PRECISION_ENV):
        settings["precision"] = environ[PRECISION_ENV]
    if args.config is not None:
        settings.update(read_config_file(args.config))
    for key, value in vars(args).items():
        if key not in ("command", "config") and value is not None:
            settings[key] = value
    for key, value in settings.items():
        if key not in _CONVERT:
            cfg.extra[key] = value
            continue
        try:
            converted = value if not isinstance(value, str) else _CONVERT[key](value)
        except ValueError:
            raise ConfigError(f"bad value for {key}: {value!r}") from None
        setattr(cfg, _FIELD.get(key, key), converted)
    if cfg.extra:
        raise ConfigError(f"unknown settings: {sorted(cfg.extra)}")
    cfg.validate()
    return cfg


# -- commands ---------------------------------------------------------------------


def _write(cfg: RunConfig, report, scene=None) -> None:
    if cfg.json_path is not None:
        cfg.json_path.write_text(report.to_json(), encoding="utf-8")
    if cfg.svg_path is not None and scene is not None:
        render.emit_svg(scene, cfg.svg_path)


def _arrange(cfg: RunConfig):
    lines = parse_lines(cfg.input.read_text())
    report = reports.arrangement_report(lines, check_pairs=cfg.pair_check)
    scene = render.arrangement_scene(arr_mod.build(lines)) if report.position["kind"] == "bounded_general" else render.SvgScene()
    _write(cfg, report, scene)
    summary = f"{report.n} lines: {report.alcoves} alcoves" if report.alcoves is not None else (
        f"{report.n} lines: not in bounded general position ({report.position['kind']}, witness {report.position['witness']})"
    )
    return report, summary


def _harmonic(cfg: RunConfig):
    report, spec, classification = reports.harmonic_report(cfg.n, cfg.tol, cfg.precision, cfg.classify)
    _write(cfg, report, render.harmonic_scene(spec, classification))
    summary = f"n={cfg.n}: {len(report.rings)} rings, alcoves={report.alcoves}, classes={report.classes}"
    return report, summary


def _degenerate(cfg: RunConfig):
    if cfg.n_gon is not None:
        spec = har.generate(cfg.n_gon)
        exact, lines = spec.rationalized_lines, spec.lines
    else:
        exact = parse_lines(cfg.input.read_text())
        lines = exact
    pos = arr_mod.check_position(exact)
    if not pos.ok:
        raise arr_mod.NotBoundedGeneralPosition(pos)
    tol = deg.RESIDUAL_TOL if cfg.tol is None else cfg.tol
    report, family, results = reports.degeneration_report(lines, cfg.s_values, cfg.seed, tol)
    last = results[-1]
    _write(cfg, report, render.degeneration_scene(family.lines, family.nodes(), last.tangent_points))
    counts = ", ".join(f"s={r.s:g}: {'ok' if r.passed else 'FAIL'}" for r in results)
    return report, f"{family.n} lines, {len(last.tangent_points)} tangents; {counts}"


def _report(cfg: RunConfig):
    text = cfg.input.read_text()
    report = reports.load_report(text)
    if json.loads(report.to_json()) != json.loads(text):
        raise reports.ReportError("report does not survive a round trip")
    return report, f"{report.kind} report: {'passed' if report.passed else 'failed'}"


HANDLERS = {"arrange": _arrange, "harmonic": _harmonic, "degenerate": _degenerate, "report": _report}

OPERATIONAL = (
    OSError,
    ConfigError,
    GeometryError,
    arr_mod.ArrangementError,
    har.HarmonicError,
    deg.DegenerationError,
    reports.ReportError,
    json.JSONDecodeError,
    ValueError,
)


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        report, summary = HANDLERS[cfg.command](cfg)
    except OPERATIONAL as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    print(summary, file=out)
    if report.passed:
        return EXIT_OK
    print(json.dumps({"passed": False, "failures": report.failures}), file=err)
    return EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = make_config(argv)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
