"""Command-line front end.

Subcommands::

    pgcurve classify X Y Z
    pgcurve eval        (source) [--range LO HI] [--nodes N]
    pgcurve frenet      (source) ...
    pgcurve synthesize  (natural source) ...
    pgcurve smarandache --kind e1e2|e1e3|e1e2e3 (source) ...
    pgcurve verify      [1-5|all]

A *source* is one of ``--example N``, ``--family NAME`` with ``--param``
values and ``--kappa``/``--tau`` expressions, bare ``--kappa``/``--tau``
natural equations, or a ``curve`` block in a ``--config`` JSON file.

Exit codes: 0 success, 1 verification failure, 2 usage or config error,
3 quadrature failure, 4 admissibility failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import classify_vector, vec
from .curves import (
    CausalCharacter,
    CurveModel,
    Parametrization,
    eval_curve,
    frenet_frame,
)
from .errors import AdmissibilityError, NumericallyUnstable, ToleranceNotReached
from .expr import compile_expression
from .fixtures import EXAMPLES
from .io import render
from .natural import (
    AntiSalkowski,
    CircularHelix,
    FamilySpec,
    GeneralHelix,
    NaturalEquations,
    Salkowski,
    closed_form_frames,
    family_to_natural,
    synthesize,
    synthesize_with_model,
)
from .quadrature import QuadratureConfig
from .smarandache import SmarandacheKind, smarandache_curve
from .verify import verify_examples

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_QUADRATURE, EXIT_ADMISSIBILITY = 0, 1, 2, 3, 4

FAMILIES = ("general-helix", "circular-helix", "salkowski", "anti-salkowski")
FRAME_COLUMNS = [f"e{i}{c}" for i in (1, 2, 3) for c in "xyz"]
DEFAULT_NODES = 101


class UsageError(Exception):
    """Bad flags or config; maps to exit 2."""


@dataclass
class RunConfig:
    command: str
    source: dict = field(default_factory=dict)
    s_lo: Optional[float] = None
    s_hi: Optional[float] = None
    nodes: int = DEFAULT_NODES
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    output_format: str = "csv"
    output_path: Optional[str] = None
    precision: int = 17
    kind: Optional[str] = None

    def __post_init__(self):
        if self.nodes < 2:
            raise UsageError(f"--nodes must be at least 2, got {self.nodes}")
        if not 6 <= self.precision <= 17:
            raise UsageError(f"--precision must be in [6, 17], got {self.precision}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"--format must be csv or json, got {self.output_format!r}")
        if self.s_lo is not None and not self.s_lo < self.s_hi:
            raise UsageError(f"--range needs LO < HI, got {self.s_lo} {self.s_hi}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.s_lo, self.s_hi, self.nodes)

    def echo(self) -> dict:
        return {
            "command": self.command,
            "source": self.source,
            "range": [self.s_lo, self.s_hi],
            "nodes": self.nodes,
            "abs_tol": self.quadrature.abs_tol,
            "precision": self.precision,
            **({"kind": self.kind} if self.kind else {}),
        }


# ---------------------------------------------------------------------------
# argument parsing


def _shared_flags(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("output and numerics")
    g.add_argument("--output", "-o", default=d, help="write here instead of stdout")
    g.add_argument("--format", choices=("csv", "json"), default=d)
    g.add_argument("--precision", type=int, default=d, help="significant digits, 6-17 (default 17)")
    g.add_argument("--tol", type=float, default=d, help="quadrature abs_tol (default 1e-10)")
    g.add_argument("--nodes", type=int, default=d, help=f"grid size (default {DEFAULT_NODES})")
    g.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"), default=d)
    g.add_argument("--config", default=d, help="JSON run configuration")
    return p


def _source_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("curve source")
    g.add_argument("--example", type=int, choices=sorted(EXAMPLES))
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--character", choices=("spacelike", "timelike"))
    g.add_argument("--kappa", help="expression for kappa(s)")
    g.add_argument("--tau", help="expression for tau(s)")
    g.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="family parameter (m, kappa0, tau0); repeatable")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgcurve", parents=[_shared_flags(suppress=True)],
        description="Curves, Frenet frames and Smarandache curves in pseudo-Galilean space.")
    sub = parser.add_subparsers(dest="command", required=True)
    shared, source = _shared_flags(suppress=True), _source_flags()

    p = sub.add_parser("classify", help="causal class of a vector")
    for name in "xyz":
        p.add_argument(name, type=float)

    sub.add_parser("eval", parents=[shared, source], help="sample positions")
    sub.add_parser("frenet", parents=[shared, source], help="sample kappa, tau and the frame")
    sub.add_parser("synthesize", parents=[shared, source],
                   help="integrate natural equations; positions, kappa, tau and frame")
    p = sub.add_parser("smarandache", parents=[shared, source], help="sample a Smarandache curve")
    p.add_argument("--kind", help="e1e2, e1e3 or e1e2e3")
    p = sub.add_parser("verify", parents=[shared], help="check the built-in reference examples")
    p.add_argument("example", nargs="?", default="all", help="1-5 or all (default)")
    return parser


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("config must be a JSON object")
    return doc


def _params(pairs, base: dict) -> dict:
    out = dict(base)
    for item in pairs:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise UsageError(f"--param {name} is not a number: {value!r}") from None
    return out


def resolve(args: argparse.Namespace) -> RunConfig:
    """Merge flags over the config file into a validated :class:`RunConfig`."""
    cfg = _load_config(getattr(args, "config", None))

    def pick(name, default=None):
        v = getattr(args, name, None)
        if v is None or v == []:
            v = cfg.get(name, default)
        return v

    source = {}
    for key in ("example", "family", "character", "kappa", "tau", "curve"):
        v = pick(key)
        if v is not None:
            source[key] = v
    params = _params(getattr(args, "param", []) or [], cfg.get("params", {}))
    if params:
        source["params"] = params

    rng = pick("range")
    lo = hi = None
    if rng is not None:
        if len(rng) != 2:
            raise UsageError("range needs two numbers")
        lo, hi = float(rng[0]), float(rng[1])

    tol = pick("tol")
    try:
        quad = QuadratureConfig.from_env()
        if tol is not None:
            quad = QuadratureConfig(abs_tol=float(tol))
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    return RunConfig(
        command=args.command,
        source=source,
        s_lo=lo,
        s_hi=hi,
        nodes=int(pick("nodes", DEFAULT_NODES)),
        quadrature=quad,
        output_format=pick("format", "csv"),
        output_path=pick("output"),
        precision=int(pick("precision", 17)),
        kind=pick("kind"),
    )


# ---------------------------------------------------------------------------
# sources


def _expr(source: dict, key: str):
    if key not in source:
        return None
    text = source[key]
    if isinstance(text, (int, float)):
        text = repr(float(text))
    return compile_expression(text)


def _need(params: dict, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise UsageError(f"missing family parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def _default_range(rc: RunConfig, lo_hi):
    if rc.s_lo is None:
        if lo_hi is None:
            raise UsageError("--range LO HI is required for this source")
        rc.s_lo, rc.s_hi = (float(v) for v in lo_hi)


def natural_source(rc: RunConfig) -> NaturalEquations:
    src = rc.source
    if "example" in src:
        neq = EXAMPLES[int(src["example"])].natural
        _default_range(rc, neq.domain)
        return neq
    if "curve" in src:
        raise UsageError(f"{rc.command} needs natural equations, not a parametrized curve")
    _default_range(rc, None)
    if "character" not in src:
        raise UsageError("--character spacelike|timelike is required")
    character = CausalCharacter.parse(src["character"])
    domain = (rc.s_lo, rc.s_hi)
    kappa, tau, params = _expr(src, "kappa"), _expr(src, "tau"), src.get("params", {})
    family = src.get("family")
    if family is None:
        if kappa is None or tau is None:
            raise UsageError("give --example, --family, or both --kappa and --tau")
        return NaturalEquations(kappa, tau, character, domain, "custom")
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "general-helix":
        (m,) = _need(params, "m")
        if kappa is None:
            raise UsageError("general-helix needs --kappa")
        fam = GeneralHelix(m, kappa)
    elif family == "circular-helix":
        fam = CircularHelix(*_need(params, "kappa0", "tau0"))
    elif family == "salkowski":
        (k0,) = _need(params, "kappa0")
        if tau is None:
            raise UsageError("salkowski needs --tau")
        fam = Salkowski(k0, tau)
    else:
        (t0,) = _need(params, "tau0")
        if kappa is None:
            raise UsageError("anti-salkowski needs --kappa")
        fam = AntiSalkowski(kappa, t0)
    return family_to_natural(FamilySpec(fam, character), domain)


def curve_source(rc: RunConfig) -> Optional[CurveModel]:
    """Parametrized curve for the source, or ``None`` if it is given by natural equations."""
    src = rc.source
    if "example" in src:
        fx = EXAMPLES[int(src["example"])]
        _default_range(rc, fx.interval)
        return fx.curve
    if "curve" not in src:
        return None
    spec = src["curve"]
    if not isinstance(spec, dict) or not {"y", "z"} <= set(spec):
        raise UsageError("curve needs expressions y and z (x defaults to s)")
    comps = [compile_expression(str(spec.get(c, "s"))) for c in "xyz"]
    kind = Parametrization(spec.get("parametrization", "general"))
    domain = spec.get("domain")
    _default_range(rc, domain)
    domain = tuple(domain) if domain is not None else (rc.s_lo, rc.s_hi)

    def position(s):
        return np.array([float(f(s)) for f in comps])

    return CurveModel(position, domain, kind=kind, name="config-curve")


# ---------------------------------------------------------------------------
# commands


def _frame_row(frame):
    return [frame.kappa, frame.tau, *frame.e1, *frame.e2, *frame.e3, int(frame.epsilon)]


def _frames_of(model: CurveModel, grid):
    return [frenet_frame(model, float(s)) for s in grid]


def cmd_eval(rc: RunConfig):
    model = curve_source(rc)
    if model is None:
        neq = natural_source(rc)
        sampled = synthesize(neq, rc.grid(), rc.quadrature)
        rows = [[s, *p] for s, p in zip(sampled.params, sampled.points)]
    else:
        rows = [[s, *eval_curve(model, float(s))] for s in rc.grid()]
    return ["s", "x", "y", "z"], rows


def cmd_frenet(rc: RunConfig):
    model = curve_source(rc)
    grid = rc.grid()
    if model is None:
        frames = closed_form_frames(natural_source(rc), grid, rc.quadrature)
    else:
        frames = _frames_of(model, grid)
    cols = ["s", "kappa", "tau", *FRAME_COLUMNS, "epsilon"]
    return cols, [[s, *_frame_row(f)] for s, f in zip(grid, frames)]


def cmd_synthesize(rc: RunConfig):
    """Synthesize, then recompute kappa, tau and the frame from the result."""
    neq = natural_source(rc)
    sampled, model = synthesize_with_model(neq, rc.grid(), rc.quadrature)
    rows = []
    for s, p in zip(sampled.params, sampled.points):
        f = frenet_frame(model, float(s))
        rows.append([s, *p, *_frame_row(f)])
    cols = ["s", "x", "y", "z", "kappa", "tau", *FRAME_COLUMNS, "epsilon"]
    return cols, rows


def cmd_smarandache(rc: RunConfig):
    if not rc.kind:
        raise UsageError("--kind e1e2|e1e3|e1e2e3 is required")
    try:
        kind = SmarandacheKind.parse(rc.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    model = curve_source(rc)
    source = model if model is not None else natural_source(rc)
    sampled = smarandache_curve(source, kind, rc.grid(), rc.quadrature)
    return ["s", "x", "y", "z"], [[s, *p] for s, p in zip(sampled.params, sampled.points)]


COMMANDS = {
    "eval": cmd_eval,
    "frenet": cmd_frenet,
    "synthesize": cmd_synthesize,
    "smarandache": cmd_smarandache,
}


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verify(args) -> int:
    which = args.example
    if which != "all" and which not in {str(i) for i in EXAMPLES}:
        raise UsageError(f"unknown example {which!r}; choose 1-5 or all")
    report = verify_examples(which)
    out = getattr(args, "output", None)
    if getattr(args, "format", None) == "json":
        doc = {
            "passed": report.passed,
            "checks": [{"name": c.name, "abs_error": c.abs_error, "tolerance": c.tolerance,
                        "pass": c.passed} for c in report.checks],
            "discrepancies": [{"name": d.name, "abs_error": d.abs_error, "agrees": d.agrees,
                               "note": d.note} for d in report.discrepancies],
        }
        _emit(json.dumps(doc, indent=1) + "\n", out)
    else:
        _emit(report.format() + "\n", out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            print(classify_vector(vec(args.x, args.y, args.z)))
            return EXIT_OK
        if args.command == "verify":
            return _verify(args)
        rc = resolve(args)
        cols, rows = COMMANDS[rc.command](rc)
        text = render(cols, rows, rc.output_format, rc.precision, rc.echo())
        _emit(text, rc.output_path)
        return EXIT_OK
    except UsageError as exc:
        print(f"pgcurve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ToleranceNotReached, NumericallyUnstable) as exc:
        print(f"pgcurve: numerical failure: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except AdmissibilityError as exc:
        print(f"pgcurve: curve not admissible: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except ValueError as exc:
        print(f"pgcurve: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
