"""Regression checks of the reference examples.

:func:`verify_examples` recomputes everything the library can derive from
the reference curves and compares it with the published values. Published
rows that contradict the frame-sum definition (or the declared family
parameters) go into a separate discrepancy list and never fail a run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .algebra import VectorClass
from .curves import (
    causal_character,
    check_admissible,
    curvature_torsion,
    frenet_frame,
    frenet_residuals,
)
from .fixtures import EXAMPLES, ExampleFixture, printed_circular_helix
from .natural import closed_form_frames, synthesize
from .quadrature import QuadratureConfig
from .smarandache import explain_e2e3_degeneracy, frame_sum, smarandache_point
from .algebra import pg_norm

TOL_CLOSED_FORM = 1e-9
TOL_RESIDUAL = 1e-6
TOL_ROUND_TRIP = 1e-4
TOL_FRAME_AGREEMENT = 1e-6
FD_STEP = 1e-5
NODES = 201
ROUND_TRIP_NODES = 401


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    abs_error: float
    tolerance: float
    where: float | None = None

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.abs_error) and self.abs_error <= self.tolerance)


@dataclass
class Discrepancy:
    name: str
    printed: object
    computed: object
    abs_error: float
    note: str
    where: float | None = None

    @property
    def agrees(self) -> bool:
        return self.abs_error <= TOL_CLOSED_FORM


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = [f"{'check':58s} {'abs error':>10s} {'tol':>8s}  result"]
        for c in self.checks:
            lines.append(f"{c.name:58s} {c.abs_error:10.2e} {c.tolerance:8.0e}  "
                         f"{'PASS' if c.passed else 'FAIL'}")
        if self.discrepancies:
            lines.append("")
            lines.append("discrepancies (published value vs recomputation; informational)")
            for d in self.discrepancies:
                at = f" at u={d.where:g}" if d.where is not None else ""
                status = "agrees" if d.agrees else "DIFFERS"
                lines.append(f"  {d.name:56s} {d.abs_error:10.2e}  {status}{at}")
                if d.note:
                    lines.append(f"      {d.note}")
                if not d.agrees:
                    lines.append(f"      published {_fmt(d.printed)}  recomputed {_fmt(d.computed)}")
        lines.append("")
        n_fail = len(self.failures())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed, "
                     f"{len(self.discrepancies)} discrepancies reported")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, np.ndarray):
        return "(" + ", ".join(f"{x:.6g}" for x in v) + ")"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _worst(name, grid, expected_fn, computed_fn, tol) -> Check:
    """Max-abs error over ``grid`` with the values at the worst sample."""
    worst, at, exp_w, got_w = -1.0, None, None, None
    for u in grid:
        e = np.asarray(expected_fn(u), dtype=float)
        g = np.asarray(computed_fn(u), dtype=float)
        err = float(np.max(np.abs(e - g)))
        if not np.isfinite(err):
            return Check(name, e, g, float("inf"), tol, float(u))
        if err > worst:
            worst, at, exp_w, got_w = err, float(u), e, g
    return Check(name, exp_w, got_w, worst, tol, at)


def _flag(name, ok: bool, expected, computed) -> Check:
    return Check(name, expected, computed, 0.0 if ok else 1.0, 0.0)


def check_example(fx: ExampleFixture, cfg: QuadratureConfig | None = None,
                  nodes: int = NODES) -> VerifyReport:
    cfg = cfg or QuadratureConfig()
    rep = VerifyReport()
    t0 = time.perf_counter()
    tag = f"[{fx.id}]"
    grid = np.linspace(*fx.interval, nodes)
    frames = {float(u): frenet_frame(fx.curve, u) for u in grid}
    kt = {float(u): curvature_torsion(fx.curve, u) for u in grid}
    add = rep.checks.append

    add(_worst(f"{tag} curvature", grid, fx.kappa, lambda u: kt[float(u)][0], TOL_CLOSED_FORM))
    add(_worst(f"{tag} torsion", grid, fx.tau, lambda u: kt[float(u)][1], TOL_CLOSED_FORM))
    if fx.helix_ratio is not None:
        add(_worst(f"{tag} tau/kappa = {fx.helix_ratio:g}", grid, lambda u: fx.helix_ratio,
                   lambda u: kt[float(u)][1] / kt[float(u)][0], TOL_CLOSED_FORM))
    for i, label in enumerate(("e1", "e2", "e3")):
        add(_worst(f"{tag} frame {label}", grid, lambda u, i=i: fx.frame(u)[i],
                   lambda u, i=i: (frames[float(u)].e1, frames[float(u)].e2, frames[float(u)].e3)[i],
                   TOL_CLOSED_FORM))
    eps = {f.epsilon for f in frames.values()}
    add(_flag(f"{tag} epsilon = {fx.epsilon:+d}", eps == {fx.epsilon}, fx.epsilon, sorted(eps)))
    chars = {causal_character(f) for f in frames.values()}
    add(_flag(f"{tag} causal character {fx.character.value}", chars == {fx.character},
              fx.character.value, sorted(c.value for c in chars)))
    add(_worst(f"{tag} det(e1, e2, e3) = 1", grid, lambda u: 1.0,
               lambda u: frames[float(u)].det(), TOL_CLOSED_FORM))
    add(_worst(f"{tag} <e2,e2><e3,e3> = -1", grid, lambda u: -1.0,
               lambda u: frames[float(u)].metric_product(), TOL_CLOSED_FORM))

    for kind, formula in fx.smarandache.items():
        add(_worst(f"{tag} Smarandache {kind.value}", grid, formula,
                   lambda u, k=kind: smarandache_point(frames[float(u)], k), TOL_CLOSED_FORM))
    for kind in fx.smarandache:
        add(_worst(f"{tag} norm of {kind.value} sum = 1", grid, lambda u: 1.0,
                   lambda u, k=kind: pg_norm(frame_sum(frames[float(u)], k)), TOL_CLOSED_FORM))

    diag = [explain_e2e3_degeneracy(f) for f in frames.values()]
    add(Check(f"{tag} e2+e3 has zero norm", 0.0, max(d.norm for d in diag),
              max(d.norm for d in diag), TOL_CLOSED_FORM))
    classes = {d.vector_class for d in diag}
    add(_flag(f"{tag} e2+e3 is lightlike", classes == {VectorClass.LIGHTLIKE}, "lightlike",
              sorted(c.value for c in classes)))

    adm = check_admissible(fx.curve, samples=nodes, interval=fx.interval)
    add(_flag(f"{tag} admissible on [{fx.interval[0]:g}, {fx.interval[1]:g}]", adm.admissible,
              True, sorted(k.value for k in adm.kinds())))

    res = frenet_residuals(fx.curve, fx.interval, samples=51, h=FD_STEP)
    for label, value in res.as_dict().items():
        add(Check(f"{tag} residual {label}", 0.0, value, value, TOL_RESIDUAL))

    # round trip through the natural equations
    rt_grid = np.linspace(*fx.natural.domain, ROUND_TRIP_NODES)
    sampled = synthesize(fx.natural, rt_grid, cfg)
    model = sampled.to_curve_model()
    inner = rt_grid[1:-1]
    rt = {float(u): curvature_torsion(model, u) for u in inner}
    add(_worst(f"{tag} round-trip curvature", inner, fx.natural.kappa,
               lambda u: rt[float(u)][0], TOL_ROUND_TRIP))
    add(_worst(f"{tag} round-trip torsion", inner, fx.natural.tau,
               lambda u: rt[float(u)][1], TOL_ROUND_TRIP))
    closed = closed_form_frames(fx.natural, rt_grid, cfg)[1:-1]
    synth_frames = {float(u): frenet_frame(model, u) for u in inner}
    add(_worst(f"{tag} closed-form vs synthesized e2", inner,
               lambda u: closed[int(np.searchsorted(inner, u))].e2,
               lambda u: synth_frames[float(u)].e2, TOL_FRAME_AGREEMENT))
    add(_worst(f"{tag} closed-form vs synthesized e3", inner,
               lambda u: closed[int(np.searchsorted(inner, u))].e3,
               lambda u: synth_frames[float(u)].e3, TOL_FRAME_AGREEMENT))
    chars = {causal_character(f) for f in synth_frames.values()}
    add(_flag(f"{tag} synthesized character {fx.natural.character.value}",
              chars == {fx.natural.character}, fx.natural.character.value,
              sorted(c.value for c in chars)))

    # published rows that are reported rather than enforced
    for kind, row in fx.known_typos.items():
        c = _worst(row.name, grid, row.formula,
                   lambda u, k=kind: smarandache_point(frames[float(u)], k), TOL_CLOSED_FORM)
        rep.discrepancies.append(Discrepancy(f"{tag} {row.name}", c.expected, c.computed,
                                             c.abs_error, row.note, c.where))
    for row in fx.family_rows:
        target = _family_target(row.name)
        c = _worst(row.name, grid, row.formula,
                   lambda u, t=target: t(frames[float(u)]), TOL_CLOSED_FORM)
        rep.discrepancies.append(Discrepancy(f"{tag} {row.name}", c.expected, c.computed,
                                             c.abs_error, row.note, c.where))

    rep.timings[fx.id] = time.perf_counter() - t0
    return rep


def _family_target(name: str):
    from .smarandache import SmarandacheKind

    for kind in (SmarandacheKind.E1E2E3, SmarandacheKind.E1E2, SmarandacheKind.E1E3):
        if f" {kind.value} " in f" {name} ":
            return lambda f, k=kind: smarandache_point(f, k)
    if " e2 " in f" {name} ":
        return lambda f: f.e2
    if " e3 " in f" {name} ":
        return lambda f: f.e3
    raise ValueError(f"no recomputation target for {name!r}")


def circular_helix_discrepancies(kappa0: float = 1.0, tau0: float = 2.0) -> list:
    """Curvature/torsion of the expanded circular-helix parametrization vs its header."""
    out = []
    for spacelike in (True, False):
        model = printed_circular_helix(a=tau0, b=kappa0, spacelike=spacelike)
        k, t = curvature_torsion(model, 0.5)
        label = "spacelike" if spacelike else "timelike"
        note = (f"declared kappa = b = {kappa0:g}, tau = a = {tau0:g}; "
                f"the expansion yields kappa = |a|, tau = -b")
        out.append(Discrepancy(f"[family] circular helix ({label}) curvature", kappa0, k,
                               abs(k - kappa0), note, 0.5))
        out.append(Discrepancy(f"[family] circular helix ({label}) torsion", tau0, t,
                               abs(t - tau0), "", 0.5))
    return out


def verify_examples(which="all", cfg: QuadratureConfig | None = None) -> VerifyReport:
    """Run the example suite; ``which`` is an example id (1-5) or ``"all"``."""
    if which == "all":
        ids = sorted(EXAMPLES)
    else:
        ids = [int(which)]
        if ids[0] not in EXAMPLES:
            raise ValueError(f"unknown example {which!r}; choose 1-5 or all")
    total = VerifyReport()
    for i in ids:
        r = check_example(EXAMPLES[i], cfg)
        total.checks += r.checks
        total.discrepancies += r.discrepancies
        total.timings.update(r.timings)
    if which == "all":
        total.discrepancies += circular_helix_discrepancies()
    return total
