"""Admissible curves in G_3^1: derivatives, curvature, torsion and Frenet frames.

A curve is given as a position map plus optional analytic derivative maps.
Missing derivatives fall back to central finite differences. Curves come in
two flavours:

* ``ARC_LENGTH``: ``gamma(s) = (s, y(s), z(s))``; the parameter is the
  pseudo-Galilean arc length.
* ``GENERAL``: ``gamma(t) = (x(t), y(t), z(t))`` with ``x'(t) != 0``. All
  invariants are computed from the arc-length derivatives ``d/dx`` obtained by
  the chain rule, so both representations of one trace give the same
  ``kappa`` and ``tau``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import VectorClass, classify_vector, det3, pg_cross, pg_dot, vec
from .errors import (
    AdmissibilityError,
    DegenerateCurvature,
    LightlikeNormal,
    NumericallyUnstable,
    OutOfDomain,
)

KAPPA_TOL = 1e-10
LIGHTLIKE_TOL = 1e-10

# default finite-difference steps per derivative order (relative to max(1, |s|))
FD_STEPS = {1: 1e-5, 2: 1e-4, 3: 1e-3}
_STENCIL_REACH = {1: 1, 2: 1, 3: 2}


class Parametrization(enum.Enum):
    ARC_LENGTH = "arc-length"
    GENERAL = "general"


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text) -> "CausalCharacter":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise ValueError(f"character must be 'spacelike' or 'timelike', got {text!r}") from None


@dataclass(frozen=True)
class CurveModel:
    """A curve given by closed-form maps on ``domain = (s_lo, s_hi)``.

    ``derivative_maps`` holds up to three callables for the first, second and
    third derivative; ``None`` entries (or a short tuple) mean "use finite
    differences".
    """

    position: Callable[[float], Sequence[float]]
    domain: tuple[float, float]
    derivative_maps: tuple = ()
    kind: Parametrization = Parametrization.ARC_LENGTH
    name: str = ""

    def __post_init__(self):
        lo, hi = (float(v) for v in self.domain)
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"domain must satisfy s_lo < s_hi, got {self.domain}")
        object.__setattr__(self, "domain", (lo, hi))
        maps = tuple(self.derivative_maps) + (None,) * (3 - len(self.derivative_maps))
        if len(maps) != 3:
            raise ValueError("at most three derivative maps are supported")
        object.__setattr__(self, "derivative_maps", maps)

    def contains(self, s: float) -> bool:
        return self.domain[0] <= s <= self.domain[1]

    def has_analytic(self, order: int) -> bool:
        return self.derivative_maps[order - 1] is not None


def _check_domain(curve: CurveModel, s: float):
    if not math.isfinite(s) or not curve.contains(s):
        raise OutOfDomain(f"s={s} outside domain [{curve.domain[0]}, {curve.domain[1]}]")


def eval_curve(curve: CurveModel, s: float) -> np.ndarray:
    """Position of ``curve`` at parameter ``s``."""
    s = float(s)
    _check_domain(curve, s)
    return vec(curve.position(s))


def fd_step(order: int, s: float) -> float:
    return FD_STEPS[order] * max(1.0, abs(s))


def derivatives(curve: CurveModel, s: float, order: int, h: Optional[float] = None) -> np.ndarray:
    """Derivative of the position map of the given ``order`` (1, 2 or 3).

    Uses the analytic map when the curve provides one, otherwise second-order
    central differences (five-point stencil for ``order=3``). The default step
    depends on the order, see ``FD_STEPS``.

    Raises
    ------
    OutOfDomain
        ``s`` is outside the curve's domain.
    NumericallyUnstable
        The finite-difference stencil would leave the domain.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"order must be 1, 2 or 3, got {order}")
    s = float(s)
    _check_domain(curve, s)
    analytic = curve.derivative_maps[order - 1]
    if analytic is not None:
        return vec(analytic(s))

    h = fd_step(order, s) if h is None else float(h)
    reach = _STENCIL_REACH[order] * h
    if not (curve.contains(s - reach) and curve.contains(s + reach)):
        raise NumericallyUnstable(
            f"finite-difference stencil [{s - reach}, {s + reach}] leaves the domain {curve.domain}"
        )
    p = lambda t: np.asarray(curve.position(t), dtype=float)
    if order == 1:
        d = (p(s + h) - p(s - h)) / (2 * h)
    elif order == 2:
        d = (p(s + h) - 2 * p(s) + p(s - h)) / (h * h)
    else:
        d = (p(s + 2 * h) - 2 * p(s + h) + 2 * p(s - h) - p(s - 2 * h)) / (2 * h ** 3)
    return vec(d)


def fd_noise(curve: CurveModel, s: float, order: int) -> float:
    """Roundoff floor of the finite-difference derivative of ``order`` at ``s``.

    Zero when the curve supplies the analytic map. Otherwise about
    ``8 eps max|position| / h**order``: values below this are noise, so the
    degeneracy tests use it as a lower bound on their tolerance.
    """
    if curve.has_analytic(order):
        return 0.0
    size = float(np.max(np.abs(eval_curve(curve, s))))
    return 8 * np.finfo(float).eps * max(1.0, size) / fd_step(order, s) ** order


def arc_length_jet(curve: CurveModel, s: float):
    """First three derivatives with respect to arc length ``x`` at parameter ``s``.

    Returns three vectors ``(1, y', z')``, ``(0, y'', z'')``, ``(0, y''', z''')``.
    For general parametrizations the chain rule with ``d/dx = (1/x_t) d/dt``
    is applied.
    """
    d1 = derivatives(curve, s, 1)
    d2 = derivatives(curve, s, 2)
    d3 = derivatives(curve, s, 3)
    if curve.kind is Parametrization.ARC_LENGTH:
        return (
            np.array([1.0, d1[1], d1[2]]),
            np.array([0.0, d2[1], d2[2]]),
            np.array([0.0, d3[1], d3[2]]),
        )
    x1, x2, x3 = d1[0], d2[0], d3[0]
    if abs(x1) <= KAPPA_TOL:
        raise AdmissibilityError(f"isotropic tangent at s={s} (x'={x1:.3e})")
    c1, c2, c3 = d1[1:], d2[1:], d3[1:]
    num = x1 * c2 - x2 * c1
    dnum = x1 * c3 - x3 * c1
    first = c1 / x1
    second = num / x1 ** 3
    third = (dnum * x1 - 3.0 * num * x2) / x1 ** 5
    return (
        np.array([1.0, *first]),
        np.array([0.0, *second]),
        np.array([0.0, *third]),
    )


def _kappa(y2: float, z2: float, s: float, frame: bool, floor: float = 0.0) -> tuple[float, int]:
    q = y2 * y2 - z2 * z2
    n2 = y2 * y2 + z2 * z2
    tol = max(KAPPA_TOL, floor)
    if frame and math.sqrt(n2) > tol and abs(q) <= LIGHTLIKE_TOL * n2:
        raise LightlikeNormal(f"|y''| == |z''| at s={s}: normal projection is lightlike")
    kappa = math.sqrt(abs(q))
    if kappa <= tol:
        raise DegenerateCurvature(f"curvature {kappa:.3e} <= {tol:.3g} at s={s}")
    return kappa, (1 if q > 0 else -1)


def curvature_torsion(curve: CurveModel, s: float) -> tuple[float, float]:
    """Curvature and torsion at parameter ``s``.

    In arc length::

        kappa = sqrt(|y''^2 - z''^2|),  tau = (y'' z''' - y''' z'') / kappa^2
    """
    _, d2, d3 = arc_length_jet(curve, s)
    kappa, _ = _kappa(d2[1], d2[2], s, frame=False, floor=10 * fd_noise(curve, s, 2))
    tau = (d2[1] * d3[2] - d3[1] * d2[2]) / kappa ** 2
    return kappa, float(tau)


@dataclass(frozen=True)
class FrenetFrame:
    """Tangent, principal normal and binormal with ``kappa``, ``tau`` and ``epsilon``."""

    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    kappa: float
    tau: float
    epsilon: int
    s: float = float("nan")

    def det(self) -> float:
        return det3(self.e1, self.e2, self.e3)

    def metric_product(self) -> float:
        """``<e2, e2> * <e3, e3>``, which is -1 for a valid frame."""
        return pg_dot(self.e2, self.e2) * pg_dot(self.e3, self.e3)


def frenet_frame(curve: CurveModel, s: float) -> FrenetFrame:
    """Associated trihedron at ``s``.

    ``e1 = gamma'``, ``e2 = gamma''/kappa``,
    ``e3 = (0, eps z'', eps y'')/kappa`` with ``eps = sign(y''^2 - z''^2)``,
    which makes ``det(e1, e2, e3) = 1``.
    """
    d1, d2, d3 = arc_length_jet(curve, s)
    y2, z2 = d2[1], d2[2]
    kappa, eps = _kappa(y2, z2, s, frame=True, floor=10 * fd_noise(curve, s, 2))
    tau = (y2 * d3[2] - d3[1] * z2) / kappa ** 2
    e1 = np.array([1.0, d1[1], d1[2]])
    e2 = np.array([0.0, y2 / kappa, z2 / kappa])
    e3 = np.array([0.0, eps * z2 / kappa, eps * y2 / kappa])
    return FrenetFrame(e1, e2, e3, kappa, float(tau), eps, float(s))


def causal_character(frame: FrenetFrame) -> CausalCharacter:
    """A curve is timelike when its normal is spacelike, and vice versa."""
    cls = classify_vector(frame.e2)
    if cls is VectorClass.SPACELIKE:
        return CausalCharacter.TIMELIKE
    if cls is VectorClass.TIMELIKE:
        return CausalCharacter.SPACELIKE
    raise LightlikeNormal(f"principal normal classifies as {cls.value}; frame is inconsistent")


class ViolationKind(enum.Enum):
    ISOTROPIC_TANGENT = "isotropic-tangent"
    INFLECTION_POINT = "inflection-point"
    LIGHTLIKE_NORMAL_PROJECTION = "lightlike-normal-projection"
    # advisory only: the frame does not degenerate when y' = +-z'
    LIGHTLIKE_TANGENT_PROJECTION = "lightlike-tangent-projection"


@dataclass(frozen=True)
class Violation:
    s: float
    kind: ViolationKind


@dataclass
class AdmissibilityReport:
    """Sampled admissibility certificate.

    ``advisories`` collects samples where the tangent's isotropic part is
    lightlike (``y' = +-z'``). They are reported but do not make the curve
    inadmissible, since the frame only needs ``y''^2 != z''^2``.
    """

    violations: list = field(default_factory=list)
    advisories: list = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}


def interior(curve: CurveModel, interval=None, orders=(1, 2, 3)) -> tuple[float, float]:
    """``interval`` (default: the domain) shrunk so finite-difference stencils fit."""
    lo, hi = interval if interval is not None else curve.domain
    reach = 0.0
    for order in orders:
        if not curve.has_analytic(order):
            scale = max(1.0, abs(lo), abs(hi))
            reach = max(reach, 1.01 * _STENCIL_REACH[order] * FD_STEPS[order] * scale)
    return max(lo, curve.domain[0] + reach), min(hi, curve.domain[1] - reach)


def check_admissible(curve: CurveModel, samples: int = 101, tol: float = 1e-10,
                     interval=None) -> AdmissibilityReport:
    """Sample the admissibility conditions on an equispaced grid.

    This is a numerical certificate on the sample grid only. Each sample can
    contribute an isotropic tangent (``|x'| <= tol``), an inflection point
    (``max|gamma' x gamma''| <= tol``) or, where the normal exists, a
    lightlike normal projection (``|y''^2 - z''^2| <= tol max(1, y''^2, z''^2)``,
    second derivatives taken with respect to arc length). Samples with
    ``y'^2 = z'^2`` are listed in ``advisories``.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    lo, hi = interior(curve, interval, orders=(1, 2))
    report = AdmissibilityReport()
    for s in np.linspace(lo, hi, samples):
        s = float(s)
        d1 = derivatives(curve, s, 1)
        d2 = derivatives(curve, s, 2)
        if abs(d1[0]) <= tol:
            report.violations.append(Violation(s, ViolationKind.ISOTROPIC_TANGENT))
            continue
        y1, z1 = d1[1], d1[2]
        if abs(y1 * y1 - z1 * z1) <= tol * max(1.0, y1 * y1, z1 * z1):
            report.advisories.append(Violation(s, ViolationKind.LIGHTLIKE_TANGENT_PROJECTION))
        floor = 10 * fd_noise(curve, s, 2) * max(1.0, float(np.max(np.abs(d1))))
        if np.max(np.abs(pg_cross(d1, d2))) <= max(tol, floor):
            report.violations.append(Violation(s, ViolationKind.INFLECTION_POINT))
            continue
        if curve.kind is Parametrization.ARC_LENGTH:
            y2, z2 = d2[1], d2[2]
        else:
            num = d1[0] * d2[1:] - d2[0] * d1[1:]
            y2, z2 = num / d1[0] ** 3
        if abs(y2 * y2 - z2 * z2) <= tol * max(1.0, y2 * y2, z2 * z2):
            report.violations.append(Violation(s, ViolationKind.LIGHTLIKE_NORMAL_PROJECTION))
    return report


@dataclass
class ResidualReport:
    """Max-abs residuals of the Frenet equations over a sample set."""

    e1: float
    e2: float
    e3: float
    third_derivative: float
    samples: np.ndarray

    @property
    def worst(self) -> float:
        return max(self.e1, self.e2, self.e3, self.third_derivative)

    def as_dict(self) -> dict:
        return {
            "e1' - kappa e2": self.e1,
            "e2' - tau e3": self.e2,
            "e3' - tau e2": self.e3,
            "gamma''' - (kappa' e2 + kappa tau e3)": self.third_derivative,
        }


def frenet_residuals(curve: CurveModel, interval, samples: int = 51, h: float = 1e-5,
                     frame_fn: Callable[[CurveModel, float], FrenetFrame] = frenet_frame) -> ResidualReport:
    """Check ``e1' = kappa e2``, ``e2' = tau e3``, ``e3' = tau e2`` and
    ``gamma''' = kappa' e2 + kappa tau e3`` on ``samples`` equispaced points.

    Frame and curvature derivatives are central differences with step ``h``;
    ``gamma'''`` comes from the curve's derivative maps. ``frame_fn`` lets
    tests substitute a deliberately corrupted frame.
    """
    lo, hi = (float(v) for v in interval)
    if not (curve.contains(lo - h) and curve.contains(hi + h)):
        raise NumericallyUnstable(f"interval [{lo}, {hi}] +/- h leaves the domain {curve.domain}")
    grid = np.linspace(lo, hi, samples)
    worst = np.zeros(4)
    for s in grid:
        s = float(s)
        f0 = frame_fn(curve, s)
        fp = frame_fn(curve, s + h)
        fm = frame_fn(curve, s - h)
        d1 = derivatives(curve, s, 1)
        # frames are functions of arc length x; convert d/dt for general curves
        dxdt = 1.0 if curve.kind is Parametrization.ARC_LENGTH else d1[0]
        scale = 1.0 / (2 * h * dxdt)
        de1 = (fp.e1 - fm.e1) * scale
        de2 = (fp.e2 - fm.e2) * scale
        de3 = (fp.e3 - fm.e3) * scale
        dkappa = (fp.kappa - fm.kappa) * scale
        _, _, g3 = arc_length_jet(curve, s)
        r = (
            np.max(np.abs(de1 - f0.kappa * f0.e2)),
            np.max(np.abs(de2 - f0.tau * f0.e3)),
            np.max(np.abs(de3 - f0.tau * f0.e2)),
            np.max(np.abs(g3 - (dkappa * f0.e2 + f0.kappa * f0.tau * f0.e3))),
        )
        worst = np.maximum(worst, r)
    return ResidualReport(*(float(w) for w in worst), samples=grid)
