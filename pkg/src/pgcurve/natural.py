"""Curves from natural equations ``(kappa(s), tau(s))``.

With ``T(s) = int_{s_lo}^s tau`` and every integration constant zero, the
curve starts at ``(s_lo, 0, 0)`` and is::

    spacelike:  r(s) = (s, -II[kappa sinh T], II[kappa cosh T])
    timelike:   r(s) = (s,  II[kappa cosh T], II[kappa sinh T])

where ``II`` is the double integral from ``s_lo``. The normal and binormal
follow directly from ``T``::

    spacelike:  e2 = (0, -sinh T, cosh T),  e3 = (0, -cosh T, sinh T),  eps = -1
    timelike:   e2 = (0,  cosh T, sinh T),  e3 = (0,  sinh T, cosh T),  eps = +1
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import make_interp_spline

from .curves import CausalCharacter, CurveModel, FrenetFrame, Parametrization
from .errors import InvalidFamilyParameter, NonPositiveCurvature, OutOfDomain
from .quadrature import QuadratureConfig, antiderivative, as_vectorized, cumulative_integral


@dataclass(frozen=True)
class NaturalEquations:
    kappa: Callable
    tau: Callable
    character: CausalCharacter
    domain: tuple[float, float]
    name: str = ""
    dkappa: Optional[Callable] = None

    def __post_init__(self):
        lo, hi = (float(v) for v in self.domain)
        if not lo < hi:
            raise ValueError(f"domain must satisfy s_lo < s_hi, got {self.domain}")
        object.__setattr__(self, "domain", (lo, hi))
        object.__setattr__(self, "character", CausalCharacter.parse(self.character))
        object.__setattr__(self, "kappa", as_vectorized(self.kappa))
        object.__setattr__(self, "tau", as_vectorized(self.tau))
        if self.dkappa is not None:
            object.__setattr__(self, "dkappa", as_vectorized(self.dkappa))

    def kappa_prime(self, s):
        """``kappa'(s)``: the supplied map, else a central difference."""
        s = np.asarray(s, dtype=float)
        if self.dkappa is not None:
            return self.dkappa(s)
        h = 1e-6 * np.maximum(1.0, np.abs(s))
        lo, hi = self.domain
        a, b = np.maximum(s - h, lo), np.minimum(s + h, hi)
        return (self.kappa(b) - self.kappa(a)) / (b - a)


# ---------------------------------------------------------------------------
# special families


@dataclass(frozen=True)
class GeneralHelix:
    """``tau / kappa = m`` constant."""

    m: float
    kappa: Callable


@dataclass(frozen=True)
class CircularHelix:
    kappa0: float
    tau0: float


@dataclass(frozen=True)
class Salkowski:
    """Constant curvature, varying torsion."""

    kappa0: float
    tau: Callable


@dataclass(frozen=True)
class AntiSalkowski:
    """Varying curvature, constant torsion."""

    kappa: Callable
    tau0: float


@dataclass(frozen=True)
class FamilySpec:
    family: object
    character: CausalCharacter

    def __post_init__(self):
        object.__setattr__(self, "character", CausalCharacter.parse(self.character))


def _const(c: float):
    return lambda s: np.full_like(np.asarray(s, dtype=float), c)


def family_to_natural(spec: FamilySpec, domain) -> NaturalEquations:
    """Natural equations of a special family over ``domain``."""
    fam = spec.family
    if isinstance(fam, GeneralHelix):
        if fam.m == 0:
            raise InvalidFamilyParameter("general helix needs m != 0")
        k = as_vectorized(fam.kappa)
        m = float(fam.m)
        return NaturalEquations(k, lambda s: m * k(s), spec.character, domain, "general-helix")
    if isinstance(fam, CircularHelix):
        if not fam.kappa0 > 0:
            raise InvalidFamilyParameter(f"circular helix needs kappa0 > 0, got {fam.kappa0}")
        return NaturalEquations(_const(fam.kappa0), _const(fam.tau0), spec.character, domain,
                                "circular-helix")
    if isinstance(fam, Salkowski):
        if not fam.kappa0 > 0:
            raise InvalidFamilyParameter(f"Salkowski curve needs kappa0 > 0, got {fam.kappa0}")
        return NaturalEquations(_const(fam.kappa0), fam.tau, spec.character, domain, "salkowski")
    if isinstance(fam, AntiSalkowski):
        return NaturalEquations(fam.kappa, _const(fam.tau0), spec.character, domain,
                                "anti-salkowski")
    raise InvalidFamilyParameter(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# sampled output


@dataclass
class SampledCurve:
    """Curve sampled on a parameter grid.

    ``d1`` and ``d2`` optionally hold the first and second derivatives at the
    nodes, as produced by the synthesis.
    """

    params: np.ndarray
    points: np.ndarray
    frames: Optional[list] = None
    d1: Optional[np.ndarray] = None
    d2: Optional[np.ndarray] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.params = np.asarray(self.params, dtype=float)
        self.points = np.asarray(self.points, dtype=float).reshape(-1, 3)
        if self.params.ndim != 1 or self.params.size != self.points.shape[0]:
            raise ValueError("params and points must have matching lengths")
        if self.params.size > 1 and not np.all(np.diff(self.params) > 0):
            raise ValueError("params must be strictly increasing")
        if self.frames is not None and len(self.frames) != self.params.size:
            raise ValueError("frames must match params in length")

    def __len__(self):
        return self.params.size

    def to_curve_model(self) -> CurveModel:
        """Arc-length quintic B-spline through the sampled positions.

        Only the positions are used; derivatives are those of the spline.
        """
        s = self.params
        polys = [make_interp_spline(s, self.points[:, c], k=5) for c in (1, 2)]
        derivs = [[p.derivative(k) for p in polys] for k in (1, 2, 3)]

        def position(t):
            return np.array([t, float(polys[0](t)), float(polys[1](t))])

        def make(k):
            py, pz = derivs[k - 1]
            lead = 1.0 if k == 1 else 0.0
            return lambda t: np.array([lead, float(py(t)), float(pz(t))])

        return CurveModel(position, (s[0], s[-1]), (make(1), make(2), make(3)),
                          Parametrization.ARC_LENGTH, name=self.meta.get("name", ""))


# ---------------------------------------------------------------------------
# synthesis


def _prepare_grid(neq: NaturalEquations, grid) -> tuple[np.ndarray, bool]:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a non-empty 1-D array")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing")
    lo, hi = neq.domain
    if grid[0] < lo or grid[-1] > hi:
        raise OutOfDomain(f"grid [{grid[0]}, {grid[-1]}] leaves the domain [{lo}, {hi}]")
    if grid[0] == lo:
        return grid, False
    return np.concatenate([[lo], grid]), True


class _Integrals:
    """``T``, ``y'`` and ``z'`` as interpolants on ``[s_lo, base[-1]]``."""

    def __init__(self, neq: NaturalEquations, base: np.ndarray, cfg: QuadratureConfig):
        s_lo = neq.domain[0]
        span = max(1.0, base[-1] - s_lo)
        kap = neq.kappa(base)
        bad = np.flatnonzero(~(kap > 0))
        if bad.size:
            raise NonPositiveCurvature(f"kappa({base[bad[0]]}) = {kap[bad[0]]} is not positive")
        self.neq = neq
        self.single = base.size == 1
        if self.single:
            return
        # errors in T and y' are integrated once or twice more downstream
        self.T = antiderivative(neq.tau, s_lo, base, replace(cfg, abs_tol=cfg.abs_tol / (3 * span ** 2)))
        sign = neq.character is CausalCharacter.SPACELIKE
        T, kappa = self.T, neq.kappa
        if sign:
            self.gy = lambda s: -kappa(s) * np.sinh(T(s))
            self.gz = lambda s: kappa(s) * np.cosh(T(s))
        else:
            self.gy = lambda s: kappa(s) * np.cosh(T(s))
            self.gz = lambda s: kappa(s) * np.sinh(T(s))
        inner = replace(cfg, abs_tol=cfg.abs_tol / (3 * span))
        self.Y1 = antiderivative(self.gy, s_lo, base, inner)
        self.Z1 = antiderivative(self.gz, s_lo, base, inner)

    def at(self, s: np.ndarray):
        if self.single:
            z = np.zeros_like(s)
            k = self.neq.kappa(s)
            if self.neq.character is CausalCharacter.SPACELIKE:
                return z, z, z, z, k
            return z, z, z, k, z
        return self.T(s), self.Y1(s), self.Z1(s), self.gy(s), self.gz(s)


def _frames_from(neq: NaturalEquations, s, T, Y1, Z1) -> list:
    sh, ch = np.sinh(T), np.cosh(T)
    kap, tau = neq.kappa(s), neq.tau(s)
    frames = []
    spacelike = neq.character is CausalCharacter.SPACELIKE
    for i in range(s.size):
        e1 = np.array([1.0, Y1[i], Z1[i]])
        if spacelike:
            e2 = np.array([0.0, -sh[i], ch[i]])
            e3 = np.array([0.0, -ch[i], sh[i]])
            eps = -1
        else:
            e2 = np.array([0.0, ch[i], sh[i]])
            e3 = np.array([0.0, sh[i], ch[i]])
            eps = 1
        frames.append(FrenetFrame(e1, e2, e3, float(kap[i]), float(tau[i]), eps, float(s[i])))
    return frames


def synthesize(neq: NaturalEquations, grid, cfg: QuadratureConfig | None = None,
               with_frames: bool = False) -> SampledCurve:
    """Sample the curve with natural equations ``neq`` on ``grid``.

    The inner integrals (``T`` and the first derivatives) are tabulated on a
    refined grid and bridged by cubic Hermite interpolants; the outer pass
    integrates those interpolants with :func:`cumulative_integral`.

    Raises
    ------
    NonPositiveCurvature
        ``kappa <= 0`` at some grid node.
    ToleranceNotReached
        The quadrature could not meet ``cfg.abs_tol``.
    """
    cfg = cfg or QuadratureConfig()
    base, prepended = _prepare_grid(neq, grid)
    ints = _Integrals(neq, base, cfg)
    s_lo = neq.domain[0]
    T, Y1, Z1, gy, gz = ints.at(base)
    if ints.single:
        y = z = np.zeros(1)
    else:
        outer = replace(cfg, abs_tol=cfg.abs_tol / 3)
        y = cumulative_integral(ints.Y1, s_lo, base, outer)
        z = cumulative_integral(ints.Z1, s_lo, base, outer)

    points = np.column_stack([base, y, z])
    d1 = np.column_stack([np.ones_like(base), Y1, Z1])
    d2 = np.column_stack([np.zeros_like(base), gy, gz])
    frames = _frames_from(neq, base, T, Y1, Z1) if with_frames else None
    cut = slice(1, None) if prepended else slice(None)
    return SampledCurve(
        base[cut], points[cut],
        frames[cut] if frames is not None else None,
        d1[cut], d2[cut],
        meta={"name": neq.name, "character": neq.character.value},
    )


def closed_form_frames(neq: NaturalEquations, grid, cfg: QuadratureConfig | None = None) -> list:
    """Frames built directly from ``T = int tau`` at every grid node.

    ``e1 = (1, y'(s), z'(s))`` comes from the single integrals.
    """
    cfg = cfg or QuadratureConfig()
    base, prepended = _prepare_grid(neq, grid)
    ints = _Integrals(neq, base, cfg)
    T, Y1, Z1, _, _ = ints.at(base)
    frames = _frames_from(neq, base, T, Y1, Z1)
    return frames[1:] if prepended else frames


def closed_form_frame(neq: NaturalEquations, s: float, cfg: QuadratureConfig | None = None) -> FrenetFrame:
    return closed_form_frames(neq, [float(s)], cfg)[0]


def natural_curve_model(neq: NaturalEquations, grid, cfg: QuadratureConfig | None = None) -> CurveModel:
    """Synthesized curve with the generator's own derivative maps.

    See :func:`synthesize_with_model`.
    """
    return synthesize_with_model(neq, grid, cfg)[1]


def synthesize_with_model(neq: NaturalEquations, grid,
                          cfg: QuadratureConfig | None = None) -> tuple[SampledCurve, CurveModel]:
    """Sampled curve plus a :class:`CurveModel` carrying the generator's derivatives.

    Positions interpolate :func:`synthesize` output with a quintic spline
    (lower degree on grids of fewer than six nodes). The derivatives are the
    closed expressions of the construction, e.g. for a spacelike curve::

        r'   = (1, -I[kappa sinh T], I[kappa cosh T])
        r''  = (0, -kappa sinh T, kappa cosh T)
        r''' = (0, -kappa' sinh T - kappa tau cosh T, kappa' cosh T + kappa tau sinh T)
    """
    cfg = cfg or QuadratureConfig()
    sampled = synthesize(neq, grid, cfg)
    base, _ = _prepare_grid(neq, grid)
    ints = _Integrals(neq, base, cfg)
    if ints.single:
        raise ValueError("grid must span more than one point")
    s_nodes = sampled.params
    k = min(5, s_nodes.size - 1)
    py, pz = (make_interp_spline(s_nodes, sampled.points[:, c], k=k) for c in (1, 2))
    spacelike = neq.character is CausalCharacter.SPACELIKE

    def d1(s):
        return np.array([1.0, float(ints.Y1(s)), float(ints.Z1(s))])

    def d2(s):
        return np.array([0.0, float(ints.gy(s)), float(ints.gz(s))])

    def d3(s):
        T = float(ints.T(s))
        k, kp, t = (float(f(np.array(s))) for f in (neq.kappa, neq.kappa_prime, neq.tau))
        sh, ch = np.sinh(T), np.cosh(T)
        if spacelike:
            return np.array([0.0, -kp * sh - k * t * ch, kp * ch + k * t * sh])
        return np.array([0.0, kp * ch + k * t * sh, kp * sh + k * t * ch])

    def position(s):
        return np.array([s, float(py(s)), float(pz(s))])

    model = CurveModel(position, (s_nodes[0], s_nodes[-1]), (d1, d2, d3),
                       Parametrization.ARC_LENGTH, name=neq.name)
    return sampled, model
