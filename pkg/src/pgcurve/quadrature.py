"""Cumulative quadrature on caller-supplied grids.

Every single, double and triple integral used to build curves from their
natural equations goes through :func:`cumulative_integral`. Panels are
integrated by adaptive composite Simpson, vectorised over all panels at once
so that the integrand is called with numpy arrays.

Nested integrals use :func:`antiderivative`, which tabulates a cumulative
integral on a refined grid and bridges the nodes with a cubic Hermite
interpolant (the integrand supplies the slopes).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .errors import ToleranceNotReached

ENV_TOL = "PGCURVE_QUAD_TOL"

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureConfig:
    """Accuracy knobs for the quadrature engine.

    ``base_grid`` is the minimum number of initial Simpson panels spread over
    the whole integration span; each grid panel gets its share (at least one).
    """

    abs_tol: float = 1e-10
    max_refinement_depth: int = 24
    base_grid: int = 64

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be a positive finite number, got {self.abs_tol}")
        if self.max_refinement_depth < 1:
            raise ValueError("max_refinement_depth must be >= 1")
        if self.base_grid < 2:
            raise ValueError("base_grid must be >= 2")

    @classmethod
    def from_env(cls, **overrides) -> "QuadratureConfig":
        """Default config, with ``abs_tol`` taken from ``PGCURVE_QUAD_TOL`` if set."""
        cfg = cls(**overrides)
        raw = os.environ.get(ENV_TOL)
        if raw:
            cfg = replace(cfg, abs_tol=float(raw))
        return cfg


def as_vectorized(f: Callable) -> Callable[[np.ndarray], np.ndarray]:
    """Wrap ``f`` so it maps a float array to a float array of the same shape.

    Scalar-only callables (``math.sinh`` and friends) are looped over.
    """

    def g(x):
        x = np.asarray(x, dtype=float)
        try:
            y = np.asarray(f(x), dtype=float)
        except TypeError:
            y = np.array([float(f(float(v))) for v in x.ravel()]).reshape(x.shape)
        if y.shape != x.shape:
            y = np.broadcast_to(y, x.shape).copy()
        return y

    return g


def _simpson(h, fa, fm, fb):
    return h / 6.0 * (fa + 4.0 * fm + fb)


def integrate_panels(f, a, b, tol, max_depth: int) -> np.ndarray:
    """Integrate ``f`` over each panel ``[a[i], b[i]]`` to absolute ``tol[i]``.

    Breadth-first adaptive Simpson with Richardson correction: a panel is
    accepted once ``|S(left) + S(right) - S(whole)| <= 15 tol`` (or the
    difference is at rounding level); otherwise both halves are refined with
    half the tolerance each.

    Raises
    ------
    ToleranceNotReached
        If some panel is still unresolved after ``max_depth`` bisections.
    """
    f = as_vectorized(f)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n = a.size
    tol = np.broadcast_to(np.asarray(tol, dtype=float), (n,)).copy()
    out = np.zeros(n)
    if n == 0:
        return out

    owner = np.arange(n)
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = _simpson(b - a, fa, fm, fb)
    if not np.all(np.isfinite(whole)):
        raise ToleranceNotReached("integrand is not finite on the integration grid")

    for depth in range(max_depth + 1):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = _simpson(m - a, fa, flm, fm)
        right = _simpson(b - m, fm, frm, fb)
        delta = left + right - whole
        if not np.all(np.isfinite(delta)):
            raise ToleranceNotReached("integrand is not finite on the integration grid")
        floor = 64.0 * _EPS * (np.abs(left) + np.abs(right))
        done = (np.abs(delta) <= 15.0 * tol) | (np.abs(delta) <= floor)
        if np.any(done):
            np.add.at(out, owner[done], left[done] + right[done] + delta[done] / 15.0)
        todo = ~done
        if not np.any(todo):
            return out
        if depth == max_depth:
            break
        # children: left halves followed by right halves
        owner = np.concatenate([owner[todo], owner[todo]])
        a, m_, b = a[todo], m[todo], b[todo]
        fa_, fm_, fb_ = fa[todo], fm[todo], fb[todo]
        a = np.concatenate([a, m_])
        b = np.concatenate([m_, b])
        fa = np.concatenate([fa_, fm_])
        fb = np.concatenate([fm_, fb_])
        fm = np.concatenate([flm[todo], frm[todo]])
        whole = np.concatenate([left[todo], right[todo]])
        tol = np.concatenate([tol[todo], tol[todo]]) / 2.0
        m = 0.5 * (a + b)

    worst = float(np.max(np.abs(delta[todo])) / 15.0)
    raise ToleranceNotReached(
        f"adaptive Simpson did not converge within {max_depth} refinements "
        f"(residual error estimate {worst:.3e})"
    )


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a non-empty 1-D array")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid contains non-finite values")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing")
    return grid


def cumulative_integral(f, s0: float, grid, cfg: QuadratureConfig | None = None) -> np.ndarray:
    """Return ``F`` with ``F[i] = integral of f from s0 to grid[i]``.

    ``grid[0]`` must equal ``s0``, so ``F[0] == 0``. Each panel is resolved to
    ``abs_tol / len(grid)``, which bounds the accumulated error of every entry
    by ``abs_tol``.
    """
    cfg = cfg or QuadratureConfig()
    grid = _check_grid(grid)
    if grid[0] != s0:
        raise ValueError(f"grid must start at s0={s0}, got {grid[0]}")
    if grid.size == 1:
        return np.zeros(1)

    a, b = grid[:-1], grid[1:]
    panel_tol = cfg.abs_tol / grid.size
    span = grid[-1] - grid[0]
    splits = np.maximum(1, np.ceil(cfg.base_grid * (b - a) / span)).astype(int)

    if np.all(splits == 1):
        pieces = integrate_panels(f, a, b, panel_tol, cfg.max_refinement_depth)
    else:
        owner = np.repeat(np.arange(a.size), splits)
        k = np.concatenate([np.arange(n) for n in splits])
        width = (b - a)[owner] / splits[owner]
        sa = a[owner] + k * width
        sb = np.where(k == splits[owner] - 1, b[owner], sa + width)
        sub = integrate_panels(f, sa, sb, panel_tol / splits[owner], cfg.max_refinement_depth)
        pieces = np.zeros(a.size)
        np.add.at(pieces, owner, sub)

    return np.concatenate([[0.0], np.cumsum(pieces)])


def refine_grid(grid, factor: int) -> np.ndarray:
    """Insert ``factor - 1`` equispaced points inside every panel of ``grid``."""
    grid = _check_grid(grid)
    if factor < 1:
        raise ValueError("factor must be >= 1")
    if grid.size == 1 or factor == 1:
        return grid.copy()
    t = np.arange(factor) / factor
    inner = grid[:-1, None] + t[None, :] * np.diff(grid)[:, None]
    return np.concatenate([inner.ravel(), grid[-1:]])


def antiderivative(f, s0: float, grid, cfg: QuadratureConfig | None = None,
                   refine: int = 4, max_doublings: int = 8):
    """Interpolant of ``F(s) = integral of f from s0 to s`` over ``[s0, grid[-1]]``.

    The cumulative integral is tabulated on ``grid`` refined ``refine`` times
    and bridged by a cubic Hermite spline with slopes ``f(node)``. The bridge
    is checked at every panel midpoint against a direct quadrature; the
    refinement doubles until the interpolation error is within half of
    ``cfg.abs_tol``.

    The returned spline is what callers feed to :func:`cumulative_integral`
    to form a double integral.
    """
    cfg = cfg or QuadratureConfig()
    grid = _check_grid(grid)
    if grid[0] != s0:
        raise ValueError(f"grid must start at s0={s0}, got {grid[0]}")
    fv = as_vectorized(f)
    half = replace(cfg, abs_tol=cfg.abs_tol / 2.0)
    for _ in range(max_doublings + 1):
        dense = refine_grid(grid, refine)
        values = cumulative_integral(fv, s0, dense, half)
        spline = CubicHermiteSpline(dense, values, fv(dense), extrapolate=False)
        if dense.size == 1:
            return spline
        mid = 0.5 * (dense[:-1] + dense[1:])
        direct = values[:-1] + integrate_panels(
            fv, dense[:-1], mid, half.abs_tol / dense.size, cfg.max_refinement_depth
        )
        if np.max(np.abs(spline(mid) - direct)) <= half.abs_tol:
            return spline
        refine *= 2
    raise ToleranceNotReached(
        f"cubic bridge of the inner integral did not reach {half.abs_tol:.1e} "
        f"after {max_doublings} grid doublings"
    )
