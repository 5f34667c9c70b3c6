"""Smarandache curves built from a Frenet frame.

A Smarandache curve's position vector is a normalised sum of frame vectors
of another curve::

    e1e2   = (e1 + e2)      / ||e1 + e2||
    e1e3   = (e1 + e3)      / ||e1 + e3||
    e1e2e3 = (e1 + e2 + e3) / ||e1 + e2 + e3||

Because ``e1`` is the only non-isotropic frame vector and its first component
is 1, every denominator equals 1. The combination ``e2 + e3`` is always
lightlike, so there is no e2e3 kind; :func:`explain_e2e3_degeneracy` shows why.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import VectorClass, classify_vector, pg_norm
from .curves import CurveModel, FrenetFrame, frenet_frame
from .errors import ZeroNormCombination
from .natural import NaturalEquations, SampledCurve, closed_form_frames
from .quadrature import QuadratureConfig

NORM_TOL = 1e-12

E2E3_MESSAGE = (
    "e2e3 is not a valid Smarandache kind: e2 + e3 is a lightlike combination "
    "(zero pseudo-Galilean norm) for every admissible frame, so it cannot be normalised"
)


class SmarandacheKind(enum.Enum):
    E1E2 = "e1e2"
    E1E3 = "e1e3"
    E1E2E3 = "e1e2e3"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text) -> "SmarandacheKind":
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        if key in ("e2e3", "e3e2"):
            raise ValueError(E2E3_MESSAGE)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown Smarandache kind {text!r}; choose e1e2, e1e3 or e1e2e3") from None


def frame_sum(frame: FrenetFrame, kind: SmarandacheKind) -> np.ndarray:
    if kind is SmarandacheKind.E1E2:
        return frame.e1 + frame.e2
    if kind is SmarandacheKind.E1E3:
        return frame.e1 + frame.e3
    return frame.e1 + frame.e2 + frame.e3


def smarandache_point(frame: FrenetFrame, kind: SmarandacheKind) -> np.ndarray:
    """Point of the Smarandache curve of ``kind`` for one frame."""
    kind = SmarandacheKind.parse(kind)
    total = frame_sum(frame, kind)
    n = pg_norm(total)
    if n <= NORM_TOL:
        raise ZeroNormCombination(f"{kind.value} combination has norm {n:.3e}")
    return total / n


def smarandache_curve(source, kind: SmarandacheKind, grid,
                      cfg: QuadratureConfig | None = None) -> SampledCurve:
    """Sample the Smarandache curve of ``source`` on ``grid``.

    ``source`` is either a :class:`CurveModel` (frames from its derivatives) or
    :class:`NaturalEquations` (frames in closed form from ``T = int tau``).
    The output keeps the source curve's parameter.
    """
    kind = SmarandacheKind.parse(kind)
    grid = np.asarray(grid, dtype=float)
    if isinstance(source, CurveModel):
        frames = [frenet_frame(source, float(s)) for s in grid]
        name = source.name
    elif isinstance(source, NaturalEquations):
        frames = closed_form_frames(source, grid, cfg)
        name = source.name
    else:
        raise TypeError(f"source must be a CurveModel or NaturalEquations, got {type(source).__name__}")
    points = np.array([smarandache_point(f, kind) for f in frames])
    return SampledCurve(grid, points, frames, meta={"name": name, "kind": kind.value})


@dataclass(frozen=True)
class E2E3Diagnostic:
    combination: np.ndarray
    vector_class: VectorClass
    norm: float


def explain_e2e3_degeneracy(frame: FrenetFrame) -> E2E3Diagnostic:
    """Classify ``e2 + e3`` and report its norm (0 for every valid frame)."""
    total = frame.e2 + frame.e3
    return E2E3Diagnostic(total, classify_vector(total), pg_norm(total))
