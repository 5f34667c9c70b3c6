"""Vector algebra of the pseudo-Galilean space G_3^1.

Vectors are plain ``numpy`` arrays of shape ``(3,)`` holding affine
coordinates ``(x, y, z)``. The first coordinate is absolute: whenever either
argument has a non-zero first component the scalar product only sees that
component; between isotropic vectors (``x == 0``) it is the Lorentzian form
``y1*y2 - z1*z2``.
"""

from __future__ import annotations

import enum

import numpy as np

# |x| <= ZERO_TOL counts as an exact zero in the metric and classification rules
ZERO_TOL = 1e-12

PGVector3 = np.ndarray


class VectorClass(enum.Enum):
    NON_ISOTROPIC = "non-isotropic"
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    ZERO = "zero"

    def __str__(self):
        return self.value


def vec(x, y=None, z=None) -> PGVector3:
    """Build a finite 3-vector from an iterable or from three scalars."""
    if y is None and z is None:
        v = np.asarray(x, dtype=float)
    else:
        v = np.array([x, y, z], dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector components must be finite, got {v}")
    return v


def is_isotropic(v, zeta: float = ZERO_TOL) -> bool:
    return abs(v[0]) <= zeta


def pg_dot(u, v, zeta: float = ZERO_TOL) -> float:
    """Pseudo-Galilean scalar product.

    >>> pg_dot([1, 2, 3], [4, 5, 6])
    4.0
    >>> pg_dot([0, 2, 1], [0, 1, 1])
    1.0
    """
    u, v = vec(u), vec(v)
    if abs(u[0]) > zeta or abs(v[0]) > zeta:
        return float(u[0] * v[0])
    return float(u[1] * v[1] - u[2] * v[2])


def pg_norm(v, zeta: float = ZERO_TOL) -> float:
    """``sqrt(|<v, v>|)``; 0 for lightlike and zero vectors."""
    return float(np.sqrt(abs(pg_dot(v, v, zeta))))


def pg_cross(u, v) -> PGVector3:
    """Pseudo-Galilean cross product.

    Expansion of the determinant with first row ``(0, -j, k)``::

        u x v = (0, u1 v3 - u3 v1, u1 v2 - u2 v1)

    The result is always isotropic.
    """
    u, v = vec(u), vec(v)
    return np.array([0.0, u[0] * v[2] - u[2] * v[0], u[0] * v[1] - u[1] * v[0]])


def classify_vector(v, zeta: float = ZERO_TOL) -> VectorClass:
    """Causal class of ``v``. Every finite vector lands in exactly one class."""
    v = vec(v)
    if abs(v[0]) > zeta:
        return VectorClass.NON_ISOTROPIC
    if abs(v[1]) <= zeta and abs(v[2]) <= zeta:
        return VectorClass.ZERO
    q = v[1] * v[1] - v[2] * v[2]
    if q > zeta:
        return VectorClass.SPACELIKE
    if q < -zeta:
        return VectorClass.TIMELIKE
    return VectorClass.LIGHTLIKE


def det3(a, b, c) -> float:
    """Ordinary determinant of the matrix with rows ``a, b, c``."""
    a, b, c = (np.asarray(w, dtype=float) for w in (a, b, c))
    return float(
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
