"""Closed-form reference curves with their published invariants.

Five worked examples: a spacelike and a timelike general helix, a spacelike
and a timelike Anti-Salkowski curve, and a timelike spiral. Each fixture holds
the curve with analytic derivative maps, the stated curvature, torsion and
frame, and the stated Smarandache curves. Rows listed in ``known_typos``
disagree with the frame-sum definition and are reported, not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy import cosh, exp, log, sinh

from .curves import CausalCharacter, CurveModel, Parametrization
from .natural import NaturalEquations
from .smarandache import SmarandacheKind

E12, E13, E123 = SmarandacheKind.E1E2, SmarandacheKind.E1E3, SmarandacheKind.E1E2E3


def _v(*c) -> np.ndarray:
    return np.array(c, dtype=float)


@dataclass(frozen=True)
class PrintedRow:
    """A formula as published, to be compared against a recomputation."""

    name: str
    formula: Callable[[float], object]
    note: str = ""


@dataclass(frozen=True)
class ExampleFixture:
    id: int
    title: str
    curve: CurveModel
    interval: tuple[float, float]
    kappa: Callable[[float], float]
    tau: Callable[[float], float]
    frame: Callable[[float], tuple]
    character: CausalCharacter
    epsilon: int
    smarandache: dict
    natural: NaturalEquations
    known_typos: dict = field(default_factory=dict)
    helix_ratio: float | None = None
    family_rows: tuple = ()


# --- general helix, spacelike ------------------------------------------------
# ch, sh = cosh(2 ln u), sinh(2 ln u); y = (u^3 - 3/u)/12, z = (u^3 + 3/u)/12


def _ch(u):
    return cosh(2 * log(u))


def _sh(u):
    return sinh(2 * log(u))


def _helix_s_pos(u):
    return _v(u, u / 6 * (-_ch(u) + 2 * _sh(u)), u / 6 * (2 * _ch(u) - _sh(u)))


def _helix_s_d1(u):
    return _v(1, (u ** 2 + u ** -2) / 4, (u ** 2 - u ** -2) / 4)


def _helix_s_d2(u):
    return _v(0, (u - u ** -3) / 2, (u + u ** -3) / 2)


def _helix_s_d3(u):
    return _v(0, (1 + 3 * u ** -4) / 2, (1 - 3 * u ** -4) / 2)


def _swap(f):
    def g(u):
        x, y, z = f(u)
        return _v(x, z, y)
    return g


def _helix_rows(m: float, spacelike: bool):
    """Componentwise general-helix expansions with K = int kappa = ln u."""
    def mk(u):
        return m * log(u)

    if spacelike:
        return (
            PrintedRow("general-helix e1e2 expansion", lambda u: _v(
                1, -cosh(mk(u)) / m + m * sinh(mk(u)), cosh(mk(u)) + sinh(mk(u)) / m),
                "second component carries +m sinh(mK); e1 + e2 gives -sinh(mK)"),
            PrintedRow("general-helix e1e3 expansion", lambda u: _v(
                1, -(1 + m) / m * cosh(mk(u)), (1 + m) / m * sinh(mk(u)))),
            PrintedRow("general-helix e1e2e3 expansion", lambda u: _v(
                1, -(1 + m) / m * cosh(mk(u)) + m * sinh(mk(u)), exp(mk(u)) + sinh(mk(u)) / m),
                "second component carries +m sinh(mK); e1 + e2 + e3 gives -sinh(mK)"),
        )
    return (
        PrintedRow("general-helix e1e2 expansion", lambda u: _v(
            1, sinh(mk(u)) / m + cosh(mk(u)), cosh(mk(u)) / m + sinh(mk(u)))),
        PrintedRow("general-helix e1e3 expansion", lambda u: _v(
            1, (1 + m) / m * sinh(mk(u)), (1 + m) / m * cosh(mk(u)))),
        PrintedRow("general-helix e1e2e3 expansion", lambda u: _v(
            1, exp(mk(u)) + sinh(mk(u)) / m, (1 + m) / m * cosh(mk(u)) + sinh(mk(u)))),
    )


EXAMPLE_1 = ExampleFixture(
    id=1,
    title="spacelike general helix",
    curve=CurveModel(_helix_s_pos, (0.25, 4.0), (_helix_s_d1, _helix_s_d2, _helix_s_d3),
                     Parametrization.ARC_LENGTH, "example-1"),
    interval=(0.5, 3.0),
    kappa=lambda u: 1 / u,
    tau=lambda u: -2 / u,
    frame=lambda u: (_v(1, _ch(u) / 2, _sh(u) / 2), _v(0, _sh(u), _ch(u)), _v(0, -_ch(u), -_sh(u))),
    character=CausalCharacter.SPACELIKE,
    epsilon=-1,
    smarandache={
        E12: lambda u: _v(1, _ch(u) / 2 + _sh(u), (1 + 3 * u ** 4) / (4 * u ** 2)),
        E13: lambda u: _v(1, -_ch(u) / 2, -_sh(u) / 2),
        E123: lambda u: _v(1, (-3 + u ** 4) / (4 * u ** 2), (3 + u ** 4) / (4 * u ** 2)),
    },
    natural=NaturalEquations(lambda u: 1 / u, lambda u: -2 / u, CausalCharacter.SPACELIKE,
                             (0.5, 3.0), "example-1", dkappa=lambda u: -1 / u ** 2),
    helix_ratio=-2.0,
    family_rows=_helix_rows(-2.0, spacelike=True),
)

EXAMPLE_2 = ExampleFixture(
    id=2,
    title="timelike general helix",
    curve=CurveModel(
        lambda u: _v(u, u / 6 * (2 * _ch(u) - _sh(u)), u / 6 * (-_ch(u) + 2 * _sh(u))),
        (0.25, 4.0),
        (_swap(_helix_s_d1), _swap(_helix_s_d2), _swap(_helix_s_d3)),
        Parametrization.ARC_LENGTH, "example-2"),
    interval=(0.5, 3.0),
    kappa=lambda u: 1 / u,
    tau=lambda u: 2 / u,
    frame=lambda u: (_v(1, _sh(u) / 2, _ch(u) / 2), _v(0, _ch(u), _sh(u)), _v(0, _sh(u), _ch(u))),
    character=CausalCharacter.TIMELIKE,
    epsilon=1,
    smarandache={
        E12: lambda u: _v(1, (1 + 3 * u ** 4) / (4 * u ** 2), _ch(u) / 2 + _sh(u)),
        E13: lambda u: _v(1, 1.5 * _sh(u), 1.5 * _ch(u)),
        E123: lambda u: _v(1, _ch(u) + 1.5 * _sh(u), (1 + 5 * u ** 4) / (4 * u ** 2)),
    },
    natural=NaturalEquations(lambda u: 1 / u, lambda u: 2 / u, CausalCharacter.TIMELIKE,
                             (0.5, 3.0), "example-2", dkappa=lambda u: -1 / u ** 2),
    helix_ratio=2.0,
    family_rows=_helix_rows(2.0, spacelike=False),
)


# --- Anti-Salkowski ----------------------------------------------------------
# y = e^u/2 - e^{-3u}/18, z = e^u/2 + e^{-3u}/18 (spacelike); swapped for timelike


def _as_s_pos(u):
    return _v(u, exp(-u) / 9 * (4 * cosh(2 * u) + 5 * sinh(2 * u)),
              exp(-u) / 9 * (5 * cosh(2 * u) + 4 * sinh(2 * u)))


def _as_s_d1(u):
    return _v(1, (exp(-3 * u) + 3 * exp(u)) / 6, -exp(-3 * u) / 6 + exp(u) / 2)


def _as_s_d2(u):
    return _v(0, exp(-u) * sinh(2 * u), exp(-u) * cosh(2 * u))


def _as_s_d3(u):
    return _v(0, (3 * exp(-3 * u) + exp(u)) / 2, (-3 * exp(-3 * u) + exp(u)) / 2)


def _anti_salkowski_rows(b: float, spacelike: bool):
    """Frame vectors of the Anti-Salkowski expansion with ``b`` read as the torsion."""
    if spacelike:
        return (
            PrintedRow("anti-salkowski e2 expansion", lambda u: _v(0, -sinh(b * u), cosh(b * u)),
                       "header declares tau = a but the expansion uses b s; b read as tau"),
            PrintedRow("anti-salkowski e3 expansion", lambda u: _v(0, -cosh(b * u), sinh(b * u))),
        )
    return (
        PrintedRow("anti-salkowski e2 expansion", lambda u: _v(0, cosh(b * u), sinh(b * u)),
                   "header declares tau = a but the expansion uses b s; b read as tau"),
        PrintedRow("anti-salkowski e3 expansion", lambda u: _v(0, sinh(b * u), cosh(b * u))),
    )


EXAMPLE_3 = ExampleFixture(
    id=3,
    title="spacelike Anti-Salkowski curve",
    curve=CurveModel(_as_s_pos, (-1.5, 1.5), (_as_s_d1, _as_s_d2, _as_s_d3),
                     Parametrization.ARC_LENGTH, "example-3"),
    interval=(-1.0, 1.0),
    kappa=lambda u: exp(-u),
    tau=lambda u: -2.0,
    frame=lambda u: (_as_s_d1(u), _v(0, sinh(2 * u), cosh(2 * u)), _v(0, -cosh(2 * u), -sinh(2 * u))),
    character=CausalCharacter.SPACELIKE,
    epsilon=-1,
    smarandache={
        E12: lambda u: _v(1, (exp(-3 * u) + 3 * exp(u)) / 6 + sinh(2 * u),
                          -exp(-3 * u) / 6 + exp(u) / 2 + cosh(2 * u)),
        E13: lambda u: _v(1, (exp(-3 * u) + 3 * exp(u) - 6 * cosh(2 * u)) / 6,
                          -exp(-3 * u) / 6 + exp(u) / 2 - sinh(2 * u)),
        E123: lambda u: _v(1, exp(-3 * u) * (1 - 6 * exp(u) + 3 * exp(4 * u)) / 6,
                           exp(-3 * u) * (-1 + 6 * exp(u) + 3 * exp(4 * u)) / 6),
    },
    natural=NaturalEquations(lambda u: exp(-u), lambda u: np.full_like(np.asarray(u, float), -2.0),
                             CausalCharacter.SPACELIKE, (-1.0, 1.0), "example-3",
                             dkappa=lambda u: -exp(-u)),
    family_rows=_anti_salkowski_rows(-2.0, spacelike=True),
)

EXAMPLE_4 = ExampleFixture(
    id=4,
    title="timelike Anti-Salkowski curve",
    curve=CurveModel(
        lambda u: _v(u, exp(-u) / 9 * (5 * cosh(2 * u) + 4 * sinh(2 * u)),
                     exp(-u) / 9 * (4 * cosh(2 * u) + 5 * sinh(2 * u))),
        (-1.5, 1.5),
        (_swap(_as_s_d1),
         lambda u: _v(0, exp(-u) * cosh(2 * u), exp(-u) * sinh(2 * u)),
         lambda u: _v(0, (-3 * exp(-3 * u) + exp(u)) / 2, (3 * exp(-3 * u) + exp(u)) / 2)),
        Parametrization.ARC_LENGTH, "example-4"),
    interval=(-1.0, 1.0),
    kappa=lambda u: exp(-u),
    tau=lambda u: 2.0,
    frame=lambda u: (_swap(_as_s_d1)(u), _v(0, cosh(2 * u), sinh(2 * u)), _v(0, sinh(2 * u), cosh(2 * u))),
    character=CausalCharacter.TIMELIKE,
    epsilon=1,
    smarandache={
        E12: lambda u: _v(1, -exp(-3 * u) / 6 + exp(u) / 2 + cosh(2 * u),
                          (exp(-3 * u) + 3 * exp(u)) / 6 + sinh(2 * u)),
        E13: lambda u: _v(1, -exp(-3 * u) / 6 + exp(u) / 2 + sinh(2 * u),
                          (exp(-3 * u) + 3 * exp(u)) / 6 + cosh(2 * u)),
        E123: lambda u: _v(1, -exp(-3 * u) / 6 + exp(u) / 2 + exp(2 * u),
                           exp(-3 * u) / 6 + exp(u) / 2 + exp(2 * u)),
    },
    natural=NaturalEquations(lambda u: exp(-u), lambda u: np.full_like(np.asarray(u, float), 2.0),
                             CausalCharacter.TIMELIKE, (-1.0, 1.0), "example-4",
                             dkappa=lambda u: -exp(-u)),
    family_rows=_anti_salkowski_rows(2.0, spacelike=False),
)


# --- timelike spiral ---------------------------------------------------------

EXAMPLE_5 = ExampleFixture(
    id=5,
    title="timelike spiral",
    curve=CurveModel(
        lambda u: _v(u, (2 + u) * (-1 + log(2 + u)), 0),
        (-1.5, 3.0),
        (lambda u: _v(1, log(2 + u), 0),
         lambda u: _v(0, 1 / (2 + u), 0),
         lambda u: _v(0, -1 / (2 + u) ** 2, 0)),
        Parametrization.ARC_LENGTH, "example-5"),
    interval=(-1.0, 2.0),
    kappa=lambda u: 1 / (2 + u),
    tau=lambda u: 0.0,
    frame=lambda u: (_v(1, log(2 + u), 0), _v(0, 1, 0), _v(0, 0, 1)),
    character=CausalCharacter.TIMELIKE,
    epsilon=1,
    smarandache={
        E123: lambda u: _v(1, 1 + log(2 + u), 1),
    },
    known_typos={
        E12: PrintedRow("e1e2 row", lambda u: _v(1, log(2 + u), 1),
                        "published row equals e1 + e3; e1 + e2 = (1, 1 + ln(2+u), 0)"),
        E13: PrintedRow("e1e3 row", lambda u: _v(1, 1 + log(2 + u), 1),
                        "published row equals e1 + e2 + e3; e1 + e3 = (1, ln(2+u), 1)"),
    },
    natural=NaturalEquations(lambda u: 1 / (2 + u), lambda u: np.zeros_like(np.asarray(u, float)),
                             CausalCharacter.TIMELIKE, (-1.0, 2.0), "example-5",
                             dkappa=lambda u: -1 / (2 + u) ** 2),
)

EXAMPLES = {f.id: f for f in (EXAMPLE_1, EXAMPLE_2, EXAMPLE_3, EXAMPLE_4, EXAMPLE_5)}


# --- circular helix expansion (constant kappa = b, tau = a in the header) ----


def printed_circular_helix(a: float, b: float, spacelike: bool) -> CurveModel:
    """The circular-helix parametrization exactly as expanded, integration constants zero.

    Its second derivative is ``a (sinh bs, cosh bs)`` (spacelike) or
    ``a (-cosh bs, sinh bs)`` (timelike), so its curvature is ``|a|`` and its
    torsion ``-b``: the roles of the two constants are exchanged relative to
    the declared ``tau = a, kappa = b``.
    """
    if spacelike:
        pos = lambda s: _v(s, a / b ** 2 * sinh(b * s), a / b ** 2 * cosh(b * s))
        d1 = lambda s: _v(1, a / b * cosh(b * s), a / b * sinh(b * s))
        d2 = lambda s: _v(0, a * sinh(b * s), a * cosh(b * s))
        d3 = lambda s: _v(0, a * b * cosh(b * s), a * b * sinh(b * s))
    else:
        pos = lambda s: _v(s, -a / b ** 2 * cosh(b * s), a / b ** 2 * sinh(b * s))
        d1 = lambda s: _v(1, -a / b * sinh(b * s), a / b * cosh(b * s))
        d2 = lambda s: _v(0, -a * cosh(b * s), a * sinh(b * s))
        d3 = lambda s: _v(0, -a * b * sinh(b * s), a * b * cosh(b * s))
    return CurveModel(pos, (-10.0, 10.0), (d1, d2, d3), Parametrization.ARC_LENGTH,
                      "circular-helix-expansion")
