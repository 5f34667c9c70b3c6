import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgcurve.curves import CausalCharacter, causal_character, curvature_torsion, frenet_frame
from pgcurve.errors import InvalidFamilyParameter, NonPositiveCurvature, OutOfDomain
from pgcurve.natural import (
    AntiSalkowski,
    CircularHelix,
    FamilySpec,
    GeneralHelix,
    NaturalEquations,
    Salkowski,
    SampledCurve,
    closed_form_frame,
    closed_form_frames,
    family_to_natural,
    natural_curve_model,
    synthesize,
    synthesize_with_model,
)

SPACE, TIME = CausalCharacter.SPACELIKE, CausalCharacter.TIMELIKE


def const(c):
    return lambda s: np.full_like(np.asarray(s, float), c)


FAMILY_CASES = [
    ("general-helix", GeneralHelix(-2.0, lambda s: 1 / s), (1.0, 3.0)),
    ("circular-helix", CircularHelix(1.0, 2.0), (0.0, 2.0)),
    ("salkowski", Salkowski(1.0, lambda s: -2 / s), (1.0, 3.0)),
    ("anti-salkowski", AntiSalkowski(lambda s: np.exp(-s), -2.0), (-1.0, 1.0)),
]


@pytest.mark.parametrize("a", [0.5, 2.0])
def test_zero_torsion_spacelike_parabola(a):
    neq = NaturalEquations(const(a), const(0.0), SPACE, (0.0, 2.0))
    s = np.linspace(0, 2, 21)
    out = synthesize(neq, s)
    np.testing.assert_allclose(out.points, np.column_stack([s, 0 * s, a * s ** 2 / 2]), atol=1e-10)


@pytest.mark.parametrize("a, b", [(2.0, 1.0), (-1.0, 3.0)])
def test_timelike_circular_helix_closed_form(a, b):
    neq = NaturalEquations(const(b), const(a), TIME, (0.0, 1.5))
    s = np.linspace(0, 1.5, 31)
    out = synthesize(neq, s)
    y = b / a ** 2 * (np.cosh(a * s) - 1)
    z = b / a ** 2 * np.sinh(a * s) - b / a * s
    np.testing.assert_allclose(out.points[:, 1], y, atol=1e-10)
    np.testing.assert_allclose(out.points[:, 2], z, atol=1e-10)


def test_grid_starting_inside_domain():
    neq = NaturalEquations(const(1.0), const(0.0), SPACE, (0.0, 2.0))
    out = synthesize(neq, [1.0, 2.0])
    np.testing.assert_allclose(out.points[:, 2], [0.5, 2.0], atol=1e-10)
    np.testing.assert_array_equal(out.params, [1.0, 2.0])


def test_grid_outside_domain():
    neq = NaturalEquations(const(1.0), const(0.0), SPACE, (0.0, 2.0))
    with pytest.raises(OutOfDomain):
        synthesize(neq, [0.0, 3.0])


def test_nonpositive_curvature():
    neq = NaturalEquations(lambda s: s - 1, const(0.0), SPACE, (0.0, 2.0))
    with pytest.raises(NonPositiveCurvature):
        synthesize(neq, np.linspace(0, 2, 5))


def test_points_follow_arc_length():
    neq = family_to_natural(FamilySpec(FAMILY_CASES[0][1], SPACE), (1.0, 3.0))
    out = synthesize(neq, np.linspace(1, 3, 17))
    assert np.abs(out.points[:, 0] - out.params).max() <= 1e-12


def test_closed_form_frames_zero_torsion():
    sp = closed_form_frame(NaturalEquations(const(1.0), const(0.0), SPACE, (0, 1)), 0.5)
    np.testing.assert_array_equal(sp.e2, [0, 0, 1])
    np.testing.assert_array_equal(sp.e3, [0, -1, 0])
    tl = closed_form_frame(NaturalEquations(const(1.0), const(0.0), TIME, (0, 1)), 0.5)
    np.testing.assert_array_equal(tl.e2, [0, 1, 0])
    np.testing.assert_array_equal(tl.e3, [0, 0, 1])


def test_closed_form_frame_log_torsion():
    neq = NaturalEquations(lambda s: 1 / s, lambda s: -2 / s, SPACE, (1.0, 3.0))
    for s in (1.5, 2.0, 2.9):
        f = closed_form_frame(neq, s)
        T = -2 * np.log(s)
        np.testing.assert_allclose(f.e2, [0, -np.sinh(T), np.cosh(T)], atol=1e-10)


def test_family_mapping():
    neq = family_to_natural(FamilySpec(GeneralHelix(-2, lambda s: 1 / s), SPACE), (1, 3))
    s = np.linspace(1, 3, 9)
    np.testing.assert_allclose(neq.tau(s), -2 / s)
    neq = family_to_natural(FamilySpec(AntiSalkowski(lambda s: np.exp(-s), -2.0), SPACE), (-1, 1))
    np.testing.assert_allclose(neq.kappa(s), np.exp(-s))
    np.testing.assert_allclose(neq.tau(s), -2.0)


@pytest.mark.parametrize("family", [
    GeneralHelix(0.0, lambda s: 1 / s),
    CircularHelix(0.0, 1.0),
    Salkowski(-1.0, lambda s: s),
])
def test_invalid_family_parameters(family):
    with pytest.raises(InvalidFamilyParameter):
        family_to_natural(FamilySpec(family, SPACE), (1, 2))


@pytest.mark.parametrize("m", [-3.0, -0.5, 0.25, 2.0])
def test_general_helix_ratio_identity(m):
    neq = family_to_natural(FamilySpec(GeneralHelix(m, lambda s: 1 / s), TIME), (1, 3))
    s = np.linspace(1, 3, 101)
    assert np.abs(neq.tau(s) / neq.kappa(s) - m).max() <= 1e-12


@pytest.mark.parametrize("character", [SPACE, TIME])
@pytest.mark.parametrize("name, family, domain", FAMILY_CASES, ids=[c[0] for c in FAMILY_CASES])
def test_analytic_model_round_trip(name, family, domain, character):
    neq = family_to_natural(FamilySpec(family, character), domain)
    grid = np.linspace(*domain, 101)
    model = natural_curve_model(neq, grid)
    closed = closed_form_frames(neq, grid)
    for s, cf in zip(grid[1:-1], closed[1:-1]):
        f = frenet_frame(model, s)
        assert abs(f.kappa - neq.kappa(s)) <= 1e-6
        assert abs(f.tau - neq.tau(s)) <= 1e-6
        assert causal_character(f) is character
        assert f.epsilon == (-1 if character is SPACE else 1)
        assert np.abs(f.e2 - cf.e2).max() <= 1e-6
        assert np.abs(f.e3 - cf.e3).max() <= 1e-6


def test_helix_round_trip_with_spline_model():
    neq = NaturalEquations(lambda s: 1 / s, lambda s: -2 / s, SPACE, (1.0, 3.0))
    grid = np.linspace(1, 3, 401)
    model = synthesize(neq, grid).to_curve_model()
    for s in grid[1:-1:10]:
        k, t = curvature_torsion(model, s)
        assert abs(k - 1 / s) <= 1e-4
        assert abs(t + 2 / s) <= 1e-4


def test_exponential_shorthand():
    neq = NaturalEquations(const(1.0), lambda s: np.cos(s), TIME, (0, 2))
    for f in closed_form_frames(neq, np.linspace(0, 2, 21)):
        T = np.arcsinh(f.e2[2])
        assert abs(f.e2[1] + f.e2[2] - np.exp(T)) <= 1e-12


def test_with_frames_and_small_grids():
    neq = NaturalEquations(const(1.0), const(2.0), TIME, (0, 1))
    out = synthesize(neq, [0.0, 0.5, 1.0], with_frames=True)
    assert len(out) == 3 and len(out.frames) == 3
    sampled, model = synthesize_with_model(neq, [0.0, 1.0])
    assert model.domain == (0.0, 1.0)
    assert frenet_frame(model, 0.5).kappa == pytest.approx(1.0, abs=1e-9)


def test_sampled_curve_validation():
    with pytest.raises(ValueError):
        SampledCurve([0.0, 1.0], np.zeros((3, 3)))
    with pytest.raises(ValueError):
        SampledCurve([1.0, 0.0], np.zeros((2, 3)))


def test_kappa_prime_fallback():
    neq = NaturalEquations(lambda s: s ** 2 + 1, const(0.0), SPACE, (0, 2))
    assert neq.kappa_prime(1.0) == pytest.approx(2.0, abs=1e-8)


@settings(max_examples=15, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(-3.0, 3.0), st.sampled_from([SPACE, TIME]))
def test_character_and_epsilon_property(kappa0, tau0, character):
    neq = NaturalEquations(const(kappa0), const(tau0), character, (0.0, 1.0))
    grid = np.linspace(0, 1, 41)
    model = natural_curve_model(neq, grid)
    for s in grid[1:-1:5]:
        f = frenet_frame(model, s)
        assert causal_character(f) is character
        assert abs(f.kappa - kappa0) <= 1e-6
        assert abs(f.tau - tau0) <= 1e-6
