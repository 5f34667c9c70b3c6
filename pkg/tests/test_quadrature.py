import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgcurve.errors import ToleranceNotReached
from pgcurve.quadrature import (
    ENV_TOL,
    QuadratureConfig,
    antiderivative,
    as_vectorized,
    cumulative_integral,
    integrate_panels,
    refine_grid,
)

TOLS = [1e-6, 1e-10]


def cfg(tol):
    return QuadratureConfig(abs_tol=tol)


def test_constant_integrand_is_exact():
    grid = np.linspace(0, 1, 11)
    F = cumulative_integral(lambda s: np.ones_like(s), 0.0, grid)
    np.testing.assert_allclose(F, grid, atol=1e-15)


@pytest.mark.parametrize("tol", TOLS)
def test_identity_integrand(tol):
    F = cumulative_integral(lambda s: s, 0.0, np.linspace(0, 1, 5), cfg(tol))
    assert abs(F[-1] - 0.5) <= tol


@pytest.mark.parametrize("tol", TOLS)
def test_nested_constant(tol):
    grid = np.linspace(0, 1, 9)
    inner = antiderivative(lambda s: np.ones_like(s), 0.0, grid, cfg(tol / 2))
    F = cumulative_integral(inner, 0.0, grid, cfg(tol / 2))
    assert abs(F[-1] - 0.5) <= tol


@pytest.mark.parametrize("tol", TOLS)
@pytest.mark.parametrize("a", [0.5, 2.0, -3.0])
def test_hyperbolic_integrands(tol, a):
    grid = np.linspace(-1, 2, 31)
    S = cumulative_integral(lambda s: np.sinh(a * s), -1.0, grid, cfg(tol))
    C = cumulative_integral(lambda s: np.cosh(a * s), -1.0, grid, cfg(tol))
    assert np.abs(S - (np.cosh(a * grid) - np.cosh(-a)) / a).max() <= tol
    assert np.abs(C - (np.sinh(a * grid) - np.sinh(-a)) / a).max() <= tol


@pytest.mark.parametrize("tol", TOLS)
@pytest.mark.parametrize("a", [1.0, 2.5])
def test_nested_hyperbolic(tol, a):
    # int_0^s int_0^t cosh(a u) du dt = (cosh(a s) - 1) / a^2
    grid = np.linspace(0, 2, 41)
    inner = antiderivative(lambda s: np.cosh(a * s), 0.0, grid, cfg(tol / 2))
    F = cumulative_integral(inner, 0.0, grid, cfg(tol / 2))
    assert np.abs(F - (np.cosh(a * grid) - 1) / a ** 2).max() <= tol


def test_halving_tolerance_never_hurts():
    grid = np.linspace(0, 1, 7)
    errs = []
    for k in range(4, 12):
        F = cumulative_integral(lambda s: s, 0.0, grid, cfg(2.0 ** -k))
        errs.append(abs(F[-1] - 0.5))
    assert all(b <= a or b <= 1e-15 for a, b in zip(errs, errs[1:]))


def test_scalar_only_integrand():
    F = cumulative_integral(math.exp, 0.0, np.array([0.0, 1.0]))
    assert abs(F[-1] - (math.e - 1)) <= 1e-10


def test_single_point_grid():
    np.testing.assert_array_equal(cumulative_integral(np.sin, 0.5, [0.5]), [0.0])


def test_grid_must_start_at_s0():
    with pytest.raises(ValueError):
        cumulative_integral(np.sin, 0.0, [0.1, 0.2])


def test_grid_must_increase():
    with pytest.raises(ValueError):
        cumulative_integral(np.sin, 0.0, [0.0, 0.2, 0.1])


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_singular_integrand_fails_loudly():
    with pytest.raises(ToleranceNotReached):
        cumulative_integral(lambda s: 1 / s, 0.0, [0.0, 1.0])


def test_depth_exhaustion():
    with pytest.raises(ToleranceNotReached):
        integrate_panels(lambda s: np.sin(1 / (s + 1e-3)), np.array([0.0]), np.array([1.0]),
                         1e-14, max_depth=3)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0)
    with pytest.raises(ValueError):
        QuadratureConfig(base_grid=1)
    with pytest.raises(ValueError):
        QuadratureConfig(max_refinement_depth=0)


def test_env_override(monkeypatch):
    monkeypatch.setenv(ENV_TOL, "1e-7")
    assert QuadratureConfig.from_env().abs_tol == 1e-7
    monkeypatch.delenv(ENV_TOL)
    assert QuadratureConfig.from_env().abs_tol == 1e-10


def test_refine_grid():
    np.testing.assert_allclose(refine_grid([0.0, 1.0, 3.0], 2), [0, 0.5, 1, 2, 3])
    np.testing.assert_array_equal(refine_grid([0.0, 1.0], 1), [0.0, 1.0])


def test_as_vectorized_broadcasts_constants():
    f = as_vectorized(lambda s: 2.0)
    np.testing.assert_array_equal(f(np.zeros(3)), [2.0, 2.0, 2.0])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=2, max_size=5),
       st.floats(-2, 0), st.floats(0.1, 3), st.integers(2, 30))
def test_polynomials(coef, lo, width, n):
    p = np.polynomial.Polynomial(coef)
    P = p.integ()
    grid = np.linspace(lo, lo + width, n)
    F = cumulative_integral(p, lo, grid, cfg(1e-9))
    assert np.abs(F - (P(grid) - P(lo))).max() <= 1e-9


@settings(max_examples=20, deadline=None)
@given(st.floats(-2.5, 2.5).filter(lambda a: abs(a) > 1e-3), st.integers(2, 40))
def test_exponential_property(a, n):
    grid = np.linspace(0, 1.5, n)
    F = cumulative_integral(lambda s: np.exp(a * s), 0.0, grid, cfg(1e-10))
    assert np.abs(F - np.expm1(a * grid) / a).max() <= 1e-10
