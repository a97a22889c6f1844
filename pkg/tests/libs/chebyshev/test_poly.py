import math

import numpy as np
import pytest
from numpy.polynomial import chebyshev as npcheb

from src.libs.chebyshev import (
    SYMMETRIC,
    UNIT,
    ChebPoly,
    Interval,
    InvalidIntervalError,
    NonFiniteSampleError,
    cheb_derivative_bound,
    cheb_eval,
    cheb_interpolate,
    cheb_nodes,
    sup_norm,
)


def _sup_error(p, f, domain, size=2001):
    x = domain.linspace(size)
    return float(np.max(np.abs(p(x) - f(x))))


@pytest.mark.parametrize(
    "m, domain, expected",
    [
        (0, SYMMETRIC, [0.0]),
        (1, SYMMETRIC, [-1.0, 1.0]),
        (2, SYMMETRIC, [-1.0, 0.0, 1.0]),
        (2, UNIT, [0.0, 0.5, 1.0]),
    ],
)
def test_cheb_nodes_small_grids(m, domain, expected):
    # Act
    nodes = cheb_nodes(m, domain)

    # Assert
    np.testing.assert_allclose(nodes, expected, atol=1e-16)


def test_cheb_nodes_are_sorted_symmetric_and_include_endpoints():
    # Act
    nodes = cheb_nodes(31, SYMMETRIC)

    # Assert
    assert len(nodes) == 32
    assert nodes[0] == -1.0 and nodes[-1] == 1.0
    assert np.all(np.diff(nodes) > 0)
    np.testing.assert_allclose(nodes, -nodes[::-1], atol=1e-16)


def test_cheb_eval_matches_basis_values():
    assert cheb_eval(ChebPoly((0.0, 1.0)), 0.7) == pytest.approx(0.7)
    assert cheb_eval(ChebPoly((0.0, 0.0, 1.0)), 0.5) == pytest.approx(-0.5)
    assert cheb_eval(ChebPoly((2.0,), UNIT), 0.3) == 2.0


def test_cheb_eval_agrees_with_numpy(rng):
    # Arrange
    coeffs = rng.uniform(-1.0, 1.0, 25)
    domain = Interval(-2.0, 3.0)
    x = domain.linspace(101)

    # Act
    values = cheb_eval(ChebPoly(tuple(coeffs), domain), x)

    # Assert
    expected = npcheb.chebval(domain.to_reference(x), coeffs)
    np.testing.assert_allclose(values, expected, atol=1e-13)


def test_interpolation_reproduces_low_degree_polynomials():
    # Arrange
    def square(u):
        return u * u

    # Act
    p = cheb_interpolate(square, 2, UNIT)

    # Assert
    x = UNIT.linspace(1000)
    assert np.max(np.abs(p(x) - x * x)) <= 1e-14


def test_interpolation_reproduces_random_polynomials(rng):
    for degree in (0, 3, 7, 12):
        # Arrange
        coeffs = rng.uniform(-10.0, 10.0, degree + 1)

        def q(u):
            return npcheb.chebval(u, coeffs)

        # Act
        p = cheb_interpolate(q, degree + 3, SYMMETRIC)

        # Assert
        assert _sup_error(p, q, SYMMETRIC, 1000) <= 1e-12


def test_constant_interpolant_has_a_single_nonzero_coefficient():
    # Act
    p = cheb_interpolate(lambda u: 3.0, 5, SYMMETRIC)

    # Assert
    np.testing.assert_allclose(p.coeffs, [3, 0, 0, 0, 0, 0], atol=1e-15)


def test_interpolant_matches_samples_at_nodes():
    # Arrange
    domain = Interval(-0.5, 2.0)
    nodes = cheb_nodes(40, domain)

    # Act
    p = cheb_interpolate(math.cos, 40, domain)

    # Assert
    np.testing.assert_allclose(
        p(nodes), np.cos(nodes), rtol=1e-12, atol=1e-14
    )


def test_exp_interpolation_error():
    # Act
    p = cheb_interpolate(math.exp, 10, UNIT)

    # Assert
    assert _sup_error(p, np.exp, UNIT) <= 1e-9


@pytest.mark.parametrize(
    "f, vectorized",
    [
        (math.exp, np.exp),
        (math.cos, np.cos),
        (lambda u: 1.0 / (u + 2.0), lambda u: 1.0 / (u + 2.0)),
    ],
)
def test_analytic_interpolation_error_decays_geometrically(f, vectorized):
    # Arrange
    degrees = []
    errors = []
    for m in range(2, 21, 2):
        error = _sup_error(cheb_interpolate(f, m, UNIT), vectorized, UNIT)
        # Stop at the roundoff floor
        if error < 1e-13:
            break
        degrees.append(m)
        errors.append(error)

    # Act
    slope, intercept = np.polyfit(degrees, np.log(errors), 1)
    fitted = slope * np.asarray(degrees) + intercept
    residual = np.sum((np.log(errors) - fitted) ** 2)
    total = np.sum((np.log(errors) - np.mean(np.log(errors))) ** 2)

    # Assert
    assert len(degrees) >= 3
    assert slope < 0
    assert 1.0 - residual / total >= 0.98


def test_non_finite_sample_is_rejected():
    # Arrange
    def bad(u):
        return math.nan if u == 0.0 else u

    # Act & Assert
    with pytest.raises(NonFiniteSampleError) as info:
        cheb_interpolate(bad, 4, SYMMETRIC)
    assert info.value.node == 0.0


@pytest.mark.parametrize("lo, hi", [(1.0, 1.0), (2.0, -1.0), (0.0, math.inf)])
def test_invalid_interval_is_rejected(lo, hi):
    with pytest.raises(InvalidIntervalError):
        Interval(lo, hi)


def test_derivative_of_sine_interpolant():
    # Act
    dp = cheb_interpolate(math.sin, 24, SYMMETRIC).derivative()

    # Assert
    assert _sup_error(dp, np.cos, SYMMETRIC) <= 1e-11


@pytest.mark.parametrize(
    "coeffs, bound",
    [((0.0, 1.0), 1.0), ((0.0, 0.0, 0.0, 1.0), 9.0), ((4.0,), 0.0)],
)
def test_derivative_bound_equality_cases(coeffs, bound):
    # Arrange
    p = ChebPoly(coeffs)

    # Act
    result = cheb_derivative_bound(p)

    # Assert
    assert result == pytest.approx(bound)
    assert sup_norm(p.derivative()) == pytest.approx(bound)


def test_markov_inequality_on_random_polynomials(rng):
    violations = 0
    for _ in range(200):
        # Arrange
        degree = int(rng.integers(0, 31))
        lo = float(rng.uniform(-3.0, 0.0))
        domain = Interval(lo, lo + float(rng.uniform(0.5, 4.0)))
        p = ChebPoly(tuple(rng.normal(size=degree + 1)), domain)

        # Act
        actual = sup_norm(p.derivative(), 64 * (degree + 1))
        bound = cheb_derivative_bound(p)

        # Assert
        if actual > bound * (1.0 + 1e-10) + 1e-12:
            violations += 1
    assert violations == 0


def test_chebpoly_json_layout():
    # Arrange
    p = ChebPoly((1.0, -0.5, 0.25), UNIT)

    # Act
    data = p.to_dict()
    restored = ChebPoly.from_json(p.to_json())

    # Assert
    assert data == {"domain": [0.0, 1.0], "coeffs": [1.0, -0.5, 0.25]}
    assert restored == p
