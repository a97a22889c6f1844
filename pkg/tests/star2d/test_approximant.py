import math

import numpy as np
import pytest

from src.libs.rootiter import CountingScalar, Exponent, OpCounter
from src.models import CountConvention, GridSpec, StarParams, StarTip
from src.star2d import (
    Normalization,
    approximate_rstar,
    baseline_rstar,
    exact_profile,
    grid_field,
    grid_l2_distance,
    grid_l2_error,
    level_field,
    make_uneven_star,
    r_star,
)


@pytest.fixture
def flat_star():
    return StarParams(
        r0=0.5,
        tips=(StarTip(1.0, 0.0, 3.0, Exponent(1, 3)),),
        sharpness=25.0,
    )


def test_five_tip_count(five_tip_star):
    # Act
    deep = approximate_rstar(five_tip_star, 20, 15)
    count = deep.param_count()

    # Assert
    assert count.n == 105
    assert count.convention is CountConvention.OUTER_ONLY
    assert baseline_rstar(five_tip_star, count.n).degree == 104


def test_flat_star_is_reproduced_exactly(flat_star):
    # Arrange
    grid = GridSpec(60)
    exact = exact_profile(flat_star)

    # Act
    deep = approximate_rstar(flat_star, 4, 6)
    baseline = baseline_rstar(flat_star, 5)

    # Assert
    assert grid_l2_error(flat_star, exact, deep, grid) <= 1e-12
    assert grid_l2_error(flat_star, exact, baseline, grid) <= 1e-12


def test_deep_error_does_not_grow_with_depth(five_tip_star):
    # Arrange
    theta = np.linspace(-math.pi, math.pi, 4001)
    exact = r_star(theta, five_tip_star)

    # Act
    errors = [
        float(np.max(np.abs(approximate_rstar(five_tip_star, 20, k)(theta)
                            - exact)))
        for k in (3, 6, 9, 12, 15)
    ]

    # Assert
    assert all(b <= a for a, b in zip(errors, errors[1:]))


def test_radial_approximant_never_divides(five_tip_star):
    # Arrange
    deep = approximate_rstar(five_tip_star, 10, 8)
    counter = OpCounter()

    # Act
    layer = deep.layers[0]
    value = layer.at_distance(CountingScalar(0.3, counter))

    # Assert
    assert counter.divisions == 0
    assert float(value) == pytest.approx(layer.at_distance(0.3))


def test_identical_profiles_have_zero_distance(five_tip_star):
    exact = exact_profile(five_tip_star)
    assert grid_l2_error(five_tip_star, exact, exact, GridSpec(40)) == 0.0


def test_negated_field_distance_by_normalization(five_tip_star):
    # Arrange
    sharp = StarParams(five_tip_star.r0, five_tip_star.tips, 1e4)
    field = level_field(sharp, exact_profile(sharp), GridSpec(101))

    # Act
    rms = grid_l2_distance(field, -field, Normalization.RMS)
    area = grid_l2_distance(field, -field, "area")

    # Assert
    assert rms == pytest.approx(2.0, abs=0.05)
    assert area == pytest.approx(2.0 * rms)


@pytest.mark.slow
def test_symmetric_star_deep_beats_baseline(five_tip_star):
    # Arrange
    grid = GridSpec(400)
    exact = exact_profile(five_tip_star)
    deep = approximate_rstar(five_tip_star, 20, 15)
    baseline = baseline_rstar(five_tip_star, deep.param_count().n)

    # Act
    deep_error = grid_l2_error(five_tip_star, exact, deep, grid)
    baseline_error = grid_l2_error(five_tip_star, exact, baseline, grid)

    # Assert
    assert deep_error <= baseline_error / 3
    assert deep_error <= 5e-2


@pytest.mark.slow
def test_uneven_star_deep_beats_baseline():
    # Arrange
    params = make_uneven_star(
        K=8,
        seed=1,
        jitter=0.25,
        weight_range=(0.18, 0.32),
        decay_range=(3.0, 6.0),
    )
    grid = GridSpec(420)
    exact = exact_profile(params)
    deep = approximate_rstar(params, 22, 16)
    n = deep.param_count().n
    baseline = baseline_rstar(params, n)

    # Act
    deep_error = grid_l2_error(params, exact, deep, grid)
    baseline_error = grid_l2_error(params, exact, baseline, grid)

    # Assert
    assert n == 184
    assert deep_error < baseline_error


def test_grid_field_columns_are_row_major(one_tip_star):
    # Act
    columns = grid_field(
        one_tip_star, {"f_true": exact_profile(one_tip_star)}, GridSpec(3)
    )

    # Assert
    np.testing.assert_array_equal(columns["x"], [-1, 0, 1] * 3)
    np.testing.assert_array_equal(
        columns["y"], [-1, -1, -1, 0, 0, 0, 1, 1, 1]
    )
    assert columns["f_true"].shape == (9,)
