import math

import numpy as np
import pytest

from src.libs.rootiter import Exponent
from src.models import StarParams, StarTip
from src.star2d import exact_profile, level_fn, r_star, wrapped_distance


def test_wrapped_distance_range_and_seam():
    # Arrange
    theta = np.linspace(-math.pi, math.pi, 1001)

    # Act
    d = wrapped_distance(theta, 3.0)

    # Assert
    assert np.all((d >= 0.0) & (d <= math.pi))
    assert wrapped_distance(3.0, 3.0) == 0.0
    # Continuous across +/- pi
    left = wrapped_distance(math.pi - 1e-9, 3.0)
    right = wrapped_distance(-math.pi + 1e-9, 3.0)
    assert abs(left - right) <= 1e-8
    assert wrapped_distance(-3.0, 3.0) == pytest.approx(2 * math.pi - 6.0)


def test_r_star_at_tip(one_tip_star):
    assert r_star(0.0, one_tip_star) == pytest.approx(0.7)


def test_r_star_hand_value(one_tip_star):
    # d^(1/3) = 0.6
    assert r_star(0.216, one_tip_star) == pytest.approx(0.427215, abs=1e-6)


def test_r_star_fast_decay_approaches_base_radius():
    # Arrange
    params = StarParams(
        r0=0.4,
        tips=(StarTip(0.0, 0.3, 1e4, Exponent(1, 2)),),
        sharpness=25.0,
    )

    # Act & Assert
    assert r_star(1.0, params) == pytest.approx(0.4, abs=1e-12)


def test_r_star_is_periodic(five_tip_star, rng):
    # Arrange
    theta = rng.uniform(-math.pi, math.pi, 500)
    # The cusp amplifies roundoff right at a tip
    near_tip = np.zeros_like(theta, dtype=bool)
    for tip in five_tip_star.tips:
        near_tip |= wrapped_distance(theta, tip.theta) < 0.05
    theta = theta[~near_tip]

    # Act
    shifted = r_star(theta + 2 * math.pi, five_tip_star)

    # Assert
    np.testing.assert_allclose(
        shifted, r_star(theta, five_tip_star), atol=1e-14
    )


def test_level_fn_vanishes_on_the_contour(one_tip_star):
    # Arrange
    theta = 0.9
    radius = r_star(theta, one_tip_star)
    x, y = radius * math.cos(theta), radius * math.sin(theta)

    # Act
    value = level_fn(x, y, one_tip_star, exact_profile(one_tip_star))

    # Assert
    assert value == pytest.approx(0.0, abs=1e-12)


def test_level_fn_at_origin_is_inside(one_tip_star):
    # Act
    value = level_fn(0.0, 0.0, one_tip_star, exact_profile(one_tip_star))

    # Assert
    expected = math.tanh(25.0 * r_star(0.0, one_tip_star))
    assert value == pytest.approx(expected)
    assert value > 0


def test_level_fn_sign_and_bounds(five_tip_star):
    # Arrange
    axis = np.linspace(-1.0, 1.0, 81)
    x, y = np.meshgrid(axis, axis)
    radius = np.hypot(x, y)

    # Act
    values = level_fn(x, y, five_tip_star, exact_profile(five_tip_star))

    # Assert
    assert np.all(np.abs(values) <= 1.0)
    assert np.all(values[radius < five_tip_star.r0] > 0)
    assert np.all(values[radius > five_tip_star.max_radius] < 0)


def test_large_sharpness_saturates(one_tip_star):
    # Arrange
    sharp = StarParams(one_tip_star.r0, one_tip_star.tips, 1e6)

    # Act
    inside = level_fn(0.1, 0.0, sharp, exact_profile(sharp))
    outside = level_fn(0.9, 0.0, sharp, exact_profile(sharp))

    # Assert
    assert inside == pytest.approx(1.0)
    assert outside == pytest.approx(-1.0)
