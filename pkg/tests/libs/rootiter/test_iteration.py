import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.libs.rootiter import (
    UNIT_SLACK,
    CountingScalar,
    Exponent,
    InnerState,
    InvalidExponentError,
    OpCounter,
    OutOfUnitIntervalError,
    basin_entry,
    inner_step,
    ipow,
    iterate,
    phi,
    sup_phi_error,
    trace,
)


def test_exponent_is_reduced():
    # Act
    exp = Exponent(2, 4)

    # Assert
    assert (exp.r, exp.s) == (1, 2)
    assert exp.alpha == 0.5
    assert str(exp) == "1/2"
    assert Exponent.from_dict(exp.to_dict()) == exp


@pytest.mark.parametrize("r, s", [(0, 3), (3, 3), (4, 3), (-1, 2), (1, 1)])
def test_exponent_outside_unit_interval_is_rejected(r, s):
    with pytest.raises(InvalidExponentError):
        Exponent(r, s)


@pytest.mark.parametrize("n", range(1, 10))
def test_ipow_matches_power(n):
    assert ipow(0.93, n) == pytest.approx(0.93**n, rel=1e-14)


def test_t_equal_one_is_a_fixed_point():
    # Arrange
    exp = Exponent(1, 2)
    state = InnerState.initial(1.0, exp)

    # Act
    state = inner_step(state, 1.0, exp)

    # Assert
    assert (state.g, state.y, state.k) == (1.0, 0.5, 1)


def test_hand_iterated_steps_at_zero():
    # Arrange
    exp = Exponent(1, 2)

    # Act
    first = inner_step(InnerState.initial(0.0, exp), 0.0, exp)
    second = inner_step(first, 0.0, exp)

    # Assert
    assert (first.g, first.y) == (0.5, 0.5)
    assert (second.g, second.y) == (0.3125, 0.75)


def test_hand_iterated_step_at_quarter():
    # Arrange
    exp = Exponent(1, 2)
    state = InnerState(g=0.625, y=0.5, k=1)

    # Act
    state = inner_step(state, 0.25, exp)

    # Assert
    assert state.y == pytest.approx(0.6875, abs=1e-15)
    assert state.g == pytest.approx(0.5283203125, abs=1e-15)


def test_phi_examples():
    assert phi(1.0, Exponent(2, 5), 7) == 1.0
    assert phi(0.25, Exponent(1, 2), 20) == pytest.approx(0.5, abs=1e-10)
    assert phi(0.5, Exponent(1, 3), 25) == pytest.approx(
        0.5 ** (1 / 3), abs=1e-9
    )


def test_phi_with_zero_steps_is_one():
    np.testing.assert_array_equal(
        phi(np.array([0.0, 0.3]), Exponent(1, 4), 0), [1.0, 1.0]
    )


def test_phi_on_arrays_matches_scalars():
    # Arrange
    exp = Exponent(2, 3)
    t = np.linspace(0.0, 1.0, 9)

    # Act
    values = phi(t, exp, 12)

    # Assert
    expected = [phi(float(v), exp, 12) for v in t]
    np.testing.assert_array_equal(values, expected)


def test_roundoff_outside_unit_interval_is_tolerated():
    assert phi(-0.5 * UNIT_SLACK, Exponent(1, 2), 3) >= 0.0
    assert phi(1.0 + 0.5 * UNIT_SLACK, Exponent(1, 2), 3) > 0.0


@pytest.mark.parametrize("t", [-0.1, 1.5, np.array([0.2, 1.01])])
def test_argument_outside_unit_interval_is_rejected(t):
    with pytest.raises(OutOfUnitIntervalError):
        phi(t, Exponent(1, 3), 4)


def test_negative_step_count_is_rejected():
    with pytest.raises(ValueError):
        iterate(0.5, Exponent(1, 2), -1)


def test_production_path_never_divides():
    # Arrange
    counter = OpCounter()
    t = CountingScalar(0.37, counter)

    # Act
    value = phi(t, Exponent(2, 5), 12)
    state = inner_step(InnerState.initial(0.37, Exponent(1, 3)), t,
                       Exponent(1, 3))

    # Assert
    assert counter.divisions == 0
    assert counter.powers == 0
    assert counter.additions > 0
    assert float(value) == pytest.approx(0.37**0.4, abs=1e-9)
    assert float(state.g) < 1.0


def test_trace_at_one_has_no_error():
    # Act
    tr = trace(1.0, Exponent(1, 3), 10)

    # Assert
    assert len(tr.rows) == 11
    assert all(row.e == 0.0 and row.delta == 0.0 for row in tr.rows)


def test_trace_delta_squares_at_quarter():
    # Act
    tr = trace(0.25, Exponent(1, 2), 3)
    g1, y2 = tr.rows[1].g, tr.rows[2].y

    # Assert
    assert tr.rows[0].delta == 0.0
    assert tr.rows[1].delta == pytest.approx(0.375, abs=1e-15)
    assert 1 - 2 * g1 * y2 == pytest.approx(0.140625, abs=1e-15)
    assert tr.identity_residuals()[1] == pytest.approx(0.0, abs=1e-15)


def test_trace_reaches_quadratic_basin():
    # Act
    tr = trace(0.81, Exponent(1, 2), 8)

    # Assert
    assert abs(tr.rows[8].e) <= 1e-12
    assert tr.to_records()[0] == {
        "k": 0, "g": 1.0, "y": 0.5, "delta": 0.0, "e": pytest.approx(0.1)
    }


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_identity_and_squeeze_on_random_sample(s, rng):
    # Arrange
    exp = Exponent(1, s)
    t = np.concatenate([[0.0, 1.0], rng.uniform(0.0, 1.0, 2498)])
    u = t ** (1.0 / s)
    state = InnerState.initial(t, exp)

    for _ in range(21):
        # Act
        nxt = inner_step(state, t, exp)
        z = s * state.g ** (s - 1) * state.y
        lhs = 1.0 - s * state.g ** (s - 1) * nxt.y

        # Assert
        assert np.max(np.abs(lhs - (1.0 - z) ** 2)) <= 1e-12
        assert np.all(u - 1e-12 <= nxt.g)
        assert np.all(nxt.g <= state.g + 1e-15)
        assert np.all(state.g + 1e-15 <= 1.0 + 1e-15)
        positive = state.g > 0
        assert np.all((z[positive] > 0) & (z[positive] < 2.0 + 1e-12))
        state = nxt


@settings(max_examples=200, deadline=None)
@given(
    t=st.floats(min_value=0.0, max_value=1.0),
    s=st.integers(min_value=2, max_value=5),
    k_max=st.integers(min_value=0, max_value=20),
)
def test_trace_invariants_hold_for_any_argument(t, s, k_max):
    # Act
    tr = trace(t, Exponent(1, s), k_max)

    # Assert
    assert all(abs(r) <= 1e-12 for r in tr.identity_residuals())
    assert tr.squeeze_violations() == []


@pytest.mark.parametrize("t", [0.0, 0.05, 0.3, 0.9])
def test_root_power_is_lipschitz_along_the_trace(t):
    # Arrange
    exp = Exponent(3, 5)
    tr = trace(t, exp, 25)
    u = tr.root

    for row in tr.rows:
        # Assert
        lift = abs(row.g**exp.r - u**exp.r)
        assert lift <= exp.r * abs(row.g - u) + 1e-12


def test_quadratic_convergence_in_basin():
    for t in np.linspace(0.1, 1.0, 19):
        # Act
        constant = trace(float(t), Exponent(1, 2), 30).quadratic_constant()

        # Assert
        assert constant is None or constant <= 50.0


def test_sup_error_away_from_zero_reaches_roundoff():
    # Arrange
    exp = Exponent(1, 2)

    # Act
    errors = [sup_phi_error(exp, k, 0.1, 401) for k in range(41)]

    # Assert
    assert min(errors) <= 1e-10
    assert errors[40] <= 1e-12
    before_floor = [e for e in errors if e > 1e-12]
    assert all(b < a for a, b in zip(before_floor, before_floor[1:]))
    # Differences of log error only steepen once in the basin
    basin = [e for e in before_floor if e <= 0.1]
    steps = np.diff(np.log(basin))
    assert np.all(np.diff(steps) <= 1e-9)


def test_sup_error_at_one_with_no_steps():
    assert sup_phi_error(Exponent(1, 2), 0, 1.0, 1) == 0.0


def test_sup_error_decreases_before_floor():
    # Arrange
    exp = Exponent(2, 3)

    # Act
    errors = [sup_phi_error(exp, k, 0.2, 401) for k in range(2, 13)]

    # Assert
    before_floor = [e for e in errors if e > 1e-13]
    assert len(before_floor) >= 3
    assert all(b < a for a, b in zip(before_floor, before_floor[1:]))

def test_basin_entry_is_first_step_below_threshold():
    # Arrange
    exp = Exponent(1, 2)

    # Act
    k = basin_entry(exp, 0.1, 1e-3, 40)

    # Assert
    assert k is not None and k > 0
    t = np.linspace(0.1, 1.0, 1001)
    u = np.sqrt(t)
    assert np.max(np.abs(iterate(t, exp, k).g - u)) <= 1e-3
    assert np.max(np.abs(iterate(t, exp, k - 1).g - u)) > 1e-3


def test_basin_entry_not_reached():
    assert basin_entry(Exponent(1, 3), 0.001, 1e-14, 2) is None


def test_exponent_rational_alpha_matches_fraction():
    assert Exponent(3, 9).alpha == pytest.approx(1 / 3)
    assert math.isclose(Exponent(4, 10).inv_s, 0.2)
