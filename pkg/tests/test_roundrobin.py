from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import DUTY_WITNESS, FIG_TWO
from stripcover.core import Instance, evaluate_lifetime
from stripcover.roundrobin import round_robin, rr_prime, solo_radius


@pytest.mark.parametrize(
    "x,expected",
    [(F(1, 4), F(3, 4)), (F(1, 2), F(1, 2)), (F(25, 24), F(25, 24)), (F(-1, 24), F(25, 24))],
)
def test_solo_radius(x, expected):
    assert solo_radius(x) == expected


def test_round_robin_two_sensors():
    result = round_robin(FIG_TWO)
    assert result.lifetime == F(8, 3)
    assert result.schedule.radii == (F(3, 4), F(3, 4))
    assert result.schedule.activations == (0, F(4, 3))
    assert result.per_sensor_radii == (F(3, 4), F(3, 4))
    assert evaluate_lifetime(FIG_TWO, result.schedule) == F(8, 3)


def test_round_robin_single_sensor():
    result = round_robin(Instance([F(1, 2)], [1]))
    assert result.lifetime == 2
    assert result.schedule.radii == (F(1, 2),)
    assert result.schedule.activations == (F(0),)


def test_round_robin_duty_witness():
    result = round_robin(DUTY_WITNESS)
    assert result.lifetime == F(16, 3)
    assert evaluate_lifetime(DUTY_WITNESS, result.schedule) == F(16, 3)


def test_round_robin_skips_empty_batteries():
    inst = Instance([0, F(1, 4), F(3, 4)], [0, 1, 1])
    result = round_robin(inst)
    assert result.lifetime == F(8, 3)
    assert result.schedule.radii[0] == 0
    assert evaluate_lifetime(inst, result.schedule) == F(8, 3)


def test_round_robin_all_batteries_empty():
    result = round_robin(Instance([F(1, 2)], [0]))
    assert result.lifetime == 0
    assert result.rr_prime == 0


def test_rotation_order_does_not_change_lifetime():
    for order in ([2, 0, 1], [1, 2, 0], [2, 1, 0]):
        result = round_robin(DUTY_WITNESS, order=order)
        assert result.lifetime == F(16, 3)
        assert evaluate_lifetime(DUTY_WITNESS, result.schedule) == F(16, 3)
    with pytest.raises(ValueError):
        round_robin(DUTY_WITNESS, order=[0, 0, 1])


def test_rr_prime_examples():
    assert rr_prime(FIG_TWO) == F(8, 3)  # all solo radii equal, so the bound is tight
    assert rr_prime(Instance([F(1, 2)], [5])) == 10
    uneven = Instance([F(1, 4), F(1, 2)], [1, 1])
    assert rr_prime(uneven) == F(16, 5)
    assert round_robin(uneven).lifetime == F(10, 3)


def test_rr_prime_rejects_zero_battery_total():
    with pytest.raises(ValueError, match="total battery"):
        rr_prime(Instance([F(1, 2)], [0]))


def test_rr_prime_equality_iff_equal_solo_radii():
    tight = round_robin(FIG_TWO)
    assert tight.rr_prime == tight.lifetime
    # A drained sensor with a different solo radius does not break tightness.
    padded = round_robin(Instance([0, F(1, 4), F(3, 4)], [0, 1, 1]))
    assert padded.rr_prime == padded.lifetime
    loose = round_robin(Instance([F(1, 4), F(1, 2)], [1, 1]))
    assert loose.rr_prime < loose.lifetime


@st.composite
def instances(draw):
    n = draw(st.integers(1, 6))
    locs = [F(draw(st.integers(0, 24)), 24) for _ in range(n)]
    bats = [F(draw(st.integers(1, 9))) for _ in range(n)]
    return Instance(locs, bats)


@given(instances())
@settings(max_examples=100, deadline=None)
def test_lower_bound_and_battery_sandwich(inst):
    result = round_robin(inst)
    assert result.rr_prime <= result.lifetime
    assert result.lifetime >= inst.total_battery  # every solo radius is at most 1
    solos = {solo_radius(x) for x, b in zip(inst.locations, inst.batteries) if b > 0}
    assert (result.rr_prime == result.lifetime) == (len(solos) == 1)


@given(instances())
@settings(max_examples=60, deadline=None)
def test_verifier_confirms_round_robin(inst):
    result = round_robin(inst)
    assert evaluate_lifetime(inst, result.schedule) == result.lifetime
