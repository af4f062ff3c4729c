from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import DUTY_WITNESS, FIG_TWO
from stripcover.core import Instance, evaluate_lifetime, max_lifetime_bound
from stripcover.dutycycle import (
    ShiftPartition,
    best_partition,
    evaluate_partition,
    iter_set_partitions,
    shift_lifetime,
)
from stripcover.roundrobin import round_robin


def test_shift_partition_validation():
    with pytest.raises(ValueError, match="empty"):
        ShiftPartition([[0], []])
    with pytest.raises(ValueError, match="more than one"):
        ShiftPartition([[0, 1], [1]])
    p = ShiftPartition([[2], [0, 1]])
    assert p.shifts == ((2,), (0, 1))
    assert p.canonical().shifts == ((0, 1), (2,))


def test_shift_lifetime_examples():
    assert shift_lifetime(FIG_TWO, [0]) == F(4, 3)
    assert shift_lifetime(FIG_TWO, [0, 1]) == 4
    # Two co-located sensors at 3/4: each endpoint pull forces radius 3/4.
    assert shift_lifetime(DUTY_WITNESS, [1, 2]) == F(4, 3)
    assert shift_lifetime(Instance([F(1, 2)], [0]), [0]) == 0


def test_evaluate_partition_witness():
    result = evaluate_partition(DUTY_WITNESS, ShiftPartition([[0, 1], [2]]))
    assert result.total == F(16, 3)
    assert result.shift_lifetimes == (4, F(4, 3))
    assert evaluate_lifetime(DUTY_WITNESS, result.schedule) == F(16, 3)


def test_singleton_partition_is_round_robin():
    singletons = ShiftPartition([[i] for i in range(DUTY_WITNESS.n)])
    result = evaluate_partition(DUTY_WITNESS, singletons)
    assert result.total == round_robin(DUTY_WITNESS).lifetime


def test_evaluate_partition_whole_instance():
    result = evaluate_partition(FIG_TWO, ShiftPartition([[0, 1]]))
    assert result.total == 4
    assert evaluate_lifetime(FIG_TWO, result.schedule) == 4


def test_evaluate_partition_requires_completeness():
    with pytest.raises(ValueError, match="every sensor"):
        evaluate_partition(FIG_TWO, ShiftPartition([[0]]))


def test_iter_set_partitions_counts_and_shape():
    bell = [1, 2, 5, 15, 52, 203]
    for n, expected in enumerate(bell, start=1):
        partitions = list(iter_set_partitions(n))
        assert len(partitions) == expected
        assert len(set(partitions)) == expected
        for shifts in partitions:
            assert sorted(i for s in shifts for i in s) == list(range(n))
            assert [s[0] for s in shifts] == sorted(s[0] for s in shifts)


def test_best_partition_examples():
    witness = best_partition(DUTY_WITNESS)
    assert witness.total == F(16, 3)
    # Three partitions tie at 16/3; the smallest canonical one wins.
    assert witness.partition.shifts == ((0,), (1,), (2,))

    assert best_partition(FIG_TWO).total == 4
    assert best_partition(FIG_TWO).partition.shifts == ((0, 1),)

    lone = Instance([F(1, 4)], [2])
    assert best_partition(lone).total == F(8, 3)


def test_best_partition_size_limit():
    inst = Instance([F(1, 2)] * 4, [1] * 4)
    with pytest.raises(ValueError, match="limit"):
        best_partition(inst, n_limit=3)


@st.composite
def instances(draw):
    n = draw(st.integers(1, 5))
    locs = [F(draw(st.integers(0, 24)), 24) for _ in range(n)]
    bats = [F(draw(st.integers(1, 6))) for _ in range(n)]
    return Instance(locs, bats)


@given(instances())
@settings(max_examples=40, deadline=None)
def test_best_partition_sandwich(inst):
    best = best_partition(inst)
    assert best.total >= round_robin(inst).lifetime
    assert best.total <= max_lifetime_bound(inst)
    assert evaluate_lifetime(inst, best.schedule) == best.total


@given(instances(), st.data())
@settings(max_examples=40, deadline=None)
def test_any_partition_schedule_verifies(inst, data):
    partitions = list(iter_set_partitions(inst.n))
    shifts = data.draw(st.sampled_from(partitions))
    result = evaluate_partition(inst, ShiftPartition(shifts))
    assert evaluate_lifetime(inst, result.schedule) == result.total
