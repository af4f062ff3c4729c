import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIG_TWO
from stripcover.core import Instance, evaluate_lifetime, max_lifetime_bound
from stripcover.radsc import (
    InfeasibleInstanceError,
    candidate_lifetimes,
    is_feasible,
    make_proper,
    solve,
)


def oracle_lifetime(inst):
    """Independent check: linear scan of every pair candidate."""
    feasible = [c.value for c in candidate_lifetimes(inst) if is_feasible(inst, c.value)]
    return max(feasible) if feasible else None


def test_candidates_two_sensors():
    cands = candidate_lifetimes(FIG_TWO)
    assert [c.value for c in cands] == [F(4, 3), F(4)]
    assert cands[0].pair == (0, 2)  # dummy at 0 with the far sensor
    assert cands[1].pair == (0, 1)  # first of the pairs tying at 4


def test_candidates_single_and_colocated():
    single = candidate_lifetimes(Instance([F(1, 2)], [1]))
    assert [c.value for c in single] == [2]
    assert single[0].pair == (0, 1)

    colocated = candidate_lifetimes(Instance([F(1, 2), F(1, 2)], [1, 1]))
    assert [c.value for c in colocated] == [2]
    assert colocated[0].pair == (0, 1)  # the co-located real pair generates nothing


def test_is_feasible_examples():
    assert is_feasible(FIG_TWO, 4)
    assert not is_feasible(FIG_TWO, 5)
    assert is_feasible(Instance([F(1, 2)], [1]), 2)
    with pytest.raises(ValueError):
        is_feasible(FIG_TWO, 0)


def test_solve_two_sensors():
    solution = solve(FIG_TWO)
    assert solution.lifetime == 4
    assert solution.assignment.radii == (F(1, 4), F(1, 4))
    assert evaluate_lifetime(FIG_TWO, solution.assignment.as_schedule()) == 4


def test_solve_single_sensor_shortcut():
    solution = solve(Instance([F(1, 2)], [3]))
    assert solution.lifetime == 6
    assert solution.assignment.radii == (F(1, 2),)

    off_center = solve(Instance([F(1, 4)], [3]))
    assert off_center.lifetime == 4
    assert off_center.assignment.radii == (F(3, 4),)
    assert off_center.witness_pair == (1, 2)


def test_solve_three_sensors():
    # Max feasible candidate is (5+3)/(1/2 - 1/6) = 24: the radii 5/24, 1/8,
    # 5/24 abut exactly.  The next candidate up, 30, strands (1/3, 2/5).
    inst = Instance([F(1, 6), F(1, 2), F(5, 6)], [5, 3, 5])
    solution = solve(inst)
    assert solution.lifetime == 24
    assert solution.assignment.radii == (F(5, 24), F(1, 8), F(5, 24))
    assert oracle_lifetime(inst) == 24
    assert not is_feasible(inst, 30)


def test_solve_infeasible():
    with pytest.raises(InfeasibleInstanceError):
        solve(Instance([F(1, 2)], [0]))
    with pytest.raises(InfeasibleInstanceError):
        solve(Instance([F(1, 4), F(3, 4)], [0, 0]))


def test_zero_battery_sensors_still_shape_candidates():
    inst = Instance([0, 1], [0, 5])
    solution = solve(inst)
    assert solution.lifetime == 5  # reach the far endpoint: 5 / (1 - 0)


def test_make_proper_examples():
    pinched = Instance([F(1, 4), F(1, 2), F(3, 4)], [1, 2, 1])
    assert make_proper(pinched, 4).radii == (0, F(1, 2), 0)
    assert make_proper(FIG_TWO, 4).radii == (F(1, 4), F(1, 4))
    assert make_proper(Instance([F(1, 2)], [1]), 2).radii == (F(1, 2),)
    with pytest.raises(InfeasibleInstanceError):
        make_proper(FIG_TWO, 5)


@st.composite
def instances(draw):
    n = draw(st.integers(1, 6))
    locs = [F(draw(st.integers(0, 24)), 24) for _ in range(n)]
    bats = [F(draw(st.integers(0, 9))) for _ in range(n)]
    return Instance(locs, bats)


@st.composite
def chargeable_instances(draw):
    inst = draw(instances())
    if inst.total_battery == 0:
        inst = Instance(inst.locations, [b + 1 for b in inst.batteries])
    return inst


@given(chargeable_instances())
@settings(max_examples=80, deadline=None)
def test_solver_matches_linear_scan(inst):
    assert solve(inst).lifetime == oracle_lifetime(inst)


@given(chargeable_instances(), st.integers(1, 999))
@settings(max_examples=80, deadline=None)
def test_feasibility_is_monotone(inst, thousandths):
    lifetime = solve(inst).lifetime
    assert is_feasible(inst, lifetime)
    assert is_feasible(inst, lifetime * F(thousandths, 1000))


@given(chargeable_instances())
@settings(max_examples=80, deadline=None)
def test_solution_bounds_and_proper_schedule(inst):
    solution = solve(inst)
    assert solution.lifetime <= max_lifetime_bound(inst)
    proper = make_proper(inst, solution.lifetime)
    lifetime = evaluate_lifetime(inst, proper.as_schedule())
    assert lifetime >= solution.lifetime


@given(chargeable_instances())
@settings(max_examples=80, deadline=None)
def test_optimal_proper_assignment_has_a_tight_neighbor_pair(inst):
    # At the optimum some neighboring pair of active sensors (the endpoint
    # dummies included) has radii summing exactly to the distance between
    # them; otherwise every radius could shrink and the lifetime grow.
    solution = solve(inst)
    proper = make_proper(inst, solution.lifetime)
    chain = [(F(0), F(0))]
    chain += [(x, r) for x, r in zip(inst.locations, proper.radii) if r > 0]
    chain += [(F(1), F(0))]
    assert any(
        r1 + r2 == x2 - x1 for (x1, r1), (x2, r2) in zip(chain, chain[1:])
    )


def test_seeded_bulk_oracle_agreement():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(1, 12)
        inst = Instance(
            [F(rng.randint(0, 960), 960) for _ in range(n)],
            [F(rng.randint(1, 9)) for _ in range(n)],
        )
        assert solve(inst).lifetime == oracle_lifetime(inst)
