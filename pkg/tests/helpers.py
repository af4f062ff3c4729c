"""Seeded builders for instances and feasible schedules used across the suite."""

from __future__ import annotations

import random
from fractions import Fraction

from stripcover.cli import random_instance
from stripcover.core import Instance, Schedule
from stripcover.dutycycle import ShiftPartition, evaluate_partition
from stripcover.radsc import solve
from stripcover.reductions import PartitionInput, certificate_to_schedule, partition_to_instance


def radsc_case(rng: random.Random) -> tuple[Instance, Schedule]:
    inst = random_instance(rng, rng.randint(1, 6), battery_max=6)
    return inst, solve(inst).assignment.as_schedule()


def duty_case(rng: random.Random) -> tuple[Instance, Schedule]:
    n = rng.randint(1, 5)
    inst = random_instance(rng, n, battery_max=6)
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(rng.randrange(n), []).append(i)
    partition = ShiftPartition(blocks.values()).canonical()
    return inst, evaluate_partition(inst, partition).schedule


def certificate_case(rng: random.Random) -> tuple[Instance, Schedule]:
    half = [rng.randint(1, 6) for _ in range(rng.randint(1, 4))]
    values = half + half
    p = PartitionInput(values)
    split = (list(range(len(half))), list(range(len(half), len(values))))
    return partition_to_instance(p), certificate_to_schedule(p, split)


SCHEDULE_BUILDERS = (radsc_case, duty_case, certificate_case)


def feasible_case(rng: random.Random, index: int) -> tuple[Instance, Schedule]:
    """Deterministic mix of solver, duty-cycle and certificate schedules."""
    return SCHEDULE_BUILDERS[index % len(SCHEDULE_BUILDERS)](rng)


FIG_TWO = Instance([Fraction(1, 4), Fraction(3, 4)], [1, 1])
FIG_TWO_OPT = Schedule([Fraction(1, 4), Fraction(1, 4)], [0, 0])

DUTY_WITNESS = Instance([Fraction(1, 4), Fraction(3, 4), Fraction(3, 4)], [2, 1, 1])
DUTY_WITNESS_OPT = Schedule([Fraction(1, 4)] * 3, [0, 0, 4])
