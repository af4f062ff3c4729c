"""Number-partitioning reduction: adversarial instances with known optima.

A multiset of positive integers Y with half-sum B maps to an instance whose
best possible lifetime 8B is reachable exactly when Y splits into two halves
of equal sum.  Given such a split, the corresponding schedule is explicit:
one half works the middle third alongside the two boundary sensors, then the
other half covers everything alone.  This makes the construction a generator
of hard test instances with certified-optimal schedules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ZERO, Instance, Schedule

SIXTH = Fraction(1, 6)
HALF = Fraction(1, 2)


@dataclass(frozen=True, init=False)
class PartitionInput:
    values: tuple[int, ...]

    def __init__(self, values: Sequence[int]) -> None:
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("need at least one value")
        if any(v <= 0 for v in vals):
            raise ValueError("values must be positive integers")
        object.__setattr__(self, "values", vals)

    @property
    def half_sum(self) -> Fraction:
        return Fraction(sum(self.values), 2)


def partition_to_instance(p: PartitionInput) -> Instance:
    """Sensors: battery B at 1/6, one battery y_i at 1/2 per value, B at 5/6."""
    B = p.half_sum
    n = len(p.values)
    locations = [SIXTH] + [HALF] * n + [Fraction(5, 6)]
    batteries = [B] + [Fraction(v) for v in p.values] + [B]
    return Instance(locations, batteries)


def certificate_to_schedule(
    p: PartitionInput,
    split: tuple[Sequence[int], Sequence[int]],
) -> Schedule:
    """Schedule realizing lifetime 8B from a balanced split (0-based indices).

    First phase: the boundary sensors and the first half, all with radius
    1/6, cover [0, 1] for 6B.  Second phase: the other half, radius 1/2,
    covers alone for another 2B.
    """
    first, second = (sorted(set(part)) for part in split)
    n = len(p.values)
    if sorted(first + second) != list(range(n)):
        raise ValueError("split must partition the value indices exactly")
    sum_first = sum(p.values[i] for i in first)
    sum_second = sum(p.values[i] for i in second)
    if sum_first != sum_second:
        raise ValueError(f"unbalanced split: sums {sum_first} and {sum_second} differ")

    B = p.half_sum
    radii = [ZERO] * (n + 2)
    activations = [ZERO] * (n + 2)
    radii[0] = radii[n + 1] = SIXTH

    clock = ZERO
    for i in first:
        radii[i + 1] = SIXTH
        activations[i + 1] = clock
        clock += 6 * p.values[i]
    clock = 6 * B
    for i in second:
        radii[i + 1] = HALF
        activations[i + 1] = clock
        clock += 2 * p.values[i]
    return Schedule(radii, activations)
