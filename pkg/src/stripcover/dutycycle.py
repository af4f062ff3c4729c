"""Duty-cycle schedules: shifts of sensors cover [0, 1] one after another.

A shift's best simultaneous lifetime is exactly the all-start-at-zero optimum
of its sub-instance, so a duty-cycle schedule is scored by solving each shift
and summing.  `best_partition` searches all set partitions exhaustively
(Bell-number many), caching per-subset lifetimes since the same shift shows
up in many partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import ZERO, Instance, Schedule
from .radsc import InfeasibleInstanceError, solve

Shifts = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, init=False)
class ShiftPartition:
    """Ordered disjoint nonempty groups of sensor indices (0-based).

    The order fixes the activation sequence.  Completeness against a
    particular instance is checked when the partition is evaluated.
    """

    shifts: Shifts

    def __init__(self, shifts: Iterable[Iterable[int]]) -> None:
        normalized = tuple(tuple(sorted(shift)) for shift in shifts)
        seen: set[int] = set()
        for shift in normalized:
            if not shift:
                raise ValueError("empty shift")
            for i in shift:
                if i in seen:
                    raise ValueError(f"sensor {i} appears in more than one shift")
                seen.add(i)
        object.__setattr__(self, "shifts", normalized)

    def canonical(self) -> "ShiftPartition":
        """Shifts reordered by smallest member; the total lifetime is unchanged."""
        return ShiftPartition(sorted(self.shifts, key=lambda s: s[0]))


@dataclass(frozen=True)
class DutyCycleResult:
    partition: ShiftPartition
    shift_lifetimes: tuple[Fraction, ...]
    total: Fraction
    schedule: Schedule


def shift_lifetime(inst: Instance, shift: Iterable[int]) -> Fraction:
    """Best lifetime of the shift working alone; 0 if it cannot cover [0, 1].

    Only a shift whose batteries are all zero is infeasible: any sensor with
    charge can cover [0, 1] briefly with radius max(x, 1 - x).
    """
    sub = inst.restrict(shift)
    try:
        return solve(sub).lifetime
    except InfeasibleInstanceError:
        return ZERO


def evaluate_partition(inst: Instance, partition: ShiftPartition) -> DutyCycleResult:
    """Score a partition and assemble the schedule realizing that score.

    Shift s starts when shift s-1 ends; within a shift every sensor gets
    radius b_i / T_s, so the whole shift dies together and hands off exactly.
    """
    covered = sorted(i for shift in partition.shifts for i in shift)
    if covered != list(range(inst.n)):
        raise ValueError("partition does not cover every sensor exactly once")
    radii = [ZERO] * inst.n
    activations = [ZERO] * inst.n
    lifetimes = []
    clock = ZERO
    for shift in partition.shifts:
        t = shift_lifetime(inst, shift)
        lifetimes.append(t)
        for i in shift:
            activations[i] = clock
            if t > 0 and inst.batteries[i] > 0:
                radii[i] = inst.batteries[i] / t
        clock += t
    return DutyCycleResult(partition, tuple(lifetimes), clock, Schedule(radii, activations))


def iter_set_partitions(n: int) -> Iterator[Shifts]:
    """All set partitions of {0..n-1}, blocks ordered by smallest member."""
    blocks: list[list[int]] = []

    def extend(i: int) -> Iterator[Shifts]:
        if i == n:
            yield tuple(tuple(block) for block in blocks)
            return
        for block in blocks:
            block.append(i)
            yield from extend(i + 1)
            block.pop()
        blocks.append([i])
        yield from extend(i + 1)
        blocks.pop()

    return extend(0)


def best_partition(inst: Instance, n_limit: int = 10) -> DutyCycleResult:
    """Exhaustive best duty-cycle schedule over all set partitions.

    Ties are broken toward the lexicographically smallest canonical
    partition, so the result is deterministic however the search is run.
    """
    n = inst.n
    if n > n_limit:
        raise ValueError(f"{n} sensors exceeds the enumeration limit {n_limit}")
    cache: dict[tuple[int, ...], Fraction] = {}

    def cached(shift: tuple[int, ...]) -> Fraction:
        if shift not in cache:
            cache[shift] = shift_lifetime(inst, shift)
        return cache[shift]

    best_shifts: Shifts | None = None
    best_total = Fraction(-1)
    for shifts in iter_set_partitions(n):
        total = sum((cached(shift) for shift in shifts), ZERO)
        if total > best_total or (total == best_total and shifts < best_shifts):
            best_total = total
            best_shifts = shifts
    assert best_shifts is not None
    return evaluate_partition(inst, ShiftPartition(best_shifts))
