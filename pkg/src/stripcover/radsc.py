"""Exact solver for the all-sensors-start-at-zero variant.

With every activation time pinned to 0 a solution is just a radial
assignment, and the optimal lifetime is always of the form
(b_i + b_k) / (x_k - x_i) for a pair of sensors drawn from the instance
augmented with two zero-battery dummies at the endpoints 0 and 1.  That
gives O(n^2) candidate lifetimes; feasibility of a candidate T is a single
sweep with radii b/T, and feasibility is monotone (anything below a feasible
T is feasible), so a binary search over the sorted candidates finds the
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ZERO, ONE, Instance, RadialAssignment, as_rational, covers


class InfeasibleInstanceError(ValueError):
    """No positive lifetime is achievable (for example, all batteries zero)."""


@dataclass(frozen=True)
class AugmentedInstance:
    """Instance plus dummy sensors: index 0 at location 0 and index n+1 at 1.

    The dummies carry zero battery.  They only serve as pair endpoints when
    candidate lifetimes are generated; they never contribute coverage.
    """

    base: Instance

    @property
    def locations(self) -> tuple[Fraction, ...]:
        return (ZERO,) + self.base.locations + (ONE,)

    @property
    def batteries(self) -> tuple[Fraction, ...]:
        return (ZERO,) + self.base.batteries + (ZERO,)


@dataclass(frozen=True)
class CandidateLifetime:
    value: Fraction
    pair: tuple[int, int]  # augmented indices, 0 and n+1 being the dummies


@dataclass(frozen=True)
class RadscSolution:
    lifetime: Fraction
    assignment: RadialAssignment
    witness_pair: tuple[int, int]


def candidate_lifetimes(inst: Instance) -> list[CandidateLifetime]:
    """All pair candidates (b_i + b_k) / (x_k - x_i), ascending, deduplicated.

    Pairs at equal locations are skipped (the formula needs x_i < x_k), as
    are zero-valued candidates from two zero-battery sensors.  When several
    pairs tie, the lexicographically first pair is kept as the witness.
    """
    aug = AugmentedInstance(inst)
    xs, bs = aug.locations, aug.batteries
    first_witness: dict[Fraction, tuple[int, int]] = {}
    m = len(xs)
    for i in range(m):
        for k in range(i + 1, m):
            if xs[i] == xs[k]:
                continue
            value = (bs[i] + bs[k]) / (xs[k] - xs[i])
            if value == 0:
                continue
            if value not in first_witness:
                first_witness[value] = (i, k)
    return [CandidateLifetime(v, first_witness[v]) for v in sorted(first_witness)]


def is_feasible(inst: Instance, lifetime) -> bool:
    """Can the radii b_i / lifetime cover [0, 1]?  Exact one-pass sweep."""
    lifetime = as_rational(lifetime)
    if lifetime <= 0:
        raise ValueError(f"lifetime must be positive, got {lifetime}")
    intervals = [
        (x - b / lifetime, x + b / lifetime)
        for x, b in zip(inst.locations, inst.batteries)
        if b > 0
    ]
    return covers(intervals)


def solve(inst: Instance) -> RadscSolution:
    """Maximum-lifetime radial assignment, by binary search over candidates."""
    if inst.n == 1:
        b = inst.batteries[0]
        if b == 0:
            raise InfeasibleInstanceError("single sensor with empty battery")
        x = inst.locations[0]
        r = max(x, 1 - x)
        pair = (0, 1) if x >= 1 - x else (1, 2)
        return RadscSolution(b / r, RadialAssignment([r]), pair)

    cands = candidate_lifetimes(inst)
    if cands and is_feasible(inst, cands[-1].value):
        best = cands[-1]
    else:
        best = None
        lo, hi = 0, len(cands) - 2
        while lo <= hi:
            mid = (lo + hi) // 2
            if is_feasible(inst, cands[mid].value):
                best = cands[mid]
                lo = mid + 1
            else:
                hi = mid - 1
    if best is None:
        raise InfeasibleInstanceError("no candidate lifetime is feasible")
    radii = [b / best.value for b in inst.batteries]
    return RadscSolution(best.value, RadialAssignment(radii), best.pair)


def make_proper(inst: Instance, lifetime) -> RadialAssignment:
    """Greedy properization of the assignment b / lifetime.

    Walks the sensors in ascending index order and zeroes each radius that
    is not needed to keep [0, 1] covered.  Every surviving sensor therefore
    covers some point no other active sensor reaches, and every radius is
    either 0 or exactly b_i / lifetime.
    """
    lifetime = as_rational(lifetime)
    if not is_feasible(inst, lifetime):
        raise InfeasibleInstanceError(f"assignment b/T is not feasible at lifetime {lifetime}")
    radii = [b / lifetime for b in inst.batteries]
    for i in range(inst.n):
        if radii[i] == 0:
            continue
        kept = radii[i]
        radii[i] = ZERO
        intervals = [
            (x - r, x + r) for x, r in zip(inst.locations, radii) if r > 0
        ]
        if not covers(intervals):
            radii[i] = kept
    return RadialAssignment(radii)
