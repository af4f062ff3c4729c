"""Strip decomposition and the unit-battery reduction pipeline.

A verified schedule is cut at its on/off events into strips: maximal time
slabs with a fixed active set.  Each strip is a small all-start-at-zero
instance in its own right, and the pipeline

    cut -> prune -> integerize -> split into unit batteries -> stretch

turns it into a unit-battery instance whose geometry (the effective gap
`delta`) determines the strip's optimal lifetime exactly as 2/delta.  Every
transformation preserves or tightens the round-robin lower bound, which is
what `analyze_schedule` certifies, strip by strip, as machine-checked
inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import radsc
from .core import (
    ONE,
    ZERO,
    Instance,
    Schedule,
    as_rational,
    coverage_lifetime,
    covers,
    evaluate_lifetime,
)
from .roundrobin import round_robin, rr_prime, rr_prime_values, solo_radius

HALF = Fraction(1, 2)


@dataclass(frozen=True, init=False)
class Strip:
    """A time slab of a schedule together with the radii active during it.

    `instance` holds the member sensors with the battery they spend inside
    the slab, which is radius * duration per member.  `indices` keeps each
    member's position in the original instance.
    """

    indices: tuple[int, ...]
    instance: Instance
    radii: tuple[Fraction, ...]
    duration: Fraction
    start: Fraction

    def __init__(self, indices, instance, radii, duration, start) -> None:
        radii = tuple(as_rational(r) for r in radii)
        duration = as_rational(duration)
        start = as_rational(start)
        indices = tuple(indices)
        if len(indices) != instance.n or len(radii) != instance.n:
            raise ValueError("indices, instance and radii must align")
        if duration <= 0:
            raise ValueError(f"strip duration must be positive, got {duration}")
        if start < 0:
            raise ValueError(f"strip start must be nonnegative, got {start}")
        for b, rho in zip(instance.batteries, radii):
            if rho <= 0:
                raise ValueError("strip members must have positive radii")
            if b != rho * duration:
                raise ValueError(f"battery {b} is not radius {rho} times duration {duration}")
        spans = [(x - rho, x + rho) for x, rho in zip(instance.locations, radii)]
        if not covers(spans):
            raise ValueError("strip radii do not cover [0, 1]")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "instance", instance)
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "duration", duration)
        object.__setattr__(self, "start", start)

    @property
    def locations(self) -> tuple[Fraction, ...]:
        return self.instance.locations

    @property
    def batteries(self) -> tuple[Fraction, ...]:
        return self.instance.batteries


@dataclass(frozen=True, init=False)
class UnitInstance:
    """Sorted sensor locations, every battery implicitly 1.

    Locations may fall outside [0, 1] (children of a wide sensor do), but at
    least one must lie inside.  `parents` optionally records which original
    sensor each child came from.
    """

    locations: tuple[Fraction, ...]
    parents: tuple[int, ...] | None

    def __init__(self, locations: Sequence, parents: Sequence[int] | None = None) -> None:
        locs = [as_rational(x) for x in locations]
        if not locs:
            raise ValueError("a unit instance needs at least one sensor")
        if parents is None:
            order = sorted(range(len(locs)), key=lambda i: locs[i])
            object.__setattr__(self, "parents", None)
        else:
            if len(parents) != len(locs):
                raise ValueError("parents must align with locations")
            order = sorted(range(len(locs)), key=lambda i: locs[i])
            object.__setattr__(self, "parents", tuple(parents[i] for i in order))
        object.__setattr__(self, "locations", tuple(locs[i] for i in order))
        if not any(ZERO <= x <= ONE for x in self.locations):
            raise ValueError("no sensor inside [0, 1]")

    @property
    def n(self) -> int:
        return len(self.locations)


def cut_into_strips(inst: Instance, sched: Schedule) -> list[Strip]:
    """Slice a schedule at its activation/death events, up to its lifetime.

    Strip j contains exactly the sensors live throughout the j-th slab, each
    charged with the battery it burns there.  The strip durations sum to the
    verified lifetime.
    """
    lifetime = evaluate_lifetime(inst, sched)
    if lifetime == 0:
        raise ValueError("schedule has zero lifetime; there is nothing to cut")
    windows = []  # (activation, death, original index)
    for i, (b, rho, tau) in enumerate(zip(inst.batteries, sched.radii, sched.activations)):
        if rho > 0 and b > 0:
            windows.append((tau, tau + b / rho, i))
    events = {ZERO, lifetime}
    for on, off, _ in windows:
        for t in (on, off):
            if ZERO <= t <= lifetime:
                events.add(t)
    cuts = sorted(events)
    strips = []
    for start, end in zip(cuts, cuts[1:]):
        members = [i for on, off, i in windows if on <= start and off >= end]
        duration = end - start
        locations = [inst.locations[i] for i in members]
        radii = [sched.radii[i] for i in members]
        batteries = [rho * duration for rho in radii]
        strips.append(Strip(members, Instance(locations, batteries), radii, duration, start))
    return strips


def prune_strip(strip: Strip) -> Strip:
    """Drop redundant members, then shrink the two extreme radii.

    Removal is a single ascending pass: a member goes if [0, 1] stays covered
    without it.  Afterwards the leftmost radius is reduced to the least value
    that keeps coverage, but never below its own location (so it still
    reaches 0), and the rightmost symmetrically.  Batteries are rescaled to
    radius * duration throughout.
    """
    keep = list(range(strip.instance.n))
    for pos in range(strip.instance.n):
        trial = [q for q in keep if q != pos]
        spans = [(strip.locations[q] - strip.radii[q], strip.locations[q] + strip.radii[q]) for q in trial]
        if pos in keep and covers(spans):
            keep = trial

    locations = [strip.locations[q] for q in keep]
    radii = [strip.radii[q] for q in keep]
    indices = [strip.indices[q] for q in keep]

    if len(keep) == 1:
        radii[0] = max(locations[0], 1 - locations[0])
    else:
        # Leftmost: reach the closest point where someone else takes over.
        frontier = min(x - r for x, r in zip(locations[1:], radii[1:]))
        radii[0] = max(locations[0], frontier - locations[0])
        # Rightmost: same from the other side, against the updated radii.
        reach = max(x + r for x, r in zip(locations[:-1], radii[:-1]))
        radii[-1] = max(1 - locations[-1], locations[-1] - reach)

    batteries = [r * strip.duration for r in radii]
    return Strip(indices, Instance(locations, batteries), radii, strip.duration, strip.start)


def integerize_strip(strip: Strip) -> tuple[Strip, Fraction]:
    """Scale batteries by the least rational making each an integer >= 3.

    Radii stay put, so the duration scales by the same factor.  Returns the
    factor so reported quantities can be mapped back to the original units.
    """
    batteries = strip.batteries
    base = Fraction(
        math.lcm(*(b.denominator for b in batteries)),
        math.gcd(*(b.numerator for b in batteries)),
    )
    multiplier = max(1, math.ceil(Fraction(3) / (base * min(batteries))))
    scale = multiplier * base
    scaled = Instance(strip.locations, [b * scale for b in batteries])
    return (
        Strip(strip.indices, scaled, strip.radii, strip.duration * scale, strip.start),
        scale,
    )


def unit_battery_reduction(strip: Strip) -> tuple[UnitInstance, tuple[Fraction, ...]]:
    """Replace each member with b equally spaced unit-battery children.

    Member i's interval [x - rho, x + rho] is divided into b equal parts with
    a child at each midpoint, so the children average to x and jointly cover
    the parent's interval with radius sigma = rho / b.  Each child then lives
    1/sigma = duration time units.
    """
    rows = []  # (location, sigma, original parent index)
    for x, b, rho, parent in zip(strip.locations, strip.batteries, strip.radii, strip.indices):
        if b.denominator != 1 or b < 3:
            raise ValueError(f"battery {b} is not an integer >= 3; integerize the strip first")
        count = int(b)
        sigma = rho / count
        for k in range(count):
            rows.append((x - rho + sigma * (2 * k + 1), sigma, parent))
    rows.sort(key=lambda row: row[0])
    unit = UnitInstance([y for y, _, _ in rows], [p for _, _, p in rows])
    return unit, tuple(s for _, s, _ in rows)


def unit_lifetime(unit: UnitInstance, radii: Sequence) -> Fraction:
    """Lifetime of the start-at-zero unit schedule with the given radii.

    The verifier for proper instances insists on locations in [0, 1]; this
    mirror of it accepts children that spill outside, since only coverage of
    [0, 1] matters.
    """
    radii = [as_rational(r) for r in radii]
    if len(radii) != unit.n:
        raise ValueError("radii must align with the unit instance")
    spans = [
        (ZERO, 1 / r, y - r, y + r)
        for y, r in zip(unit.locations, radii)
        if r > 0
    ]
    return coverage_lifetime(spans)


def compute_delta(unit: UnitInstance) -> Fraction:
    """The effective gap: the largest stretch a single radius must bridge.

    Interior gaps count between the leftmost and rightmost sensors inside
    [0, 1].  At each end, the term is the distance to the nearest sensor
    outside, or twice the distance to the boundary when no outside sensor
    is closer.
    """
    xs = unit.locations
    n = unit.n
    inside = [i for i, x in enumerate(xs) if ZERO <= x <= ONE]
    i0, i1 = inside[0], inside[-1]

    if i0 > 0 and -xs[i0 - 1] < xs[i0]:
        delta0 = xs[i0] - xs[i0 - 1]
    else:
        delta0 = 2 * xs[i0]
    if i1 < n - 1 and xs[i1 + 1] - 1 < 1 - xs[i1]:
        delta1 = xs[i1 + 1] - xs[i1]
    else:
        delta1 = 2 * (1 - xs[i1])

    delta = max(delta0, delta1)
    for i in range(i0, i1):
        delta = max(delta, xs[i + 1] - xs[i])
    return delta


def unit_opt(unit: UnitInstance) -> Fraction:
    """Optimal start-at-zero lifetime of a unit instance: exactly 2 / delta."""
    delta = compute_delta(unit)
    if delta == 0:
        raise ValueError("degenerate unit instance: effective gap is zero")
    return 2 / delta


def unit_rr_prime(unit: UnitInstance) -> Fraction:
    """Round-robin lower bound of a unit instance: n^2 / sum of solo radii."""
    return rr_prime_values(unit.locations, [ONE] * unit.n)


def stretch_instance(unit: UnitInstance) -> UnitInstance:
    """Rearrange the sensors at equal spacing delta around the middle one.

    The anchor is min(x_k, 1 - x_k) for the sensor k closest to 1/2, the
    median-index sensor lands on the anchor, and everyone else sits at
    consecutive multiples of delta.  Exactly ceil(n/2) sensors end up at or
    below 1/2; the effective gap, and with it the optimal lifetime, is
    unchanged, while the solo radii can only grow.
    """
    xs = unit.locations
    n = unit.n
    delta = compute_delta(unit)
    k = min(range(n), key=lambda i: (abs(xs[i] - HALF), i))
    anchor = 1 - solo_radius(xs[k])
    median = (n + 1) // 2
    stretched = [anchor + (i - median) * delta for i in range(1, n + 1)]
    return UnitInstance(stretched)


def strip_rr(strip: Strip) -> Fraction:
    """Round-robin lifetime of the strip: sum of b / max(x, 1 - x)."""
    return sum(
        (b / solo_radius(x) for x, b in zip(strip.locations, strip.batteries)),
        ZERO,
    )


# --- pipeline certification --------------------------------------------------

TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class StripAnalysis:
    """One strip pushed through the whole pipeline, with verdicts."""

    strip: Strip
    pruned: Strip
    scale: Fraction
    integerized: Strip
    children: UnitInstance
    sigma: tuple[Fraction, ...]
    delta: Fraction
    unit_optimum: Fraction
    stretched: UnitInstance
    rr_strip: Fraction
    rr_prime_pruned: Fraction
    rr_prime_children: Fraction
    rr_prime_stretched: Fraction
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


@dataclass(frozen=True)
class ScheduleAnalysis:
    lifetime: Fraction
    round_robin_lifetime: Fraction
    strips: tuple[StripAnalysis, ...]
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.strips) and all(ok for _, ok in self.checks)


def analyze_strip(strip: Strip, solver_check_limit: int = 60) -> StripAnalysis:
    """Run one strip through prune/integerize/split/stretch and check it.

    The cross-check against the direct solver only runs when every child
    lies inside [0, 1] (the solver's domain) and the instance is small
    enough to keep the quadratic candidate scan cheap.
    """
    pruned = prune_strip(strip)
    integerized, scale = integerize_strip(pruned)
    children, sigma = unit_battery_reduction(integerized)
    delta = compute_delta(children)
    optimum = unit_opt(children)
    stretched = stretch_instance(children)

    rrp_pruned = rr_prime(pruned.instance)
    rrp_children = unit_rr_prime(children)
    rrp_stretched = unit_rr_prime(stretched)

    duration = integerized.duration
    xs = children.locations
    inside = [i for i, x in enumerate(xs) if ZERO <= x <= ONE]
    i0, i1 = inside[0], inside[-1]
    internal_gaps = [xs[i + 1] - xs[i] for i in range(i0, i1)]
    all_gaps = [xs[i + 1] - xs[i] for i in range(children.n - 1)]

    means_ok = True
    for parent_pos, parent in enumerate(integerized.indices):
        child_locs = [y for y, p in zip(children.locations, children.parents) if p == parent]
        if sum(child_locs) / len(child_locs) != integerized.locations[parent_pos]:
            means_ok = False

    checks = [
        ("children cover [0,1] for exactly the strip duration", unit_lifetime(children, sigma) == duration),
        ("every child dies exactly at the strip duration", all(1 / s == duration for s in sigma)),
        ("children of each sensor average to its location", means_ok),
        ("unit split does not raise the round-robin lower bound", rrp_children <= scale * rrp_pruned),
        (
            "widest in-range gap equals widest gap overall",
            (max(internal_gaps, default=None) == max(all_gaps, default=None)),
        ),
        ("unit optimum equals 2/delta", optimum == 2 / delta),
        ("stretching preserves the unit optimum", unit_opt(stretched) == optimum),
        ("stretching does not raise the round-robin lower bound", rrp_stretched <= rrp_children),
        (
            "round-robin lower bound is at least 2/3 of the unit optimum",
            rrp_children >= TWO_THIRDS * optimum and rrp_stretched >= TWO_THIRDS * optimum,
        ),
    ]
    if children.n <= solver_check_limit and all(ZERO <= x <= ONE for x in xs):
        direct = radsc.solve(Instance(xs, [ONE] * children.n)).lifetime
        checks.append(("unit optimum matches the direct solver", direct == optimum))

    return StripAnalysis(
        strip=strip,
        pruned=pruned,
        scale=scale,
        integerized=integerized,
        children=children,
        sigma=sigma,
        delta=delta,
        unit_optimum=optimum,
        stretched=stretched,
        rr_strip=strip_rr(strip),
        rr_prime_pruned=rrp_pruned,
        rr_prime_children=rrp_children,
        rr_prime_stretched=rrp_stretched,
        checks=tuple(checks),
    )


def analyze_schedule(inst: Instance, sched: Schedule, solver_check_limit: int = 60) -> ScheduleAnalysis:
    """Cut a verified schedule into strips and certify the whole pipeline."""
    lifetime = evaluate_lifetime(inst, sched)
    strips = cut_into_strips(inst, sched)
    rr = round_robin(inst).lifetime
    analyses = tuple(analyze_strip(s, solver_check_limit) for s in strips)

    spent: dict[int, Fraction] = {}
    for strip in strips:
        for i, b in zip(strip.indices, strip.batteries):
            spent[i] = spent.get(i, ZERO) + b
    conservation = all(spent.get(i, ZERO) <= inst.batteries[i] for i in range(inst.n))
    strip_sum = sum((a.rr_strip for a in analyses), ZERO)

    checks = (
        ("strip round-robin lifetimes sum to at most the round-robin lifetime", strip_sum <= rr),
        ("no sensor spends more battery than it carries", conservation),
        ("strip durations sum to the lifetime", sum((s.duration for s in strips), ZERO) == lifetime),
    )
    return ScheduleAnalysis(lifetime, rr, analyses, checks)
