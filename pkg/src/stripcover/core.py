"""Exact data model and ground-truth verifier for set-once coverage schedules.

A sensor sitting at x with battery b, given radius rho > 0 at activation time
tau, covers the closed interval [x - rho, x + rho] during the half-open time
window [tau, tau + b/rho).  The half-open convention in time and the closed
convention in space make abutting rectangles hand off with no gap, so exact
handoffs (round-robin turns, duty-cycle shifts) verify to their analytic
lifetime.

Every number in this package is a `fractions.Fraction`.  Floats are rejected
at the boundary so that equality tests and the verifier stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

# The one numeric type used throughout: arbitrary precision, lowest terms,
# positive denominator, exact arithmetic, ZeroDivisionError on x/0.
Rational = Fraction

RationalLike = "int | str | Fraction"


def as_rational(value) -> Fraction:
    """Coerce ints, strings ("2", "0.25", "3/4") or Fractions to Fraction.

    Floats are refused: they would smuggle rounding error into a model whose
    whole point is exactness.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int, a string or a Fraction")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True, init=False)
class Instance:
    """Sensor locations in [0, 1] with nonnegative battery charges.

    Pairs are sorted by location on construction.  The sort is stable, so
    co-located sensors keep their input order and schedules stay aligned.
    """

    locations: tuple[Fraction, ...]
    batteries: tuple[Fraction, ...]

    def __init__(self, locations: Sequence, batteries: Sequence) -> None:
        locs = [as_rational(x) for x in locations]
        bats = [as_rational(b) for b in batteries]
        if len(locs) != len(bats):
            raise ValueError(f"{len(locs)} locations but {len(bats)} batteries")
        if not locs:
            raise ValueError("an instance needs at least one sensor")
        pairs = sorted(zip(locs, bats), key=lambda pair: pair[0])
        for x, b in pairs:
            if not ZERO <= x <= ONE:
                raise ValueError(f"sensor location {x} outside [0, 1]")
            if b < 0:
                raise ValueError(f"negative battery {b}")
        object.__setattr__(self, "locations", tuple(x for x, _ in pairs))
        object.__setattr__(self, "batteries", tuple(b for _, b in pairs))

    @property
    def n(self) -> int:
        return len(self.locations)

    @property
    def total_battery(self) -> Fraction:
        return sum(self.batteries, ZERO)

    def restrict(self, indices: Iterable[int]) -> "Instance":
        """Sub-instance on the given sensor indices."""
        idx = sorted(set(indices))
        return Instance([self.locations[i] for i in idx], [self.batteries[i] for i in idx])


@dataclass(frozen=True, init=False)
class Schedule:
    """One (radius, activation time) pair per sensor.

    radius 0 marks an inactive sensor; its activation time is ignored.
    A schedule is validated against an instance only when the two are used
    together, so an empty schedule is representable.
    """

    radii: tuple[Fraction, ...]
    activations: tuple[Fraction, ...]

    def __init__(self, radii: Sequence, activations: Sequence) -> None:
        rho = [as_rational(r) for r in radii]
        tau = [as_rational(t) for t in activations]
        if len(rho) != len(tau):
            raise ValueError(f"{len(rho)} radii but {len(tau)} activation times")
        for r in rho:
            if r < 0:
                raise ValueError(f"negative radius {r}")
        for t in tau:
            if t < 0:
                raise ValueError(f"negative activation time {t}")
        object.__setattr__(self, "radii", tuple(rho))
        object.__setattr__(self, "activations", tuple(tau))

    @property
    def n(self) -> int:
        return len(self.radii)


@dataclass(frozen=True, init=False)
class Rect:
    """Axis-aligned space-time rectangle covered by one active sensor."""

    left: Fraction
    right: Fraction
    start: Fraction
    end: Fraction

    def __init__(self, left, right, start, end) -> None:
        left, right = as_rational(left), as_rational(right)
        start, end = as_rational(start), as_rational(end)
        if left > right:
            raise ValueError(f"left {left} exceeds right {right}")
        if start > end:
            raise ValueError(f"start {start} exceeds end {end}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)


@dataclass(frozen=True, init=False)
class RadialAssignment:
    """Radii only; every sensor activates at time 0."""

    radii: tuple[Fraction, ...]

    def __init__(self, radii: Sequence) -> None:
        rho = [as_rational(r) for r in radii]
        for r in rho:
            if r < 0:
                raise ValueError(f"negative radius {r}")
        object.__setattr__(self, "radii", tuple(rho))

    @property
    def n(self) -> int:
        return len(self.radii)

    def as_schedule(self) -> Schedule:
        return Schedule(self.radii, [ZERO] * len(self.radii))


def _paired(inst: Instance, sched: Schedule) -> None:
    if inst.n != sched.n:
        raise ValueError(f"schedule has {sched.n} sensors, instance has {inst.n}")


def max_lifetime_bound(inst: Instance) -> Fraction:
    """Upper bound 2 * (total battery) on the lifetime of any schedule.

    A sensor with radius rho covers space-time area 2*rho * b/rho = 2b, and
    keeping [0, 1] covered for time T uses area at least T.
    """
    return 2 * inst.total_battery


def sensor_rect(inst: Instance, sched: Schedule, i: int) -> Rect:
    """Space-time rectangle of sensor i; raises if the sensor is inactive."""
    _paired(inst, sched)
    rho = sched.radii[i]
    if rho == 0:
        raise ValueError(f"sensor {i} is inactive (zero radius)")
    x, b, tau = inst.locations[i], inst.batteries[i], sched.activations[i]
    return Rect(x - rho, x + rho, tau, tau + b / rho)


def uncovered_gaps(
    intervals: Iterable[tuple[Fraction, Fraction]],
    lo: Fraction = ZERO,
    hi: Fraction = ONE,
) -> list[tuple[Fraction, Fraction]]:
    """Maximal open gaps of [lo, hi] left uncovered by the closed intervals."""
    pos = lo
    gaps: list[tuple[Fraction, Fraction]] = []
    for left, right in sorted(intervals):
        if pos >= hi:
            break
        if left > pos:
            gaps.append((pos, min(left, hi)))
        if right > pos:
            pos = right
    if pos < hi:
        gaps.append((pos, hi))
    return gaps


def covers(
    intervals: Iterable[tuple[Fraction, Fraction]],
    lo: Fraction = ZERO,
    hi: Fraction = ONE,
) -> bool:
    """True iff the union of the closed intervals contains [lo, hi]."""
    return not uncovered_gaps(intervals, lo, hi)


def coverage_lifetime(spans: Iterable[tuple[Fraction, Fraction, Fraction, Fraction]]) -> Fraction:
    """First instant at which rectangles (start, end, left, right) stop covering [0, 1].

    Between consecutive start/end events the live set is constant, so each
    slab is tested once, in time order.  Rectangles past the first failure
    are irrelevant and never inspected.
    """
    live_spans = [(s, e, l, r) for s, e, l, r in spans if e > s]
    events = sorted({ZERO, *(s for s, _, _, _ in live_spans), *(e for _, e, _, _ in live_spans)})
    for t in events:
        live = [(l, r) for s, e, l, r in live_spans if s <= t < e]
        if not covers(live):
            return t
    raise AssertionError("unreachable: every rectangle ends, so coverage must fail")


def _active_spans(inst: Instance, sched: Schedule):
    for x, b, rho, tau in zip(inst.locations, inst.batteries, sched.radii, sched.activations):
        if rho > 0:
            yield tau, tau + b / rho, x - rho, x + rho


def evaluate_lifetime(inst: Instance, sched: Schedule) -> Fraction:
    """Exact lifetime: the supremum T with [0, 1] covered throughout [0, T).

    Returns 0 if the schedule never covers [0, 1].  A sensor with zero
    battery is never live regardless of its radius.
    """
    _paired(inst, sched)
    return coverage_lifetime(_active_spans(inst, sched))


def coverage_gaps_at(inst: Instance, sched: Schedule, t) -> list[tuple[Fraction, Fraction]]:
    """Open subintervals of [0, 1] not covered at time t (diagnostic)."""
    _paired(inst, sched)
    t = as_rational(t)
    if t < 0:
        raise ValueError(f"time {t} is negative")
    live = [(l, r) for s, e, l, r in _active_spans(inst, sched) if s <= t < e]
    return uncovered_gaps(live)


# --- text formats -----------------------------------------------------------
#
# Instance file: one `<location> <battery>` pair per line.
# Schedule file: one `<radius> <activation>` pair per line, line i pairing
# with sensor i of the (sorted) instance.
# Numbers are integers, exact decimals ("0.25") or fractions ("3/4").
# '#' starts a comment; blank lines are ignored.


def parse_rational(token: str) -> Fraction:
    if not isinstance(token, str):
        raise TypeError(f"expected a string token, got {token!r}")
    return as_rational(token)


def _parse_rows(text: str, what: str) -> list[tuple[Fraction, Fraction]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{what} line {lineno}: expected two fields, got {len(parts)}")
        try:
            rows.append((parse_rational(parts[0]), parse_rational(parts[1])))
        except ValueError as exc:
            raise ValueError(f"{what} line {lineno}: {exc}") from exc
    return rows


def parse_instance(text: str) -> Instance:
    rows = _parse_rows(text, "instance")
    return Instance([x for x, _ in rows], [b for _, b in rows])


def format_instance(inst: Instance) -> str:
    return "".join(f"{x} {b}\n" for x, b in zip(inst.locations, inst.batteries))


def parse_schedule(text: str) -> Schedule:
    rows = _parse_rows(text, "schedule")
    return Schedule([r for r, _ in rows], [t for _, t in rows])


def format_schedule(sched: Schedule) -> str:
    return "".join(f"{r} {t}\n" for r, t in zip(sched.radii, sched.activations))
